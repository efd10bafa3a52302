#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hexforge/fields.hpp"
#include "hexforge/poly.hpp"

namespace hexforge {

// Homogeneous binary form of fixed degree in (s, t); coefficient i multiplies
// s^{deg-i} t^i, so dehomogenizing at s = 1 reads the list as a polynomial in t.
template <Field K>
struct BinaryForm {
  int degree = 0;
  std::vector<typename K::Elem> c;  // size degree + 1

  static BinaryForm zero(const K& k, int deg) {
    BinaryForm b;
    b.degree = deg;
    b.c.assign(deg + 1, k.zero());
    return b;
  }
  bool is_zero(const K& k) const {
    for (const auto& x : c) {
      if (!k.is_zero(x)) return false;
    }
    return true;
  }
};

template <Field K>
BinaryForm<K> binary_from_poly(const K& k, const Poly<K>& f, int deg) {
  if (f.deg() > deg) throw InvalidInput("polynomial exceeds requested form degree");
  BinaryForm<K> b = BinaryForm<K>::zero(k, deg);
  for (int i = 0; i <= f.deg(); ++i) b.c[i] = f.c[i];
  return b;
}

template <Field K>
Poly<K> binary_dehomogenize(const K& k, const BinaryForm<K>& b) {
  return poly_from(k, b.c);
}

template <Field K>
typename K::Elem binary_eval(const K& k, const BinaryForm<K>& b, const typename K::Elem& s,
                             const typename K::Elem& t) {
  auto r = k.zero();
  auto spow = k.one();
  // accumulate t^i * s^{deg-i}
  std::vector<typename K::Elem> spows(b.degree + 1, k.one());
  for (int i = 1; i <= b.degree; ++i) spows[i] = k.mul(spows[i - 1], s);
  auto tpow = k.one();
  for (int i = 0; i <= b.degree; ++i) {
    r = k.add(r, k.mul(b.c[i], k.mul(spows[b.degree - i], tpow)));
    tpow = k.mul(tpow, t);
  }
  (void)spow;
  return r;
}

template <Field K>
BinaryForm<K> binary_mul(const K& k, const BinaryForm<K>& a, const BinaryForm<K>& b) {
  BinaryForm<K> r = BinaryForm<K>::zero(k, a.degree + b.degree);
  for (int i = 0; i <= a.degree; ++i) {
    for (int j = 0; j <= b.degree; ++j) {
      r.c[i + j] = k.add(r.c[i + j], k.mul(a.c[i], b.c[j]));
    }
  }
  return r;
}

template <Field K>
BinaryForm<K> binary_add(const K& k, const BinaryForm<K>& a, const BinaryForm<K>& b) {
  if (a.degree != b.degree) throw InvalidInput("degree mismatch in binary form addition");
  BinaryForm<K> r = a;
  for (int i = 0; i <= r.degree; ++i) r.c[i] = k.add(r.c[i], b.c[i]);
  return r;
}

template <Field K>
bool binary_eq(const K& k, const BinaryForm<K>& a, const BinaryForm<K>& b) {
  if (a.degree != b.degree) return false;
  for (int i = 0; i <= a.degree; ++i) {
    if (!k.eq(a.c[i], b.c[i])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Sparse homogeneous ternary form in T0, T1, T2 of fixed total degree.
// Monomial key (i, j, l) means T0^i T1^j T2^l with i + j + l = degree.
template <Field K>
struct TernaryForm {
  using Exp = std::array<int, 3>;
  int degree = 0;
  std::map<Exp, typename K::Elem> terms;  // zero coefficients are absent

  static TernaryForm zero(int deg) {
    TernaryForm f;
    f.degree = deg;
    return f;
  }
  bool is_zero() const { return terms.empty(); }
};

template <Field K>
void ternary_set(const K& k, TernaryForm<K>& f, typename TernaryForm<K>::Exp e,
                 typename K::Elem v) {
  if (e[0] + e[1] + e[2] != f.degree) throw InvalidInput("monomial degree mismatch in ternary form");
  if (k.is_zero(v)) {
    f.terms.erase(e);
  } else {
    f.terms[e] = std::move(v);
  }
}

template <Field K>
void ternary_addto(const K& k, TernaryForm<K>& f, typename TernaryForm<K>::Exp e,
                   const typename K::Elem& v) {
  if (e[0] + e[1] + e[2] != f.degree) throw InvalidInput("monomial degree mismatch in ternary form");
  auto it = f.terms.find(e);
  auto nv = it == f.terms.end() ? v : k.add(it->second, v);
  if (k.is_zero(nv)) {
    if (it != f.terms.end()) f.terms.erase(it);
  } else {
    f.terms[e] = std::move(nv);
  }
}

template <Field K>
typename K::Elem ternary_coeff(const K& k, const TernaryForm<K>& f,
                               typename TernaryForm<K>::Exp e) {
  auto it = f.terms.find(e);
  return it == f.terms.end() ? k.zero() : it->second;
}

template <Field K>
TernaryForm<K> ternary_add(const K& k, const TernaryForm<K>& a, const TernaryForm<K>& b) {
  if (a.degree != b.degree) throw InvalidInput("degree mismatch in ternary form addition");
  TernaryForm<K> r = a;
  for (const auto& [e, v] : b.terms) ternary_addto(k, r, e, v);
  return r;
}

template <Field K>
TernaryForm<K> ternary_scale(const K& k, const TernaryForm<K>& a, const typename K::Elem& s) {
  TernaryForm<K> r = TernaryForm<K>::zero(a.degree);
  if (k.is_zero(s)) return r;
  for (const auto& [e, v] : a.terms) r.terms[e] = k.mul(v, s);
  return r;
}

template <Field K>
TernaryForm<K> ternary_mul(const K& k, const TernaryForm<K>& a, const TernaryForm<K>& b) {
  TernaryForm<K> r = TernaryForm<K>::zero(a.degree + b.degree);
  for (const auto& [ea, va] : a.terms) {
    for (const auto& [eb, vb] : b.terms) {
      ternary_addto(k, r, {ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, k.mul(va, vb));
    }
  }
  return r;
}

template <Field K>
TernaryForm<K> ternary_sub(const K& k, const TernaryForm<K>& a, const TernaryForm<K>& b) {
  return ternary_add(k, a, ternary_scale(k, b, k.neg(k.one())));
}

template <Field K>
bool ternary_eq(const K& k, const TernaryForm<K>& a, const TernaryForm<K>& b) {
  if (a.degree != b.degree || a.terms.size() != b.terms.size()) return false;
  auto it = b.terms.begin();
  for (const auto& [e, v] : a.terms) {
    if (it->first != e || !k.eq(v, it->second)) return false;
    ++it;
  }
  return true;
}

template <Field K>
TernaryForm<K> ternary_partial(const K& k, const TernaryForm<K>& f, int var) {
  TernaryForm<K> r = TernaryForm<K>::zero(f.degree - 1);
  for (const auto& [e, v] : f.terms) {
    if (e[var] == 0) continue;
    auto ne = e;
    ne[var] -= 1;
    ternary_addto(k, r, ne, k.mul(v, k.from_int(e[var])));
  }
  return r;
}

template <Field K>
typename K::Elem ternary_eval(const K& k, const TernaryForm<K>& f,
                              const std::array<typename K::Elem, 3>& pt) {
  auto r = k.zero();
  for (const auto& [e, v] : f.terms) {
    auto m = v;
    for (int j = 0; j < 3; ++j) {
      for (int i = 0; i < e[j]; ++i) m = k.mul(m, pt[j]);
    }
    r = k.add(r, m);
  }
  return r;
}

// Restrict a ternary form to the line spanned by two points: T = u*P + v*Q.
template <Field K>
BinaryForm<K> ternary_restrict(const K& k, const TernaryForm<K>& f,
                               const std::array<typename K::Elem, 3>& P,
                               const std::array<typename K::Elem, 3>& Q) {
  BinaryForm<K> out = BinaryForm<K>::zero(k, f.degree);
  // (u p_j + v q_j)^e expanded as binary forms, multiplied per monomial.
  for (const auto& [e, v] : f.terms) {
    BinaryForm<K> acc = BinaryForm<K>::zero(k, 0);
    acc.c[0] = v;
    for (int j = 0; j < 3; ++j) {
      BinaryForm<K> lin = BinaryForm<K>::zero(k, 1);
      lin.c[0] = P[j];
      lin.c[1] = Q[j];
      for (int i = 0; i < e[j]; ++i) acc = binary_mul(k, acc, lin);
    }
    out = binary_add(k, out, acc);
  }
  return out;
}

// Substitute T_i = sum_j m[i][j] * S_j (rows of m give the images of the
// variables). Used by the fixture normalization search.
template <Field K>
TernaryForm<K> ternary_substitute(const K& k, const TernaryForm<K>& f,
                                  const std::array<std::array<typename K::Elem, 3>, 3>& m) {
  TernaryForm<K> out = TernaryForm<K>::zero(f.degree);
  for (const auto& [e, v] : f.terms) {
    // product over variables of (linear form)^{e[var]}
    TernaryForm<K> acc = TernaryForm<K>::zero(0);
    acc.terms[{0, 0, 0}] = v;
    for (int var = 0; var < 3; ++var) {
      TernaryForm<K> lin = TernaryForm<K>::zero(1);
      ternary_set(k, lin, {1, 0, 0}, m[var][0]);
      ternary_addto(k, lin, {0, 1, 0}, m[var][1]);
      ternary_addto(k, lin, {0, 0, 1}, m[var][2]);
      for (int i = 0; i < e[var]; ++i) acc = ternary_mul(k, acc, lin);
    }
    out = ternary_add(k, out, acc);
  }
  return out;
}

template <Field K>
std::string ternary_to_string(const K& k, const TernaryForm<K>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [e, v] : f.terms) {
    if (!out.empty()) out += " + ";
    out += "(" + k.to_string(v) + ")";
    const char* names[3] = {"T0", "T1", "T2"};
    for (int j = 0; j < 3; ++j) {
      if (e[j] == 0) continue;
      out += std::string("*") + names[j];
      if (e[j] > 1) out += "^" + std::to_string(e[j]);
    }
  }
  return out;
}

// Decide whether a degree-4 binary form is a unit times a perfect square and
// return (q, gamma) with b = gamma * q^2 if so. Direct coefficient solve in
// char != 2 with a final exact re-expansion.
template <Field K>
std::optional<std::pair<BinaryForm<K>, typename K::Elem>> binary_square_root(
    const K& k, const BinaryForm<K>& b) {
  if (b.degree != 4) throw InvalidInput("binary square root expects degree 4");
  if (b.is_zero(k)) return std::nullopt;
  const auto half = k.inv(k.from_int(2));
  BinaryForm<K> q = BinaryForm<K>::zero(k, 2);
  typename K::Elem gamma = k.zero();
  // b = sum c[i] s^{4-i} t^i; q = q0 s^2 + q1 s t + q2 t^2.
  if (!k.is_zero(b.c[0])) {
    gamma = b.c[0];
    const auto ig = k.inv(gamma);
    q.c[0] = k.one();
    q.c[1] = k.mul(k.mul(b.c[1], ig), half);
    q.c[2] = k.mul(k.sub(k.mul(b.c[2], ig), k.mul(q.c[1], q.c[1])), half);
  } else if (!k.is_zero(b.c[2])) {
    if (!k.is_zero(b.c[1])) return std::nullopt;  // s^3 t needs an s^4 term
    gamma = b.c[2];
    q.c[1] = k.one();
    q.c[2] = k.mul(k.mul(b.c[3], k.inv(gamma)), half);
  } else {
    if (!k.is_zero(b.c[1]) || !k.is_zero(b.c[3])) return std::nullopt;
    gamma = b.c[4];
    q.c[2] = k.one();
  }
  BinaryForm<K> expanded = binary_mul(k, q, q);
  for (auto& x : expanded.c) x = k.mul(x, gamma);
  if (!binary_eq(k, expanded, b)) return std::nullopt;
  return std::make_pair(q, gamma);
}

// Linear form a0*T0 + a1*T1 + a2*T2.
template <Field K>
struct LinearForm {
  std::array<typename K::Elem, 3> a;
};

template <Field K>
TernaryForm<K> linear_to_ternary(const K& k, const LinearForm<K>& l) {
  TernaryForm<K> f = TernaryForm<K>::zero(1);
  ternary_set(k, f, {1, 0, 0}, l.a[0]);
  ternary_addto(k, f, {0, 1, 0}, l.a[1]);
  ternary_addto(k, f, {0, 0, 1}, l.a[2]);
  return f;
}

}  // namespace hexforge
