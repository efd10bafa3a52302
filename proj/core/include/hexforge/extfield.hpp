#pragma once

#include <string>

#include "hexforge/fields.hpp"
#include "hexforge/poly.hpp"

namespace hexforge {

// Simple algebraic extension K[x]/(m) with m monic irreducible over the field
// context K. Used for finite fields F_{p^k} in specialization certificates.
template <Field K>
class SimpleExt {
 public:
  using Elem = Poly<K>;  // reduced mod m

  SimpleExt(K base, Poly<K> m) : base_(std::move(base)), m_(std::move(m)) {
    if (m_.deg() < 1) throw InvalidInput("extension modulus must have positive degree");
    if (!base_.eq(lc(base_, m_), base_.one())) throw InvalidInput("extension modulus must be monic");
  }

  const K& base() const { return base_; }
  const Poly<K>& modulus() const { return m_; }

  Elem zero() const { return {}; }
  Elem one() const { return poly_const(base_, base_.one()); }
  Elem from_int(long n) const { return poly_const(base_, base_.from_int(n)); }
  Elem embed(Poly<K> f) const { return rem(base_, f, m_); }
  Elem gen() const { return embed(poly_x(base_)); }

  Elem add(const Elem& a, const Elem& b) const { return hexforge::add(base_, a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return hexforge::sub(base_, a, b); }
  Elem neg(const Elem& a) const { return hexforge::neg(base_, a); }
  Elem mul(const Elem& a, const Elem& b) const { return rem(base_, hexforge::mul(base_, a, b), m_); }
  Elem inv(const Elem& a) const {
    if (a.is_zero()) throw InvalidInput("division by zero in extension field");
    auto [g, u, v] = xgcd(base_, a, m_);
    if (g.deg() != 0) throw InternalError("non-invertible element: extension modulus reducible");
    return rem(base_, u, m_);
  }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const { return poly_eq(base_, a, b); }
  std::string to_string(const Elem& a) const { return poly_to_string(base_, a, "w"); }
  std::uint64_t characteristic() const { return base_.characteristic(); }

 private:
  K base_;
  Poly<K> m_;
};

}  // namespace hexforge
