#pragma once

#include <optional>
#include <vector>

#include "hexforge/fields.hpp"

namespace hexforge {

// Minimal dense exact linear algebra: row-reduction, rank, kernel, solve.
// Sizes here never exceed a few dozen rows.
template <Field K>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<typename K::Elem> a;

  static Mat zero(const K& k, int r, int c) {
    Mat m;
    m.rows = r;
    m.cols = c;
    m.a.assign(static_cast<std::size_t>(r) * c, k.zero());
    return m;
  }
  typename K::Elem& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const typename K::Elem& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

// Reduce to row echelon form in place; returns pivot column per pivot row.
template <Field K>
std::vector<int> row_echelon(const K& k, Mat<K>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int pr = -1;
    for (int i = row; i < m.rows; ++i) {
      if (!k.is_zero(m.at(i, col))) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    if (pr != row) {
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(row, j));
    }
    const auto ip = k.inv(m.at(row, col));
    for (int j = col; j < m.cols; ++j) m.at(row, j) = k.mul(m.at(row, j), ip);
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || k.is_zero(m.at(i, col))) continue;
      const auto f = m.at(i, col);
      for (int j = col; j < m.cols; ++j) {
        m.at(i, j) = k.sub(m.at(i, j), k.mul(f, m.at(row, j)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <Field K>
int rank(const K& k, Mat<K> m) {
  return static_cast<int>(row_echelon(k, m).size());
}

// Basis of the right kernel {x : m x = 0}.
template <Field K>
std::vector<std::vector<typename K::Elem>> kernel_basis(const K& k, Mat<K> m) {
  const auto pivots = row_echelon(k, m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<typename K::Elem>> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename K::Elem> v(m.cols, k.zero());
    v[free] = k.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = k.neg(m.at(static_cast<int>(r), free));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solve m x = b; returns one solution if consistent.
template <Field K>
std::optional<std::vector<typename K::Elem>> solve(const K& k, Mat<K> m, std::vector<typename K::Elem> b) {
  Mat<K> aug = Mat<K>::zero(k, m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[static_cast<std::size_t>(i)];
  }
  const auto pivots = row_echelon(k, aug);
  for (int c : pivots) {
    if (c == m.cols) return std::nullopt;  // inconsistent: pivot in the rhs column
  }
  std::vector<typename K::Elem> x(m.cols, k.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    x[pivots[r]] = aug.at(static_cast<int>(r), m.cols);
  }
  return x;
}

}  // namespace hexforge
