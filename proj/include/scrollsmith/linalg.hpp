#pragma once

// Small dense linear algebra over any field type of this library. Every
// decision goes through the field's is_zero, so the routines also run over
// the tracking domains.

#include <cstddef>
#include <utility>
#include <vector>

namespace scrollsmith {

template <class E>
using Matrix = std::vector<std::vector<typename E::Elem>>;

template <class E>
using Vector = std::vector<typename E::Elem>;

namespace detail {

// Reduced row echelon form in place; returns the pivot columns.
template <class E>
std::vector<std::size_t> rref(const E& e, Matrix<E>& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t piv = row;
    while (piv < m.size() && e.is_zero(m[piv][col])) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    const auto inv = e.inv(m[row][col]);
    for (auto& v : m[row]) v = e.mul(v, inv);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || e.is_zero(m[r][col])) continue;
      const auto k = m[r][col];
      for (std::size_t c = 0; c < ncols; ++c) m[r][c] = e.sub(m[r][c], e.mul(k, m[row][c]));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace detail

template <class E>
std::size_t rank(const E& e, Matrix<E> m, std::size_t ncols) {
  return detail::rref(e, m, ncols).size();
}

// Basis of {x : m x = 0} in E^ncols.
template <class E>
std::vector<Vector<E>> nullspace(const E& e, Matrix<E> m, std::size_t ncols) {
  const auto pivots = detail::rref(e, m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector<E>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vector<E> v(ncols, e.zero());
    v[free] = e.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = e.neg(m[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// u^T b v
template <class E>
typename E::Elem bilinear(const E& e, const Vector<E>& u, const Matrix<E>& b, const Vector<E>& v) {
  auto acc = e.zero();
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) acc = e.add(acc, e.mul(u[i], e.mul(b[i][j], v[j])));
  }
  return acc;
}

}  // namespace scrollsmith
