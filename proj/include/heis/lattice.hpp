#pragma once

#include "heis/integer.hpp"

#include <cassert>
#include <optional>
#include <utility>
#include <vector>

/**
 * @file lattice.hpp
 * @brief Exact integer linear algebra on small dense systems: integer kernels,
 * lattice membership and lattice equality.
 *
 * All reductions are unimodular column operations with the pivot of smallest
 * absolute value, so no entry ever leaves Z.
 */

namespace heis {

using int_vector = std::vector<integer>;

/// Row-major dense integer matrix.
struct int_matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<integer> data;

  int_matrix() = default;
  int_matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  integer &operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const integer &operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  int_vector column(std::size_t j) const
  {
    int_vector v(rows);
    for (std::size_t i = 0; i < rows; ++i)
      v[i] = (*this)(i, j);
    return v;
  }

  static int_matrix from_columns(const std::vector<int_vector> &columns, std::size_t rows)
  {
    int_matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      assert(columns[j].size() == rows);
      for (std::size_t i = 0; i < rows; ++i)
        m(i, j) = columns[j][i];
    }
    return m;
  }

  friend bool operator==(const int_matrix &, const int_matrix &) = default;
};

inline int_vector operator*(const int_matrix &m, const int_vector &v)
{
  assert(v.size() == m.cols);
  int_vector out(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      out[i] += m(i, j) * v[j];
  return out;
}

namespace detail {

// Column echelon form E = m * U with U unimodular. Column k of E has its
// leading nonzero entry in row pivots[k] and zeros above it; columns past
// pivots.size() are zero.
struct column_echelon {
  int_matrix e;
  int_matrix u;
  std::vector<std::size_t> pivots;
};

inline void column_axpy(int_matrix &m, std::size_t dst, std::size_t src, const integer &q)
{
  for (std::size_t i = 0; i < m.rows; ++i)
    m(i, dst) -= q * m(i, src);
}

inline void column_swap(int_matrix &m, std::size_t a, std::size_t b)
{
  for (std::size_t i = 0; i < m.rows; ++i)
    std::swap(m(i, a), m(i, b));
}

inline column_echelon reduce_columns(int_matrix m)
{
  int_matrix u(m.cols, m.cols);
  for (std::size_t j = 0; j < m.cols; ++j)
    u(j, j) = 1;

  std::vector<std::size_t> pivots;
  std::size_t k = 0;
  for (std::size_t i = 0; i < m.rows && k < m.cols; ++i) {
    for (;;) {
      // smallest nonzero |m(i,j)| over j >= k becomes the pivot
      std::optional<std::size_t> best;
      for (std::size_t j = k; j < m.cols; ++j)
        if (m(i, j) != 0 && (!best || abs(m(i, j)) < abs(m(i, *best))))
          best = j;
      if (!best)
        break;
      if (*best != k) {
        column_swap(m, k, *best);
        column_swap(u, k, *best);
      }
      bool done = true;
      for (std::size_t j = k + 1; j < m.cols; ++j) {
        if (m(i, j) == 0)
          continue;
        integer q = floor_div(m(i, j), m(i, k));
        column_axpy(m, j, k, q);
        column_axpy(u, j, k, q);
        if (m(i, j) != 0)
          done = false;
      }
      if (done) {
        pivots.push_back(i);
        ++k;
        break;
      }
    }
  }
  return {std::move(m), std::move(u), std::move(pivots)};
}

} // namespace detail

/// Z-basis of {x in Z^n : m x = 0}, as columns.
inline std::vector<int_vector> integer_kernel(const int_matrix &m)
{
  auto ech = detail::reduce_columns(m);
  std::vector<int_vector> basis;
  for (std::size_t j = ech.pivots.size(); j < m.cols; ++j)
    basis.push_back(ech.u.column(j));
  return basis;
}

inline std::size_t integer_rank(const int_matrix &m) { return detail::reduce_columns(m).pivots.size(); }

/// Integer coefficients x with sum x_j basis_j == v, if any.
inline std::optional<int_vector> lattice_coordinates(const std::vector<int_vector> &basis,
                                                     const int_vector &v)
{
  auto ech = detail::reduce_columns(int_matrix::from_columns(basis, v.size()));
  int_vector residual = v;
  int_vector y(basis.size());
  for (std::size_t k = 0; k < ech.pivots.size(); ++k) {
    std::size_t row = ech.pivots[k];
    const integer &pivot = ech.e(row, k);
    if (residual[row] % pivot != 0)
      return std::nullopt;
    y[k] = residual[row] / pivot;
    for (std::size_t i = 0; i < v.size(); ++i)
      residual[i] -= y[k] * ech.e(i, k);
  }
  for (const auto &x : residual)
    if (x != 0)
      return std::nullopt;
  return ech.u * y;
}

inline bool lattice_contains(const std::vector<int_vector> &basis, const int_vector &v)
{
  return lattice_coordinates(basis, v).has_value();
}

/// Equality of the Z-spans, by mutual membership of generators.
inline bool lattice_equal(const std::vector<int_vector> &lhs, const std::vector<int_vector> &rhs,
                          std::size_t dim)
{
  auto spans = [dim](const std::vector<int_vector> &big, const std::vector<int_vector> &small) {
    for (const auto &v : small)
      if (v.size() != dim || !lattice_contains(big, v))
        return false;
    return true;
  };
  return spans(lhs, rhs) && spans(rhs, lhs);
}

} // namespace heis
