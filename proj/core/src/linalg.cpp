#include "toricq/linalg.hpp"

#include <utility>

#include "toricq/error.hpp"

namespace toricq {

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) {
    RationalVector r;
    r.reserve(row.size());
    for (auto v : row) r.emplace_back(v);
    out.push_back(std::move(r));
  }
  return out;
}

RowEchelon row_reduce(RationalMatrix m, std::size_t columns) {
  RowEchelon result;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);

    const Rational inv = 1 / m[row][col];
    for (std::size_t c = col; c < columns; ++c) {
      if (m[row][c] != 0) m[row][c] *= inv;
    }
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational factor = m[r][col];
      for (std::size_t c = col; c < columns; ++c) {
        if (m[row][c] != 0) m[r][c] -= factor * m[row][c];
      }
    }
    result.pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  result.rows = std::move(m);
  return result;
}

std::size_t rank(const RationalMatrix& m, std::size_t columns) {
  return row_reduce(m, columns).rows.size();
}

Rational determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rational factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

Integer determinant(const IntegerMatrix& m) {
  const Rational det = determinant(to_rational(m));
  return boost::multiprecision::numerator(det);
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return RationalMatrix{};
  RationalMatrix augmented(n, RationalVector(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw Error(ErrorCode::InvalidArgument, "inverse of a non-square matrix");
    for (std::size_t j = 0; j < n; ++j) augmented[i][j] = m[i][j];
    augmented[i][n + i] = 1;
  }
  auto echelon = row_reduce(std::move(augmented), 2 * n);
  if (echelon.rows.size() < n || echelon.pivots[n - 1] != n - 1) return std::nullopt;
  RationalMatrix inv(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = echelon.rows[i][n + j];
  }
  return inv;
}

RationalMatrix kernel(const RationalMatrix& m, std::size_t columns) {
  const auto echelon = row_reduce(m, columns);
  std::vector<bool> is_pivot(columns, false);
  for (auto p : echelon.pivots) is_pivot[p] = true;

  RationalMatrix basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(columns, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < echelon.rows.size(); ++r) {
      v[echelon.pivots[r]] = -echelon.rows[r][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_row_span(const RationalMatrix& rows, const RationalVector& v) {
  const std::size_t columns = v.size();
  const std::size_t before = rank(rows, columns);
  RationalMatrix extended = rows;
  extended.push_back(v);
  return rank(extended, columns) == before;
}

RationalVector multiply(const RationalMatrix& m, const RationalVector& v) {
  RationalVector out(m.size(), Rational(0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (m[i][j] != 0 && v[j] != 0) out[i] += m[i][j] * v[j];
    }
  }
  return out;
}

}  // namespace toricq
