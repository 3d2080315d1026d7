#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "toricq/rational.hpp"

namespace toricq {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;
using IntegerMatrix = std::vector<std::vector<std::int64_t>>;

RationalMatrix to_rational(const IntegerMatrix& m);

/// Reduced row echelon form over Q. Zero rows are dropped, so `rows.size()`
/// is the rank and `pivots[i]` is the pivot column of `rows[i]`.
struct RowEchelon {
  RationalMatrix rows;
  std::vector<std::size_t> pivots;
};

RowEchelon row_reduce(RationalMatrix m, std::size_t columns);

std::size_t rank(const RationalMatrix& m, std::size_t columns);

Rational determinant(RationalMatrix m);

/// Exact determinant of a square integer matrix.
Integer determinant(const IntegerMatrix& m);

/// Inverse of a square matrix; std::nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

/// Basis of the right kernel {x : m x = 0}.
RationalMatrix kernel(const RationalMatrix& m, std::size_t columns);

/// True when `v` lies in the row span of `rows`.
bool in_row_span(const RationalMatrix& rows, const RationalVector& v);

RationalVector multiply(const RationalMatrix& m, const RationalVector& v);

}  // namespace toricq
