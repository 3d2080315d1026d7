#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "toricq/rational.hpp"
#include "toricq/series.hpp"

namespace toricq {

/// Truncation for scalar series in the Novikov variables Q^beta and the
/// parameters t. A term Q^beta t^m is kept when
///   0 <= deg(beta) <= degree_bound, and
///   |m| <= t_trunc                 (plain mode), or
///   |m| + deg(beta) <= t_trunc     (weighted mode),
/// where deg(beta) is the degree against the polarization. The weighted
/// filtration is preserved by substitutions t -> t + (Novikov-positive
/// corrections) even when the corrections are constant in t.
struct NovikovTruncation {
  std::vector<std::int64_t> polarization;
  std::int64_t degree_bound = 0;
  unsigned t_trunc = 0;
  std::size_t t_vars = 0;
  bool weighted = false;

  std::int64_t novikov_degree(std::span<const std::int64_t> f) const;
  bool keeps(std::span<const std::int64_t> f, const TExponent& t) const;
  bool operator==(const NovikovTruncation&) const = default;
};

struct NovikovKey {
  std::vector<std::int64_t> f;
  TExponent t;

  auto operator<=>(const NovikovKey&) const = default;
  bool operator==(const NovikovKey&) const = default;
};

/// Scalar series sum c * Q^f * t^m with rational coefficients.
class NovikovPoly {
 public:
  using Terms = std::map<NovikovKey, Rational>;

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const NovikovKey& key, const Rational& c, const NovikovTruncation& trunc);

  NovikovPoly& operator+=(const NovikovPoly& other);
  NovikovPoly& operator-=(const NovikovPoly& other);
  bool operator==(const NovikovPoly&) const = default;

 private:
  Terms terms_;
};

NovikovPoly novikov_mul(const NovikovPoly& a, const NovikovPoly& b, const NovikovTruncation& trunc);

/// p(t_0 <- values[0], ..., t_r <- values[r]).
NovikovPoly substitute(const NovikovPoly& p, std::span<const NovikovPoly> values,
                       const NovikovTruncation& trunc);

/// Precomputed powers of substitution values, reused across many polynomials.
class PowerTable {
 public:
  PowerTable(std::span<const NovikovPoly> values, const NovikovTruncation& trunc);

  /// prod_j values[j]^t[j].
  NovikovPoly monomial(const TExponent& t) const;

 private:
  NovikovTruncation trunc_;
  std::vector<std::vector<NovikovPoly>> powers_;
  mutable std::map<TExponent, NovikovPoly> cache_;
};

}  // namespace toricq
