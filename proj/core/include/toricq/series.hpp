#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toricq/cohomology.hpp"
#include "toricq/picard.hpp"
#include "toricq/rational.hpp"

namespace toricq {

/// Exponent vector over the parameters t_0, ..., t_r.
using TExponent = std::vector<std::uint32_t>;

unsigned total_degree(const TExponent& e);
TExponent add_exponents(const TExponent& a, const TExponent& b);

/// Truncation contract shared by every series operation. Terms with a z
/// exponent below z_floor or a total t-degree above t_trunc are discarded.
/// Operands with different truncations are rejected.
struct Truncation {
  int z_floor = 0;
  unsigned t_trunc = 0;
  std::size_t t_vars = 0;

  bool operator==(const Truncation&) const = default;
};

/// Truncated polynomial in t_0..t_r with rational coefficients.
class TPoly {
 public:
  TPoly(std::size_t vars, unsigned t_trunc) : vars_(vars), t_trunc_(t_trunc) {}

  static TPoly constant(std::size_t vars, unsigned t_trunc, const Rational& c);
  static TPoly variable(std::size_t vars, unsigned t_trunc, std::size_t index);

  const std::map<TExponent, Rational>& terms() const noexcept { return terms_; }
  std::size_t vars() const noexcept { return vars_; }
  unsigned t_trunc() const noexcept { return t_trunc_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const TExponent& e, const Rational& c);

  TPoly& operator+=(const TPoly& other);
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  bool operator==(const TPoly&) const = default;

 private:
  void check_compatible(const TPoly& other) const;

  std::size_t vars_;
  unsigned t_trunc_;
  std::map<TExponent, Rational> terms_;
};

struct SeriesKey {
  int z = 0;
  TExponent t;

  bool operator==(const SeriesKey&) const = default;
};

/// Canonical term order: z descending, then t exponent lexicographic.
struct SeriesKeyOrder {
  bool operator()(const SeriesKey& a, const SeriesKey& b) const {
    if (a.z != b.z) return a.z > b.z;
    return a.t < b.t;
  }
};

/// Finite Laurent polynomial in z whose coefficients are cohomology classes
/// with truncated-polynomial coefficients in t. Stored flat as
/// (z, t-exponent) -> CohClass with zero entries pruned.
class ZLaurentSeries {
 public:
  using Terms = std::map<SeriesKey, CohClass, SeriesKeyOrder>;

  ZLaurentSeries(std::shared_ptr<const CohomologyRing> ring, Truncation trunc);

  static ZLaurentSeries one(std::shared_ptr<const CohomologyRing> ring, Truncation trunc);
  static ZLaurentSeries term(std::shared_ptr<const CohomologyRing> ring, Truncation trunc, int z,
                             TExponent t, const CohClass& c);
  /// D + j z for a class D.
  static ZLaurentSeries linear_factor(std::shared_ptr<const CohomologyRing> ring, Truncation trunc,
                                      const CohClass& d, std::int64_t j);

  const Terms& terms() const noexcept { return terms_; }
  const CohomologyRing& ring() const noexcept { return *ring_; }
  const std::shared_ptr<const CohomologyRing>& ring_ptr() const noexcept { return ring_; }
  const Truncation& truncation() const noexcept { return trunc_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Adds c * z^z * t^t, dropping it if outside the truncation.
  void add_term(int z, const TExponent& t, const CohClass& c);

  /// All (t-exponent, class) pairs at a fixed z power.
  std::map<TExponent, CohClass> z_coefficient(int z) const;
  std::optional<int> min_z() const;
  std::optional<int> max_z() const;

  /// Same terms under a different z floor (terms below the new floor dropped).
  ZLaurentSeries with_floor(int z_floor) const;

  ZLaurentSeries& operator+=(const ZLaurentSeries& other);
  ZLaurentSeries& operator-=(const ZLaurentSeries& other);
  ZLaurentSeries& operator*=(const Rational& scalar);

  bool operator==(const ZLaurentSeries& other) const;

  void check_compatible(const ZLaurentSeries& other) const;

 private:
  std::shared_ptr<const CohomologyRing> ring_;
  Truncation trunc_;
  Terms terms_;
};

ZLaurentSeries zl_add(const ZLaurentSeries& a, const ZLaurentSeries& b);
ZLaurentSeries zl_mul(const ZLaurentSeries& a, const ZLaurentSeries& b);

/// Inverse of a = c z^k (1 + nu) with nu nilpotent (every term has positive
/// divisor degree or positive t-degree). The geometric series is summed
/// exactly and only then cut at the floor. Throws NotInvertible.
ZLaurentSeries zl_invert_unit(const ZLaurentSeries& a);

/// exp(argument * z^z_power) for z_power in {-1, 0}. Every term of the
/// argument must have positive t-degree and z exponent 0 so the series
/// terminates under the t truncation.
ZLaurentSeries exp_factor(const ZLaurentSeries& argument, int z_power);

/// Novikov-graded family beta -> series.
struct IFunctionSeries {
  /// "small_I", "big_I_k0", "J_oracle" or "J_from_I".
  std::string part;
  DivisorClass polarization;
  std::int64_t degree_bound = 0;
  Truncation truncation;
  std::shared_ptr<const CohomologyRing> ring;
  /// Sorted by (degree against polarization, f).
  std::vector<std::pair<CurveClass, ZLaurentSeries>> entries;

  const ZLaurentSeries* find(const CurveClass& beta) const;
};

/// Sorts entries by (polarization degree, f).
void sort_entries(IFunctionSeries& series);

}  // namespace toricq
