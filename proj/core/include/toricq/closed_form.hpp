#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "toricq/fan.hpp"
#include "toricq/series.hpp"
#include "toricq/variety.hpp"

namespace toricq {

/// n+1 rays summing to zero with every n-subset a maximal cone.
bool is_projective_space_fan(const Fan& fan);

/// e^{t/z} sum_d Q^d e^{d t_1} / prod_{j=1}^d (H + jz)^{n+1}, expanded directly
/// in Q[H]/(H^{n+1}) by the binomial series and only embedded into the
/// variety's ring at the end. The variety must be a projective space.
IFunctionSeries closed_form_J_Pn(const ToricVariety& pn, std::int64_t degree_bound, unsigned t_trunc,
                                 int z_floor);

struct CoefficientMismatch {
  CurveClass beta;
  SeriesKey key;
  std::size_t basis_index = 0;
  Rational left;
  Rational right;
};

struct SeriesComparison {
  std::size_t coefficients_compared = 0;
  std::vector<CoefficientMismatch> mismatches;

  bool identical() const noexcept { return mismatches.empty(); }
};

/// Coefficient-by-coefficient comparison over the union of supports.
SeriesComparison compare(const IFunctionSeries& left, const IFunctionSeries& right);

}  // namespace toricq
