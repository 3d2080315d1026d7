#pragma once

// Independent reference computations used by the tests. Nothing here calls
// the library routine it is meant to check; the cohomology and series
// oracles work in hand-written models of the rings involved.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "toricq/fan.hpp"
#include "toricq/picard.hpp"
#include "toricq/rational.hpp"
#include "toricq/series.hpp"
#include "toricq/variety.hpp"

namespace oracle {

using toricq::Rational;

/// Path of a shipped fan file, e.g. fan_path("f2").
std::string fan_path(const std::string& name);
/// The five shipped fans, loaded from their files.
std::vector<toricq::Fan> shipped_fans();

/// Primitive collections by enumerating every ray subset.
std::set<std::vector<std::size_t>> primitive_collections(const toricq::Fan& fan);

/// Effective classes by nested loops over multiplicities of the wall curve
/// generators (no BFS, no dedup by construction order).
std::set<std::vector<std::int64_t>> effective_classes(const std::vector<std::vector<std::int64_t>>& generators,
                                                      const std::vector<std::int64_t>& polarization,
                                                      std::int64_t bound);

/// [u^m] of prod_{j=1}^{d} (j + u)^{-(n+1)} for m = 0..n, by power-series
/// long division. The Q^d coefficient of the P^n I-function at t = 0 is
/// sum_m c_m H^m z^{-d(n+1)-m}.
std::vector<Rational> pn_coefficients(unsigned n, unsigned d);

/// Intersection numbers D_i . D_j on F_2 worked out by hand from
/// x1 = x2, x3 = x4 + 2 x2, x1 x2 = x3 x4 = 0, x1 x3 = 1.
Rational f2_intersection(std::size_t i, std::size_t j);

/// (1 - g)(n - 3) + k + sum_rho d_rho.
std::int64_t vdim(std::int64_t n, std::int64_t g, std::int64_t k, const std::vector<std::int64_t>& ray_degrees);

/// Rank of a rational matrix by plain Gaussian elimination.
std::size_t rank(std::vector<std::vector<Rational>> m);

/// Random class with small rational coefficients.
toricq::CohClass random_class(const toricq::CohomologyRing& ring, std::mt19937& rng);

/// Sum of c * z^z * t^t over the listed terms.
toricq::ZLaurentSeries series(const toricq::ToricVariety& v, toricq::Truncation trunc,
                              const std::vector<std::tuple<int, toricq::TExponent, toricq::CohClass>>& terms);

}  // namespace oracle
