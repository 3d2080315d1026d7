#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "toricq/fan.hpp"
#include "toricq/linalg.hpp"
#include "toricq/picard.hpp"
#include "toricq/rational.hpp"

namespace toricq {

/// Exponent vector over the ray variables x_rho.
using Monomial = std::vector<std::uint32_t>;

/// Graded reverse lexicographic order with x_1 > x_2 > ... > x_l.
bool grevlex_greater(const Monomial& a, const Monomial& b);

/// A cohomology class: rational coefficients over the ring's full graded
/// basis, flattened in degree order (degree-0 block first). Use the ring to
/// interpret the layout.
struct CohClass {
  RationalVector coeffs;

  bool is_zero() const;
  bool operator==(const CohClass&) const = default;

  CohClass& operator+=(const CohClass& other);
  CohClass& operator-=(const CohClass& other);
  CohClass& operator*=(const Rational& scalar);
};

CohClass operator+(CohClass a, const CohClass& b);
CohClass operator-(CohClass a, const CohClass& b);
CohClass operator*(const Rational& scalar, CohClass a);

/// H*(X; Q) presented as Q[x_rho] / (Stanley-Reisner + linear relations),
/// with x_rho in divisor degree 1. Bases are the standard monomials with
/// respect to grevlex, computed by exact elimination degree by degree.
class CohomologyRing {
 public:
  std::size_t dim() const noexcept { return dim_; }
  std::size_t ray_count() const noexcept { return ray_count_; }
  std::size_t total_dim() const noexcept { return total_dim_; }

  /// Betti numbers b_{2k}, k = 0..n.
  std::vector<std::size_t> betti() const;
  const std::vector<Monomial>& basis(std::size_t degree) const { return basis_.at(degree); }
  /// Offset of the degree-k block inside CohClass::coeffs.
  std::size_t offset(std::size_t degree) const { return offsets_.at(degree); }
  /// Divisor degree of the flattened basis index.
  std::size_t degree_of(std::size_t index) const { return index_degree_.at(index); }
  /// "1", "x3", "x1*x4^2" (1-based ray indices).
  std::string label(std::size_t index) const;

  const std::vector<Cone>& sr_generators() const noexcept { return sr_generators_; }
  const std::vector<std::size_t>& picard_basis_rays() const noexcept { return basis_rays_; }
  std::size_t basis_cone() const noexcept { return basis_cone_; }

  CohClass zero() const;
  CohClass one() const;
  CohClass basis_element(std::size_t index) const;

  /// Normal form of a monomial; zero beyond degree n or on SR monomials.
  CohClass reduce(const Monomial& m) const;

  CohClass ray_class(std::size_t ray) const;
  /// sum_i coords_i x_{basis_rays[i]}. Throws BasisMismatch on a foreign tag.
  CohClass divisor_class(const DivisorClass& d) const;

  CohClass mul(const CohClass& a, const CohClass& b) const;
  CohClass pow(const CohClass& a, unsigned exponent) const;

  /// Coefficient of the degree-n part against the point class. For every
  /// maximal cone the product of its ray variables integrates to 1.
  Rational integrate(const CohClass& a) const;

  /// Matrix (integrate(b_i * b_j)) for b_i in degree k, b_j in degree n-k.
  RationalMatrix poincare_pairing(std::size_t degree) const;

  /// Membership of c in the ideal generated by `generators`.
  bool ideal_contains(std::span<const CohClass> generators, const CohClass& c) const;

  /// Part of `a` in divisor degree k, as a vector over basis(k).
  RationalVector component(const CohClass& a, std::size_t degree) const;
  /// Highest degree with a nonzero coefficient, or -1 for the zero class.
  int top_degree(const CohClass& a) const;

 private:
  friend CohomologyRing build_ring(const Fan& fan, const WeightMatrix& a);
  CohomologyRing() = default;

  std::size_t dim_ = 0;
  std::size_t ray_count_ = 0;
  std::size_t total_dim_ = 0;
  std::size_t basis_cone_ = 0;
  std::vector<std::size_t> basis_rays_;
  std::vector<Cone> max_cones_;
  std::vector<Cone> sr_generators_;
  std::vector<std::vector<Monomial>> basis_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> index_degree_;
  /// Normal forms of every surviving monomial of degree <= n.
  std::map<Monomial, CohClass> normal_forms_;
  /// products_[i][j]: sparse product of basis elements i and j.
  std::vector<std::vector<std::vector<std::pair<std::size_t, Rational>>>> products_;
  Rational point_normalization_;
};

CohomologyRing build_ring(const Fan& fan, const WeightMatrix& a);

CohClass divisor_to_coh(const CohomologyRing& ring, const DivisorClass& d);
CohClass divisor_to_coh(const CohomologyRing& ring, std::size_t ray);

}  // namespace toricq
