#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "toricq/fan.hpp"
#include "toricq/linalg.hpp"

namespace toricq {

/// The r x l integer matrix of Z^{Sigma(1)} -> Pic(X) in the basis
/// {O(D_rho) : rho not in basis_cone}. Column rho is the class of D_rho.
struct WeightMatrix {
  /// Index of the maximal cone whose complement furnishes the Picard basis.
  std::size_t basis_cone = 0;
  /// Rays not in basis_cone, ascending. L_i = O(D_{basis_rays[i]}).
  std::vector<std::size_t> basis_rays;
  /// entries[i][rho] = a_{i rho}.
  IntegerMatrix entries;

  std::size_t rank() const noexcept { return entries.size(); }
  std::size_t ray_count() const noexcept { return entries.empty() ? 0 : entries.front().size(); }
  std::vector<std::int64_t> column(std::size_t ray) const;
};

/// A line bundle class in Picard coordinates, tagged with the basis cone the
/// coordinates refer to.
struct DivisorClass {
  std::size_t basis_cone = 0;
  std::vector<std::int64_t> coords;

  auto operator<=>(const DivisorClass&) const = default;
  bool operator==(const DivisorClass&) const = default;
};

/// A curve class recorded by f_i = degree of L_i on the curve.
struct CurveClass {
  std::size_t basis_cone = 0;
  std::vector<std::int64_t> f;

  bool is_zero() const;
  auto operator<=>(const CurveClass&) const = default;
  bool operator==(const CurveClass&) const = default;
};

CurveClass operator+(const CurveClass& a, const CurveClass& b);
DivisorClass operator+(const DivisorClass& a, const DivisorClass& b);

WeightMatrix weight_matrix(const Fan& fan, std::optional<std::size_t> basis_cone = std::nullopt);

DivisorClass ray_divisor_class(const WeightMatrix& a, std::size_t ray);

/// Class of sum_rho alpha_rho D_rho.
DivisorClass divisor_from_ray_coefficients(const WeightMatrix& a,
                                           std::span<const std::int64_t> alpha);

/// c1(T_X) = sum_rho [D_rho], from the Euler sequence.
DivisorClass anticanonical(const WeightMatrix& a);

CurveClass zero_curve(const WeightMatrix& a);

/// d_rho = sum_i a_{i rho} f_i for every ray.
std::vector<std::int64_t> ray_degrees(const WeightMatrix& a, const CurveClass& beta);

/// The curve class of the torus-invariant curve of a wall: its ray degrees
/// are the wall relation coefficients.
CurveClass wall_curve_class(const Fan& fan, const WeightMatrix& a, const Wall& wall);

/// Pairing sum_i f_i D_i. Throws BasisMismatch when the tags differ.
std::int64_t degree(const CurveClass& beta, const DivisorClass& d);

bool is_nef(const Fan& fan, const WeightMatrix& a, const DivisorClass& d);
bool is_ample(const Fan& fan, const WeightMatrix& a, const DivisorClass& d);
bool is_fano(const Fan& fan, const WeightMatrix& a);

/// Distinct wall curve classes in wall order (first occurrence kept).
std::vector<CurveClass> wall_curve_generators(const Fan& fan, const WeightMatrix& a);

/// Every nonzero nonnegative integer combination of wall curves whose degree
/// against `polarization` is at most `bound`, each exactly once, sorted by
/// (degree, f). The Mori cone of a smooth complete toric variety is generated
/// by its wall curves, so this is the full set of effective classes in range.
/// Throws NotAmplePolarization.
std::vector<CurveClass> enumerate_effective(const Fan& fan, const WeightMatrix& a,
                                            const DivisorClass& polarization, std::int64_t bound);

/// Integer matrix U with to.entries = U * from.entries (unimodular).
IntegerMatrix transition_matrix(const WeightMatrix& from, const WeightMatrix& to);

DivisorClass change_basis(const DivisorClass& d, const WeightMatrix& from, const WeightMatrix& to);
CurveClass change_basis(const CurveClass& beta, const WeightMatrix& from, const WeightMatrix& to);

/// Deterministic ample class: the first ample vector with coordinates in
/// [1, 8] ordered by coordinate sum then lexicographically (O(1) on P^n). Throws NotAmplePolarization when
/// the search finds nothing.
DivisorClass default_polarization(const Fan& fan, const WeightMatrix& a);

}  // namespace toricq
