#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "toricq/linalg.hpp"
#include "toricq/rational.hpp"

namespace toricq {

/// Integral vector in the lattice N.
using LatticeVector = std::vector<std::int64_t>;

/// A cone of the fan, stored as the sorted set of its ray indices (0-based).
class Cone {
 public:
  Cone() = default;
  explicit Cone(std::vector<std::size_t> rays);

  const std::vector<std::size_t>& rays() const noexcept { return rays_; }
  std::size_t size() const noexcept { return rays_.size(); }
  bool contains(std::size_t ray) const;
  /// True when every ray of `other` is a ray of this cone.
  bool contains(const Cone& other) const;

  auto operator<=>(const Cone&) const = default;
  bool operator==(const Cone&) const = default;

 private:
  std::vector<std::size_t> rays_;
};

/// A codimension-one cone shared by two maximal cones, together with the
/// unique integral relation among the n+1 rays of the two sides.
struct Wall {
  Cone face;
  /// Indices of the two maximal cones containing `face`, ascending.
  std::array<std::size_t, 2> sides{};
  /// The ray of each side that is not on the face, aligned with `sides`.
  std::array<std::size_t, 2> off_face_rays{};
  /// Relation coefficients c_rho indexed by ray (length l), zero outside the
  /// two sides. sum_rho c_rho * rho = 0 and both off-face coefficients are 1.
  std::vector<std::int64_t> relation;
};

/// A validated complete nonsingular fan. Instances only come out of
/// build_fan(), so every Fan satisfies smoothness, completeness and the fan
/// condition. Immutable after construction.
class Fan {
 public:
  std::size_t dim() const noexcept { return dim_; }
  std::size_t ray_count() const noexcept { return rays_.size(); }
  /// r = l - n, the rank of the Picard group.
  std::size_t picard_rank() const noexcept { return rays_.size() - dim_; }
  const std::string& name() const noexcept { return name_; }

  const std::vector<LatticeVector>& rays() const noexcept { return rays_; }
  const LatticeVector& ray(std::size_t index) const { return rays_.at(index); }
  const std::vector<Cone>& max_cones() const noexcept { return cones_; }
  const Cone& max_cone(std::size_t index) const { return cones_.at(index); }
  const std::vector<Wall>& walls() const noexcept { return walls_; }

  /// True when the ray set lies in a single cone of the fan.
  bool spans_cone(std::span<const std::size_t> rays) const;

  /// Coordinates of `point` in the ray basis of a maximal cone (unimodular, so
  /// integral points have integral coordinates).
  RationalVector cone_coordinates(std::size_t cone, std::span<const Rational> point) const;

  /// Indices of the maximal cones whose closure contains `point`.
  std::vector<std::size_t> cones_containing(std::span<const Rational> point) const;

  /// Runs the full validation again on the stored data. Throws like build_fan.
  void validate() const;

 private:
  friend Fan build_fan(std::size_t, std::vector<LatticeVector>,
                       std::vector<std::vector<std::size_t>>, std::string);

  Fan() = default;

  std::size_t dim_ = 0;
  std::string name_;
  std::vector<LatticeVector> rays_;
  std::vector<Cone> cones_;
  std::vector<Wall> walls_;
  /// Inverse ray matrices of the maximal cones: row i gives the i-th ray
  /// coordinate of a point.
  std::vector<RationalMatrix> inverse_ray_matrices_;
};

/// Validates the data and builds a Fan. Cone indices are 0-based here; each
/// cone is canonicalized by sorting. Rays and the order of the maximal cones
/// are kept as given. Throws toricq::Error with code DimensionMismatch,
/// NonPrimitiveRay, NonUnimodularCone, NotComplete or NotAFan, naming the
/// first offending ray or cone.
Fan build_fan(std::size_t dim, std::vector<LatticeVector> rays,
              std::vector<std::vector<std::size_t>> max_cones, std::string name = {});

/// One wall per codimension-one cone, ordered lexicographically by face.
const std::vector<Wall>& walls(const Fan& fan);

/// Minimal ray subsets not contained in any cone, in lexicographic order of
/// their sorted index sets.
std::vector<Cone> primitive_collections(const Fan& fan);

}  // namespace toricq
