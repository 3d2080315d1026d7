#include "toricq/fan.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <sstream>

#include "toricq/error.hpp"

namespace toricq {

Cone::Cone(std::vector<std::size_t> rays) : rays_(std::move(rays)) {
  std::sort(rays_.begin(), rays_.end());
}

bool Cone::contains(std::size_t ray) const {
  return std::binary_search(rays_.begin(), rays_.end(), ray);
}

bool Cone::contains(const Cone& other) const {
  return std::includes(rays_.begin(), rays_.end(), other.rays_.begin(), other.rays_.end());
}

namespace {

// Messages use 1-based indices to match fan files.
std::string describe_set(const std::vector<std::size_t>& indices) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < indices.size(); ++i) os << (i ? "," : "") << indices[i] + 1;
  os << '}';
  return os.str();
}

std::string describe_vector(const LatticeVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string describe_cone(std::size_t index, const Cone& cone) {
  return "cone " + std::to_string(index + 1) + " " + describe_set(cone.rays());
}

RationalMatrix ray_matrix(const std::vector<LatticeVector>& rays, const Cone& cone) {
  // Columns are the rays of the cone.
  const std::size_t n = cone.size();
  RationalMatrix m(n, RationalVector(n));
  for (std::size_t j = 0; j < n; ++j) {
    const auto& ray = rays[cone.rays()[j]];
    for (std::size_t i = 0; i < n; ++i) m[i][j] = ray[i];
  }
  return m;
}

RationalVector to_rational_vector(const LatticeVector& v) {
  return RationalVector(v.begin(), v.end());
}

bool positively_parallel(const RationalVector& v, const LatticeVector& ray) {
  // v = c * ray for some c > 0.
  std::optional<Rational> scale;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (ray[i] == 0) {
      if (v[i] != 0) return false;
      continue;
    }
    const Rational c = v[i] / ray[i];
    if (scale && *scale != c) return false;
    scale = c;
  }
  return scale && *scale > 0;
}

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct Validated {
  std::vector<Cone> cones;
  std::vector<RationalMatrix> inverses;
  std::vector<Wall> walls;
};

void check_shapes(std::size_t dim, const std::vector<LatticeVector>& rays,
                  const std::vector<std::vector<std::size_t>>& cones) {
  if (dim == 0) throw Error(ErrorCode::DimensionMismatch, "lattice dimension must be positive");
  if (rays.empty()) throw Error(ErrorCode::DimensionMismatch, "no rays given");
  if (cones.empty()) throw Error(ErrorCode::DimensionMismatch, "no maximal cones given");
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (rays[i].size() != dim) {
      throw Error(ErrorCode::DimensionMismatch,
                  "ray " + std::to_string(i + 1) + " has " + std::to_string(rays[i].size()) +
                      " coordinates, expected " + std::to_string(dim));
    }
  }
  for (std::size_t c = 0; c < cones.size(); ++c) {
    const auto& cone = cones[c];
    const std::string name = "cone " + std::to_string(c + 1);
    if (cone.size() != dim) {
      throw Error(ErrorCode::DimensionMismatch, name + " has " + std::to_string(cone.size()) +
                                                    " rays, expected " + std::to_string(dim));
    }
    for (auto r : cone) {
      if (r >= rays.size()) {
        throw Error(ErrorCode::DimensionMismatch,
                    name + " references ray " + std::to_string(r + 1) + " but there are only " +
                        std::to_string(rays.size()) + " rays");
      }
    }
    if (std::set<std::size_t>(cone.begin(), cone.end()).size() != cone.size()) {
      throw Error(ErrorCode::DimensionMismatch, name + " repeats a ray index");
    }
  }
}

void check_primitive(const std::vector<LatticeVector>& rays) {
  for (std::size_t i = 0; i < rays.size(); ++i) {
    std::int64_t g = 0;
    for (auto x : rays[i]) g = std::gcd(g, x);
    if (g != 1) {
      throw Error(ErrorCode::NonPrimitiveRay,
                  "ray " + std::to_string(i + 1) + " " + describe_vector(rays[i]) +
                      (g == 0 ? " is zero" : " is not primitive (gcd " + std::to_string(g) + ")"));
    }
  }
}

void check_duplicates(const std::vector<LatticeVector>& rays, const std::vector<Cone>& cones) {
  std::map<LatticeVector, std::size_t> seen_rays;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    auto [it, inserted] = seen_rays.emplace(rays[i], i);
    if (!inserted) {
      throw Error(ErrorCode::NotAFan, "rays " + std::to_string(it->second + 1) + " and " +
                                          std::to_string(i + 1) + " coincide");
    }
  }
  std::map<Cone, std::size_t> seen_cones;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    auto [it, inserted] = seen_cones.emplace(cones[i], i);
    if (!inserted) {
      throw Error(ErrorCode::NotAFan, describe_cone(i, cones[i]) + " duplicates cone " +
                                          std::to_string(it->second + 1));
    }
  }
  std::vector<bool> used(rays.size(), false);
  for (const auto& cone : cones) {
    for (auto r : cone.rays()) used[r] = true;
  }
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (!used[i]) {
      throw Error(ErrorCode::NotAFan,
                  "ray " + std::to_string(i + 1) + " is not a face of any maximal cone");
    }
  }
}

std::vector<RationalMatrix> check_unimodular(const std::vector<LatticeVector>& rays,
                                             const std::vector<Cone>& cones) {
  std::vector<RationalMatrix> inverses;
  inverses.reserve(cones.size());
  for (std::size_t c = 0; c < cones.size(); ++c) {
    const auto m = ray_matrix(rays, cones[c]);
    const Rational det = determinant(m);
    if (det != 1 && det != -1) {
      throw Error(ErrorCode::NonUnimodularCone,
                  describe_cone(c, cones[c]) + " has determinant " + to_string(det));
    }
    inverses.push_back(*inverse(m));
  }
  return inverses;
}

std::vector<Wall> check_ridges(const std::vector<LatticeVector>& rays,
                               const std::vector<Cone>& cones,
                               const std::vector<RationalMatrix>& inverses) {
  std::map<Cone, std::vector<std::size_t>> ridges;
  for (std::size_t c = 0; c < cones.size(); ++c) {
    const auto& r = cones[c].rays();
    for (std::size_t drop = 0; drop < r.size(); ++drop) {
      std::vector<std::size_t> face;
      for (std::size_t k = 0; k < r.size(); ++k) {
        if (k != drop) face.push_back(r[k]);
      }
      ridges[Cone(std::move(face))].push_back(c);
    }
  }

  for (const auto& [face, owners] : ridges) {
    if (owners.size() == 1) {
      throw Error(ErrorCode::NotComplete, "ridge " + describe_set(face.rays()) +
                                              " lies only in " + describe_cone(owners[0], cones[owners[0]]));
    }
    if (owners.size() > 2) {
      throw Error(ErrorCode::NotAFan, "ridge " + describe_set(face.rays()) + " lies in " +
                                          std::to_string(owners.size()) + " maximal cones");
    }
  }

  // Adjacency graph of maximal cones must be connected.
  std::vector<std::vector<std::size_t>> adjacent(cones.size());
  for (const auto& [face, owners] : ridges) {
    adjacent[owners[0]].push_back(owners[1]);
    adjacent[owners[1]].push_back(owners[0]);
  }
  std::vector<bool> reached(cones.size(), false);
  std::queue<std::size_t> frontier;
  frontier.push(0);
  reached[0] = true;
  while (!frontier.empty()) {
    const auto c = frontier.front();
    frontier.pop();
    for (auto next : adjacent[c]) {
      if (!reached[next]) {
        reached[next] = true;
        frontier.push(next);
      }
    }
  }
  for (std::size_t c = 0; c < cones.size(); ++c) {
    if (!reached[c]) {
      throw Error(ErrorCode::NotComplete, describe_cone(c, cones[c]) +
                                              " is not connected to cone 1 through shared ridges");
    }
  }

  std::vector<Wall> walls;
  walls.reserve(ridges.size());
  for (const auto& [face, owners] : ridges) {
    Wall wall;
    wall.face = face;
    wall.sides = {std::min(owners[0], owners[1]), std::max(owners[0], owners[1])};
    for (std::size_t s = 0; s < 2; ++s) {
      for (auto r : cones[wall.sides[s]].rays()) {
        if (!face.contains(r)) wall.off_face_rays[s] = r;
      }
    }
    // Express the far off-face ray in the ray basis of the first side.
    const auto& side = cones[wall.sides[0]];
    const auto lambda = multiply(inverses[wall.sides[0]], to_rational_vector(rays[wall.off_face_rays[1]]));
    wall.relation.assign(rays.size(), 0);
    for (std::size_t k = 0; k < side.size(); ++k) {
      const auto ray = side.rays()[k];
      const Rational& coeff = lambda[k];
      if (ray == wall.off_face_rays[0]) {
        if (coeff != -1) {
          throw Error(ErrorCode::NotAFan,
                      describe_cone(wall.sides[0], cones[wall.sides[0]]) + " and " +
                          describe_cone(wall.sides[1], cones[wall.sides[1]]) +
                          " lie on the same side of their common ridge " + describe_set(face.rays()));
        }
        wall.relation[ray] = 1;
      } else {
        wall.relation[ray] = -static_cast<std::int64_t>(boost::multiprecision::numerator(coeff));
      }
    }
    wall.relation[wall.off_face_rays[1]] = 1;
    walls.push_back(std::move(wall));
  }
  return walls;
}

// The intersection of two simplicial cones is the polyhedral cone cut out by
// the 2n inequalities of both. It equals the cone on the shared rays exactly
// when each of its extreme rays is a shared ray.
void check_fan_condition(const std::vector<LatticeVector>& rays, const std::vector<Cone>& cones,
                         const std::vector<RationalMatrix>& inverses, std::size_t dim) {
  for (std::size_t a = 0; a < cones.size(); ++a) {
    for (std::size_t b = a + 1; b < cones.size(); ++b) {
      std::vector<std::size_t> shared;
      std::set_intersection(cones[a].rays().begin(), cones[a].rays().end(), cones[b].rays().begin(),
                            cones[b].rays().end(), std::back_inserter(shared));
      RationalMatrix normals = inverses[a];
      normals.insert(normals.end(), inverses[b].begin(), inverses[b].end());

      const auto fail = [&] {
        throw Error(ErrorCode::NotAFan, describe_cone(a, cones[a]) + " and " + describe_cone(b, cones[b]) +
                                            " intersect in more than their common face " +
                                            describe_set(shared));
      };

      for_each_subset(normals.size(), dim - 1, [&](const std::vector<std::size_t>& subset) {
        RationalMatrix tight;
        for (auto i : subset) tight.push_back(normals[i]);
        const auto null = kernel(tight, dim);
        if (null.size() != 1) return;
        for (int sign : {1, -1}) {
          RationalVector v = null.front();
          if (sign < 0) {
            for (auto& x : v) x = -x;
          }
          bool feasible = true;
          for (const auto& normal : normals) {
            Rational dot = 0;
            for (std::size_t i = 0; i < dim; ++i) dot += normal[i] * v[i];
            if (dot < 0) {
              feasible = false;
              break;
            }
          }
          if (!feasible) continue;
          const bool on_shared = std::any_of(shared.begin(), shared.end(), [&](std::size_t r) {
            return positively_parallel(v, rays[r]);
          });
          if (!on_shared) fail();
        }
      });
    }
  }
}

Validated validate_data(std::size_t dim, const std::vector<LatticeVector>& rays,
                        const std::vector<std::vector<std::size_t>>& raw_cones) {
  check_shapes(dim, rays, raw_cones);
  check_primitive(rays);
  Validated out;
  out.cones.reserve(raw_cones.size());
  for (const auto& c : raw_cones) out.cones.emplace_back(c);
  check_duplicates(rays, out.cones);
  out.inverses = check_unimodular(rays, out.cones);
  out.walls = check_ridges(rays, out.cones, out.inverses);
  check_fan_condition(rays, out.cones, out.inverses, dim);
  return out;
}

}  // namespace

Fan build_fan(std::size_t dim, std::vector<LatticeVector> rays,
              std::vector<std::vector<std::size_t>> max_cones, std::string name) {
  auto validated = validate_data(dim, rays, max_cones);
  Fan fan;
  fan.dim_ = dim;
  fan.name_ = std::move(name);
  fan.rays_ = std::move(rays);
  fan.cones_ = std::move(validated.cones);
  fan.inverse_ray_matrices_ = std::move(validated.inverses);
  fan.walls_ = std::move(validated.walls);
  return fan;
}

void Fan::validate() const {
  std::vector<std::vector<std::size_t>> raw;
  raw.reserve(cones_.size());
  for (const auto& c : cones_) raw.push_back(c.rays());
  (void)validate_data(dim_, rays_, raw);
}

bool Fan::spans_cone(std::span<const std::size_t> rays) const {
  return std::any_of(cones_.begin(), cones_.end(), [&](const Cone& cone) {
    return std::all_of(rays.begin(), rays.end(), [&](std::size_t r) { return cone.contains(r); });
  });
}

RationalVector Fan::cone_coordinates(std::size_t cone, std::span<const Rational> point) const {
  if (point.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "point has wrong dimension");
  return multiply(inverse_ray_matrices_.at(cone), RationalVector(point.begin(), point.end()));
}

std::vector<std::size_t> Fan::cones_containing(std::span<const Rational> point) const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < cones_.size(); ++c) {
    const auto coords = cone_coordinates(c, point);
    if (std::all_of(coords.begin(), coords.end(), [](const Rational& x) { return x >= 0; })) {
      out.push_back(c);
    }
  }
  return out;
}

const std::vector<Wall>& walls(const Fan& fan) { return fan.walls(); }

std::vector<Cone> primitive_collections(const Fan& fan) {
  // |S| - 1 rays of a primitive collection span a cone, so |S| <= n + 1.
  std::vector<Cone> out;
  const std::size_t l = fan.ray_count();
  for (std::size_t size = 2; size <= std::min(l, fan.dim() + 1); ++size) {
    for_each_subset(l, size, [&](const std::vector<std::size_t>& subset) {
      if (fan.spans_cone(subset)) return;
      std::vector<std::size_t> smaller(size - 1);
      for (std::size_t drop = 0; drop < size; ++drop) {
        std::size_t k = 0;
        for (std::size_t i = 0; i < size; ++i) {
          if (i != drop) smaller[k++] = subset[i];
        }
        if (!fan.spans_cone(smaller)) return;
      }
      out.emplace_back(subset);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace toricq
