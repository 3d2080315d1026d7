#include "toricq/picard.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "toricq/error.hpp"

namespace toricq {

std::vector<std::int64_t> WeightMatrix::column(std::size_t ray) const {
  if (ray >= ray_count()) throw Error(ErrorCode::InvalidArgument, "ray index out of range");
  std::vector<std::int64_t> col(rank());
  for (std::size_t i = 0; i < rank(); ++i) col[i] = entries[i][ray];
  return col;
}

bool CurveClass::is_zero() const {
  return std::all_of(f.begin(), f.end(), [](std::int64_t x) { return x == 0; });
}

namespace {

void require_same_basis(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw Error(ErrorCode::BasisMismatch, std::string(what) + ": basis cone " + std::to_string(a + 1) +
                                              " vs " + std::to_string(b + 1));
  }
}

std::vector<std::int64_t> add(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "class ranks differ");
  std::vector<std::int64_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

std::int64_t to_int64(const Rational& x) {
  if (boost::multiprecision::denominator(x) != 1) {
    throw Error(ErrorCode::InconsistentRelation, "non-integral value " + to_string(x));
  }
  return boost::multiprecision::numerator(x).convert_to<std::int64_t>();
}

}  // namespace

CurveClass operator+(const CurveClass& a, const CurveClass& b) {
  require_same_basis(a.basis_cone, b.basis_cone, "adding curve classes");
  return {a.basis_cone, add(a.f, b.f)};
}

DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
  require_same_basis(a.basis_cone, b.basis_cone, "adding divisor classes");
  return {a.basis_cone, add(a.coords, b.coords)};
}

WeightMatrix weight_matrix(const Fan& fan, std::optional<std::size_t> basis_cone) {
  const std::size_t sigma = basis_cone.value_or(0);
  if (sigma >= fan.max_cones().size()) {
    throw Error(ErrorCode::InvalidArgument, "basis cone " + std::to_string(sigma + 1) + " out of range");
  }
  const Cone& cone = fan.max_cone(sigma);
  const std::size_t l = fan.ray_count();

  WeightMatrix a;
  a.basis_cone = sigma;
  for (std::size_t rho = 0; rho < l; ++rho) {
    if (!cone.contains(rho)) a.basis_rays.push_back(rho);
  }
  const std::size_t r = a.basis_rays.size();
  a.entries.assign(r, std::vector<std::int64_t>(l, 0));
  for (std::size_t i = 0; i < r; ++i) a.entries[i][a.basis_rays[i]] = 1;

  // With m_k dual to the k-th ray of sigma, the relation sum <m_k, rho> D_rho = 0
  // reads D_{sigma_k} = -sum_{rho not in sigma} <m_k, rho> D_rho.
  for (std::size_t i = 0; i < r; ++i) {
    const auto& ray = fan.ray(a.basis_rays[i]);
    const RationalVector point(ray.begin(), ray.end());
    const auto pairing = fan.cone_coordinates(sigma, point);
    for (std::size_t k = 0; k < cone.size(); ++k) {
      a.entries[i][cone.rays()[k]] = -to_int64(pairing[k]);
    }
  }

  // Image of M must vanish in Pic.
  for (std::size_t j = 0; j < fan.dim(); ++j) {
    for (std::size_t i = 0; i < r; ++i) {
      std::int64_t sum = 0;
      for (std::size_t rho = 0; rho < l; ++rho) sum += fan.ray(rho)[j] * a.entries[i][rho];
      if (sum != 0) throw Error(ErrorCode::InconsistentRelation, "weight matrix is not exact on M");
    }
  }
  return a;
}

DivisorClass ray_divisor_class(const WeightMatrix& a, std::size_t ray) {
  return {a.basis_cone, a.column(ray)};
}

DivisorClass divisor_from_ray_coefficients(const WeightMatrix& a, std::span<const std::int64_t> alpha) {
  if (alpha.size() != a.ray_count()) {
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(a.ray_count()) +
                                                  " ray coefficients, got " + std::to_string(alpha.size()));
  }
  DivisorClass d{a.basis_cone, std::vector<std::int64_t>(a.rank(), 0)};
  for (std::size_t i = 0; i < a.rank(); ++i) {
    for (std::size_t rho = 0; rho < alpha.size(); ++rho) d.coords[i] += a.entries[i][rho] * alpha[rho];
  }
  return d;
}

DivisorClass anticanonical(const WeightMatrix& a) {
  const std::vector<std::int64_t> ones(a.ray_count(), 1);
  return divisor_from_ray_coefficients(a, ones);
}

CurveClass zero_curve(const WeightMatrix& a) {
  return {a.basis_cone, std::vector<std::int64_t>(a.rank(), 0)};
}

std::vector<std::int64_t> ray_degrees(const WeightMatrix& a, const CurveClass& beta) {
  require_same_basis(a.basis_cone, beta.basis_cone, "ray degrees");
  if (beta.f.size() != a.rank()) throw Error(ErrorCode::DimensionMismatch, "curve class has wrong rank");
  std::vector<std::int64_t> d(a.ray_count(), 0);
  for (std::size_t rho = 0; rho < d.size(); ++rho) {
    for (std::size_t i = 0; i < a.rank(); ++i) d[rho] += a.entries[i][rho] * beta.f[i];
  }
  return d;
}

CurveClass wall_curve_class(const Fan& fan, const WeightMatrix& a, const Wall& wall) {
  if (wall.relation.size() != fan.ray_count()) {
    throw Error(ErrorCode::DimensionMismatch, "wall relation has wrong length");
  }
  CurveClass beta{a.basis_cone, std::vector<std::int64_t>(a.rank())};
  for (std::size_t i = 0; i < a.rank(); ++i) beta.f[i] = wall.relation[a.basis_rays[i]];
  if (ray_degrees(a, beta) != wall.relation) {
    throw Error(ErrorCode::InconsistentRelation, "wall relation is not in the image of the weight matrix");
  }
  return beta;
}

std::int64_t degree(const CurveClass& beta, const DivisorClass& d) {
  require_same_basis(beta.basis_cone, d.basis_cone, "degree pairing");
  if (beta.f.size() != d.coords.size()) throw Error(ErrorCode::DimensionMismatch, "class ranks differ");
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < d.coords.size(); ++i) sum += beta.f[i] * d.coords[i];
  return sum;
}

std::vector<CurveClass> wall_curve_generators(const Fan& fan, const WeightMatrix& a) {
  std::vector<CurveClass> out;
  for (const auto& wall : fan.walls()) {
    auto beta = wall_curve_class(fan, a, wall);
    if (std::find(out.begin(), out.end(), beta) == out.end()) out.push_back(std::move(beta));
  }
  return out;
}

namespace {

bool all_wall_degrees(const Fan& fan, const WeightMatrix& a, const DivisorClass& d,
                      const std::function<bool(std::int64_t)>& accept) {
  require_same_basis(a.basis_cone, d.basis_cone, "positivity test");
  for (const auto& wall : fan.walls()) {
    if (!accept(degree(wall_curve_class(fan, a, wall), d))) return false;
  }
  return true;
}

}  // namespace

bool is_nef(const Fan& fan, const WeightMatrix& a, const DivisorClass& d) {
  return all_wall_degrees(fan, a, d, [](std::int64_t x) { return x >= 0; });
}

bool is_ample(const Fan& fan, const WeightMatrix& a, const DivisorClass& d) {
  return all_wall_degrees(fan, a, d, [](std::int64_t x) { return x > 0; });
}

bool is_fano(const Fan& fan, const WeightMatrix& a) { return is_ample(fan, a, anticanonical(a)); }

std::vector<CurveClass> enumerate_effective(const Fan& fan, const WeightMatrix& a,
                                            const DivisorClass& polarization, std::int64_t bound) {
  if (!is_ample(fan, a, polarization)) {
    throw Error(ErrorCode::NotAmplePolarization, "polarization is not ample");
  }
  if (bound < 0) throw Error(ErrorCode::InvalidArgument, "degree bound must be nonnegative");

  const auto generators = wall_curve_generators(fan, a);
  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::vector<std::int64_t>> frontier{std::vector<std::int64_t>(a.rank(), 0)};
  while (!frontier.empty()) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& f : frontier) {
      for (const auto& g : generators) {
        CurveClass sum{a.basis_cone, add(f, g.f)};
        if (degree(sum, polarization) > bound) continue;
        if (seen.insert(sum.f).second) next.push_back(std::move(sum.f));
      }
    }
    frontier = std::move(next);
  }

  std::vector<CurveClass> out;
  out.reserve(seen.size());
  for (const auto& f : seen) out.push_back({a.basis_cone, f});
  std::stable_sort(out.begin(), out.end(), [&](const CurveClass& x, const CurveClass& y) {
    const auto dx = degree(x, polarization);
    const auto dy = degree(y, polarization);
    return dx != dy ? dx < dy : x.f < y.f;
  });
  return out;
}

IntegerMatrix transition_matrix(const WeightMatrix& from, const WeightMatrix& to) {
  const std::size_t r = from.rank();
  if (to.rank() != r || to.ray_count() != from.ray_count()) {
    throw Error(ErrorCode::DimensionMismatch, "weight matrices of different fans");
  }
  IntegerMatrix u(r, std::vector<std::int64_t>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) u[i][j] = to.entries[i][from.basis_rays[j]];
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t rho = 0; rho < from.ray_count(); ++rho) {
      std::int64_t v = 0;
      for (std::size_t k = 0; k < r; ++k) v += u[i][k] * from.entries[k][rho];
      if (v != to.entries[i][rho]) {
        throw Error(ErrorCode::InconsistentRelation, "weight matrices are not related by a basis change");
      }
    }
  }
  return u;
}

DivisorClass change_basis(const DivisorClass& d, const WeightMatrix& from, const WeightMatrix& to) {
  require_same_basis(d.basis_cone, from.basis_cone, "divisor basis change");
  const auto u = transition_matrix(from, to);
  DivisorClass out{to.basis_cone, std::vector<std::int64_t>(u.size(), 0)};
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < u.size(); ++j) out.coords[i] += u[i][j] * d.coords[j];
  }
  return out;
}

CurveClass change_basis(const CurveClass& beta, const WeightMatrix& from, const WeightMatrix& to) {
  require_same_basis(beta.basis_cone, from.basis_cone, "curve basis change");
  // Pairing invariance: f_to = U^{-T} f_from.
  const auto u = to_rational(transition_matrix(from, to));
  const auto inv = inverse(u);
  if (!inv) throw Error(ErrorCode::InconsistentRelation, "singular basis change");
  CurveClass out{to.basis_cone, std::vector<std::int64_t>(u.size(), 0)};
  for (std::size_t i = 0; i < u.size(); ++i) {
    Rational v = 0;
    for (std::size_t j = 0; j < u.size(); ++j) v += (*inv)[j][i] * beta.f[j];
    out.f[i] = to_int64(v);
  }
  return out;
}

DivisorClass default_polarization(const Fan& fan, const WeightMatrix& a) {
  constexpr std::int64_t max_coord = 8;
  const std::size_t r = a.rank();
  for (std::int64_t total = static_cast<std::int64_t>(r); total <= max_coord * static_cast<std::int64_t>(r);
       ++total) {
    // Vectors with entries in [1, max_coord] summing to `total`, lexicographic.
    std::vector<std::int64_t> v(r, 1);
    std::function<std::optional<DivisorClass>(std::size_t, std::int64_t)> search =
        [&](std::size_t pos, std::int64_t remaining) -> std::optional<DivisorClass> {
      if (pos + 1 == r) {
        if (remaining < 1 || remaining > max_coord) return std::nullopt;
        v[pos] = remaining;
        DivisorClass d{a.basis_cone, v};
        if (is_ample(fan, a, d)) return d;
        return std::nullopt;
      }
      for (std::int64_t x = 1; x <= max_coord && x < remaining; ++x) {
        v[pos] = x;
        if (auto found = search(pos + 1, remaining - x)) return found;
      }
      return std::nullopt;
    };
    if (auto found = search(0, total)) return *found;
  }
  throw Error(ErrorCode::NotAmplePolarization, "no ample class found with coordinates in [1, 8]");
}

}  // namespace toricq
