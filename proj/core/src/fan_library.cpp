#include "toricq/fan_library.hpp"

#include "toricq/error.hpp"

namespace toricq {

Fan projective_space_fan(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "projective space needs n >= 1");
  std::vector<LatticeVector> rays;
  for (std::size_t i = 0; i < n; ++i) {
    LatticeVector e(n, 0);
    e[i] = 1;
    rays.push_back(std::move(e));
  }
  rays.emplace_back(n, -1);

  // Cone k omits ray n - k, so cone 0 is {e_1, ..., e_n}.
  std::vector<std::vector<std::size_t>> cones;
  for (std::size_t omit = n + 1; omit-- > 0;) {
    std::vector<std::size_t> cone;
    for (std::size_t r = 0; r <= n; ++r) {
      if (r != omit) cone.push_back(r);
    }
    cones.push_back(std::move(cone));
  }
  return build_fan(n, std::move(rays), std::move(cones), "p" + std::to_string(n));
}

Fan product_fan(const Fan& a, const Fan& b) {
  const std::size_t n = a.dim() + b.dim();
  std::vector<LatticeVector> rays;
  for (const auto& r : a.rays()) {
    LatticeVector v(n, 0);
    std::copy(r.begin(), r.end(), v.begin());
    rays.push_back(std::move(v));
  }
  for (const auto& r : b.rays()) {
    LatticeVector v(n, 0);
    std::copy(r.begin(), r.end(), v.begin() + static_cast<std::ptrdiff_t>(a.dim()));
    rays.push_back(std::move(v));
  }
  std::vector<std::vector<std::size_t>> cones;
  for (const auto& ca : a.max_cones()) {
    for (const auto& cb : b.max_cones()) {
      std::vector<std::size_t> cone = ca.rays();
      for (auto r : cb.rays()) cone.push_back(a.ray_count() + r);
      cones.push_back(std::move(cone));
    }
  }
  return build_fan(n, std::move(rays), std::move(cones), a.name() + "x" + b.name());
}

Fan hirzebruch_fan(std::int64_t a) {
  // Cone {2,3} first so that the default Picard basis is {D_1, D_4}.
  return build_fan(2, {{1, 0}, {-1, -a}, {0, 1}, {0, -1}}, {{1, 2}, {0, 2}, {0, 3}, {1, 3}},
                   "f" + std::to_string(a));
}

}  // namespace toricq
