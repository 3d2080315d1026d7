#include "oracles.hpp"

#include <stdexcept>

#include "toricq/io.hpp"

namespace oracle {

std::string fan_path(const std::string& name) { return std::string(TORICQ_FAN_DIR) + "/" + name + ".json"; }

std::vector<toricq::Fan> shipped_fans() {
  std::vector<toricq::Fan> out;
  for (const char* name : {"p1", "p2", "p3", "p1xp1", "f2"}) out.push_back(toricq::load_fan(fan_path(name)));
  return out;
}

namespace {

bool in_some_cone(const toricq::Fan& fan, const std::vector<std::size_t>& subset) {
  for (const auto& cone : fan.max_cones()) {
    bool all = true;
    for (auto r : subset) {
      bool found = false;
      for (auto c : cone.rays()) found = found || c == r;
      all = all && found;
    }
    if (all) return true;
  }
  return false;
}

}  // namespace

std::set<std::vector<std::size_t>> primitive_collections(const toricq::Fan& fan) {
  const std::size_t l = fan.ray_count();
  std::set<std::vector<std::size_t>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << l); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < l; ++i) {
      if (mask >> i & 1) s.push_back(i);
    }
    if (in_some_cone(fan, s)) continue;
    bool minimal = true;
    for (std::size_t drop = 0; drop < s.size() && minimal; ++drop) {
      std::vector<std::size_t> smaller;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (i != drop) smaller.push_back(s[i]);
      }
      minimal = in_some_cone(fan, smaller);
    }
    if (minimal) out.insert(s);
  }
  return out;
}

std::set<std::vector<std::int64_t>> effective_classes(const std::vector<std::vector<std::int64_t>>& generators,
                                                      const std::vector<std::int64_t>& polarization,
                                                      std::int64_t bound) {
  std::vector<std::int64_t> deg;
  for (const auto& g : generators) {
    std::int64_t d = 0;
    for (std::size_t i = 0; i < g.size(); ++i) d += g[i] * polarization[i];
    if (d <= 0) throw std::invalid_argument("polarization is not positive on a generator");
    deg.push_back(d);
  }
  std::set<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> mult(generators.size(), 0);
  // Odometer over multiplicity vectors with total degree <= bound.
  while (true) {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < mult.size(); ++i) total += mult[i] * deg[i];
    if (total <= bound) {
      std::vector<std::int64_t> f(polarization.size(), 0);
      bool nonzero = false;
      for (std::size_t i = 0; i < mult.size(); ++i) {
        nonzero = nonzero || mult[i] > 0;
        for (std::size_t k = 0; k < f.size(); ++k) f[k] += mult[i] * generators[i][k];
      }
      if (nonzero) out.insert(f);
    }
    std::size_t pos = 0;
    while (pos < mult.size()) {
      ++mult[pos];
      if (mult[pos] * deg[pos] <= bound) break;
      mult[pos] = 0;
      ++pos;
    }
    if (pos == mult.size()) break;
  }
  return out;
}

std::vector<Rational> pn_coefficients(unsigned n, unsigned d) {
  // p(u) = prod_j (j + u)^{n+1}, kept to order u^n.
  std::vector<Rational> p(n + 1, Rational(0));
  p[0] = 1;
  for (unsigned j = 1; j <= d; ++j) {
    for (unsigned rep = 0; rep <= n; ++rep) {
      std::vector<Rational> next(n + 1, Rational(0));
      for (unsigned k = 0; k <= n; ++k) {
        next[k] += p[k] * j;
        if (k + 1 <= n) next[k + 1] += p[k];
      }
      p = next;
    }
  }
  std::vector<Rational> q(n + 1, Rational(0));
  q[0] = 1 / p[0];
  for (unsigned m = 1; m <= n; ++m) {
    Rational s = 0;
    for (unsigned k = 1; k <= m; ++k) s += p[k] * q[m - k];
    q[m] = -s / p[0];
  }
  return q;
}

Rational f2_intersection(std::size_t i, std::size_t j) {
  static const int table[4][4] = {
      {0, 0, 1, 1},
      {0, 0, 1, 1},
      {1, 1, 2, 0},
      {1, 1, 0, -2},
  };
  return table[i][j];
}

std::int64_t vdim(std::int64_t n, std::int64_t g, std::int64_t k, const std::vector<std::int64_t>& ray_degrees) {
  std::int64_t c1 = 0;
  for (auto d : ray_degrees) c1 += d;
  return (1 - g) * (n - 3) + k + c1;
}

std::size_t rank(std::vector<std::vector<Rational>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

toricq::CohClass random_class(const toricq::CohomologyRing& ring, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  toricq::CohClass c = ring.zero();
  for (auto& x : c.coeffs) x = Rational(num(rng)) / den(rng);
  return c;
}

toricq::ZLaurentSeries series(const toricq::ToricVariety& v, toricq::Truncation trunc,
                              const std::vector<std::tuple<int, toricq::TExponent, toricq::CohClass>>& terms) {
  toricq::ZLaurentSeries s(v.ring, trunc);
  for (const auto& [z, t, c] : terms) s.add_term(z, t, c);
  return s;
}

}  // namespace oracle
