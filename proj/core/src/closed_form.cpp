#include "toricq/closed_form.hpp"

#include <map>
#include <set>
#include <tuple>

#include "toricq/error.hpp"

namespace toricq {

bool is_projective_space_fan(const Fan& fan) {
  const std::size_t n = fan.dim();
  if (fan.ray_count() != n + 1 || fan.max_cones().size() != n + 1) return false;
  LatticeVector sum(n, 0);
  for (const auto& ray : fan.rays()) {
    for (std::size_t i = 0; i < n; ++i) sum[i] += ray[i];
  }
  for (auto x : sum) {
    if (x != 0) return false;
  }
  std::set<Cone> cones(fan.max_cones().begin(), fan.max_cones().end());
  return cones.size() == n + 1;
}

namespace {

// Elements of Q[H]/(H^{n+1}) [z, z^-1] [t_0, t_1] truncated in t, keyed by
// (z exponent, t_0 exponent, t_1 exponent, H exponent).
using Key = std::tuple<int, unsigned, unsigned, unsigned>;
using Poly = std::map<Key, Rational>;

struct Ctx {
  unsigned n;
  unsigned t_trunc;
};

void add(Poly& p, const Key& k, const Rational& c, const Ctx& ctx) {
  const auto& [z, a, b, h] = k;
  (void)z;
  if (c == 0 || h > ctx.n || a + b > ctx.t_trunc) return;
  auto [it, inserted] = p.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

Poly mul(const Poly& x, const Poly& y, const Ctx& ctx) {
  Poly out;
  for (const auto& [kx, cx] : x) {
    for (const auto& [ky, cy] : y) {
      const auto& [z1, a1, b1, h1] = kx;
      const auto& [z2, a2, b2, h2] = ky;
      add(out, Key{z1 + z2, a1 + a2, b1 + b2, h1 + h2}, cx * cy, ctx);
    }
  }
  return out;
}

Integer binomial(unsigned top, unsigned k) {
  Integer r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (top - k + i) / i;
  return r;
}

Rational power(const Rational& base, unsigned e) {
  Rational r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

// (H + j z)^{-(n+1)} = (jz)^{-(n+1)} sum_m (-1)^m C(n+m, m) (H / jz)^m.
Poly inverse_factor(std::int64_t j, const Ctx& ctx) {
  Poly p;
  const Rational inv_j = Rational(1) / Rational(j);
  for (unsigned m = 0; m <= ctx.n; ++m) {
    Rational c = Rational(binomial(ctx.n + m, m)) * power(inv_j, ctx.n + 1 + m);
    if (m % 2) c = -c;
    add(p, Key{-static_cast<int>(ctx.n + 1 + m), 0, 0, m}, c, ctx);
  }
  return p;
}

}  // namespace

IFunctionSeries closed_form_J_Pn(const ToricVariety& pn, std::int64_t degree_bound, unsigned t_trunc,
                                 int z_floor) {
  if (!is_projective_space_fan(pn.fan)) {
    throw Error(ErrorCode::InvalidArgument, "closed form J is only available for projective spaces");
  }
  if (degree_bound < 0) throw Error(ErrorCode::InvalidArgument, "degree bound must be nonnegative");
  const Ctx ctx{static_cast<unsigned>(pn.fan.dim()), t_trunc};
  const auto& ring = *pn.ring;

  // e^{t/z} = e^{t_0/z} e^{t_1 H/z}.
  Poly e_tz;
  for (unsigned a = 0; a <= t_trunc; ++a) {
    for (unsigned b = 0; a + b <= t_trunc; ++b) {
      add(e_tz, Key{-static_cast<int>(a + b), a, b, b}, 1 / (factorial(a) * factorial(b)), ctx);
    }
  }

  // Every ray class equals the hyperplane class; t_1 pairs with it.
  const CohClass hyperplane = ring.ray_class(pn.weights.basis_rays.at(0));
  std::vector<CohClass> h_pow{ring.one()};
  for (unsigned k = 1; k <= ctx.n; ++k) h_pow.push_back(ring.mul(h_pow.back(), hyperplane));

  IFunctionSeries out;
  out.part = "J_oracle";
  out.polarization = DivisorClass{pn.weights.basis_cone, {1}};
  out.degree_bound = degree_bound;
  out.truncation = Truncation{z_floor, t_trunc, 2};
  out.ring = pn.ring;

  Poly denominators{{Key{0, 0, 0, 0}, Rational(1)}};
  for (std::int64_t d = 0; d <= degree_bound; ++d) {
    if (d > 0) denominators = mul(denominators, inverse_factor(d, ctx), ctx);
    Poly e_dt;
    for (unsigned k = 0; k <= t_trunc; ++k) {
      add(e_dt, Key{0, 0, k, 0}, power(Rational(d), k) / factorial(k), ctx);
    }
    const Poly full = mul(mul(e_tz, e_dt, ctx), denominators, ctx);

    ZLaurentSeries s(pn.ring, out.truncation);
    for (const auto& [k, c] : full) {
      const auto& [z, a, b, h] = k;
      s.add_term(z, TExponent{a, b}, c * h_pow[h]);
    }
    out.entries.emplace_back(CurveClass{pn.weights.basis_cone, {d}}, std::move(s));
  }
  return out;
}

SeriesComparison compare(const IFunctionSeries& left, const IFunctionSeries& right) {
  if (!left.ring || !right.ring || left.ring->total_dim() != right.ring->total_dim()) {
    throw Error(ErrorCode::InvalidArgument, "series live in different cohomology rings");
  }
  const std::size_t dim = left.ring->total_dim();
  std::set<CurveClass> betas;
  for (const auto& [b, s] : left.entries) betas.insert(b);
  for (const auto& [b, s] : right.entries) betas.insert(b);

  SeriesComparison out;
  for (const auto& beta : betas) {
    const auto* l = left.find(beta);
    const auto* r = right.find(beta);
    std::set<SeriesKey, SeriesKeyOrder> keys;
    if (l) for (const auto& [k, c] : l->terms()) keys.insert(k);
    if (r) for (const auto& [k, c] : r->terms()) keys.insert(k);
    for (const auto& key : keys) {
      const CohClass* lc = nullptr;
      const CohClass* rc = nullptr;
      if (l) {
        auto it = l->terms().find(key);
        if (it != l->terms().end()) lc = &it->second;
      }
      if (r) {
        auto it = r->terms().find(key);
        if (it != r->terms().end()) rc = &it->second;
      }
      for (std::size_t i = 0; i < dim; ++i) {
        const Rational a = lc ? lc->coeffs[i] : Rational(0);
        const Rational b = rc ? rc->coeffs[i] : Rational(0);
        ++out.coefficients_compared;
        if (a != b) out.mismatches.push_back(CoefficientMismatch{beta, key, i, a, b});
      }
    }
  }
  return out;
}

}  // namespace toricq
