#include "toricq/givental.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <thread>

#include "toricq/error.hpp"

namespace toricq {

Truncation IFunctionRequest::truncation() const {
  return Truncation{z_floor, t_trunc, variety->weights.rank() + 1};
}

void IFunctionRequest::validate() const {
  if (!variety) throw Error(ErrorCode::InvalidArgument, "request has no variety");
  if (degree_bound < 0) throw Error(ErrorCode::InvalidArgument, "degree bound must be nonnegative");
  if (polarization.basis_cone != variety->weights.basis_cone) {
    throw Error(ErrorCode::BasisMismatch, "polarization refers to basis cone " +
                                              std::to_string(polarization.basis_cone + 1) + ", variety uses " +
                                              std::to_string(variety->weights.basis_cone + 1));
  }
  if (!is_ample(variety->fan, variety->weights, polarization)) {
    throw Error(ErrorCode::NotAmplePolarization, "polarization is not ample");
  }
}

int default_z_floor(const ToricVariety& variety, std::int64_t degree_bound, unsigned t_trunc) {
  const auto c1 = anticanonical(variety.weights);
  std::int64_t worst = 0;
  for (const auto& w : wall_curve_generators(variety.fan, variety.weights)) {
    worst = std::max(worst, degree(w, c1));
  }
  return -static_cast<int>(static_cast<std::int64_t>(variety.fan.dim()) + degree_bound * worst + t_trunc + 2);
}

ZLaurentSeries parameter_block(const ToricVariety& variety, const Truncation& trunc) {
  const auto& ring = *variety.ring;
  ZLaurentSeries s(variety.ring, trunc);
  TExponent e(trunc.t_vars, 0);
  e[0] = 1;
  s.add_term(0, e, ring.one());
  const auto& basis = variety.weights.basis_rays;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    TExponent ei(trunc.t_vars, 0);
    ei[i + 1] = 1;
    s.add_term(0, ei, ring.ray_class(basis[i]));
  }
  return s;
}

ZLaurentSeries beta_coefficient(const IFunctionRequest& req, const CurveClass& beta) {
  const auto& variety = *req.variety;
  const auto d = ray_degrees(variety.weights, beta);

  // Products of inverse factors reach down to z^{-(n + sum of positive d)};
  // work above that floor so nothing is cut before the final truncation.
  std::int64_t positive = 0;
  for (auto x : d) positive += std::max<std::int64_t>(x, 0);
  Truncation work = req.truncation();
  work.z_floor = std::min<int>(req.z_floor, -static_cast<int>(static_cast<std::int64_t>(variety.fan.dim()) + positive));

  ZLaurentSeries result = ZLaurentSeries::one(variety.ring, work);
  for (std::size_t rho = 0; rho < d.size(); ++rho) {
    const CohClass dr = variety.ring->ray_class(rho);
    if (d[rho] > 0) {
      ZLaurentSeries denom = ZLaurentSeries::one(variety.ring, work);
      for (std::int64_t j = 1; j <= d[rho]; ++j) {
        denom = zl_mul(denom, ZLaurentSeries::linear_factor(variety.ring, work, dr, j));
      }
      result = zl_mul(result, zl_invert_unit(denom));
    } else if (d[rho] < 0) {
      for (std::int64_t j = d[rho] + 1; j <= 0; ++j) {
        result = zl_mul(result, ZLaurentSeries::linear_factor(variety.ring, work, dr, j));
      }
    }
  }
  return result.with_floor(req.z_floor);
}

namespace {

std::vector<CurveClass> effective_classes(const IFunctionRequest& req) {
  const auto& v = *req.variety;
  std::vector<CurveClass> betas{zero_curve(v.weights)};
  auto rest = enumerate_effective(v.fan, v.weights, req.polarization, req.degree_bound);
  betas.insert(betas.end(), rest.begin(), rest.end());
  return betas;
}

/// Runs `work` on every index with up to `threads` workers. Results land in
/// their own slots, so the output is independent of scheduling.
template <typename F>
std::vector<ZLaurentSeries> run_per_beta(std::size_t count, unsigned threads, F work) {
  std::vector<std::optional<ZLaurentSeries>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i].emplace(work(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<ZLaurentSeries> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

IFunctionSeries make_series(const IFunctionRequest& req, std::string part) {
  IFunctionSeries out;
  out.part = std::move(part);
  out.polarization = req.polarization;
  out.degree_bound = req.degree_bound;
  out.truncation = req.truncation();
  out.ring = req.variety->ring;
  return out;
}

}  // namespace

IFunctionSeries small_I(const IFunctionRequest& req) {
  req.validate();
  if (!req.include_exp_factor) throw Error(ErrorCode::InvalidArgument, "small_I needs include_exp_factor = true");
  const auto& v = *req.variety;
  const auto trunc = req.truncation();
  const auto betas = effective_classes(req);
  const ZLaurentSeries e_tz = exp_factor(parameter_block(v, trunc), -1);

  auto series = run_per_beta(betas.size(), req.threads, [&](std::size_t k) {
    const auto& beta = betas[k];
    // e^{int_beta t} = e^{sum_i f_i t_i}; t_0 pairs to zero with curves.
    ZLaurentSeries arg(v.ring, trunc);
    for (std::size_t i = 0; i < beta.f.size(); ++i) {
      if (beta.f[i] == 0) continue;
      TExponent e(trunc.t_vars, 0);
      e[i + 1] = 1;
      arg.add_term(0, e, Rational(beta.f[i]) * v.ring->one());
    }
    return zl_mul(zl_mul(e_tz, exp_factor(arg, 0)), beta_coefficient(req, beta));
  });

  auto out = make_series(req, "small_I");
  for (std::size_t k = 0; k < betas.size(); ++k) out.entries.emplace_back(betas[k], std::move(series[k]));
  sort_entries(out);
  return out;
}

IFunctionSeries big_I_k0(const IFunctionRequest& req) {
  req.validate();
  if (req.include_exp_factor) throw Error(ErrorCode::InvalidArgument, "big_I_k0 needs include_exp_factor = false");
  const auto& v = *req.variety;
  const auto trunc = req.truncation();
  const auto betas = effective_classes(req);

  auto series = run_per_beta(betas.size(), req.threads, [&](std::size_t k) {
    if (!betas[k].is_zero()) return beta_coefficient(req, betas[k]);
    ZLaurentSeries s = ZLaurentSeries::one(v.ring, trunc);
    const ZLaurentSeries t_block = parameter_block(v, trunc);
    for (const auto& [key, c] : t_block.terms()) s.add_term(-1, key.t, c);
    return s;
  });

  auto out = make_series(req, "big_I_k0");
  for (std::size_t k = 0; k < betas.size(); ++k) out.entries.emplace_back(betas[k], std::move(series[k]));
  sort_entries(out);
  return out;
}

ResidueClassK0 residue_k0(const IFunctionRequest& req, const CurveClass& beta) {
  req.validate();
  if (beta.is_zero()) throw Error(ErrorCode::InvalidArgument, "residue at k = 0 needs a nonzero class");
  const auto& v = *req.variety;
  ResidueClassK0 out{beta, {}, beta_coefficient(req, beta), 0};
  const auto d = ray_degrees(v.weights, beta);
  for (std::size_t rho = 0; rho < d.size(); ++rho) {
    if (d[rho] < 0) out.negative_rays.push_back(rho);
  }
  out.virtual_codim = degree(beta, anticanonical(v.weights)) + static_cast<std::int64_t>(out.negative_rays.size());
  return out;
}

std::int64_t vdim_quasimap(const ToricVariety& variety, std::int64_t g, std::int64_t k, const CurveClass& beta) {
  const auto n = static_cast<std::int64_t>(variety.fan.dim());
  return (1 - g) * (n - 3) + k + degree(beta, anticanonical(variety.weights));
}

std::int64_t vdim_stable_maps(const ToricVariety& variety, std::int64_t g, std::int64_t k, const CurveClass& beta) {
  // c1 . beta read off the ray degrees: c1 = sum of the toric divisors.
  std::int64_t c1 = 0;
  for (auto d : ray_degrees(variety.weights, beta)) c1 += d;
  const auto n = static_cast<std::int64_t>(variety.fan.dim());
  return c1 + (n - 3) * (1 - g) + k;
}

std::int64_t vdim_graph(const ToricVariety& variety, std::int64_t k, const CurveClass& beta) {
  return static_cast<std::int64_t>(variety.fan.dim()) + k + degree(beta, anticanonical(variety.weights));
}

}  // namespace toricq
