#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "toricq/picard.hpp"
#include "toricq/series.hpp"
#include "toricq/variety.hpp"

namespace toricq {

/// Everything needed to expand an I-function up to a Novikov degree bound.
struct IFunctionRequest {
  std::shared_ptr<const ToricVariety> variety;
  DivisorClass polarization;
  std::int64_t degree_bound = 0;
  unsigned t_trunc = 0;
  int z_floor = 0;
  /// true: small I-function (with exponential prefactors);
  /// false: k = 0 part of the big I-function.
  bool include_exp_factor = true;
  /// Worker threads for the per-beta products. Output does not depend on it.
  unsigned threads = 1;

  Truncation truncation() const;
  /// Checks bounds and ampleness. Throws InvalidArgument / NotAmplePolarization.
  void validate() const;
};

/// z_floor guaranteeing no retained term is cut:
/// -(n + degree_bound * max_w (c1 . w) + t_trunc + 2), max over wall curves w.
int default_z_floor(const ToricVariety& variety, std::int64_t degree_bound, unsigned t_trunc);

/// t = t_0 * 1 + sum_i t_i * L_i as a series (t-degree 1, z^0).
ZLaurentSeries parameter_block(const ToricVariety& variety, const Truncation& trunc);

/// prod_rho prod_{j <= 0} (D_rho + j z) / prod_{j <= d_rho} (D_rho + j z),
/// i.e. 1 / prod_{j=1}^{d} (D + j z) for d >= 0 and prod_{j=d+1}^{0} (D + j z)
/// for d < 0 (the j = 0 factor D itself included).
ZLaurentSeries beta_coefficient(const IFunctionRequest& req, const CurveClass& beta);

IFunctionSeries small_I(const IFunctionRequest& req);

/// 1 + t/z + sum_{beta != 0} Q^beta beta_coefficient(beta). The k >= 1
/// moduli-space summands are not part of this output ("k0-part").
IFunctionSeries big_I_k0(const IFunctionRequest& req);

/// Residue of the graph-space virtual class at the k = 0 fixed component.
struct ResidueClassK0 {
  CurveClass beta;
  /// Rays with d_rho < 0; the fixed component is the intersection of their
  /// divisors.
  std::vector<std::size_t> negative_rays;
  ZLaurentSeries pushforward;
  std::int64_t virtual_codim = 0;
};

ResidueClassK0 residue_k0(const IFunctionRequest& req, const CurveClass& beta);

/// (1 - g)(dim X - 3) + k + c1 . beta.
std::int64_t vdim_quasimap(const ToricVariety& variety, std::int64_t g, std::int64_t k,
                           const CurveClass& beta);
/// Virtual dimension of the stable-map space with the same discrete data.
std::int64_t vdim_stable_maps(const ToricVariety& variety, std::int64_t g, std::int64_t k,
                              const CurveClass& beta);
/// dim X + k + c1 . beta.
std::int64_t vdim_graph(const ToricVariety& variety, std::int64_t k, const CurveClass& beta);

}  // namespace toricq
