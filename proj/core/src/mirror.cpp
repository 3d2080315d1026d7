#include "toricq/mirror.hpp"

#include <map>

#include "toricq/error.hpp"
#include "toricq/linalg.hpp"

namespace toricq {

namespace {

std::string curve_text(const CurveClass& beta) {
  std::string s = "(";
  for (std::size_t i = 0; i < beta.f.size(); ++i) s += (i ? "," : "") + std::to_string(beta.f[i]);
  return s + ")";
}

TExponent unit_exponent(std::size_t vars, std::size_t j) {
  TExponent e(vars, 0);
  e[j] = 1;
  return e;
}

bool has_constant_terms(const std::vector<NovikovPoly>& corrections) {
  for (const auto& p : corrections) {
    for (const auto& [key, c] : p.terms()) {
      if (total_degree(key.t) == 0) return true;
    }
  }
  return false;
}

}  // namespace

MirrorMap mirror_map(const IFunctionSeries& i_function) {
  const auto& ring = *i_function.ring;
  const auto& basis = ring.picard_basis_rays();
  const std::size_t r = basis.size();
  const auto& trunc = i_function.truncation;

  // Columns: the H^2 components of L_i = D_{basis_rays[i]}.
  RationalMatrix m(ring.basis(1).size(), RationalVector(r));
  for (std::size_t i = 0; i < r; ++i) {
    const auto col = ring.component(ring.ray_class(basis[i]), 1);
    for (std::size_t k = 0; k < col.size(); ++k) m[k][i] = col[k];
  }
  const auto m_inv = inverse(m);
  if (!m_inv) throw Error(ErrorCode::InvalidArgument, "Picard basis classes do not span H^2");

  MirrorMap out;
  out.basis_cone = i_function.polarization.basis_cone;
  out.truncation = NovikovTruncation{i_function.polarization.coords, i_function.degree_bound, trunc.t_trunc,
                                     trunc.t_vars, false};
  out.coords.resize(r + 1);

  for (const auto& [beta, series] : i_function.entries) {
    for (const auto& [key, c] : series.terms()) {
      if (key.z != -1) continue;
      for (std::size_t k = 2; k <= ring.dim(); ++k) {
        for (const auto& x : ring.component(c, k)) {
          if (x != 0) {
            throw Error(ErrorCode::MirrorMapNotSmall,
                        "z^-1 coefficient of Q^" + curve_text(beta) + " has a component in degree " +
                            std::to_string(k) + "; derivative corrections are not supported");
          }
        }
      }
      const NovikovKey nk{beta.f, key.t};
      out.coords[0].add_term(nk, c.coeffs[0], out.truncation);
      const auto h2 = ring.component(c, 1);
      for (std::size_t i = 0; i < r; ++i) {
        Rational y = 0;
        for (std::size_t k = 0; k < h2.size(); ++k) y += (*m_inv)[i][k] * h2[k];
        out.coords[i + 1].add_term(nk, y, out.truncation);
      }
    }
  }
  return out;
}

MirrorMap identity_map(const MirrorMap& shape) {
  MirrorMap out{shape.basis_cone, shape.truncation, std::vector<NovikovPoly>(shape.truncation.t_vars)};
  const std::vector<std::int64_t> zero(shape.truncation.polarization.size(), 0);
  for (std::size_t j = 0; j < out.coords.size(); ++j) {
    out.coords[j].add_term(NovikovKey{zero, unit_exponent(out.truncation.t_vars, j)}, Rational(1), out.truncation);
  }
  return out;
}

bool is_identity(const MirrorMap& map) { return map.coords == identity_map(map).coords; }

MirrorMap invert_mirror_map(const MirrorMap& tau) {
  const auto& base = tau.truncation;
  if (base.t_trunc == 0) {
    throw Error(ErrorCode::MirrorMapNotInvertible, "inversion needs t_trunc >= 1 to see the linear part");
  }
  const std::vector<std::int64_t> zero(base.polarization.size(), 0);

  // Split tau = t + delta and insist the Q^0 part is exactly t.
  std::vector<NovikovPoly> delta(tau.coords.size());
  for (std::size_t j = 0; j < tau.coords.size(); ++j) {
    const NovikovKey linear{zero, unit_exponent(base.t_vars, j)};
    bool seen_linear = false;
    for (const auto& [key, c] : tau.coords[j].terms()) {
      if (key.f == zero) {
        if (key == linear && c == 1) {
          seen_linear = true;
          continue;
        }
        throw Error(ErrorCode::MirrorMapNotInvertible,
                    "Q^0 part of coordinate " + std::to_string(j) + " is not t_" + std::to_string(j));
      }
      delta[j].add_term(key, c, base);
    }
    if (!seen_linear) {
      throw Error(ErrorCode::MirrorMapNotInvertible,
                  "Q^0 part of coordinate " + std::to_string(j) + " is not t_" + std::to_string(j));
    }
  }

  MirrorMap out{tau.basis_cone, base, {}};
  out.truncation.weighted = base.weighted || has_constant_terms(delta);
  const auto& trunc = out.truncation;

  MirrorMap ident = identity_map(out);
  std::vector<NovikovPoly> psi = ident.coords;
  // Each pass fixes one more Novikov degree (weighted: one more weight unit).
  const auto passes = base.degree_bound + static_cast<std::int64_t>(base.t_trunc) + 2;
  for (std::int64_t pass = 0; pass <= passes; ++pass) {
    PowerTable table(psi, trunc);
    std::vector<NovikovPoly> next = ident.coords;
    for (std::size_t j = 0; j < delta.size(); ++j) {
      NovikovPoly sub;
      for (const auto& [key, c] : delta[j].terms()) {
        const NovikovPoly sub_t = table.monomial(key.t);
        for (const auto& [k2, c2] : sub_t.terms()) {
          std::vector<std::int64_t> f(key.f.size());
          for (std::size_t i = 0; i < f.size(); ++i) f[i] = key.f[i] + k2.f[i];
          sub.add_term(NovikovKey{std::move(f), k2.t}, c * c2, trunc);
        }
      }
      next[j] -= sub;
    }
    if (next == psi) {
      out.coords = std::move(psi);
      return out;
    }
    psi = std::move(next);
  }
  throw Error(ErrorCode::MirrorMapNotInvertible, "fixed point iteration did not settle");
}

MirrorMap compose(const MirrorMap& outer, const MirrorMap& inner) {
  if (outer.coords.size() != inner.coords.size() || outer.basis_cone != inner.basis_cone) {
    throw Error(ErrorCode::BasisMismatch, "mirror maps live on different parameter spaces");
  }
  NovikovTruncation trunc = outer.truncation;
  trunc.weighted = outer.truncation.weighted || inner.truncation.weighted;
  if (!trunc.weighted) {
    // Constant corrections in the inner map only preserve the weighted filtration.
    const std::vector<std::int64_t> zero(trunc.polarization.size(), 0);
    for (const auto& p : inner.coords) {
      for (const auto& [key, c] : p.terms()) {
        if (key.f != zero && total_degree(key.t) == 0) trunc.weighted = true;
      }
    }
  }
  MirrorMap out{outer.basis_cone, trunc, {}};
  for (const auto& p : outer.coords) out.coords.push_back(substitute(p, inner.coords, trunc));
  return out;
}

IFunctionSeries J_from_I(const IFunctionSeries& i_function, const MirrorMap& inverse) {
  const auto& trunc = inverse.truncation;
  const auto& series_trunc = i_function.truncation;
  if (trunc.t_trunc != series_trunc.t_trunc || trunc.t_vars != series_trunc.t_vars ||
      trunc.degree_bound != i_function.degree_bound || trunc.polarization != i_function.polarization.coords) {
    throw Error(ErrorCode::IncompatibleTruncation, "mirror map and I-function were truncated differently");
  }

  PowerTable table(inverse.coords, trunc);
  std::map<std::vector<std::int64_t>, ZLaurentSeries> acc;
  auto slot = [&](const std::vector<std::int64_t>& f) -> ZLaurentSeries& {
    auto it = acc.find(f);
    if (it == acc.end()) it = acc.emplace(f, ZLaurentSeries(i_function.ring, series_trunc)).first;
    return it->second;
  };

  for (const auto& [beta, series] : i_function.entries) {
    slot(beta.f);
    for (const auto& [key, c] : series.terms()) {
      const NovikovPoly sub_t = table.monomial(key.t);
      for (const auto& [k2, c2] : sub_t.terms()) {
        std::vector<std::int64_t> f(beta.f.size());
        for (std::size_t i = 0; i < f.size(); ++i) f[i] = beta.f[i] + k2.f[i];
        if (!trunc.keeps(f, k2.t)) continue;
        slot(f).add_term(key.z, k2.t, c2 * c);
      }
    }
  }

  IFunctionSeries out;
  out.part = "J_from_I";
  out.polarization = i_function.polarization;
  out.degree_bound = i_function.degree_bound;
  out.truncation = series_trunc;
  out.ring = i_function.ring;
  for (auto& [f, s] : acc) out.entries.emplace_back(CurveClass{inverse.basis_cone, f}, std::move(s));
  sort_entries(out);
  return out;
}

}  // namespace toricq
