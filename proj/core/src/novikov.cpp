#include "toricq/novikov.hpp"

#include "toricq/error.hpp"

namespace toricq {

std::int64_t NovikovTruncation::novikov_degree(std::span<const std::int64_t> f) const {
  if (f.size() != polarization.size()) {
    throw Error(ErrorCode::DimensionMismatch, "curve coordinates do not match the polarization");
  }
  std::int64_t d = 0;
  for (std::size_t i = 0; i < f.size(); ++i) d += f[i] * polarization[i];
  return d;
}

bool NovikovTruncation::keeps(std::span<const std::int64_t> f, const TExponent& t) const {
  if (t.size() != t_vars) throw Error(ErrorCode::DimensionMismatch, "t exponent has wrong length");
  const auto deg = novikov_degree(f);
  if (deg < 0 || deg > degree_bound) return false;
  const auto td = static_cast<std::int64_t>(total_degree(t));
  return weighted ? td + deg <= static_cast<std::int64_t>(t_trunc) : td <= static_cast<std::int64_t>(t_trunc);
}

void NovikovPoly::add_term(const NovikovKey& key, const Rational& c, const NovikovTruncation& trunc) {
  if (c == 0 || !trunc.keeps(key.f, key.t)) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

NovikovPoly& NovikovPoly::operator+=(const NovikovPoly& other) {
  for (const auto& [key, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

NovikovPoly& NovikovPoly::operator-=(const NovikovPoly& other) {
  for (const auto& [key, c] : other.terms_) {
    auto [it, inserted] = terms_.try_emplace(key, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

namespace {

std::vector<std::int64_t> add_f(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "curve coordinates of different length");
  std::vector<std::int64_t> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

}  // namespace

NovikovPoly novikov_mul(const NovikovPoly& a, const NovikovPoly& b, const NovikovTruncation& trunc) {
  NovikovPoly out;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      out.add_term(NovikovKey{add_f(ka.f, kb.f), add_exponents(ka.t, kb.t)}, ca * cb, trunc);
    }
  }
  return out;
}

PowerTable::PowerTable(std::span<const NovikovPoly> values, const NovikovTruncation& trunc) : trunc_(trunc) {
  if (values.size() != trunc.t_vars) {
    throw Error(ErrorCode::DimensionMismatch, "substitution needs one value per t variable");
  }
  NovikovPoly unit;
  unit.add_term(NovikovKey{std::vector<std::int64_t>(trunc.polarization.size(), 0), TExponent(trunc.t_vars, 0)},
                Rational(1), trunc);
  powers_.resize(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) {
    powers_[j].push_back(unit);
    for (unsigned e = 1; e <= trunc.t_trunc; ++e) powers_[j].push_back(novikov_mul(powers_[j].back(), values[j], trunc));
  }
}

NovikovPoly PowerTable::monomial(const TExponent& t) const {
  if (t.size() != powers_.size()) throw Error(ErrorCode::DimensionMismatch, "t exponent has wrong length");
  if (auto it = cache_.find(t); it != cache_.end()) return it->second;
  NovikovPoly out = powers_.empty() ? NovikovPoly{} : powers_[0][0];
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (t[j] == 0) continue;
    if (t[j] >= powers_[j].size()) {
      out = NovikovPoly{};
      break;
    }
    out = novikov_mul(out, powers_[j][t[j]], trunc_);
  }
  cache_.emplace(t, out);
  return out;
}

NovikovPoly substitute(const NovikovPoly& p, std::span<const NovikovPoly> values, const NovikovTruncation& trunc) {
  PowerTable table(values, trunc);
  NovikovPoly out;
  for (const auto& [key, c] : p.terms()) {
    const NovikovPoly sub_t = table.monomial(key.t);
    for (const auto& [k2, c2] : sub_t.terms()) {
      out.add_term(NovikovKey{add_f(key.f, k2.f), k2.t}, c * c2, trunc);
    }
  }
  return out;
}

}  // namespace toricq
