#include "toricq/series.hpp"

#include <algorithm>

#include "toricq/error.hpp"

namespace toricq {

unsigned total_degree(const TExponent& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

TExponent add_exponents(const TExponent& a, const TExponent& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "t exponents of different length");
  TExponent out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

// ---------------------------------------------------------------------------
// TPoly

TPoly TPoly::constant(std::size_t vars, unsigned t_trunc, const Rational& c) {
  TPoly p(vars, t_trunc);
  p.add_term(TExponent(vars, 0), c);
  return p;
}

TPoly TPoly::variable(std::size_t vars, unsigned t_trunc, std::size_t index) {
  if (index >= vars) throw Error(ErrorCode::InvalidArgument, "t variable index out of range");
  TPoly p(vars, t_trunc);
  TExponent e(vars, 0);
  e[index] = 1;
  p.add_term(e, Rational(1));
  return p;
}

void TPoly::add_term(const TExponent& e, const Rational& c) {
  if (e.size() != vars_) throw Error(ErrorCode::DimensionMismatch, "t exponent has wrong length");
  if (c == 0 || total_degree(e) > t_trunc_) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void TPoly::check_compatible(const TPoly& other) const {
  if (vars_ != other.vars_ || t_trunc_ != other.t_trunc_) {
    throw Error(ErrorCode::IncompatibleTruncation, "t polynomials with different truncations");
  }
}

TPoly& TPoly::operator+=(const TPoly& other) {
  check_compatible(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  a.check_compatible(b);
  TPoly out(a.vars_, a.t_trunc_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      auto e = add_exponents(ea, eb);
      if (total_degree(e) <= a.t_trunc_) out.add_term(e, ca * cb);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// ZLaurentSeries

ZLaurentSeries::ZLaurentSeries(std::shared_ptr<const CohomologyRing> ring, Truncation trunc)
    : ring_(std::move(ring)), trunc_(trunc) {
  if (!ring_) throw Error(ErrorCode::InvalidArgument, "series needs a cohomology ring");
}

ZLaurentSeries ZLaurentSeries::one(std::shared_ptr<const CohomologyRing> ring, Truncation trunc) {
  const CohClass unit = ring->one();
  return term(std::move(ring), trunc, 0, TExponent(trunc.t_vars, 0), unit);
}

ZLaurentSeries ZLaurentSeries::term(std::shared_ptr<const CohomologyRing> ring, Truncation trunc, int z,
                                    TExponent t, const CohClass& c) {
  ZLaurentSeries s(std::move(ring), trunc);
  s.add_term(z, t, c);
  return s;
}

ZLaurentSeries ZLaurentSeries::linear_factor(std::shared_ptr<const CohomologyRing> ring, Truncation trunc,
                                             const CohClass& d, std::int64_t j) {
  ZLaurentSeries s(ring, trunc);
  const TExponent t0(trunc.t_vars, 0);
  s.add_term(0, t0, d);
  if (j != 0) s.add_term(1, t0, Rational(j) * ring->one());
  return s;
}

void ZLaurentSeries::add_term(int z, const TExponent& t, const CohClass& c) {
  if (t.size() != trunc_.t_vars) throw Error(ErrorCode::DimensionMismatch, "t exponent has wrong length");
  if (c.coeffs.size() != ring_->total_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "class does not belong to the series ring");
  }
  if (z < trunc_.z_floor || total_degree(t) > trunc_.t_trunc || c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(SeriesKey{z, t}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::map<TExponent, CohClass> ZLaurentSeries::z_coefficient(int z) const {
  std::map<TExponent, CohClass> out;
  for (const auto& [key, c] : terms_) {
    if (key.z == z) out.emplace(key.t, c);
  }
  return out;
}

std::optional<int> ZLaurentSeries::min_z() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.z;
}

std::optional<int> ZLaurentSeries::max_z() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.z;
}

ZLaurentSeries ZLaurentSeries::with_floor(int z_floor) const {
  Truncation t = trunc_;
  t.z_floor = z_floor;
  ZLaurentSeries out(ring_, t);
  for (const auto& [key, c] : terms_) {
    if (key.z >= z_floor) out.terms_.emplace(key, c);
  }
  return out;
}

void ZLaurentSeries::check_compatible(const ZLaurentSeries& other) const {
  if (ring_ != other.ring_) {
    throw Error(ErrorCode::IncompatibleTruncation, "series over different cohomology rings");
  }
  if (!(trunc_ == other.trunc_)) {
    throw Error(ErrorCode::IncompatibleTruncation,
                "series truncations differ (z_floor " + std::to_string(trunc_.z_floor) + " vs " +
                    std::to_string(other.trunc_.z_floor) + ", t_trunc " + std::to_string(trunc_.t_trunc) +
                    " vs " + std::to_string(other.trunc_.t_trunc) + ")");
  }
}

ZLaurentSeries& ZLaurentSeries::operator+=(const ZLaurentSeries& other) {
  check_compatible(other);
  for (const auto& [key, c] : other.terms_) add_term(key.z, key.t, c);
  return *this;
}

ZLaurentSeries& ZLaurentSeries::operator-=(const ZLaurentSeries& other) {
  check_compatible(other);
  for (const auto& [key, c] : other.terms_) add_term(key.z, key.t, Rational(-1) * c);
  return *this;
}

ZLaurentSeries& ZLaurentSeries::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= scalar;
  return *this;
}

bool ZLaurentSeries::operator==(const ZLaurentSeries& other) const {
  return ring_ == other.ring_ && trunc_ == other.trunc_ && terms_ == other.terms_;
}

ZLaurentSeries zl_add(const ZLaurentSeries& a, const ZLaurentSeries& b) {
  ZLaurentSeries out = a;
  out += b;
  return out;
}

ZLaurentSeries zl_mul(const ZLaurentSeries& a, const ZLaurentSeries& b) {
  a.check_compatible(b);
  const auto& trunc = a.truncation();
  const auto& ring = a.ring();
  ZLaurentSeries out(a.ring_ptr(), trunc);
  for (const auto& [ka, ca] : a.terms()) {
    const unsigned da = total_degree(ka.t);
    for (const auto& [kb, cb] : b.terms()) {
      // Terms of b come in descending z, so nothing later reaches the floor.
      if (ka.z + kb.z < trunc.z_floor) break;
      if (da + total_degree(kb.t) > trunc.t_trunc) continue;
      out.add_term(ka.z + kb.z, add_exponents(ka.t, kb.t), ring.mul(ca, cb));
    }
  }
  return out;
}

ZLaurentSeries zl_invert_unit(const ZLaurentSeries& a) {
  const auto& ring = a.ring();
  const auto& trunc = a.truncation();
  const TExponent t0(trunc.t_vars, 0);

  // Leading part: the unique z power carrying a scalar (H^0, t^0) coefficient.
  std::optional<int> lead_z;
  Rational lead;
  for (const auto& [key, c] : a.terms()) {
    if (key.t != t0 || c.coeffs[0] == 0) continue;
    if (lead_z) {
      throw Error(ErrorCode::NotInvertible, "scalar part has more than one power of z (z^" +
                                                std::to_string(*lead_z) + " and z^" + std::to_string(key.z) + ")");
    }
    lead_z = key.z;
    lead = c.coeffs[0];
  }
  if (!lead_z) throw Error(ErrorCode::NotInvertible, "series has no nonzero scalar leading term");

  // nu = a / (lead z^k) - 1 is nilpotent: each factor raises divisor degree or
  // t-degree, so nu^m = 0 for m > n + t_trunc.
  const unsigned order = static_cast<unsigned>(ring.dim()) + trunc.t_trunc;
  int nu_min_z = 0;
  for (const auto& [key, c] : a.terms()) nu_min_z = std::min(nu_min_z, key.z - *lead_z);

  Truncation work = trunc;
  work.z_floor = static_cast<int>(order) * nu_min_z;
  ZLaurentSeries nu(a.ring_ptr(), work);
  const Rational inv_lead = 1 / lead;
  for (const auto& [key, c] : a.terms()) nu.add_term(key.z - *lead_z, key.t, -inv_lead * c);
  nu.add_term(0, t0, ring.one());  // -(u - 1) with u = a / (lead z^k)

  ZLaurentSeries sum = ZLaurentSeries::one(a.ring_ptr(), work);
  ZLaurentSeries power = sum;
  for (unsigned m = 1; m <= order; ++m) {
    power = zl_mul(power, nu);
    if (power.is_zero()) break;
    sum += power;
  }

  ZLaurentSeries out(a.ring_ptr(), trunc);
  for (const auto& [key, c] : sum.terms()) out.add_term(key.z - *lead_z, key.t, inv_lead * c);
  return out;
}

ZLaurentSeries exp_factor(const ZLaurentSeries& argument, int z_power) {
  if (z_power != 0 && z_power != -1) throw Error(ErrorCode::InvalidArgument, "exp_factor z power must be 0 or -1");
  for (const auto& [key, c] : argument.terms()) {
    if (key.z != 0 || total_degree(key.t) == 0) {
      throw Error(ErrorCode::InvalidArgument,
                  "exp_factor argument must be z^0 with every term of positive t-degree");
    }
  }
  const auto& trunc = argument.truncation();
  ZLaurentSeries x(argument.ring_ptr(), trunc);
  for (const auto& [key, c] : argument.terms()) x.add_term(z_power, key.t, c);

  ZLaurentSeries result = ZLaurentSeries::one(argument.ring_ptr(), trunc);
  ZLaurentSeries power = result;
  for (unsigned m = 1; m <= trunc.t_trunc; ++m) {
    power = zl_mul(power, x);
    if (power.is_zero()) break;
    ZLaurentSeries term = power;
    term *= 1 / factorial(m);
    result += term;
  }
  return result;
}

// ---------------------------------------------------------------------------
// IFunctionSeries

const ZLaurentSeries* IFunctionSeries::find(const CurveClass& beta) const {
  for (const auto& [key, series] : entries) {
    if (key == beta) return &series;
  }
  return nullptr;
}

void sort_entries(IFunctionSeries& series) {
  const auto& pol = series.polarization;
  std::stable_sort(series.entries.begin(), series.entries.end(), [&](const auto& x, const auto& y) {
    const auto dx = degree(x.first, pol);
    const auto dy = degree(y.first, pol);
    return dx != dy ? dx < dy : x.first.f < y.first.f;
  });
}

}  // namespace toricq
