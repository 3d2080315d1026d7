#include "toricq/cohomology.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "toricq/error.hpp"

namespace toricq {

bool grevlex_greater(const Monomial& a, const Monomial& b) {
  std::uint64_t da = 0;
  std::uint64_t db = 0;
  for (auto e : a) da += e;
  for (auto e : b) db += e;
  if (da != db) return da > db;
  // Same degree: the larger monomial has the smaller exponent in the last
  // variable where they differ.
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

bool CohClass::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& x) { return x == 0; });
}

CohClass& CohClass::operator+=(const CohClass& other) {
  if (other.coeffs.size() != coeffs.size()) throw Error(ErrorCode::DimensionMismatch, "classes of different rings");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (other.coeffs[i] != 0) coeffs[i] += other.coeffs[i];
  }
  return *this;
}

CohClass& CohClass::operator-=(const CohClass& other) {
  if (other.coeffs.size() != coeffs.size()) throw Error(ErrorCode::DimensionMismatch, "classes of different rings");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (other.coeffs[i] != 0) coeffs[i] -= other.coeffs[i];
  }
  return *this;
}

CohClass& CohClass::operator*=(const Rational& scalar) {
  for (auto& c : coeffs) {
    if (c != 0) c *= scalar;
  }
  return *this;
}

CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
CohClass operator*(const Rational& scalar, CohClass a) { return a *= scalar; }

namespace {

std::size_t monomial_degree(const Monomial& m) {
  std::size_t d = 0;
  for (auto e : m) d += e;
  return d;
}

std::vector<std::size_t> support(const Monomial& m) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] != 0) s.push_back(i);
  }
  return s;
}

}  // namespace

CohomologyRing build_ring(const Fan& fan, const WeightMatrix& a) {
  CohomologyRing ring;
  const std::size_t n = fan.dim();
  const std::size_t l = fan.ray_count();
  ring.dim_ = n;
  ring.ray_count_ = l;
  ring.basis_cone_ = a.basis_cone;
  ring.basis_rays_ = a.basis_rays;
  ring.max_cones_ = fan.max_cones();
  ring.sr_generators_ = primitive_collections(fan);

  // A monomial survives the Stanley-Reisner ideal iff its support lies in a
  // cone; every other monomial is zero in the quotient.
  const auto survives = [&](const Monomial& m) { return fan.spans_cone(support(m)); };

  std::vector<std::vector<Monomial>> surviving(n + 1);
  surviving[0].push_back(Monomial(l, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    std::set<Monomial> next;
    for (const auto& m : surviving[k - 1]) {
      for (std::size_t rho = 0; rho < l; ++rho) {
        Monomial bigger = m;
        ++bigger[rho];
        if (survives(bigger)) next.insert(std::move(bigger));
      }
    }
    surviving[k].assign(next.begin(), next.end());
    std::sort(surviving[k].begin(), surviving[k].end(), grevlex_greater);
  }

  // Per degree: reduce the linear relations times degree-(k-1) monomials with
  // columns in descending grevlex order. Pivots are leading monomials; the
  // remaining columns are the standard monomials forming the basis.
  std::vector<RowEchelon> echelons(n + 1);
  std::vector<std::vector<bool>> is_pivot(n + 1);
  ring.basis_.resize(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const auto& columns = surviving[k];
    std::map<Monomial, std::size_t> column_of;
    for (std::size_t c = 0; c < columns.size(); ++c) column_of.emplace(columns[c], c);

    RationalMatrix relations;
    if (k > 0) {
      for (const auto& m : surviving[k - 1]) {
        for (std::size_t j = 0; j < n; ++j) {
          RationalVector row(columns.size(), Rational(0));
          bool nonzero = false;
          for (std::size_t rho = 0; rho < l; ++rho) {
            const auto coeff = fan.ray(rho)[j];
            if (coeff == 0) continue;
            Monomial product = m;
            ++product[rho];
            const auto it = column_of.find(product);
            if (it == column_of.end()) continue;
            row[it->second] += coeff;
            nonzero = true;
          }
          if (nonzero) relations.push_back(std::move(row));
        }
      }
    }
    echelons[k] = row_reduce(std::move(relations), columns.size());
    is_pivot[k].assign(columns.size(), false);
    for (auto p : echelons[k].pivots) is_pivot[k][p] = true;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (!is_pivot[k][c]) ring.basis_[k].push_back(columns[c]);
    }
  }

  ring.offsets_.resize(n + 1);
  std::size_t total = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    ring.offsets_[k] = total;
    total += ring.basis_[k].size();
    for (std::size_t i = 0; i < ring.basis_[k].size(); ++i) ring.index_degree_.push_back(k);
  }
  ring.total_dim_ = total;

  for (std::size_t k = 0; k <= n; ++k) {
    const auto& columns = surviving[k];
    std::vector<std::size_t> flat_index(columns.size(), 0);
    std::size_t next = ring.offsets_[k];
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (!is_pivot[k][c]) flat_index[c] = next++;
    }
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (!is_pivot[k][c]) ring.normal_forms_.emplace(columns[c], ring.basis_element(flat_index[c]));
    }
    for (std::size_t r = 0; r < echelons[k].rows.size(); ++r) {
      const auto& row = echelons[k].rows[r];
      CohClass nf = ring.zero();
      for (std::size_t c = 0; c < columns.size(); ++c) {
        if (!is_pivot[k][c] && row[c] != 0) nf.coeffs[flat_index[c]] = -row[c];
      }
      ring.normal_forms_.emplace(columns[echelons[k].pivots[r]], std::move(nf));
    }
  }

  ring.products_.assign(total, std::vector<std::vector<std::pair<std::size_t, Rational>>>(total));
  for (std::size_t i = 0; i < total; ++i) {
    const auto& mi = ring.basis_[ring.index_degree_[i]][i - ring.offsets_[ring.index_degree_[i]]];
    for (std::size_t j = 0; j < total; ++j) {
      if (ring.index_degree_[i] + ring.index_degree_[j] > n) continue;
      const auto& mj = ring.basis_[ring.index_degree_[j]][j - ring.offsets_[ring.index_degree_[j]]];
      Monomial product(l);
      for (std::size_t v = 0; v < l; ++v) product[v] = mi[v] + mj[v];
      const CohClass nf = ring.reduce(product);
      for (std::size_t k = 0; k < total; ++k) {
        if (nf.coeffs[k] != 0) ring.products_[i][j].emplace_back(k, nf.coeffs[k]);
      }
    }
  }

  if (ring.basis_[n].size() != 1) {
    throw Error(ErrorCode::InconsistentNormalization,
                "top degree has dimension " + std::to_string(ring.basis_[n].size()) + ", expected 1");
  }
  const std::size_t top = ring.offsets_[n];
  for (std::size_t c = 0; c < fan.max_cones().size(); ++c) {
    Monomial point(l, 0);
    for (auto rho : fan.max_cone(c).rays()) point[rho] = 1;
    const Rational value = ring.reduce(point).coeffs[top];
    if (value == 0 || (c > 0 && value != ring.point_normalization_)) {
      throw Error(ErrorCode::InconsistentNormalization,
                  "maximal cone " + std::to_string(c + 1) + " gives a different point class");
    }
    ring.point_normalization_ = value;
  }
  return ring;
}

std::vector<std::size_t> CohomologyRing::betti() const {
  std::vector<std::size_t> b;
  for (const auto& block : basis_) b.push_back(block.size());
  return b;
}

std::string CohomologyRing::label(std::size_t index) const {
  const std::size_t k = degree_of(index);
  const auto& m = basis_[k][index - offsets_[k]];
  if (k == 0) return "1";
  std::ostringstream os;
  bool first = true;
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'x' << v + 1;
    if (m[v] > 1) os << '^' << m[v];
  }
  return os.str();
}

CohClass CohomologyRing::zero() const { return CohClass{RationalVector(total_dim_, Rational(0))}; }

CohClass CohomologyRing::one() const { return basis_element(0); }

CohClass CohomologyRing::basis_element(std::size_t index) const {
  CohClass c = zero();
  c.coeffs.at(index) = 1;
  return c;
}

CohClass CohomologyRing::reduce(const Monomial& m) const {
  if (m.size() != ray_count_) throw Error(ErrorCode::DimensionMismatch, "monomial has wrong length");
  if (monomial_degree(m) > dim_) return zero();
  const auto it = normal_forms_.find(m);
  return it == normal_forms_.end() ? zero() : it->second;
}

CohClass CohomologyRing::ray_class(std::size_t ray) const {
  if (ray >= ray_count_) throw Error(ErrorCode::InvalidArgument, "ray index out of range");
  Monomial m(ray_count_, 0);
  m[ray] = 1;
  return reduce(m);
}

CohClass CohomologyRing::divisor_class(const DivisorClass& d) const {
  if (d.basis_cone != basis_cone_) {
    throw Error(ErrorCode::BasisMismatch, "divisor tagged with basis cone " + std::to_string(d.basis_cone + 1) +
                                              ", ring uses " + std::to_string(basis_cone_ + 1));
  }
  if (d.coords.size() != basis_rays_.size()) throw Error(ErrorCode::DimensionMismatch, "divisor has wrong rank");
  CohClass c = zero();
  for (std::size_t i = 0; i < basis_rays_.size(); ++i) {
    if (d.coords[i] != 0) c += Rational(d.coords[i]) * ray_class(basis_rays_[i]);
  }
  return c;
}

CohClass CohomologyRing::mul(const CohClass& a, const CohClass& b) const {
  if (a.coeffs.size() != total_dim_ || b.coeffs.size() != total_dim_) {
    throw Error(ErrorCode::DimensionMismatch, "class does not belong to this ring");
  }
  CohClass out = zero();
  for (std::size_t i = 0; i < total_dim_; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < total_dim_; ++j) {
      if (b.coeffs[j] == 0) continue;
      const auto& entries = products_[i][j];
      if (entries.empty()) continue;
      const Rational ab = a.coeffs[i] * b.coeffs[j];
      for (const auto& [k, c] : entries) out.coeffs[k] += ab * c;
    }
  }
  return out;
}

CohClass CohomologyRing::pow(const CohClass& a, unsigned exponent) const {
  CohClass result = one();
  for (unsigned e = 0; e < exponent; ++e) result = mul(result, a);
  return result;
}

Rational CohomologyRing::integrate(const CohClass& a) const {
  if (a.coeffs.size() != total_dim_) throw Error(ErrorCode::DimensionMismatch, "class does not belong to this ring");
  return a.coeffs[offsets_[dim_]] / point_normalization_;
}

RationalMatrix CohomologyRing::poincare_pairing(std::size_t degree) const {
  if (degree > dim_) throw Error(ErrorCode::InvalidArgument, "degree out of range");
  const std::size_t rows = basis_[degree].size();
  const std::size_t cols = basis_[dim_ - degree].size();
  RationalMatrix m(rows, RationalVector(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      m[i][j] = integrate(mul(basis_element(offsets_[degree] + i), basis_element(offsets_[dim_ - degree] + j)));
    }
  }
  return m;
}

bool CohomologyRing::ideal_contains(std::span<const CohClass> generators, const CohClass& c) const {
  RationalMatrix span;
  for (const auto& g : generators) {
    for (std::size_t i = 0; i < total_dim_; ++i) span.push_back(mul(g, basis_element(i)).coeffs);
  }
  return in_row_span(span, c.coeffs);
}

RationalVector CohomologyRing::component(const CohClass& a, std::size_t degree) const {
  const auto begin = a.coeffs.begin() + static_cast<std::ptrdiff_t>(offsets_.at(degree));
  return RationalVector(begin, begin + static_cast<std::ptrdiff_t>(basis_[degree].size()));
}

int CohomologyRing::top_degree(const CohClass& a) const {
  int top = -1;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] != 0) top = std::max(top, static_cast<int>(index_degree_[i]));
  }
  return top;
}

CohClass divisor_to_coh(const CohomologyRing& ring, const DivisorClass& d) { return ring.divisor_class(d); }

CohClass divisor_to_coh(const CohomologyRing& ring, std::size_t ray) { return ring.ray_class(ray); }

}  // namespace toricq
