#include "report.hpp"

#include <sstream>

#include "toricq/io.hpp"

namespace toricq::cli {

using nlohmann::json;

namespace {

std::string plain(const Rational& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << '/' << denominator(q);
  return os.str();
}

std::string tuple_text(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string t_monomial(const TExponent& t) {
  std::string s;
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (t[j] == 0) continue;
    if (!s.empty()) s += '*';
    s += "t" + std::to_string(j);
    if (t[j] > 1) s += '^' + std::to_string(t[j]);
  }
  return s.empty() ? "1" : s;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string format_cone(const Cone& cone) {
  std::string s = "{";
  for (std::size_t i = 0; i < cone.size(); ++i) s += (i ? "," : "") + std::to_string(cone.rays()[i] + 1);
  return s + "}";
}

std::string format_matrix(const IntegerMatrix& m) {
  auto row = [](const std::vector<std::int64_t>& r) {
    std::string s = "[";
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
    return s + "]";
  };
  if (m.size() == 1) return row(m[0]);
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + row(m[i]);
  return s + "]";
}

std::string format_class(const CohomologyRing& ring, const CohClass& c) {
  std::string s;
  for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
    const auto& q = c.coeffs[i];
    if (q == 0) continue;
    const bool negative = q < 0;
    const Rational mag = negative ? Rational(-q) : q;
    if (s.empty()) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    const std::string label = ring.label(i);
    if (label == "1") {
      s += plain(mag);
    } else if (mag == 1) {
      s += label;
    } else {
      s += plain(mag) + "*" + label;
    }
  }
  return s.empty() ? "0" : s;
}

json info_json(const ToricVariety& v) {
  const auto& fan = v.fan;
  const auto& a = v.weights;
  const auto& ring = *v.ring;
  const auto c1 = anticanonical(a);

  json walls = json::array();
  for (const auto& w : fan.walls()) {
    const auto curve = wall_curve_class(fan, a, w);
    json face = json::array();
    for (auto r : w.face.rays()) face.push_back(r + 1);
    walls.push_back(json{{"face", face},
                         {"sides", {w.sides[0] + 1, w.sides[1] + 1}},
                         {"ray_degrees", w.relation},
                         {"curve", to_json(curve)},
                         {"c1_degree", degree(curve, c1)}});
  }
  json prim = json::array();
  for (const auto& p : primitive_collections(fan)) {
    json one = json::array();
    for (auto r : p.rays()) one.push_back(r + 1);
    prim.push_back(one);
  }
  json basis_rays = json::array();
  for (auto r : a.basis_rays) basis_rays.push_back(r + 1);

  return json{{"fan", fan_to_json(fan)},
              {"basis_cone", a.basis_cone + 1},
              {"picard_basis_rays", basis_rays},
              {"weight_matrix", a.entries},
              {"walls", walls},
              {"anticanonical", to_json(c1)},
              {"anticanonical_nef", is_nef(fan, a, c1)},
              {"fano", is_fano(fan, a)},
              {"default_polarization", to_json(default_polarization(fan, a))},
              {"betti", ring.betti()},
              {"primitive_collections", prim},
              {"cohomology_basis", basis_listing(ring)}};
}

void write_info_text(std::ostream& os, const ToricVariety& v) {
  const auto& fan = v.fan;
  const auto& a = v.weights;
  const auto& ring = *v.ring;
  const auto c1 = anticanonical(a);

  os << "fan: " << (fan.name().empty() ? "(unnamed)" : fan.name()) << "  n=" << fan.dim()
     << ", l=" << fan.ray_count() << ", r=" << fan.picard_rank() << "\n";
  os << "basis cone: " << a.basis_cone + 1 << " = " << format_cone(fan.max_cone(a.basis_cone)) << "\n";
  os << "Picard basis:";
  for (std::size_t i = 0; i < a.basis_rays.size(); ++i) {
    os << (i ? "," : "") << " L" << i + 1 << " = O(D" << a.basis_rays[i] + 1 << ")";
  }
  os << "\n";
  os << "A = " << format_matrix(a.entries) << "\n";
  os << "walls:\n";
  for (const auto& w : fan.walls()) {
    const auto curve = wall_curve_class(fan, a, w);
    os << "  face " << format_cone(w.face) << "  cones " << w.sides[0] + 1 << "," << w.sides[1] + 1
       << "  ray degrees " << tuple_text(w.relation) << "  f = " << tuple_text(curve.f)
       << "  c1 = " << degree(curve, c1) << "\n";
  }
  os << "c1 = " << tuple_text(c1.coords) << "\n";
  os << "nef(c1): " << yes_no(is_nef(fan, a, c1)) << "\n";
  os << "Fano: " << yes_no(is_fano(fan, a)) << "\n";
  os << "default polarization: " << tuple_text(default_polarization(fan, a).coords) << "\n";
  const auto b = ring.betti();
  os << "Betti: (";
  for (std::size_t k = 0; k < b.size(); ++k) os << (k ? "," : "") << b[k];
  os << ")\n";
  os << "primitive collections:";
  for (const auto& p : primitive_collections(fan)) os << " " << format_cone(p);
  os << "\n";
  os << "cohomology basis:\n";
  for (std::size_t k = 0; k <= ring.dim(); ++k) {
    os << "  H^" << 2 * k << ":";
    for (std::size_t i = 0; i < ring.basis(k).size(); ++i) os << " " << ring.label(ring.offset(k) + i);
    os << "\n";
  }
}

void write_series_text(std::ostream& os, const ToricVariety& v, const IFunctionSeries& s) {
  os << s.part << " on " << (v.fan.name().empty() ? "(unnamed)" : v.fan.name()) << ": basis cone "
     << v.weights.basis_cone + 1 << ", polarization " << tuple_text(s.polarization.coords) << ", degree bound "
     << s.degree_bound << ", t_trunc " << s.truncation.t_trunc << ", z_floor " << s.truncation.z_floor << "\n";
  for (const auto& [beta, series] : s.entries) {
    os << "Q^" << tuple_text(beta.f) << ":";
    if (series.is_zero()) os << " 0";
    os << "\n";
    for (const auto& [key, c] : series.terms()) {
      os << "  z^" << key.z << " " << t_monomial(key.t) << ": " << format_class(*s.ring, c) << "\n";
    }
  }
}

void write_map_text(std::ostream& os, const char* title, const MirrorMap& m) {
  os << title << (m.truncation.weighted ? " (weighted truncation)" : "") << ":\n";
  for (std::size_t j = 0; j < m.coords.size(); ++j) {
    os << "  " << j << ":";
    if (m.coords[j].is_zero()) os << " 0";
    bool first = true;
    for (const auto& [key, c] : m.coords[j].terms()) {
      const bool negative = c < 0;
      os << (first ? (negative ? " -" : " ") : (negative ? " - " : " + "));
      first = false;
      os << plain(negative ? Rational(-c) : c) << "*Q^" << tuple_text(key.f) << "*" << t_monomial(key.t);
    }
    os << "\n";
  }
}

json comparison_json(const SeriesComparison& c) {
  json mismatches = json::array();
  for (const auto& m : c.mismatches) {
    mismatches.push_back(json{{"beta", m.beta.f},
                              {"z", m.key.z},
                              {"t_exp", m.key.t},
                              {"basis_index", m.basis_index},
                              {"ifunction", to_string(m.left)},
                              {"closed_form", to_string(m.right)}});
  }
  return json{{"coefficients_compared", c.coefficients_compared},
              {"identical", c.identical()},
              {"mismatches", mismatches}};
}

void write_comparison_text(std::ostream& os, const ToricVariety& v, const SeriesComparison& c) {
  for (const auto& m : c.mismatches) {
    os << "mismatch Q^" << tuple_text(m.beta.f) << " z^" << m.key.z << " " << t_monomial(m.key.t) << " ["
       << v.ring->label(m.basis_index) << "]: " << to_string(m.left) << " vs " << to_string(m.right) << "\n";
  }
  const auto agree = c.coefficients_compared - c.mismatches.size();
  os << "coefficients compared: " << c.coefficients_compared << "\n";
  if (c.identical()) {
    os << "identical: 100%\n";
  } else {
    const double pct = c.coefficients_compared ? 100.0 * static_cast<double>(agree) / static_cast<double>(c.coefficients_compared) : 0.0;
    os << "identical: " << pct << "% (" << c.mismatches.size() << " mismatches)\n";
  }
}

}  // namespace toricq::cli
