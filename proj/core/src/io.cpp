#include "toricq/io.hpp"

#include <fstream>

#include "toricq/error.hpp"

namespace toricq {

using nlohmann::json;

namespace {

const json& field(const json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) {
    throw Error(ErrorCode::ParseError, std::string("missing field \"") + name + "\"");
  }
  return doc.at(name);
}

std::int64_t as_int(const json& v, const std::string& what) {
  if (!v.is_number_integer()) throw Error(ErrorCode::ParseError, what + " must be an integer");
  return v.get<std::int64_t>();
}

std::vector<std::int64_t> int_list(const json& v, const std::string& what) {
  if (!v.is_array()) throw Error(ErrorCode::ParseError, what + " must be an array of integers");
  std::vector<std::int64_t> out;
  for (const auto& x : v) out.push_back(as_int(x, what + " entry"));
  return out;
}

json rational_list(const RationalVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

std::size_t basis_cone_from_json(const json& doc) {
  const auto k = as_int(field(doc, "basis_cone"), "basis_cone");
  if (k < 1) throw Error(ErrorCode::ParseError, "basis_cone is 1-based");
  return static_cast<std::size_t>(k - 1);
}

void check_basis(std::size_t tag, const WeightMatrix& a) {
  if (tag != a.basis_cone) {
    throw Error(ErrorCode::BasisMismatch, "class refers to basis cone " + std::to_string(tag + 1) +
                                              ", expected " + std::to_string(a.basis_cone + 1));
  }
}

}  // namespace

Fan fan_from_json(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "fan description must be a JSON object");
  const auto dim = as_int(field(doc, "dim"), "dim");
  if (dim < 1) throw Error(ErrorCode::DimensionMismatch, "dim must be positive");

  const auto& rays_doc = field(doc, "rays");
  if (!rays_doc.is_array()) throw Error(ErrorCode::ParseError, "rays must be an array");
  std::vector<LatticeVector> rays;
  for (std::size_t i = 0; i < rays_doc.size(); ++i) {
    rays.push_back(int_list(rays_doc[i], "ray " + std::to_string(i + 1)));
  }

  const auto& cones_doc = field(doc, "max_cones");
  if (!cones_doc.is_array()) throw Error(ErrorCode::ParseError, "max_cones must be an array");
  std::vector<std::vector<std::size_t>> cones;
  for (std::size_t c = 0; c < cones_doc.size(); ++c) {
    std::vector<std::size_t> cone;
    for (auto idx : int_list(cones_doc[c], "cone " + std::to_string(c + 1))) {
      if (idx < 1 || idx > static_cast<std::int64_t>(rays.size())) {
        throw Error(ErrorCode::DimensionMismatch, "cone " + std::to_string(c + 1) + " references ray " +
                                                      std::to_string(idx) + " outside 1.." +
                                                      std::to_string(rays.size()));
      }
      cone.push_back(static_cast<std::size_t>(idx - 1));
    }
    cones.push_back(std::move(cone));
  }

  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw Error(ErrorCode::ParseError, "name must be a string");
    name = doc["name"].get<std::string>();
  }
  return build_fan(static_cast<std::size_t>(dim), std::move(rays), std::move(cones), std::move(name));
}

Fan load_fan(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open fan file " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
  return fan_from_json(doc);
}

json fan_to_json(const Fan& fan) {
  json out;
  out["dim"] = fan.dim();
  out["rays"] = fan.rays();
  json cones = json::array();
  for (const auto& c : fan.max_cones()) {
    json one = json::array();
    for (auto r : c.rays()) one.push_back(r + 1);
    cones.push_back(one);
  }
  out["max_cones"] = cones;
  if (!fan.name().empty()) out["name"] = fan.name();
  return out;
}

json to_json(const DivisorClass& d) { return json{{"basis_cone", d.basis_cone + 1}, {"coords", d.coords}}; }

json to_json(const CurveClass& beta) { return json{{"basis_cone", beta.basis_cone + 1}, {"f", beta.f}}; }

DivisorClass divisor_from_json(const json& doc, const WeightMatrix& a) {
  const auto tag = basis_cone_from_json(doc);
  check_basis(tag, a);
  auto coords = int_list(field(doc, "coords"), "coords");
  if (coords.size() != a.rank()) throw Error(ErrorCode::DimensionMismatch, "divisor needs " + std::to_string(a.rank()) + " coordinates");
  return DivisorClass{tag, std::move(coords)};
}

CurveClass curve_from_json(const json& doc, const WeightMatrix& a) {
  const auto tag = basis_cone_from_json(doc);
  check_basis(tag, a);
  auto f = int_list(field(doc, "f"), "f");
  if (f.size() != a.rank()) throw Error(ErrorCode::DimensionMismatch, "curve needs " + std::to_string(a.rank()) + " coordinates");
  return CurveClass{tag, std::move(f)};
}

json to_json(const CohomologyRing& ring, const CohClass& c) {
  json out = json::object();
  for (std::size_t k = 0; k <= ring.dim(); ++k) {
    const auto part = ring.component(c, k);
    bool nonzero = false;
    for (const auto& x : part) nonzero = nonzero || x != 0;
    if (nonzero) out[std::to_string(k)] = rational_list(part);
  }
  return out;
}

CohClass coh_from_json(const CohomologyRing& ring, const json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "class must be an object keyed by degree");
  CohClass out = ring.zero();
  for (const auto& [key, values] : doc.items()) {
    std::size_t k = 0;
    try {
      k = std::stoul(key);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "class degree \"" + key + "\" is not a number");
    }
    if (k > ring.dim()) throw Error(ErrorCode::DimensionMismatch, "class degree " + key + " exceeds the dimension");
    if (!values.is_array() || values.size() != ring.basis(k).size()) {
      throw Error(ErrorCode::DimensionMismatch, "degree " + key + " needs " + std::to_string(ring.basis(k).size()) + " coefficients");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (!values[i].is_string()) throw Error(ErrorCode::ParseError, "coefficients are \"p/q\" strings");
      out.coeffs[ring.offset(k) + i] = parse_rational(values[i].get<std::string>());
    }
  }
  return out;
}

json basis_listing(const CohomologyRing& ring) {
  json out = json::object();
  for (std::size_t k = 0; k <= ring.dim(); ++k) {
    json labels = json::array();
    for (std::size_t i = 0; i < ring.basis(k).size(); ++i) labels.push_back(ring.label(ring.offset(k) + i));
    out[std::to_string(k)] = labels;
  }
  return out;
}

json series_to_json(const std::vector<std::int64_t>& beta, const ZLaurentSeries& s) {
  json terms = json::array();
  for (const auto& [key, c] : s.terms()) {
    terms.push_back(json{{"z", key.z}, {"t_exp", key.t}, {"class", to_json(s.ring(), c)}});
  }
  return json{{"beta", beta}, {"terms", terms}};
}

std::pair<std::vector<std::int64_t>, ZLaurentSeries> series_from_json(const json& doc,
                                                                      std::shared_ptr<const CohomologyRing> ring,
                                                                      Truncation trunc) {
  auto beta = int_list(field(doc, "beta"), "beta");
  ZLaurentSeries s(ring, trunc);
  const auto& terms = field(doc, "terms");
  if (!terms.is_array()) throw Error(ErrorCode::ParseError, "terms must be an array");
  for (const auto& t : terms) {
    const auto z = as_int(field(t, "z"), "z");
    TExponent e;
    for (auto x : int_list(field(t, "t_exp"), "t_exp")) {
      if (x < 0) throw Error(ErrorCode::ParseError, "t exponents are nonnegative");
      e.push_back(static_cast<std::uint32_t>(x));
    }
    s.add_term(static_cast<int>(z), e, coh_from_json(*ring, field(t, "class")));
  }
  return {std::move(beta), std::move(s)};
}

json to_json(const ToricVariety& variety, const IFunctionSeries& series) {
  json entries = json::array();
  for (const auto& [beta, s] : series.entries) entries.push_back(series_to_json(beta.f, s));
  return json{{"part", series.part},
              {"fan", variety.fan.name()},
              {"basis_cone", variety.weights.basis_cone + 1},
              {"polarization", to_json(series.polarization)},
              {"degree_bound", series.degree_bound},
              {"t_trunc", series.truncation.t_trunc},
              {"z_floor", series.truncation.z_floor},
              {"cohomology_basis", basis_listing(*series.ring)},
              {"series", entries}};
}

json to_json(const MirrorMap& map) {
  json coords = json::array();
  for (const auto& p : map.coords) {
    json terms = json::array();
    for (const auto& [key, c] : p.terms()) {
      terms.push_back(json{{"beta", key.f}, {"t_exp", key.t}, {"coeff", to_string(c)}});
    }
    coords.push_back(terms);
  }
  return json{{"part", "mirror_map"},
              {"basis_cone", map.basis_cone + 1},
              {"polarization", map.truncation.polarization},
              {"degree_bound", map.truncation.degree_bound},
              {"t_trunc", map.truncation.t_trunc},
              {"weighted_truncation", map.truncation.weighted},
              {"coords", coords}};
}

}  // namespace toricq
