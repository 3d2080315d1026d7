#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "toricq/cohomology.hpp"
#include "toricq/fan.hpp"
#include "toricq/mirror.hpp"
#include "toricq/picard.hpp"
#include "toricq/series.hpp"
#include "toricq/variety.hpp"

namespace toricq {

// Fan files: { "dim": n, "rays": [[...], ...], "max_cones": [[1-based], ...],
// "name": optional }. Structural problems raise ParseError naming the field;
// invalid fans raise the build_fan error codes.
Fan fan_from_json(const nlohmann::json& doc);
Fan load_fan(const std::filesystem::path& path);
nlohmann::json fan_to_json(const Fan& fan);

// Picard classes: { "basis_cone": K (1-based), "coords" | "f": [...] }.
nlohmann::json to_json(const DivisorClass& d);
nlohmann::json to_json(const CurveClass& beta);
/// Throws BasisMismatch when the tag differs from `a.basis_cone`.
DivisorClass divisor_from_json(const nlohmann::json& doc, const WeightMatrix& a);
CurveClass curve_from_json(const nlohmann::json& doc, const WeightMatrix& a);

/// { "k": ["p/q", ...] } for every degree k with a nonzero component, the
/// list aligned with ring.basis(k).
nlohmann::json to_json(const CohomologyRing& ring, const CohClass& c);
CohClass coh_from_json(const CohomologyRing& ring, const nlohmann::json& doc);

/// { "k": ["x3", ...] }: the monomial basis the class vectors refer to.
nlohmann::json basis_listing(const CohomologyRing& ring);

/// { "beta": [f], "terms": [ { "z", "t_exp", "class" } ] } in canonical order
/// (z descending, then t_exp lexicographic).
nlohmann::json series_to_json(const std::vector<std::int64_t>& beta, const ZLaurentSeries& s);
std::pair<std::vector<std::int64_t>, ZLaurentSeries> series_from_json(
    const nlohmann::json& doc, std::shared_ptr<const CohomologyRing> ring, Truncation trunc);

/// Series wrapped with metadata (fan name, basis cone, polarization, bounds,
/// part tag, cohomology basis listing).
nlohmann::json to_json(const ToricVariety& variety, const IFunctionSeries& series);

/// { "coords": [ [ { "beta", "t_exp", "coeff" } ] ], ... }.
nlohmann::json to_json(const MirrorMap& map);

}  // namespace toricq
