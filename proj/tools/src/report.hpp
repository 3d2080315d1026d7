#pragma once

#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "toricq/closed_form.hpp"
#include "toricq/mirror.hpp"
#include "toricq/variety.hpp"

namespace toricq::cli {

std::string format_cone(const Cone& cone);
/// [a,b,c] for a single row, [[...],[...]] otherwise.
std::string format_matrix(const IntegerMatrix& m);
/// "-2*x3 + 1/2*x3^2", "0" for the zero class.
std::string format_class(const CohomologyRing& ring, const CohClass& c);

nlohmann::json info_json(const ToricVariety& v);
void write_info_text(std::ostream& os, const ToricVariety& v);

void write_series_text(std::ostream& os, const ToricVariety& v, const IFunctionSeries& s);
void write_map_text(std::ostream& os, const char* title, const MirrorMap& m);

nlohmann::json comparison_json(const SeriesComparison& c);
void write_comparison_text(std::ostream& os, const ToricVariety& v, const SeriesComparison& c);

}  // namespace toricq::cli
