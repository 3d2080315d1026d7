#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "report.hpp"
#include "toricq/closed_form.hpp"
#include "toricq/error.hpp"
#include "toricq/fan_library.hpp"
#include "toricq/givental.hpp"
#include "toricq/io.hpp"
#include "toricq/mirror.hpp"

namespace toricq::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string command;
  std::string fan;
  std::optional<std::size_t> basis_cone;  // 1-based on the command line
  std::optional<std::string> polarization;
  std::int64_t degree_bound = 3;
  unsigned t_trunc = 1;
  std::optional<int> z_floor;
  std::string part = "small_I";
  std::optional<std::string> out;
  std::optional<std::string> format;
  unsigned threads = 1;
};

const char* const kBuiltins[] = {"p1", "p2", "p3", "p1xp1", "f2"};

Fan builtin_fan(const std::string& name) {
  if (name == "p1") return projective_space_fan(1);
  if (name == "p2") return projective_space_fan(2);
  if (name == "p3") return projective_space_fan(3);
  if (name == "p1xp1") return product_fan(projective_space_fan(1), projective_space_fan(1));
  return hirzebruch_fan(2);
}

/// A readable path wins; otherwise a built-in name is looked up in the fan
/// directory (TORICQ_FAN_DIR overrides the compiled-in one) and, failing
/// that, generated in code.
Fan resolve_fan(const std::string& arg) {
  namespace fs = std::filesystem;
  if (fs::exists(arg)) return load_fan(arg);
  for (const char* name : kBuiltins) {
    if (arg != name) continue;
    const char* env = std::getenv("TORICQ_FAN_DIR");
    const fs::path dir = env && *env ? fs::path(env) : fs::path(TORICQ_FAN_DIR);
    const fs::path file = dir / (arg + ".json");
    if (fs::exists(file)) return load_fan(file);
    return builtin_fan(arg);
  }
  throw Error(ErrorCode::ParseError, "no fan file or built-in fan named \"" + arg + "\"");
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "\"" + item + "\" is not an integer");
    }
  }
  return out;
}

DivisorClass polarization_for(const ToricVariety& v, const RunConfig& cfg) {
  const auto& a = v.weights;
  if (!cfg.polarization) return default_polarization(v.fan, a);
  const auto& arg = *cfg.polarization;
  DivisorClass d;
  if (arg.rfind("ray:", 0) == 0) {
    const auto alpha = parse_int_list(arg.substr(4));
    if (alpha.size() != a.ray_count()) {
      throw Error(ErrorCode::InvalidArgument, "ray polarization needs " + std::to_string(a.ray_count()) + " entries");
    }
    d = divisor_from_ray_coefficients(a, alpha);
  } else if (arg.rfind("pic:", 0) == 0) {
    d = DivisorClass{a.basis_cone, parse_int_list(arg.substr(4))};
    if (d.coords.size() != a.rank()) {
      throw Error(ErrorCode::InvalidArgument, "Picard polarization needs " + std::to_string(a.rank()) + " entries");
    }
  } else {
    throw Error(ErrorCode::InvalidArgument, "polarization must start with ray: or pic:");
  }
  if (!is_ample(v.fan, a, d)) throw Error(ErrorCode::NotAmplePolarization, "polarization " + arg + " is not ample");
  return d;
}

std::shared_ptr<const ToricVariety> load_variety(const RunConfig& cfg) {
  Fan fan = resolve_fan(cfg.fan);
  std::optional<std::size_t> cone;
  if (cfg.basis_cone) {
    if (*cfg.basis_cone < 1 || *cfg.basis_cone > fan.max_cones().size()) {
      throw Error(ErrorCode::InvalidArgument, "--basis-cone must lie in 1.." + std::to_string(fan.max_cones().size()));
    }
    cone = *cfg.basis_cone - 1;
  }
  return ToricVariety::make(std::move(fan), cone);
}

IFunctionRequest make_request(const std::shared_ptr<const ToricVariety>& v, const RunConfig& cfg) {
  IFunctionRequest req;
  req.variety = v;
  req.polarization = polarization_for(*v, cfg);
  req.degree_bound = cfg.degree_bound;
  req.t_trunc = cfg.t_trunc;
  req.z_floor = cfg.z_floor.value_or(default_z_floor(*v, cfg.degree_bound, cfg.t_trunc));
  req.include_exp_factor = cfg.part == "small_I";
  req.threads = cfg.threads;
  return req;
}

IFunctionSeries compute_series(const IFunctionRequest& req) {
  return req.include_exp_factor ? small_I(req) : big_I_k0(req);
}

bool wants_json(const RunConfig& cfg, bool json_default) {
  return cfg.format ? *cfg.format == "json" : json_default;
}

void emit_json(std::ostream& os, const json& doc) { os << doc.dump(2) << "\n"; }

int cmd_validate(const RunConfig& cfg, std::ostream& os) {
  try {
    const Fan fan = resolve_fan(cfg.fan);
    if (wants_json(cfg, false)) {
      emit_json(os, json{{"valid", true}, {"name", fan.name()}, {"n", fan.dim()}, {"l", fan.ray_count()},
                         {"r", fan.picard_rank()}});
    } else {
      os << (fan.name().empty() ? "fan" : fan.name()) << " (n=" << fan.dim() << "): smooth, complete, l="
         << fan.ray_count() << ", r=" << fan.picard_rank() << "\n";
    }
    return kOk;
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::DimensionMismatch:
      case ErrorCode::NonPrimitiveRay:
      case ErrorCode::NonUnimodularCone:
      case ErrorCode::NotComplete:
      case ErrorCode::NotAFan:
        if (wants_json(cfg, false)) {
          emit_json(os, json{{"valid", false}, {"error", std::string(to_string(e.code()))}, {"message", e.what()}});
        } else {
          os << "invalid: " << to_string(e.code()) << ": " << e.what() << "\n";
        }
        return kInvalidFan;
      default:
        throw;
    }
  }
}

int cmd_info(const RunConfig& cfg, std::ostream& os) {
  const auto v = load_variety(cfg);
  if (wants_json(cfg, false)) {
    emit_json(os, info_json(*v));
  } else {
    write_info_text(os, *v);
  }
  return kOk;
}

int cmd_ifun(const RunConfig& cfg, std::ostream& os) {
  const auto v = load_variety(cfg);
  const auto series = compute_series(make_request(v, cfg));
  if (wants_json(cfg, true)) {
    emit_json(os, to_json(*v, series));
  } else {
    write_series_text(os, *v, series);
  }
  return kOk;
}

int cmd_mirror(const RunConfig& cfg, std::ostream& os) {
  const auto v = load_variety(cfg);
  const auto series = compute_series(make_request(v, cfg));
  const auto tau = mirror_map(series);
  const auto inv = invert_mirror_map(tau);
  const bool round_trip = is_identity(compose(tau, inv)) && is_identity(compose(inv, tau));
  const auto j = J_from_I(series, inv);

  if (wants_json(cfg, true)) {
    emit_json(os, json{{"mirror_map", to_json(tau)},
                       {"inverse", to_json(inv)},
                       {"round_trip", round_trip ? "ok" : "failed"},
                       {"J_from_I", to_json(*v, j)}});
  } else {
    if (is_identity(tau)) {
      os << "mirror map: identity\n";
    } else {
      write_map_text(os, "mirror map", tau);
      write_map_text(os, "inverse", inv);
    }
    os << "round trip: " << (round_trip ? "ok" : "failed") << "\n";
    write_series_text(os, *v, j);
  }
  return round_trip ? kOk : kMismatch;
}

int cmd_compare_pn(const RunConfig& cfg, std::ostream& os) {
  const auto v = load_variety(cfg);
  if (!is_projective_space_fan(v->fan)) {
    throw Error(ErrorCode::InvalidArgument, "compare-pn needs a projective space fan");
  }
  RunConfig small = cfg;
  small.part = "small_I";
  const auto req = make_request(v, small);
  if (req.polarization.coords != std::vector<std::int64_t>{1}) {
    throw Error(ErrorCode::InvalidArgument, "compare-pn counts degrees against O(1); use pic:1");
  }
  const auto ours = small_I(req);
  const auto oracle = closed_form_J_Pn(*v, req.degree_bound, req.t_trunc, req.z_floor);
  const auto result = compare(ours, oracle);
  if (wants_json(cfg, false)) {
    emit_json(os, comparison_json(result));
  } else {
    write_comparison_text(os, *v, result);
  }
  return result.identical() ? kOk : kMismatch;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch:
    case ErrorCode::NonPrimitiveRay:
    case ErrorCode::NonUnimodularCone:
    case ErrorCode::NotComplete:
    case ErrorCode::NotAFan:
      return kInvalidFan;
    case ErrorCode::MirrorMapNotSmall:
    case ErrorCode::MirrorMapNotInvertible:
    case ErrorCode::NotInvertible:
      return kOutOfRegime;
    default:
      return kUsage;
  }
}

unsigned threads_from_env() {
  const char* env = std::getenv("TORICQ_THREADS");
  if (!env || !*env) return 1;
  try {
    const long n = std::stol(env);
    if (n >= 1) return static_cast<unsigned>(n);
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::InvalidArgument, "TORICQ_THREADS must be a positive integer");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact toric-variety toolkit: fans, cohomology, I-functions and mirror maps", "toricq"};
  app.require_subcommand(1);

  auto common = [&cfg](CLI::App* sub, bool series) {
    sub->add_option("--fan", cfg.fan, "fan JSON file or built-in name (p1, p2, p3, p1xp1, f2)")->required();
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", cfg.out, "write the report to FILE instead of stdout");
    if (sub->get_name() == "validate") return;
    sub->add_option("--basis-cone", cfg.basis_cone, "maximal cone (1-based) whose complement gives the Picard basis");
    if (!series) return;
    sub->add_option("--polarization", cfg.polarization, "ample class: ray:a1,...,al or pic:c1,...,cr");
    sub->add_option("--degree-bound", cfg.degree_bound, "largest curve degree against the polarization")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--t-trunc", cfg.t_trunc, "largest total degree in t_0..t_r");
    sub->add_option("--z-floor", cfg.z_floor,
                    "lowest z power kept (default -(n + bound * max c1.w over wall curves + t_trunc + 2))");
    sub->add_option("--part", cfg.part, "which I-function")->check(CLI::IsMember({"small_I", "big_I_k0"}));
  };
  common(app.add_subcommand("validate", "check that a fan is smooth and complete"), false);
  common(app.add_subcommand("info", "weight matrix, walls, positivity, Betti numbers"), false);
  common(app.add_subcommand("ifun", "expand the I-function"), true);
  common(app.add_subcommand("mirror", "mirror map, its inverse and J = I(t(tau))"), true);
  common(app.add_subcommand("compare-pn", "compare small I of P^n with the closed form J"), true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    cfg.threads = threads_from_env();
    std::ofstream file;
    if (cfg.out) {
      file.open(*cfg.out);
      if (!file) {
        err << "toricq: cannot write " << *cfg.out << "\n";
        return kUsage;
      }
    }
    std::ostream& os = cfg.out ? static_cast<std::ostream&>(file) : out;
    if (cfg.command == "validate") return cmd_validate(cfg, os);
    if (cfg.command == "info") return cmd_info(cfg, os);
    if (cfg.command == "ifun") return cmd_ifun(cfg, os);
    if (cfg.command == "mirror") return cmd_mirror(cfg, os);
    return cmd_compare_pn(cfg, os);
  } catch (const Error& e) {
    err << "toricq: " << to_string(e.code()) << ": " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "toricq: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace toricq::cli
