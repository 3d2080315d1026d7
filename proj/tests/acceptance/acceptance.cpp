// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. argv[1] is the toricq binary.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "oracles.hpp"
#include "toricq/closed_form.hpp"
#include "toricq/fan_library.hpp"
#include "toricq/givental.hpp"
#include "toricq/io.hpp"
#include "toricq/mirror.hpp"

using namespace toricq;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string g_binary;

struct Captured {
  int status = -1;
  std::string out;
};

Captured capture(const std::string& args) {
  Captured c;
  const std::string cmd = "'" + g_binary + "' " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return c;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) c.out.append(buf.data(), n);
  const int raw = pclose(pipe.release());
  c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return c;
}

IFunctionRequest request(std::shared_ptr<const ToricVariety> v, std::int64_t bound, unsigned t_trunc) {
  IFunctionRequest req;
  req.variety = v;
  req.polarization = default_polarization(v->fan, v->weights);
  req.degree_bound = bound;
  req.t_trunc = t_trunc;
  req.z_floor = default_z_floor(*v, bound, t_trunc);
  return req;
}

std::shared_ptr<const ToricVariety> shipped(const char* name) {
  return ToricVariety::make(load_fan(oracle::fan_path(name)));
}

Outcome pn_oracle() {
  const auto start = std::chrono::steady_clock::now();
  std::size_t compared = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto v = ToricVariety::make(projective_space_fan(n));
    const auto req = request(v, 3, 2);
    const auto cmp = compare(small_I(req), closed_form_J_Pn(*v, 3, 2, req.z_floor));
    compared += cmp.coefficients_compared;
    if (!cmp.identical()) return {false, "P^" + std::to_string(n) + ": " + std::to_string(cmp.mismatches.size()) + " mismatches"};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream d;
  d << compared << " coefficients identical for n=1..4, " << secs << " s";
  return {secs < 30, d.str()};
}

Outcome f2_weight_matrix() {
  const auto r = capture("info --fan '" + oracle::fan_path("f2") + "'");
  const bool matrix = r.out.find("A = [[1,1,2,0],[0,0,1,1]]") != std::string::npos;
  const bool cone = r.out.find("basis cone: 1 = {2,3}") != std::string::npos;
  return {r.status == 0 && matrix && cone,
          std::string("exit ") + std::to_string(r.status) + ", matrix line " + (matrix ? "found" : "missing") +
              ", basis cone {2,3} " + (cone ? "found" : "missing")};
}

Outcome f2_self_intersection() {
  const auto v = shipped("f2");
  const auto d4 = v->ring->ray_class(3);
  const Rational ring_path = v->ring->integrate(v->ring->mul(d4, d4));
  // Wall path: degree of D4 on the wall curve over the face {ray 4}, which is D4 itself.
  std::int64_t wall_path = 0;
  for (const auto& w : v->fan.walls()) {
    if (w.face == Cone({3})) wall_path = ray_degrees(v->weights, wall_curve_class(v->fan, v->weights, w))[3];
  }
  return {ring_path == -2 && Rational(wall_path) == ring_path,
          "ring " + to_string(ring_path) + ", wall " + std::to_string(wall_path)};
}

Outcome f2_positivity() {
  const auto v = shipped("f2");
  const bool fano = is_fano(v->fan, v->weights);
  std::string verdicts;
  bool all_nef = true;
  for (std::size_t rho = 0; rho < 4; ++rho) {
    const bool nef = is_nef(v->fan, v->weights, ray_divisor_class(v->weights, rho));
    all_nef = all_nef && nef;
    verdicts += std::string(rho ? "," : "") + (nef ? "true" : "false");
  }
  std::string detail = std::string("is_fano=") + (fano ? "true" : "false") + ", ray divisors nef=(" + verdicts + ")";
  if (!all_nef) detail += "; required all true, but D4.E = -2 on the (-2)-curve E";
  return {!fano && all_nef, detail};
}

Outcome virtual_dimensions() {
  const auto p2 = ToricVariety::make(projective_space_fan(2));
  const auto p1 = ToricVariety::make(projective_space_fan(1));
  const auto a = vdim_quasimap(*p2, 0, 3, CurveClass{0, {1}});
  const auto b = vdim_graph(*p1, 0, CurveClass{0, {1}});
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> pick(0, 1000);
  const auto fans = oracle::shipped_fans();
  int agree = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto v = ToricVariety::make(fans[static_cast<std::size_t>(pick(rng)) % fans.size()]);
    const auto betas = enumerate_effective(v->fan, v->weights, default_polarization(v->fan, v->weights), 4);
    const auto& beta = betas[static_cast<std::size_t>(pick(rng)) % betas.size()];
    const std::int64_t g = pick(rng) % 3;
    const std::int64_t k = pick(rng) % 6;
    const auto n = static_cast<std::int64_t>(v->fan.dim());
    const auto rd = ray_degrees(v->weights, beta);
    if (vdim_quasimap(*v, g, k, beta) == oracle::vdim(n, g, k, rd) &&
        vdim_graph(*v, k, beta) == oracle::vdim(n, 0, k, rd) + 3) {
      ++agree;
    }
  }
  return {a == 5 && b == 3 && agree == 20, "P2 quasimap " + std::to_string(a) + ", P1 graph " + std::to_string(b) +
                                               ", random " + std::to_string(agree) + "/20"};
}

Outcome negative_support() {
  const auto v = shipped("f2");
  const auto req = request(v, 3, 0);
  std::size_t classes = 0;
  for (const auto& beta : enumerate_effective(v->fan, v->weights, req.polarization, 3)) {
    const auto d = ray_degrees(v->weights, beta);
    std::vector<CohClass> gens;
    for (std::size_t rho = 0; rho < d.size(); ++rho) {
      if (d[rho] < 0) gens.push_back(v->ring->ray_class(rho));
    }
    if (gens.empty()) continue;
    ++classes;
    const auto coefficient = beta_coefficient(req, beta);
    for (const auto& [key, c] : coefficient.terms()) {
      if (!v->ring->ideal_contains(gens, c)) return {false, "term at z^" + std::to_string(key.z) + " escapes the ideal"};
    }
  }
  return {classes > 0, std::to_string(classes) + " classes with negative degrees checked"};
}

Outcome grading() {
  std::size_t terms = 0;
  for (const auto& fan : oracle::shipped_fans()) {
    const auto v = ToricVariety::make(fan);
    const auto req = request(v, 3, 0);
    const auto c1 = anticanonical(v->weights);
    for (const auto& beta : enumerate_effective(v->fan, v->weights, req.polarization, 3)) {
      const auto coefficient = beta_coefficient(req, beta);
      for (const auto& [key, c] : coefficient.terms()) {
        for (std::size_t i = 0; i < c.coeffs.size(); ++i) {
          if (c.coeffs[i] == 0) continue;
          ++terms;
          const auto divdeg = static_cast<std::int64_t>(v->ring->degree_of(i));
          if (-key.z - divdeg != degree(beta, c1)) {
            return {false, fan.name() + ": z^" + std::to_string(key.z) + " term of degree " + std::to_string(divdeg)};
          }
        }
      }
    }
  }
  return {terms > 0, std::to_string(terms) + " terms satisfy (-z exponent) - (divisor degree) = c1.beta"};
}

Outcome ring_sanity() {
  const auto start = std::chrono::steady_clock::now();
  for (const auto& fan : oracle::shipped_fans()) {
    const auto v = ToricVariety::make(fan);
    const auto& ring = *v->ring;
    for (std::size_t k = 0; k <= ring.dim(); ++k) {
      const auto m = ring.poincare_pairing(k);
      if (oracle::rank(m) != m.size()) return {false, fan.name() + ": degenerate pairing"};
    }
    for (const auto& cone : fan.max_cones()) {
      CohClass p = ring.one();
      for (auto r : cone.rays()) p = ring.mul(p, ring.ray_class(r));
      if (ring.integrate(p) != 1) return {false, fan.name() + ": point class differs between cones"};
    }
    std::size_t total = 0;
    for (auto b : ring.betti()) total += b;
    if (total != fan.max_cones().size()) return {false, fan.name() + ": Betti sum"};
    for (std::size_t rho = 0; rho < fan.ray_count(); ++rho) {
      if (!ring.pow(ring.ray_class(rho), static_cast<unsigned>(fan.dim()) + 1).is_zero()) {
        return {false, fan.name() + ": not nilpotent"};
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {secs < 5, "five fans, " + std::to_string(secs) + " s"};
}

Outcome mirror_checks() {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto v = ToricVariety::make(projective_space_fan(n));
    if (!is_identity(mirror_map(small_I(request(v, 3, 2))))) return {false, "P^" + std::to_string(n) + " map is not t"};
  }
  const auto f2 = shipped("f2");
  const auto tau = mirror_map(small_I(request(f2, 3, 3)));
  const auto inv = invert_mirror_map(tau);
  const bool ok = is_identity(compose(tau, inv)) && is_identity(compose(inv, tau));
  return {ok, std::string("P^1..P^3 identity; F2 round trip to order 3 ") + (ok ? "ok" : "failed")};
}

Outcome determinism() {
  const std::string args = "ifun --fan '" + oracle::fan_path("p2") + "'";
  const auto a = capture(args);
  const auto b = capture(args);
  const bool same = a.status == 0 && b.status == 0 && !a.out.empty() && a.out == b.out;
  return {same, std::to_string(a.out.size()) + " bytes, " + (same ? "identical" : "different")};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path to toricq>\n";
    return 2;
  }
  g_binary = argv[1];

  const std::pair<const char*, Outcome (*)()> criteria[] = {
      {"P^n small I equals the closed form J", pn_oracle},
      {"F2 weight matrix from toricq info", f2_weight_matrix},
      {"F2 self-intersection D4^2 = -2 by two paths", f2_self_intersection},
      {"F2 positivity verdicts", f2_positivity},
      {"virtual dimension formulas", virtual_dimensions},
      {"negative-degree support ideal", negative_support},
      {"grading of beta coefficients", grading},
      {"cohomology ring sanity", ring_sanity},
      {"mirror map identity and F2 round trip", mirror_checks},
      {"deterministic ifun output", determinism},
  };

  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << index << ": " << name << " (" << o.detail << ")\n";
  }
  std::cout << (10 - failures) << "/10 criteria pass\n";
  return failures == 0 ? 0 : 1;
}
