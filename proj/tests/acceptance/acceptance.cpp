// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every random draw uses a fixed seed.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dicke3/cli/app.hpp"
#include "dicke3/ed_oracle.hpp"
#include "dicke3/sweep.hpp"
#include "dicke3/variational.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace dicke3;

namespace {

constexpr double kPi = std::numbers::pi;
const Gauge kHermitian[] = {Gauge::Coulomb, Gauge::Dipole, Gauge::Unified};
const Gauge kAll[] = {Gauge::Coulomb, Gauge::Dipole, Gauge::Unified, Gauge::NonHermitianUnified};

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Collects failures and the worst residual of a criterion.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++total_;
    if (!ok && first_failure_.empty()) first_failure_ = what;
    failed_ += !ok;
  }
  void residual(double r) { worst_ = std::max(worst_, r); }
  double worst() const { return worst_; }
  Outcome outcome(const std::string& summary) const {
    std::ostringstream s;
    s << summary << "; " << (total_ - failed_) << "/" << total_ << " checks";
    if (failed_ > 0) s << "; first failure: " << first_failure_;
    return {failed_ == 0, s.str()};
  }

 private:
  long total_ = 0;
  long failed_ = 0;
  double worst_ = 0.0;
  std::string first_failure_;
};

std::string describe(Gauge g, const ModelParams& p) {
  std::ostringstream s;
  s.precision(17);
  s << to_string(g) << " eta=" << p.eta() << " G=" << p.G() << " N=" << p.N() << " phi=" << p.phi();
  return s.str();
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// 1. Critical coupling at resonance.
Outcome criterion1() {
  Tally t;
  std::vector<std::pair<Gauge, double>> cases{{Gauge::Coulomb, 0.0}, {Gauge::Dipole, 0.0}};
  for (double phi : {kPi / 6, kPi / 4, kPi / 3}) cases.emplace_back(Gauge::Unified, phi);
  for (auto [g, phi] : cases) {
    const ModelParams p = oracle::make(1.0, 0.0, 1, phi);
    const double gc = critical_coupling(g, p);
    t.residual(std::abs(gc - 0.5));
    t.check(std::abs(gc - 0.5) <= 1e-12, describe(g, p) + " G_c=" + std::to_string(gc));
  }
  return t.outcome("max |G_c - 1/2| = " + sci(t.worst()) + " (tol 1e-12)");
}

// 2. Detuning trends of G_c, closed form and bisection.
Outcome criterion2() {
  Tally t;
  const double etas[] = {0.5, 1.0, 1.5};
  const double coulomb[] = {std::sqrt(0.5) / 2, 0.5, std::sqrt(1.5) / 2};
  const double dipole[] = {std::sqrt(2.0) / 2, 0.5, 1.0 / std::sqrt(6.0)};
  double prev_c = -1, prev_d = 1e300;
  for (int i = 0; i < 3; ++i) {
    const ModelParams p = oracle::make(etas[i], 0.0);
    const double gc = critical_coupling(Gauge::Coulomb, p);
    const double gd = critical_coupling(Gauge::Dipole, p);
    const double bc = static_cast<double>(oracle::critical_coupling_by_bisection(Gauge::Coulomb, p));
    const double bd = static_cast<double>(oracle::critical_coupling_by_bisection(Gauge::Dipole, p));
    t.check(std::abs(gc - coulomb[i]) <= 1e-12, "coulomb closed form at eta=" + std::to_string(etas[i]));
    t.check(std::abs(gd - dipole[i]) <= 1e-12, "dipole closed form at eta=" + std::to_string(etas[i]));
    t.check(std::abs(gc - bc) <= 1e-8, "coulomb bisection at eta=" + std::to_string(etas[i]));
    t.check(std::abs(gd - bd) <= 1e-8, "dipole bisection at eta=" + std::to_string(etas[i]));
    t.residual(std::max(std::abs(gc - bc), std::abs(gd - bd)));
    t.check(gc > prev_c, "coulomb not strictly increasing");
    t.check(gd < prev_d, "dipole not strictly decreasing");
    prev_c = gc;
    prev_d = gd;
  }
  return t.outcome("max |closed - bisection| = " + sci(t.worst()) + " (tol 1e-8)");
}

// 3. Normal-phase plateau.
Outcome criterion3() {
  Tally t;
  oracle::Sampler s(3003);
  for (int i = 0; i < 100; ++i) {
    const Gauge g = kAll[s.integer(0, 3)];
    ModelParams p = s.params(0.0);
    p = p.with_coupling(critical_coupling(g, p) * s.uniform(0.0, 1.0));
    const auto sol = solve_ground_state(g, p);
    const bool exact = sol.phase == Phase::NP && sol.n_p == 0.0 && sol.energy == std::complex<double>(-1.0, 0.0) &&
                       sol.delta_na == -1.0 && sol.berry_per_atom == 0.0;
    t.check(exact, describe(g, p));
  }
  return t.outcome("n_p=0, eps=-1, dn_a=-1, berry=0 exactly");
}

// 4. Closed-form extremum versus numeric minimization.
Outcome criterion4() {
  Tally t;
  oracle::Sampler s(4004);
  for (int i = 0; i < 1000; ++i) {
    const Gauge g = kHermitian[i % 3];
    ModelParams p = s.params(0.0);
    p = p.with_coupling(critical_coupling(g, p) * s.uniform(1.001, 4.0));
    const auto sol = solve_ground_state(g, p);
    if (sol.phase != Phase::SP) {
      t.check(false, describe(g, p) + " not SP");
      continue;
    }
    const double numeric = static_cast<double>(oracle::minimized_gamma(g, p));
    const double r = std::abs(sol.gamma_c - numeric) / sol.gamma_c;
    t.residual(r);
    t.check(r < 1e-8, describe(g, p) + " rel=" + sci(r));
  }
  return t.outcome("max relative |gamma_c - minimizer| = " + sci(t.worst()) + " (tol 1e-8)");
}

struct GridRecords {
  std::vector<VariationalSolution> sp;
};

double max_observable_diff(const VariationalSolution& a, const VariationalSolution& b) {
  if (a.phase != b.phase) return INFINITY;
  double d = 0.0;
  d = std::max(d, rel(a.gamma_c, b.gamma_c));
  d = std::max(d, rel(a.n_p, b.n_p));
  d = std::max(d, rel(a.energy.real(), b.energy.real()));
  d = std::max(d, std::abs(a.energy.imag() - b.energy.imag()));
  d = std::max(d, rel(a.delta_na, b.delta_na));
  d = std::max(d, rel(a.berry_per_atom, b.berry_per_atom));
  d = std::max(d, rel(a.stability, b.stability));
  d = std::max(d, rel(a.atom_energy, b.atom_energy));
  return d;
}

// 5. Gauge reduction and resonance degeneracy. Also feeds criterion 10.
Outcome criterion5(GridRecords& grid) {
  Tally t;
  for (int i = 0; i < 50; ++i) {
    const double G = 2.0 * i / 49.0;
    for (int j = 0; j < 50; ++j) {
      const double eta = 0.2 + 2.8 * j / 49.0;
      const auto c = solve_ground_state(Gauge::Coulomb, oracle::make(eta, G, 1, 0.0));
      const auto u0 = solve_ground_state(Gauge::Unified, oracle::make(eta, G, 1, 0.0));
      const auto d = solve_ground_state(Gauge::Dipole, oracle::make(eta, G, 1, kPi / 2));
      const auto u90 = solve_ground_state(Gauge::Unified, oracle::make(eta, G, 1, kPi / 2));
      const double d0 = max_observable_diff(u0, c);
      const double d90 = max_observable_diff(u90, d);
      t.residual(std::max(d0, d90));
      t.check(d0 <= 1e-12, "unified(0) vs coulomb at G=" + std::to_string(G) + " eta=" + std::to_string(eta));
      t.check(d90 <= 1e-12, "unified(pi/2) vs dipole at G=" + std::to_string(G) + " eta=" + std::to_string(eta));
      for (const auto* sol : {&c, &u0, &d, &u90})
        if (sol->phase == Phase::SP) grid.sp.push_back(*sol);
    }
  }
  oracle::Sampler s(5005);
  for (int k = 0; k < 20; ++k) {
    const double phi = s.uniform(0.0, kPi);
    for (int i = 0; i < 50; ++i) {
      const double G = 2.0 * i / 49.0;
      const ModelParams p = oracle::make(1.0, G, 1, phi);
      const auto c = solve_ground_state(Gauge::Coulomb, p);
      const auto d = solve_ground_state(Gauge::Dipole, p);
      const auto u = solve_ground_state(Gauge::Unified, p);
      const double diff = std::max(max_observable_diff(d, c), max_observable_diff(u, c));
      t.residual(diff);
      t.check(diff <= 1e-12, "resonance degeneracy at " + describe(Gauge::Unified, p));
      if (u.phase == Phase::SP) grid.sp.push_back(u);
    }
  }
  return t.outcome("max observable difference = " + sci(t.worst()) + " (tol 1e-12)");
}

// 6. Off-diagonal coefficients vanish at the solved rotation.
Outcome criterion6() {
  Tally t;
  oracle::Sampler s(6006);
  for (int i = 0; i < 500; ++i) {
    const Gauge g = kAll[i % 4];
    const ModelParams p = s.params(s.uniform(0.01, 2.0));
    // reach r = 8 G^2 gamma^2 Phi_g / N
    const double r_max = is_hermitian(g) ? 4.0 : 0.81;
    const double reach = s.uniform(0.0, r_max);
    const double phi_g = static_cast<double>(oracle::gauge_factor(g, p));
    const double gamma = std::sqrt(reach * p.N() / (8.0 * p.G() * p.G() * phi_g));
    const auto res = offdiag_residuals(g, p, gamma);
    t.residual(std::max(res.abs_B, res.abs_C));
    t.check(res.abs_B < 1e-12 && res.abs_C < 1e-12, describe(g, p) + " gamma=" + std::to_string(gamma));
  }
  return t.outcome("max |B|,|C| = " + sci(t.worst()) + " (tol 1e-12)");
}

// 7. Exceptional-point structure.
Outcome criterion7() {
  Tally t;
  const double expected[] = {1.0 / (2.0 * std::numbers::sqrt2), 0.25};
  const double densities[] = {1.0, 2.0};
  for (int N : {1, 10}) {
    for (int k = 0; k < 2; ++k) {
      const double x = densities[k];
      const double gamma = std::sqrt(x * N);
      const ModelParams base = oracle::make(1.0, 0.0, N, kPi / 3);
      auto eps = [&](long double G, Branch b) {
        return energy(Gauge::NonHermitianUnified, base.with_coupling(static_cast<double>(G)), gamma, b);
      };
      const std::string tag = "x=" + std::to_string(x) + " N=" + std::to_string(N);

      const double closed = exceptional_point(base, gamma);
      const double scan = static_cast<double>(oracle::ep_by_radicand_scan(x, oracle::phase_factor(1.0L, kPi / 3)));
      // where the imaginary parts depart from zero
      const double depart = static_cast<double>(
          oracle::bisect([&](long double G) { return eps(G, Branch::Minus).imag() == 0.0; }, 0.0L, 1.0L));
      // where the real parts of the two branches merge
      const double merge = static_cast<double>(oracle::bisect(
          [&](long double G) { return eps(G, Branch::Minus).real() != eps(G, Branch::Plus).real(); }, 0.0L, 1.0L));
      for (auto [name, v] : {std::pair{"closed form", closed}, {"radicand scan", scan}, {"departure", depart},
                             {"merge", merge}}) {
        t.residual(std::abs(v - expected[k]));
        t.check(std::abs(v - expected[k]) <= 1e-10, std::string(name) + " " + tag + " G=" + std::to_string(v));
      }

      bool below_real = true, above_pair = true;
      for (int i = 0; i < 1000; ++i) {
        const double G_lo = expected[k] * i / 1000.0 * (1 - 1e-9);
        below_real &= eps(G_lo, Branch::Minus).imag() == 0.0 && eps(G_lo, Branch::Plus).imag() == 0.0;
        const double G_hi = expected[k] * (1 + 1e-9) + 2.0 * i / 1000.0;
        const auto m = eps(G_hi, Branch::Minus), pl = eps(G_hi, Branch::Plus);
        above_pair &= pl == std::conj(m) && m.imag() != 0.0;
      }
      t.check(below_real, "Im != 0 below the EP, " + tag);
      t.check(above_pair, "branches not a conjugate pair above the EP, " + tag);
    }
  }
  return t.outcome("max |G_ep - expected| = " + sci(t.worst()) + " (tol 1e-10)");
}

// 8. Non-Hermitian phase structure over a 100x100 grid.
Outcome criterion8() {
  Tally t;
  SweepSpec spec;
  spec.gauge = Gauge::NonHermitianUnified;
  spec.phi = kPi / 3;
  spec.coupling_axis = Axis::linear(0.0, 1.5, 100);
  spec.detuning_axis = Axis::linear(0.2, 2.0, 100);
  spec.workers = 1;
  const PhaseDiagram d = phase_diagram(spec);
  long sp = 0, coexist = 0;
  for (const auto& c : d.cells) {
    const long double Phi = oracle::phase_factor(c.eta, c.phi);
    const long double bound = 0.5L * std::sqrt(c.eta / Phi);
    const std::string where = "G=" + std::to_string(c.G) + " eta=" + std::to_string(c.eta);
    sp += c.label == "SP";
    t.check(c.label != "SP", "SP label at " + where);
    if (c.has_unstable) {
      ++coexist;
      t.check(c.G <= bound, "unstable extremum beyond the bound at " + where);
      t.check(c.unstable_stability <= 0.0, "positive curvature certificate at " + where);
      // independent curvature: slope change of eps_+ across gamma_c
      const ModelParams p = oracle::make(c.eta, c.G, 1, c.phi);
      const long double gc = std::sqrt(static_cast<long double>(c.unstable_n_p));
      // the extremum can sit just below the EP, so the step must not reach it
      const long double gamma_ep = 1.0L / std::sqrt(8.0L * c.G * c.G * Phi);
      const long double h = std::min(1e-6L * std::max(1.0L, gc), 1e-3L * (gamma_ep - gc));
      const long double curv =
          (oracle::denergy(spec.gauge, p, gc + h, +1) - oracle::denergy(spec.gauge, p, gc - h, +1)) / (2 * h);
      t.check(curv <= 1e-9L, "oracle curvature positive at " + where);
    }
    t.check(c.has_unstable == (c.G > 0 && c.G < bound), "coexistence mismatch at " + where);
  }
  return t.outcome(std::to_string(d.cells.size()) + " cells, " + std::to_string(sp) + " SP, " +
                   std::to_string(coexist) + " with UnstableSP");
}

// 9. ED oracle invariants.
Outcome criterion9() {
  Tally t;
  oracle::Sampler s(9009);
  std::vector<std::pair<Gauge, ModelParams>> points;
  for (int i = 0; i < 20; ++i) {
    const Gauge g = kHermitian[s.integer(0, 2)];
    const ModelParams p = s.params(s.uniform(0.0, 1.2), 8, 0.5, 1.5);
    points.emplace_back(g, p);
  }
  double worst_rr = -INFINITY, worst_cut = 0.0, worst_parity = 0.0;
  auto stability = [&](Gauge g, const ModelParams& p, const EDResult& r) {
    const double more = solve_at_cutoff(g, p, r.n_max_used + 20).ground_energy_per_atom;
    const double diff = std::abs(more - r.ground_energy_per_atom);
    worst_cut = std::max(worst_cut, diff);
    t.check(diff < 1e-8, "(c) cutoff instability " + sci(diff) + " at " + describe(g, p));
  };
  for (const auto& [g, p] : points) {
    try {
      const EDResult r = cutoff_converge(g, p, 1e-10);
      const double eps = solve_ground_state(g, p).energy.real();
      worst_rr = std::max(worst_rr, r.ground_energy_per_atom - eps);
      t.check(r.ground_energy_per_atom <= eps + 1e-9, "(a) Rayleigh-Ritz at " + describe(g, p));
      stability(g, p, r);
      const double comm = parity_commutator_norm(build_hamiltonian(g, p, r.n_max_used));
      worst_parity = std::max(worst_parity, comm);
      t.check(comm < 1e-12, "(d) parity at " + describe(g, p));
    } catch (const std::exception& e) {
      t.check(false, describe(g, p) + ": " + e.what());
    }
  }
  std::vector<double> gaps;
  for (int N : {2, 4, 8}) {
    const ModelParams p = oracle::make(1.0, 1.0, N);
    const EDResult r = cutoff_converge(Gauge::Coulomb, p, 1e-10);
    gaps.push_back(solve_ground_state(Gauge::Coulomb, p).energy.real() - r.ground_energy_per_atom);
    stability(Gauge::Coulomb, p, r);
  }
  t.check(gaps[0] > gaps[1] && gaps[1] > gaps[2] && gaps[2] > 0, "(b) gap not decreasing");
  return t.outcome("(a) max E0/N - eps = " + sci(worst_rr) + ", (b) gaps " + sci(gaps[0]) + " > " + sci(gaps[1]) +
                   " > " + sci(gaps[2]) + ", (c) max cutoff change " + sci(worst_cut) + ", (d) max parity " +
                   sci(worst_parity));
}

// 10. Berry phase on the SP records of criterion 5.
Outcome criterion10(const GridRecords& grid) {
  Tally t;
  for (const auto& sol : grid.sp) t.check(sol.berry_per_atom == 2.0 * kPi * sol.n_p, "berry != 2 pi n_p");
  return t.outcome(std::to_string(grid.sp.size()) + " SP records, exact equality");
}

std::map<std::string, std::string> read_csvs(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.path().extension() != ".csv") continue;
    std::ifstream in(e.path(), std::ios::binary);
    out[e.path().filename().string()] = {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  return out;
}

// 11. Determinism of `figure fig2`.
Outcome criterion11() {
  Tally t;
  std::random_device rd;
  const fs::path root = fs::temp_directory_path() / ("dicke3_acceptance_" + std::to_string(rd()));
  std::vector<std::map<std::string, std::string>> runs;
  for (const char* name : {"run1", "run2"}) {
    const fs::path dir = root / name;
    fs::create_directories(dir);
    std::ostringstream out, err;
    const int code = cli::run_cli({"figure", "fig2", "--out", dir.string()}, out, err);
    t.check(code == 0, std::string("figure fig2 exited ") + std::to_string(code) + ": " + err.str());
    runs.push_back(read_csvs(dir));
  }
  fs::remove_all(root);
  t.check(!runs[0].empty(), "no CSV written");
  t.check(runs[0] == runs[1], "CSV bodies differ");
  return t.outcome(std::to_string(runs[0].size()) + " CSV files compared byte for byte");
}

}  // namespace

int main() {
  GridRecords grid;
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "critical coupling at resonance", 1, criterion1},
      {2, "detuning trends of G_c", 1, criterion2},
      {3, "normal-phase plateau", 1, criterion3},
      {4, "closed-form extremum equals numeric minimizer", 30, criterion4},
      {5, "gauge reduction and resonance degeneracy", 30, [&] { return criterion5(grid); }},
      {6, "off-diagonal coefficients vanish", 5, criterion6},
      {7, "exceptional-point structure", 1, criterion7},
      {8, "non-Hermitian phase structure", 10, criterion8},
      {9, "exact-diagonalization invariants", 300, criterion9},
      {10, "Berry phase equals 2 pi n_p", 30, [&] { return criterion10(grid); }},
      {11, "figure output is deterministic", 10, criterion11},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_s) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(c.budget_s)) + " s runtime budget";
    }
    failures += !o.pass;
    std::printf("%s criterion %d: %s (%s) [%.3f s]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                secs);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
