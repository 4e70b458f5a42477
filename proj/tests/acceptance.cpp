// Acceptance suite: one line per criterion, non-zero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <json.hpp>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "oracles.hpp"
#include "surfgrav/boundstate.hpp"
#include "surfgrav/forcelaws.hpp"
#include "surfgrav/report.hpp"
#include "surfgrav/yukawafit.hpp"

using namespace surfgrav;

namespace {

const Constants kPaper = Constants::paper();

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

struct Criterion {
  const char* id;
  const char* title;
  double budget_s;
  std::function<void(Check&)> body;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

void ratio_predictions(Check& c) {
  const double r3 = strength_ratio(fm_to_m(1.0), fm_to_m(3.0));
  const double r4 = strength_ratio(fm_to_m(1.0), fm_to_m(4.0));
  c.expect(std::abs(r3 - 1.7778) <= 1e-4, "ratio(3 fm) = " + fmt("%.17g", r3));
  c.expect(r4 == 25.0 / 16.0, "ratio(4 fm) = " + fmt("%.17g", r4));
  c.expect(std::floor(r3 * 100) / 100 == 1.77 && std::floor(r4 * 100) / 100 == 1.56, "truncation to 2 decimals");
}

void planck_enhancement(Check& c) {
  const double r = strength_ratio(fm_to_m(1.0), fm_to_m(1e-20));
  c.expect(r >= 0.99e40 && r <= 1.01e40, "ratio = " + fmt("%.17g", r));
}

void reduction_identity(Check& c) {
  const ParticlePair p = ParticlePair::nucleons(kPaper, Length(0.0));
  double worst = 0.0;
  for (double s : oracle::log_grid(1e-3, 1e6, 100)) {
    const Separation sep = Separation::from_gap(fm_to_m(s), p.contact());
    worst = std::max(worst, oracle::relative_error(force_proposed(p, sep, kPaper).value(),
                                                   force_newton(p, sep, kPaper).value()));
  }
  c.expect(worst <= 1e-15, "worst relative difference " + fmt("%.3g", worst));
}

void force_potential_consistency(Check& c) {
  const ParticlePair p = ParticlePair::nucleons(kPaper);
  for (const PotentialSpec& law :
       {PotentialSpec{Newtonian{}}, PotentialSpec{Proposed{}}, PotentialSpec{Yukawa(1.0, fm_to_m(1.4))}}) {
    double worst = 0.0;
    for (double s : oracle::log_grid(1e-3, 1e3, 100)) {
      const double s_m = fm_to_m(s).value();
      const double f = force(law, p, Separation::from_gap(Length(s_m), p.contact()), kPaper).value();
      worst = std::max(worst, oracle::relative_error(f, oracle::central_force(law, p, s_m, kPaper)));
    }
    c.expect(worst <= 1e-6, law_name(law) + " worst " + fmt("%.3g", worst));
  }
}

void solver_oracle(Check& c) {
  const double mu = codata::proton_mass / 2;
  const double k = 1.44 * codata::joules_per_mev * meters_per_fm;
  const double hbar = codata::reduced_planck;
  const double e1 = -mu * k * k / (2 * hbar * hbar);
  c.expect(std::abs(e1 / oracle::kCoulombGroundJ - 1.0) < 1e-12, "closed form drifted from frozen oracle");
  const double bohr = hbar * hbar / (mu * k);
  const RadialProblem prob{Mass(mu), RadialPotential::coulomb(k), Length(0.0), Length(50 * bohr), 20000};
  for (int n = 0; n < 3; ++n) {
    const BoundStateResult r = solve_bound_state(prob, n);
    c.expect(r.converged, "state " + std::to_string(n) + " not converged");
    c.expect(r.node_count == n, "state " + std::to_string(n) + " has " + std::to_string(r.node_count) + " nodes");
    if (n == 0) {
      const double rel = std::abs(r.energy.value() / e1 - 1.0);
      c.expect(rel < 1e-3, "ground energy off by " + fmt("%.3g", rel));
    }
  }
}

void binding_verdict(Check& c) {
  const ParticlePair p = ParticlePair::nucleons(kPaper);
  const double depth = codata::gravitational_constant * codata::proton_mass * codata::proton_mass / 1e-35;
  const double via_law =
      -potential_proposed(p, Separation::from_gap(kPaper.planck_length(), p.contact()), kPaper).value();
  c.expect(std::abs(depth / oracle::kWellDepthPaperJ - 1.0) < 1e-12, "well depth " + fmt("%.6g", depth));
  c.expect(std::abs(depth / codata::joules_per_mev / 1.2e-16 - 1.0) < 0.05, "well depth in MeV not ~1.2e-16");
  c.expect(std::abs(via_law / depth - 1.0) < 1e-12, "law disagrees with direct arithmetic");

  const RadialProblem prob{p.reduced_mass(), RadialPotential::from_law(Proposed{}, p, kPaper), kPaper.planck_length(),
                           fm_to_m(20.0), 20000};
  const BoundStateResult r = solve_bound_state(prob, 0);
  const VariationalBounds b = variational_bounds(prob);
  const bool solver_binds = r.converged;
  const bool variational_binds = b.proves_binding();
  const bool variational_conclusive = b.proves_binding() || b.proves_no_binding();
  c.expect(variational_conclusive, "variational bracket inconclusive");
  c.expect(solver_binds == variational_binds, "solver and variational verdicts disagree");
}

void yukawa_fit(Check& c) {
  const ParticlePair pair = ParticlePair::nucleons(kPaper);
  FitProblem synthetic{pair, fm_to_m(0.5), fm_to_m(12.0), 40, Yukawa(0.8, fm_to_m(1.6))};
  const FitResult s = fit_yukawa(synthetic, kPaper);
  c.expect(std::abs(s.g2 / 0.8 - 1.0) < 1e-4, "g2 recovered as " + fmt("%.10g", s.g2));
  c.expect(std::abs(m_to_fm(s.lambda) / 1.6 - 1.0) < 1e-4, "lambda recovered as " + fmt("%.10g", m_to_fm(s.lambda)));

  const FitResult narrow = fit_yukawa({pair, fm_to_m(2.0), fm_to_m(4.0), 40, std::nullopt}, kPaper);
  const FitResult wide = fit_yukawa({pair, fm_to_m(2.0), fm_to_m(10.0), 40, std::nullopt}, kPaper);
  c.expect(wide.lambda > narrow.lambda, "lambda([2,10]) = " + fmt("%.6g", m_to_fm(wide.lambda)) +
                                            " not above lambda([2,4]) = " + fmt("%.6g", m_to_fm(narrow.lambda)));
}

void pion_relation(Check& c) {
  const double e = energy_as_mev(pion_mass_from_range(fm_to_m(1.97327), kPaper));
  c.expect(std::abs(e - 100.0) <= 0.1, "hbar_c / 1.97327 fm = " + fmt("%.8g", e) + " MeV");
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> lam(0.1, 100.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Length l = fm_to_m(lam(rng));
    worst = std::max(worst, std::abs(range_from_pion_mass(pion_mass_from_range(l, kPaper), kPaper) / l - 1.0));
  }
  c.expect(worst <= 1e-12, "roundtrip worst " + fmt("%.3g", worst));
}

void detectable_roundtrip(Check& c) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> log_d(-2.0, 1.0);
  std::uniform_real_distribution<double> log_e(-12.0, 2.0);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Length d = fm_to_m(std::pow(10.0, log_d(rng)));
    const double eps = std::pow(10.0, log_e(rng));
    const double r = strength_ratio(d, detectable_range(d, eps));
    worst = std::max(worst, std::abs(r / (1.0 + eps) - 1.0));
  }
  c.expect(worst <= 1e-10, "worst " + fmt("%.3g", worst));
}

void cli_determinism(Check& c) {
  for (const char* fmt_flag : {"csv", "json", "table"}) {
    const std::string args = std::string("--format ") + fmt_flag + " reproduce-paper";
    const auto a = cli::run(args);
    const auto b = cli::run(args);
    c.expect(a.exit_code == 0 && a.out == b.out && !a.out.empty(), std::string("reproduce-paper ") + fmt_flag);
  }
  const auto sweep = cli::run("sweep --law proposed --s-min-fm 1e-3 --s-max-fm 1e3 -n 100");
  c.expect(sweep.exit_code == 0, "sweep failed");
  std::istringstream is(sweep.out);
  const Table t = read_csv(is);
  std::string rewritten = render(t, OutputFormat::Csv);
  c.expect(rewritten == sweep.out, "CSV did not round-trip losslessly");
  const Table direct = surfgrav::sweep({Proposed{}, 1e-3, 1e3, 100}, RunConfig{});
  c.expect(render(direct, OutputFormat::Csv) == sweep.out, "CLI sweep differs from the library table");

  c.expect(cli::run("sweep --law proposed --s-min-fm 1e-21 --s-max-fm 1").exit_code == 3, "domain error exit code");
  c.expect(cli::run("bind --r-min-fm 5 --r-max-fm 1").exit_code == 2, "configuration error exit code");
  c.expect(cli::run("--mode planck constants").exit_code == 2, "bad mode exit code");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "ratio predictions 1.7778 / 1.5625", 1e-3, ratio_predictions},
      {"AC2", "Planck-gap enhancement ~1e40", 1e-3, planck_enhancement},
      {"AC3", "d_n = 0 reduces to Newton (1e-15)", 1.0, reduction_identity},
      {"AC4", "force / potential consistency (1e-6)", 1.0, force_potential_consistency},
      {"AC5", "Coulomb oracle (0.1%) and node theorem", 10.0, solver_oracle},
      {"AC6", "modified-law well depth and binding verdict", 30.0, binding_verdict},
      {"AC7", "Yukawa self-fit (1e-4) and window monotonicity", 30.0, yukawa_fit},
      {"AC8", "pion relation 100 MeV and roundtrip", 1.0, pion_relation},
      {"AC9", "detectable-range roundtrip (1e-10)", 1.0, detectable_roundtrip},
      {"AC10", "CLI determinism, CSV round-trip, exit codes", 60.0, cli_determinism},
  };

  int failures = 0;
  const auto suite_start = std::chrono::steady_clock::now();
  for (const auto& cr : criteria) {
    Check check;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    check.expect(elapsed <= cr.budget_s, "runtime " + fmt("%.3g", elapsed) + " s over budget");
    if (!check.ok) ++failures;
    std::printf("[%s] %-5s %-48s %9.4f s%s%s\n", check.ok ? "PASS" : "FAIL", cr.id, cr.title, elapsed,
                check.ok ? "" : "  ", check.detail.c_str());
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - suite_start).count();
  std::printf("%zu criteria, %d failed, %.3f s\n", criteria.size(), failures, total);
  return failures == 0 ? 0 : 1;
}
