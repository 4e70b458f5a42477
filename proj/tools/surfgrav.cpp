// surfgrav: command-line front end for the surface-origin gravity laboratory.
//
// Exit codes: 0 success, 2 configuration error, 3 domain error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "surfgrav/errors.hpp"
#include "surfgrav/report.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitDomain = 3;

struct GlobalFlags {
  std::string mode = "paper";
  double dn_fm = 1.0;
  std::string mass = "nucleon";
  std::string format = "csv";
  std::string out;
  std::uint64_t seed = 0;
};

surfgrav::RunConfig to_config(const GlobalFlags& g) {
  surfgrav::RunConfig c;
  c.mode = surfgrav::planck_convention_from_string(g.mode);
  c.d_n_fm = g.dn_fm;
  c.mass_kg = surfgrav::parse_mass_token(g.mass);
  c.format = surfgrav::output_format_from_string(g.format);
  c.seed = g.seed;
  c.validate();
  return c;
}

surfgrav::PotentialSpec law_from_flags(const std::string& law, const std::string& cutoff, double g2,
                                       double lambda_fm) {
  if (law == "newton") return surfgrav::Newtonian{};
  if (law == "proposed") {
    if (cutoff == "error") return surfgrav::Proposed{surfgrav::CutoffPolicy::Error};
    if (cutoff == "clamp") return surfgrav::Proposed{surfgrav::CutoffPolicy::ClampToPlanck};
    throw surfgrav::ConfigError("unknown cutoff policy '" + cutoff + "' (expected error|clamp)");
  }
  if (law == "yukawa") {
    if (!(lambda_fm > 0.0) || !(g2 >= 0.0)) throw surfgrav::ConfigError("yukawa requires g2 >= 0 and lambda > 0");
    return surfgrav::Yukawa(g2, surfgrav::fm_to_m(lambda_fm));
  }
  throw surfgrav::ConfigError("unknown law '" + law + "' (expected newton|proposed|yukawa)");
}

void emit(const GlobalFlags& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text << std::flush;
    return;
  }
  const auto path = surfgrav::resolve_output_path(g.out);
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw surfgrav::ConfigError("cannot open output file " + path.string());
  os << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Newtonian, surface-origin and Yukawa force laws: tables, sweeps, bound states and fits"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "Read options from a 'key = value' file; flags override it");

  GlobalFlags g;
  app.add_option("--mode", g.mode, "Planck length convention: paper (1e-35 m) or codata")
      ->check(CLI::IsMember({"paper", "codata"}));
  app.add_option("--dn-fm", g.dn_fm, "Effective contact distance d_n in fm");
  app.add_option("--mass", g.mass, "Mass of each body: 'nucleon' or kilograms");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json", "table"}));
  app.add_option("--out", g.out, "Output file (relative paths go under $SURFGRAV_OUTPUT_DIR)");
  app.add_option("--seed", g.seed, "Seed for the multi-start fit grid");

  auto* reproduce = app.add_subcommand("reproduce-paper", "Ratio predictions, pion relation and well depth");

  auto* sweep_cmd = app.add_subcommand("sweep", "Log-spaced table of one force law");
  std::string law = "newton";
  std::string cutoff = "error";
  double sweep_g2 = 1.0;
  double sweep_lambda = 1.4;
  surfgrav::SweepRequest sweep_req;
  sweep_cmd->add_option("--law", law, "newton | proposed | yukawa");
  sweep_cmd->add_option("--cutoff", cutoff, "Planck cutoff policy for the proposed law: error | clamp");
  sweep_cmd->add_option("--s-min-fm", sweep_req.s_lo_fm, "Smallest surface gap (fm)");
  sweep_cmd->add_option("--s-max-fm", sweep_req.s_hi_fm, "Largest surface gap (fm)");
  sweep_cmd->add_option("-n,--points", sweep_req.n, "Number of rows");
  sweep_cmd->add_option("--g2", sweep_g2, "Yukawa coupling");
  sweep_cmd->add_option("--lambda-fm", sweep_lambda, "Yukawa range (fm)");

  auto* ratio_cmd = app.add_subcommand("ratio", "Strength ratio ((s+d_n)/s)^2 at given gaps");
  std::vector<double> ratio_gaps;
  ratio_cmd->add_option("--s-fm", ratio_gaps, "Surface gaps (fm)")->required();

  auto* bind_cmd = app.add_subcommand("bind", "s-wave bound state search");
  surfgrav::BindRequest bind_req;
  double r_min = -1.0;
  double r_max = -1.0;
  bind_cmd->add_option("--preset", bind_req.preset, "coulomb | proposed | yukawa | newton");
  bind_cmd->add_option("--k-mev-fm", bind_req.coulomb_strength_mev_fm, "Coulomb strength K (MeV fm)");
  bind_cmd->add_option("--g2", bind_req.g2, "Yukawa coupling");
  bind_cmd->add_option("--lambda-fm", bind_req.lambda_fm, "Yukawa range (fm)");
  auto* r_min_opt = bind_cmd->add_option("--r-min-fm", r_min, "Inner wall (solver coordinate, fm)");
  auto* r_max_opt = bind_cmd->add_option("--r-max-fm", r_max, "Outer wall (solver coordinate, fm)");
  bind_cmd->add_option("--n-points", bind_req.n_points, "Uniform grid points");
  bind_cmd->add_option("--state", bind_req.state, "State index (number of nodes)");
  bind_cmd->add_option("--stride", bind_req.stride, "Keep every k-th wavefunction sample in CSV output");

  auto* fit_cmd = app.add_subcommand("fit", "Fit a Yukawa force to a target force over a gap window");
  surfgrav::FitRequest fit_req;
  fit_cmd->add_option("--s-lo-fm", fit_req.s_lo_fm, "Window start (surface gap, fm)");
  fit_cmd->add_option("--s-hi-fm", fit_req.s_hi_fm, "Window end (surface gap, fm)");
  fit_cmd->add_option("--samples", fit_req.n_samples, "Log-spaced samples");
  fit_cmd->add_option("--target", fit_req.target, "proposed | yukawa (synthetic)");
  fit_cmd->add_option("--g2", fit_req.g2, "Synthetic target coupling");
  fit_cmd->add_option("--lambda-fm", fit_req.lambda_fm, "Synthetic target range (fm)");

  auto* constants_cmd = app.add_subcommand("constants", "Dump the constants table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitConfig;
  }

  try {
    const surfgrav::RunConfig config = to_config(g);
    std::string text;
    if (reproduce->parsed()) {
      text = surfgrav::render(surfgrav::reproduce_paper(config), config.format);
    } else if (sweep_cmd->parsed()) {
      sweep_req.law = law_from_flags(law, cutoff, sweep_g2, sweep_lambda);
      text = surfgrav::render(surfgrav::sweep(sweep_req, config), config.format);
    } else if (ratio_cmd->parsed()) {
      text = surfgrav::render(surfgrav::ratio_table(ratio_gaps, config), config.format);
    } else if (bind_cmd->parsed()) {
      if (r_min_opt->count() > 0) bind_req.r_min_fm = r_min;
      if (r_max_opt->count() > 0) bind_req.r_max_fm = r_max;
      text = surfgrav::render(surfgrav::bind(bind_req, config), config.format);
    } else if (fit_cmd->parsed()) {
      text = surfgrav::render(surfgrav::fit(fit_req, config), config.format);
    } else if (constants_cmd->parsed()) {
      text = surfgrav::render(surfgrav::constants_table(config), config.format);
    }
    emit(g, text);
  } catch (const surfgrav::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const surfgrav::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
