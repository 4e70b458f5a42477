#include <doctest.h>

#include <cmath>
#include <cstring>
#include <json.hpp>
#include <sstream>

#include "oracles.hpp"
#include "surfgrav/errors.hpp"
#include "surfgrav/report.hpp"

using namespace surfgrav;

namespace {

RunConfig paper_config() { return RunConfig{}; }

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_CASE("reproduce_paper headline numbers") {
  const PaperReproduction r = reproduce_paper(paper_config());
  CHECK(r.record("ratio_at_3fm").value == doctest::Approx(1.7778).epsilon(1e-4 / 1.7778));
  CHECK(r.record("ratio_at_4fm").value == 1.5625);
  CHECK(r.record("ratio_at_planck_gap").value == doctest::Approx(1e40).epsilon(1e-10));
  CHECK(r.record("pion_energy_for_range_1fm").value == doctest::Approx(oracle::kHbarCMeVFm).epsilon(1e-12));
  CHECK(r.record("range_for_pion_energy_100MeV").value == doctest::Approx(1.9732698).epsilon(1e-7));
  CHECK(r.record("well_depth_at_cutoff").value == doctest::Approx(oracle::kWellDepthPaperJ).epsilon(1e-12));
  CHECK(r.record("well_depth_at_cutoff_mev").value == doctest::Approx(oracle::kWellDepthPaperMeV).epsilon(1e-12));

  REQUIRE(r.table.size() == prediction_gaps_fm().size());
  CHECK(r.table.front().surface_gap_fm == doctest::Approx(1e-20));
  for (std::size_t i = 1; i < r.table.size(); ++i) {
    CHECK(r.table[i].ratio < r.table[i - 1].ratio);
    CHECK(r.table[i].ratio >= 1.0);
    CHECK(r.table[i].force_proposed_N / r.table[i].force_newton_N ==
          doctest::Approx(r.table[i].ratio).epsilon(1e-12));
  }
}

TEST_CASE("reproduce_paper in codata mode starts at the CODATA Planck length") {
  RunConfig c;
  c.mode = PlanckConvention::Codata;
  const PaperReproduction r = reproduce_paper(c);
  CHECK(r.table.front().surface_gap_fm == doctest::Approx(1.616255e-20));
  CHECK(r.record("ratio_at_planck_gap").value < 1e40);
}

TEST_CASE("rendered output is deterministic") {
  for (const auto f : {OutputFormat::Csv, OutputFormat::Json, OutputFormat::Table}) {
    CHECK(render(reproduce_paper(paper_config()), f) == render(reproduce_paper(paper_config()), f));
  }
}

TEST_CASE("CSV format") {
  const std::string csv = render(reproduce_paper(paper_config()), OutputFormat::Csv);
  CHECK(csv.find('\r') == std::string::npos);
  CHECK(csv.rfind("s_fm,ratio,force_newton_N,force_proposed_N,formula\n", 0) == 0);
  CHECK(csv.find("\nkey,value,unit,formula\n") != std::string::npos);
  CHECK(csv.back() == '\n');
  std::istringstream is(csv);
  const Table pred = read_csv(is);
  const Table summ = read_csv(is);
  CHECK(pred.rows.size() == prediction_gaps_fm().size());
  CHECK(summ.columns.front() == "key");
  CHECK(pred.number(4, "ratio") == reproduce_paper(paper_config()).table[4].ratio);
}

TEST_CASE("sweep CSV round-trips exactly") {
  SweepRequest req{Proposed{}, 1e-3, 1e3, 57};
  const Table t = sweep(req, paper_config());
  std::istringstream is(render(t, OutputFormat::Csv));
  const Table back = read_csv(is);
  REQUIRE(back.columns == t.columns);
  REQUIRE(back.rows.size() == t.rows.size());
  for (std::size_t i = 0; i < t.rows.size(); ++i)
    for (std::size_t j = 0; j < t.columns.size(); ++j)
      CHECK(same_bits(std::get<double>(back.rows[i][j]), std::get<double>(t.rows[i][j])));
}

TEST_CASE("sweep tables") {
  SUBCASE("Newtonian force decreases") {
    const Table t = sweep({Newtonian{}, 1.0, 10.0, 10}, paper_config());
    REQUIRE(t.rows.size() == 10);
    CHECK(t.columns == std::vector<std::string>{"s_fm", "D_fm", "force_N", "potential_J", "ratio"});
    for (std::size_t i = 1; i < t.rows.size(); ++i) CHECK(t.number(i, "force_N") < t.number(i - 1, "force_N"));
    CHECK(t.number(0, "s_fm") == 1.0);
    CHECK(t.number(9, "s_fm") == 10.0);
  }
  SUBCASE("modified vs Newtonian ratio column") {
    const Table n = sweep({Newtonian{}, 0.01, 100.0, 40}, paper_config());
    const Table p = sweep({Proposed{}, 0.01, 100.0, 40}, paper_config());
    for (std::size_t i = 0; i < n.rows.size(); ++i) {
      const double quotient = p.number(i, "force_N") / n.number(i, "force_N");
      CHECK(std::abs(quotient / p.number(i, "ratio") - 1.0) < 1e-12);
      CHECK(p.number(i, "ratio") == strength_ratio(fm_to_m(1.0), fm_to_m(p.number(i, "s_fm"))));
    }
  }
  SUBCASE("below the Planck length") {
    CHECK_THROWS_AS(sweep({Proposed{}, 1e-21, 1.0, 10}, paper_config()), PlanckBoundError);
    const Table clamped = sweep({Proposed{CutoffPolicy::ClampToPlanck}, 1e-21, 1.0, 10}, paper_config());
    CHECK(clamped.number(0, "ratio") == doctest::Approx(1e40).epsilon(1e-10));
  }
  SUBCASE("bad windows") {
    CHECK_THROWS_AS(sweep({Newtonian{}, 5.0, 1.0, 10}, paper_config()), ConfigError);
    CHECK_THROWS_AS(sweep({Newtonian{}, 1.0, 5.0, 1}, paper_config()), ConfigError);
    CHECK_THROWS_AS(sweep({Newtonian{}, 0.0, 5.0, 10}, paper_config()), ConfigError);
  }
}

TEST_CASE("ratio and constants tables") {
  const Table r = ratio_table({3.0, 4.0}, paper_config());
  CHECK(r.number(1, "ratio") == 1.5625);
  CHECK_THROWS_AS(ratio_table({0.0}, paper_config()), DomainError);
  const Table c = constants_table(paper_config());
  CHECK(c.columns == std::vector<std::string>{"key", "value", "unit", "source"});
  const auto j = nlohmann::json::parse(render(c, OutputFormat::Json));
  CHECK(j.size() == c.rows.size());
  CHECK(j[0]["key"] == "G");
}

TEST_CASE("bind presets") {
  SUBCASE("Coulomb matches the closed form") {
    const BindOutcome b = bind(BindRequest{}, paper_config());
    REQUIRE(b.reference_energy);
    CHECK(b.result.converged);
    CHECK(std::abs(b.result.energy / *b.reference_energy - 1.0) < 1e-3);
    CHECK(m_to_fm(b.problem.r_max) == doctest::Approx(50.0 * oracle::kCoulombBohrFm).epsilon(1e-9));
    const auto j = nlohmann::json::parse(render(b, OutputFormat::Json));
    CHECK(j["converged"] == true);
    CHECK(j["node_count"] == 0);
  }
  SUBCASE("modified law does not bind a nucleon pair") {
    BindRequest req;
    req.preset = "proposed";
    const BindOutcome b = bind(req, paper_config());
    CHECK_FALSE(b.result.converged);
    CHECK(b.bounds.proves_no_binding());
    CHECK(m_to_fm(b.problem.r_min) == doctest::Approx(1e-20));
  }
  SUBCASE("wavefunction CSV") {
    BindRequest req;
    req.stride = 10;
    const std::string csv = render(bind(req, paper_config()), OutputFormat::Csv);
    std::istringstream is(csv);
    const Table t = read_csv(is);
    CHECK(t.columns == std::vector<std::string>{"r_fm", "u"});
    CHECK(t.rows.size() == 2000);
    double integral = 0.0;
    for (std::size_t i = 1; i < t.rows.size(); ++i) {
      const double a = t.number(i - 1, "u");
      const double b = t.number(i, "u");
      integral += 0.5 * (a * a + b * b) * (t.number(i, "r_fm") - t.number(i - 1, "r_fm"));
    }
    CHECK(integral == doctest::Approx(1.0).epsilon(1e-3));
  }
  SUBCASE("malformed grid") {
    BindRequest req;
    req.r_min_fm = 10.0;
    req.r_max_fm = 5.0;
    CHECK_THROWS_AS(bind(req, paper_config()), ConfigError);
    req = BindRequest{};
    req.preset = "square";
    CHECK_THROWS_AS(bind(req, paper_config()), ConfigError);
  }
}

TEST_CASE("fit serialization") {
  RunConfig c;
  c.seed = 42;
  const FitOutcome f = fit(FitRequest{}, c);
  const auto j = nlohmann::json::parse(render(f, OutputFormat::Json));
  for (const char* key :
       {"g2", "lambda_fm", "rms_relative_residual", "iterations", "converged", "window_fm", "n_samples", "seed"})
    CHECK(j.contains(key));
  CHECK(j["seed"] == 42);
  CHECK(j["window_fm"][1] == 10.0);
  CHECK(j["lambda_fm"].get<double>() == m_to_fm(f.result.lambda));

  FitRequest zero;
  zero.target = "yukawa";
  zero.g2 = 0.0;
  const FitOutcome z = fit(zero, c);
  CHECK(z.result.g2 == 0.0);
  CHECK(z.result.rms_relative_residual == 0.0);

  FitRequest bad;
  bad.target = "gluon";
  CHECK_THROWS_AS(fit(bad, c), ConfigError);
}

TEST_CASE("run configuration") {
  CHECK_FALSE(parse_mass_token("nucleon").has_value());
  CHECK(*parse_mass_token("2.5e-27") == 2.5e-27);
  CHECK_THROWS_AS(parse_mass_token("-1"), ConfigError);
  CHECK_THROWS_AS(parse_mass_token("heavy"), ConfigError);
  CHECK_THROWS_AS(output_format_from_string("xml"), ConfigError);
  RunConfig c;
  c.d_n_fm = -1.0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
}

TEST_CASE("output directory from the environment") {
  CHECK(resolve_output_path("/tmp/a.csv") == std::filesystem::path("/tmp/a.csv"));
  ::setenv("SURFGRAV_OUTPUT_DIR", "/tmp/surfgrav-out", 1);
  CHECK(resolve_output_path("a.csv") == std::filesystem::path("/tmp/surfgrav-out/a.csv"));
  ::unsetenv("SURFGRAV_OUTPUT_DIR");
  CHECK(resolve_output_path("a.csv") == std::filesystem::path("a.csv"));
}
