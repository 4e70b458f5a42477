#ifndef SURFGRAV_REPORT_HPP
#define SURFGRAV_REPORT_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "surfgrav/boundstate.hpp"
#include "surfgrav/forcelaws.hpp"
#include "surfgrav/quantities.hpp"
#include "surfgrav/yukawafit.hpp"

namespace surfgrav {

enum class OutputFormat { Csv, Json, Table };

OutputFormat output_format_from_string(const std::string& token);

/// Options shared by every command.
struct RunConfig {
  PlanckConvention mode = PlanckConvention::Paper;
  double d_n_fm = 1.0;
  /// Mass of each body in kg; empty means "nucleon".
  std::optional<double> mass_kg;
  OutputFormat format = OutputFormat::Csv;
  std::uint64_t seed = 0;

  void validate() const;
  Constants constants() const;
  ParticlePair pair() const;
};

/// Parses the --mass token: "nucleon" or a mass in kilograms.
std::optional<double> parse_mass_token(const std::string& token);

// ---------------------------------------------------------------------------
// Tabular output

using Cell = std::variant<double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  double number(std::size_t row, const std::string& column) const;
  std::size_t column_index(const std::string& column) const;
};

/// Comma separated, '.' decimal, LF line endings, mandatory header, numbers
/// with 17 significant digits so that they parse back exactly.
void write_csv(std::ostream& os, const Table& t);
void write_text(std::ostream& os, const Table& t);
/// Reads one CSV block (up to a blank line or end of input). Cells that parse
/// completely as numbers become doubles.
Table read_csv(std::istream& is);
std::string format_number(double v);

std::string render(const Table& t, OutputFormat f);

// ---------------------------------------------------------------------------
// reproduce-paper

struct PredictionRow {
  double surface_gap_fm;
  double ratio;
  double force_newton_N;
  double force_proposed_N;
};

struct SummaryRecord {
  std::string key;
  double value;
  std::string unit;
  std::string formula;
};

struct PaperReproduction {
  RunConfig config;
  std::vector<PredictionRow> table;
  std::vector<SummaryRecord> summary;

  const SummaryRecord& record(const std::string& key) const;
};

/// Gaps of the prediction table, in fm. The first entry is replaced by the
/// mode's Planck length.
std::vector<double> prediction_gaps_fm();

PaperReproduction reproduce_paper(const RunConfig& config);
std::string render(const PaperReproduction& r, OutputFormat f);

// ---------------------------------------------------------------------------
// sweep / ratio / constants

struct SweepRequest {
  PotentialSpec law = Newtonian{};
  double s_lo_fm = 1.0;
  double s_hi_fm = 10.0;
  int n = 10;
};

/// Log-spaced rows of (s_fm, D_fm, force_N, potential_J, ratio), where ratio
/// is the law's force over the Newtonian force at the same geometry.
Table sweep(const SweepRequest& request, const RunConfig& config);

Table ratio_table(const std::vector<double>& gaps_fm, const RunConfig& config);

Table constants_table(const RunConfig& config);

// ---------------------------------------------------------------------------
// bind

struct BindRequest {
  std::string preset = "coulomb";  // coulomb | proposed | yukawa | newton
  double coulomb_strength_mev_fm = 1.44;
  double g2 = 1.0;
  double lambda_fm = 1.4;
  std::optional<double> r_min_fm;
  std::optional<double> r_max_fm;
  int n_points = 20000;
  int state = 0;
  int stride = 1;
};

struct BindOutcome {
  BindRequest request;
  RadialProblem problem;
  BoundStateResult result;
  VariationalBounds bounds;
  /// Closed-form energy for the Coulomb preset.
  std::optional<Energy> reference_energy;
};

/// Builds the radial problem for a preset without solving it.
RadialProblem bind_problem(const BindRequest& request, const RunConfig& config);
BindOutcome bind(const BindRequest& request, const RunConfig& config);
/// csv: wavefunction samples (r_fm, u); json/table: summary fields.
std::string render(const BindOutcome& b, OutputFormat f);

// ---------------------------------------------------------------------------
// fit

struct FitRequest {
  double s_lo_fm = 2.0;
  double s_hi_fm = 10.0;
  int n_samples = 40;
  std::string target = "proposed";  // proposed | yukawa
  double g2 = 1.0;
  double lambda_fm = 1.4;
};

struct FitOutcome {
  FitRequest request;
  std::uint64_t seed = 0;
  FitResult result;
};

FitProblem fit_problem(const FitRequest& request, const RunConfig& config);
FitOutcome fit(const FitRequest& request, const RunConfig& config);
std::string render(const FitOutcome& f, OutputFormat format);

// ---------------------------------------------------------------------------

/// Relative output paths are placed under $SURFGRAV_OUTPUT_DIR when it is set.
std::filesystem::path resolve_output_path(const std::string& out);

}  // namespace surfgrav

#endif  // SURFGRAV_REPORT_HPP
