#include "surfgrav/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "surfgrav/errors.hpp"

namespace surfgrav {

using nlohmann::ordered_json;

OutputFormat output_format_from_string(const std::string& token) {
  if (token == "csv") return OutputFormat::Csv;
  if (token == "json") return OutputFormat::Json;
  if (token == "table") return OutputFormat::Table;
  throw ConfigError("unknown format '" + token + "' (expected csv|json|table)");
}

std::optional<double> parse_mass_token(const std::string& token) {
  if (token == "nucleon") return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  if (token.empty() || end != token.c_str() + token.size() || !std::isfinite(v) || !(v > 0.0))
    throw ConfigError("mass must be 'nucleon' or a positive number of kilograms, got '" + token + "'");
  return v;
}

void RunConfig::validate() const {
  if (!std::isfinite(d_n_fm) || d_n_fm < 0.0) throw ConfigError("d_n must be a non-negative length in fm");
  if (mass_kg && (!std::isfinite(*mass_kg) || !(*mass_kg > 0.0))) throw ConfigError("mass must be positive");
}

Constants RunConfig::constants() const {
  validate();
  return Constants::for_convention(mode);
}

ParticlePair RunConfig::pair() const {
  const Constants c = constants();
  const Length contact = fm_to_m(d_n_fm);
  if (!mass_kg) return ParticlePair::nucleons(c, contact);
  return {Mass(*mass_kg), Mass(*mass_kg), contact};
}

// ---------------------------------------------------------------------------

std::size_t Table::column_index(const std::string& column) const {
  const auto it = std::find(columns.begin(), columns.end(), column);
  if (it == columns.end()) throw ConfigError("no column named '" + column + "'");
  return static_cast<std::size_t>(it - columns.begin());
}

double Table::number(std::size_t row, const std::string& column) const {
  return std::get<double>(rows.at(row).at(column_index(column)));
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string cell_text(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
  return std::get<std::string>(c);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(std::move(cur));
  return out;
}

Cell parse_cell(const std::string& s) {
  if (s.empty()) return s;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() + s.size()) return v;
  return s;
}

ordered_json cell_json(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return *d;
  return std::get<std::string>(c);
}

ordered_json table_json(const Table& t) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : t.rows) {
    ordered_json obj = ordered_json::object();
    for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = cell_json(row[i]);
    rows.push_back(std::move(obj));
  }
  return rows;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

// Single-row key/value table for the table renderer.
Table key_values(const ordered_json& obj) {
  Table t{{"key", "value"}, {}};
  for (const auto& [k, v] : obj.items()) {
    if (v.is_number()) {
      t.rows.push_back({k, v.get<double>()});
    } else if (v.is_string()) {
      t.rows.push_back({k, v.get<std::string>()});
    } else {
      t.rows.push_back({k, v.dump()});
    }
  }
  return t;
}

}  // namespace

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << csv_field(t.columns[i]);
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(cell_text(row[i]));
    os << '\n';
  }
}

void write_text(std::ostream& os, const Table& t) {
  std::vector<std::size_t> width(t.columns.size());
  std::vector<std::vector<std::string>> text;
  for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
  for (const auto& row : t.rows) {
    std::vector<std::string> line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::string s;
      if (const auto* d = std::get_if<double>(&row[i])) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.10g", *d);
        s = buf;
      } else {
        s = std::get<std::string>(row[i]);
      }
      width[i] = std::max(width[i], s.size());
      line.push_back(std::move(s));
    }
    text.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      os << (i ? "  " : "") << cells[i];
      if (i + 1 < cells.size()) os << std::string(width[i] - cells[i].size(), ' ');
    }
    os << '\n';
  };
  emit(t.columns);
  for (const auto& line : text) emit(line);
}

Table read_csv(std::istream& is) {
  Table t;
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      if (t.columns.empty()) continue;
      break;
    }
    if (t.columns.empty()) {
      t.columns = split_csv_line(line);
      continue;
    }
    std::vector<Cell> row;
    for (const auto& field : split_csv_line(line)) row.push_back(parse_cell(field));
    if (row.size() != t.columns.size()) throw ConfigError("CSV row width does not match header");
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string render(const Table& t, OutputFormat f) {
  std::ostringstream os;
  switch (f) {
    case OutputFormat::Csv:
      write_csv(os, t);
      break;
    case OutputFormat::Table:
      write_text(os, t);
      break;
    case OutputFormat::Json:
      os << dump(table_json(t));
      break;
  }
  return os.str();
}

// ---------------------------------------------------------------------------

const SummaryRecord& PaperReproduction::record(const std::string& key) const {
  for (const auto& r : summary)
    if (r.key == key) return r;
  throw ConfigError("no summary record '" + key + "'");
}

std::vector<double> prediction_gaps_fm() { return {1e-20, 0.5, 1.0, 2.0, 3.0, 4.0, 5.0, 10.0, 100.0, 1000.0}; }

PaperReproduction reproduce_paper(const RunConfig& config) {
  const Constants c = config.constants();
  const ParticlePair pair = config.pair();
  const Length contact = pair.contact();

  PaperReproduction out;
  out.config = config;
  std::vector<double> gaps = prediction_gaps_fm();
  gaps.front() = m_to_fm(c.planck_length());
  for (const double s_fm : gaps) {
    const Separation sep = Separation::from_gap(fm_to_m(s_fm), contact);
    out.table.push_back({s_fm, strength_ratio(contact, sep.gap()), force_newton(pair, sep, c).value(), force_proposed(pair, sep, c).value()});
  }

  const Length planck = c.planck_length();
  const Separation at_cutoff = Separation::from_gap(planck, contact);
  const Energy depth = -potential_proposed(pair, at_cutoff, c);
  const Energy pion_1fm = pion_mass_from_range(fm_to_m(1.0), c);
  const Length range_100 = range_from_pion_mass(mev(100.0), c);
  const std::string ratio_formula = "((s+d_n)/s)^2";

  auto ratio_at = [&](double s_fm) { return strength_ratio(contact, fm_to_m(s_fm)); };
  out.summary = {
      {"planck_length", planck.value(), "m", to_string(c.convention()) + " convention"},
      {"d_n", config.d_n_fm, "fm", "effective contact distance"},
      {"ratio_at_planck_gap", strength_ratio(contact, planck), "1", ratio_formula},
      {"ratio_at_3fm", ratio_at(3.0), "1", ratio_formula},
      {"ratio_at_4fm", ratio_at(4.0), "1", ratio_formula},
      {"pion_energy_for_range_1fm", energy_as_mev(pion_1fm), "MeV", "hbar_c/lambda"},
      {"range_for_pion_energy_100MeV", m_to_fm(range_100), "fm", "hbar_c/(m c^2)"},
      {"well_depth_at_cutoff", depth.value(), "J", "G*m1*m2/l_P"},
      {"well_depth_at_cutoff_mev", energy_as_mev(depth), "MeV", "G*m1*m2/l_P"},
      {"detectable_gap_at_1pct", m_to_fm(detectable_range(contact.value() > 0.0 ? contact : fm_to_m(1.0), 0.01)),
       "fm", "d_n/(sqrt(1+eps)-1), eps=0.01"},
  };
  return out;
}

namespace {

Table prediction_table(const PaperReproduction& r) {
  Table t{{"s_fm", "ratio", "force_newton_N", "force_proposed_N", "formula"}, {}};
  for (const auto& row : r.table)
    t.rows.push_back({row.surface_gap_fm, row.ratio, row.force_newton_N, row.force_proposed_N,
                      std::string("ratio=((s+d_n)/s)^2; F=G*m1*m2/D^2; F_P=G*m1*m2/s^2")});
  return t;
}

Table summary_table(const PaperReproduction& r) {
  Table t{{"key", "value", "unit", "formula"}, {}};
  for (const auto& s : r.summary) t.rows.push_back({s.key, s.value, s.unit, s.formula});
  return t;
}

}  // namespace

std::string render(const PaperReproduction& r, OutputFormat f) {
  const Table pred = prediction_table(r);
  const Table summ = summary_table(r);
  std::ostringstream os;
  switch (f) {
    case OutputFormat::Csv:
      write_csv(os, pred);
      os << '\n';
      write_csv(os, summ);
      break;
    case OutputFormat::Table:
      write_text(os, pred);
      os << '\n';
      write_text(os, summ);
      break;
    case OutputFormat::Json: {
      ordered_json j;
      j["mode"] = to_string(r.config.mode);
      j["d_n_fm"] = r.config.d_n_fm;
      j["prediction"] = table_json(pred);
      j["summary"] = table_json(summ);
      os << dump(j);
      break;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------

namespace {

std::vector<double> log_spaced(double lo, double hi, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = std::exp(a + (b - a) * i / (n - 1));
  out.front() = lo;
  out.back() = hi;
  return out;
}

}  // namespace

Table sweep(const SweepRequest& request, const RunConfig& config) {
  if (!std::isfinite(request.s_lo_fm) || !std::isfinite(request.s_hi_fm) || !(request.s_lo_fm > 0.0) ||
      !(request.s_lo_fm < request.s_hi_fm))
    throw ConfigError("sweep window requires 0 < s_min < s_max");
  if (request.n < 2) throw ConfigError("sweep requires at least 2 points");
  const Constants c = config.constants();
  const ParticlePair pair = config.pair();

  Table t{{"s_fm", "D_fm", "force_N", "potential_J", "ratio"}, {}};
  for (const double s_fm : log_spaced(request.s_lo_fm, request.s_hi_fm, request.n)) {
    const Separation sep = Separation::from_gap(fm_to_m(s_fm), pair.contact());
    const Force f = force(request.law, pair, sep, c);
    const Energy u = potential(request.law, pair, sep, c);
    double ratio = 1.0;
    if (std::holds_alternative<Proposed>(request.law)) {
      const auto& p = std::get<Proposed>(request.law);
      const Length s = p.cutoff == CutoffPolicy::ClampToPlanck ? std::max(sep.gap(), c.planck_length()) : sep.gap();
      ratio = strength_ratio(pair.contact(), s);
    } else if (std::holds_alternative<Yukawa>(request.law)) {
      ratio = f / force_newton(pair, sep, c);
    }
    t.rows.push_back({s_fm, m_to_fm(sep.center_distance()), f.value(), u.value(), ratio});
  }
  return t;
}

Table ratio_table(const std::vector<double>& gaps_fm, const RunConfig& config) {
  config.validate();
  if (gaps_fm.empty()) throw ConfigError("no surface gaps given");
  const Length contact = fm_to_m(config.d_n_fm);
  Table t{{"s_fm", "d_n_fm", "ratio"}, {}};
  for (const double s : gaps_fm) {
    if (!std::isfinite(s)) throw ConfigError("surface gap must be finite");
    t.rows.push_back({s, config.d_n_fm, strength_ratio(contact, Length(s / fm_per_meter))});
  }
  return t;
}

Table constants_table(const RunConfig& config) {
  const Constants c = config.constants();
  Table t{{"key", "value", "unit", "source"}, {}};
  for (const auto& r : c.records()) t.rows.push_back({r.key, r.value, r.unit, r.source});
  return t;
}

// ---------------------------------------------------------------------------

RadialProblem bind_problem(const BindRequest& request, const RunConfig& config) {
  const Constants c = config.constants();
  const ParticlePair pair = config.pair();
  if (request.n_points < 1000) throw ConfigError("grid requires at least 1000 points");
  if (request.state < 0) throw ConfigError("state index must be non-negative");

  RadialProblem p{pair.reduced_mass(), {}, Length(0.0), Length(0.0), request.n_points};
  double default_min = 0.0;
  double default_max = 20.0;
  if (request.preset == "coulomb") {
    const double k = request.coulomb_strength_mev_fm * codata::joules_per_mev * meters_per_fm;
    p.potential = RadialPotential::coulomb(k);
    if (k > 0.0) {
      const double hbar = codata::reduced_planck;
      const double bohr = hbar * hbar / (p.reduced_mass.value() * k);
      default_max = 50.0 * m_to_fm(Length(bohr));
    }
  } else if (request.preset == "proposed") {
    p.potential = RadialPotential::from_law(Proposed{}, pair, c);
    default_min = m_to_fm(c.planck_length());
  } else if (request.preset == "yukawa") {
    p.potential = RadialPotential::from_law(Yukawa(request.g2, fm_to_m(request.lambda_fm)), pair, c);
    default_max = 30.0;
  } else if (request.preset == "newton") {
    p.potential = RadialPotential::from_law(Newtonian{}, pair, c);
  } else {
    throw ConfigError("unknown preset '" + request.preset + "' (expected coulomb|proposed|yukawa|newton)");
  }
  const double r_min = request.r_min_fm.value_or(default_min);
  const double r_max = request.r_max_fm.value_or(default_max);
  if (!std::isfinite(r_min) || !std::isfinite(r_max) || r_min < 0.0)
    throw ConfigError("grid bounds must be finite and non-negative");
  p.r_min = Length(r_min / fm_per_meter);
  p.r_max = Length(r_max / fm_per_meter);
  if (request.preset == "proposed" && !request.r_min_fm) p.r_min = c.planck_length();
  p.validate();
  return p;
}

BindOutcome bind(const BindRequest& request, const RunConfig& config) {
  if (request.stride < 1) throw ConfigError("stride must be at least 1");
  BindOutcome out{request, bind_problem(request, config), {}, {}, std::nullopt};
  out.result = solve_bound_state(out.problem, request.state);
  out.bounds = variational_bounds(out.problem);
  if (request.preset == "coulomb") {
    const double k = request.coulomb_strength_mev_fm * codata::joules_per_mev * meters_per_fm;
    const double hbar = codata::reduced_planck;
    const double n = request.state + 1.0;
    out.reference_energy = Energy(-out.problem.reduced_mass.value() * k * k / (2.0 * hbar * hbar) / (n * n));
  }
  return out;
}

std::string render(const BindOutcome& b, OutputFormat f) {
  if (f == OutputFormat::Csv) {
    // u is renormalized to fm^-1/2 so that it integrates to one over r_fm.
    Table t{{"r_fm", "u"}, {}};
    const double to_fm = std::sqrt(meters_per_fm);
    const auto& w = b.result.wavefunction;
    const auto stride = static_cast<std::size_t>(b.request.stride);
    for (std::size_t i = 0; i < w.size(); i += stride) t.rows.push_back({m_to_fm(w[i].r), w[i].u * to_fm});
    return render(t, f);
  }
  ordered_json j;
  j["preset"] = b.request.preset;
  j["potential"] = b.problem.potential.label;
  j["state"] = b.result.state_index;
  j["converged"] = b.result.converged;
  j["energy_J"] = b.result.energy.value();
  j["energy_MeV"] = energy_as_mev(b.result.energy);
  j["node_count"] = b.result.node_count;
  j["bracket_width_J"] = b.result.bracket_width.value();
  j["well_depth_J"] = b.result.well_depth.value();
  j["variational_upper_J"] = b.bounds.upper.value();
  j["variational_lower_J"] = b.bounds.lower.value();
  if (b.reference_energy) j["reference_energy_J"] = b.reference_energy->value();
  j["reduced_mass_kg"] = b.problem.reduced_mass.value();
  j["r_min_fm"] = m_to_fm(b.problem.r_min);
  j["r_max_fm"] = m_to_fm(b.problem.r_max);
  j["coordinate_offset_fm"] = m_to_fm(b.problem.potential.offset);
  j["n_points"] = b.problem.n_points;
  j["boundary"] = b.result.boundary;
  if (f == OutputFormat::Json) return dump(j);
  return render(key_values(j), OutputFormat::Table);
}

// ---------------------------------------------------------------------------

FitProblem fit_problem(const FitRequest& request, const RunConfig& config) {
  const ParticlePair pair = config.pair();
  if (!std::isfinite(request.s_lo_fm) || !std::isfinite(request.s_hi_fm) || request.s_lo_fm < 0.0)
    throw ConfigError("fit window must be finite and non-negative");
  FitProblem p{pair, Length(request.s_lo_fm / fm_per_meter), Length(request.s_hi_fm / fm_per_meter), 40, std::nullopt};
  p.n_samples = request.n_samples;
  p.seed = config.seed;
  if (request.target == "yukawa") {
    if (!(request.lambda_fm > 0.0)) throw ConfigError("target lambda must be positive");
    if (!(request.g2 >= 0.0)) throw ConfigError("target g2 must be non-negative");
    p.synthetic_target = Yukawa(request.g2, fm_to_m(request.lambda_fm));
  } else if (request.target != "proposed") {
    throw ConfigError("unknown fit target '" + request.target + "' (expected proposed|yukawa)");
  }
  return p;
}

FitOutcome fit(const FitRequest& request, const RunConfig& config) {
  const FitProblem p = fit_problem(request, config);
  return {request, config.seed, fit_yukawa(p, config.constants())};
}

std::string render(const FitOutcome& f, OutputFormat format) {
  const FitResult& r = f.result;
  if (format == OutputFormat::Json) {
    ordered_json j;
    j["g2"] = r.g2;
    j["lambda_fm"] = m_to_fm(r.lambda);
    j["rms_relative_residual"] = r.rms_relative_residual;
    j["iterations"] = r.iterations;
    j["converged"] = r.converged;
    j["window_fm"] = {f.request.s_lo_fm, f.request.s_hi_fm};
    j["n_samples"] = f.request.n_samples;
    j["seed"] = f.seed;
    j["target"] = f.request.target;
    return dump(j);
  }
  Table t{{"g2", "lambda_fm", "rms_relative_residual", "iterations", "converged", "window_lo_fm", "window_hi_fm",
           "n_samples", "seed", "target"},
          {{r.g2, m_to_fm(r.lambda), r.rms_relative_residual, static_cast<double>(r.iterations),
            std::string(r.converged ? "true" : "false"), f.request.s_lo_fm, f.request.s_hi_fm,
            static_cast<double>(f.request.n_samples), std::to_string(f.seed), f.request.target}}};
  return render(t, format);
}

std::filesystem::path resolve_output_path(const std::string& out) {
  std::filesystem::path p(out);
  if (p.is_absolute()) return p;
  if (const char* dir = std::getenv("SURFGRAV_OUTPUT_DIR"); dir && *dir) return std::filesystem::path(dir) / p;
  return p;
}

}  // namespace surfgrav
