#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

#include "surfgrav/boundstate.hpp"
#include "surfgrav/errors.hpp"
#include "surfgrav/forcelaws.hpp"
#include "surfgrav/report.hpp"
#include "surfgrav/yukawafit.hpp"

namespace py = pybind11;
using namespace surfgrav;

namespace {

RunConfig make_config(const std::string& mode, double d_n_fm, std::optional<double> mass_kg, std::uint64_t seed) {
  RunConfig cfg;
  cfg.mode = planck_convention_from_string(mode);
  cfg.d_n_fm = d_n_fm;
  cfg.mass_kg = mass_kg;
  cfg.seed = seed;
  cfg.validate();
  return cfg;
}

PotentialSpec make_law(const std::string& law, const std::string& cutoff, double g2, double lambda_fm) {
  if (law == "newton") return Newtonian{};
  if (law == "proposed") {
    if (cutoff == "error") return Proposed{CutoffPolicy::Error};
    if (cutoff == "clamp") return Proposed{CutoffPolicy::ClampToPlanck};
    throw ConfigError("unknown cutoff '" + cutoff + "' (expected error|clamp)");
  }
  if (law == "yukawa") return Yukawa(g2, fm_to_m(lambda_fm));
  throw ConfigError("unknown law '" + law + "' (expected newton|proposed|yukawa)");
}

py::object as_python(const std::string& json_text) {
  return py::module_::import("json").attr("loads")(json_text);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Surface-gap gravity, Newtonian and Yukawa force laws.";

  static py::exception<Error> base(m, "Error", PyExc_RuntimeError);
  static py::exception<DomainError> domain(m, "DomainError", base.ptr());
  static py::exception<ConfigError> config(m, "ConfigError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DomainError& e) {
      py::set_error(domain, e.what());
    } catch (const ConfigError& e) {
      py::set_error(config, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  m.def(
      "strength_ratio", [](double s_fm, double d_n_fm) { return strength_ratio(fm_to_m(d_n_fm), fm_to_m(s_fm)); },
      py::arg("s_fm"), py::arg("d_n_fm") = 1.0);

  m.def(
      "detectable_range_fm",
      [](double epsilon, double d_n_fm) { return m_to_fm(detectable_range(fm_to_m(d_n_fm), epsilon)); },
      py::arg("epsilon"), py::arg("d_n_fm") = 1.0);

  m.def(
      "pion_energy_mev",
      [](double lambda_fm, const std::string& mode) {
        return energy_as_mev(pion_mass_from_range(fm_to_m(lambda_fm), make_config(mode, 1.0, {}, 0).constants()));
      },
      py::arg("lambda_fm"), py::arg("mode") = "paper");

  m.def(
      "pion_range_fm",
      [](double energy_mev, const std::string& mode) {
        return m_to_fm(range_from_pion_mass(mev(energy_mev), make_config(mode, 1.0, {}, 0).constants()));
      },
      py::arg("energy_mev"), py::arg("mode") = "paper");

  auto eval = [](bool want_force) {
    return [want_force](const std::string& law, double s_fm, const std::string& mode, double d_n_fm,
                        std::optional<double> mass_kg, double g2, double lambda_fm, const std::string& cutoff) {
      const RunConfig cfg = make_config(mode, d_n_fm, mass_kg, 0);
      const Constants c = cfg.constants();
      const ParticlePair pair = cfg.pair();
      const PotentialSpec spec = make_law(law, cutoff, g2, lambda_fm);
      const Separation sep = Separation::from_gap(fm_to_m(s_fm), pair.contact());
      return want_force ? force(spec, pair, sep, c).value() : potential(spec, pair, sep, c).value();
    };
  };
  m.def("force", eval(true), "Attractive force magnitude in N at surface gap s_fm.", py::arg("law"), py::arg("s_fm"),
        py::kw_only(), py::arg("mode") = "paper", py::arg("d_n_fm") = 1.0, py::arg("mass_kg") = py::none(),
        py::arg("g2") = 1.0, py::arg("lambda_fm") = 1.4, py::arg("cutoff") = "error");
  m.def("potential", eval(false), "Potential energy in J at surface gap s_fm.", py::arg("law"), py::arg("s_fm"),
        py::kw_only(), py::arg("mode") = "paper", py::arg("d_n_fm") = 1.0, py::arg("mass_kg") = py::none(),
        py::arg("g2") = 1.0, py::arg("lambda_fm") = 1.4, py::arg("cutoff") = "error");

  m.def(
      "reproduce_paper",
      [](const std::string& mode, double d_n_fm) {
        return as_python(render(reproduce_paper(make_config(mode, d_n_fm, {}, 0)), OutputFormat::Json));
      },
      py::arg("mode") = "paper", py::arg("d_n_fm") = 1.0);

  m.def(
      "bind",
      [](const std::string& preset, double k_mev_fm, double g2, double lambda_fm, std::optional<double> r_min_fm,
         std::optional<double> r_max_fm, int n_points, int state, const std::string& mode, double d_n_fm) {
        BindRequest req;
        req.preset = preset;
        req.coulomb_strength_mev_fm = k_mev_fm;
        req.g2 = g2;
        req.lambda_fm = lambda_fm;
        req.r_min_fm = r_min_fm;
        req.r_max_fm = r_max_fm;
        req.n_points = n_points;
        req.state = state;
        const BindOutcome b = bind(req, make_config(mode, d_n_fm, {}, 0));
        py::dict out = as_python(render(b, OutputFormat::Json));
        py::list r, u;
        for (const auto& w : b.result.wavefunction) {
          r.append(m_to_fm(w.r));
          u.append(w.u * std::sqrt(meters_per_fm));
        }
        out["r_fm"] = r;
        out["u"] = u;
        return out;
      },
      py::arg("preset") = "coulomb", py::kw_only(), py::arg("k_mev_fm") = 1.44, py::arg("g2") = 1.0,
      py::arg("lambda_fm") = 1.4, py::arg("r_min_fm") = py::none(), py::arg("r_max_fm") = py::none(),
      py::arg("n_points") = 20000, py::arg("state") = 0, py::arg("mode") = "paper", py::arg("d_n_fm") = 1.0);

  m.def(
      "fit",
      [](double s_lo_fm, double s_hi_fm, int n_samples, const std::string& target, double g2, double lambda_fm,
         std::uint64_t seed, const std::string& mode, double d_n_fm) {
        const FitRequest req{s_lo_fm, s_hi_fm, n_samples, target, g2, lambda_fm};
        return as_python(render(fit(req, make_config(mode, d_n_fm, {}, seed)), OutputFormat::Json));
      },
      py::arg("s_lo_fm") = 2.0, py::arg("s_hi_fm") = 10.0, py::kw_only(), py::arg("n_samples") = 40,
      py::arg("target") = "proposed", py::arg("g2") = 1.0, py::arg("lambda_fm") = 1.4, py::arg("seed") = 0,
      py::arg("mode") = "paper", py::arg("d_n_fm") = 1.0);

  m.def(
      "constants",
      [](const std::string& mode) {
        return as_python(render(constants_table(make_config(mode, 1.0, {}, 0)), OutputFormat::Json));
      },
      py::arg("mode") = "paper");
}
