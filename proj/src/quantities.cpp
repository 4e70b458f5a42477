#include "surfgrav/quantities.hpp"

#include <cmath>
#include <cstdio>

#include "surfgrav/errors.hpp"

namespace surfgrav {

namespace {

std::string planck_message(double gap_m, double planck_m) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "surface gap %.6g m is below the Planck length bound %.6g m", gap_m,
                planck_m);
  return buf;
}

}  // namespace

PlanckBoundError::PlanckBoundError(double gap_m, double planck_m)
    : DomainError(planck_message(gap_m, planck_m)),
      gap_m_(gap_m),
      planck_m_(planck_m) {}

namespace {

double require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw InvalidQuantity(std::string("non-finite ") + what);
  return v;
}

}  // namespace

Length fm_to_m(double fm) {
  require_finite(fm, "length");
  if (fm < 0.0) throw InvalidQuantity("negative length in femtometers");
  // 1e15 is exact in binary, so division rounds once.
  return Length(fm / fm_per_meter);
}

double m_to_fm(Length x) { return x.value() * fm_per_meter; }

Length meters(double m) { return Length(require_finite(m, "length")); }
Mass kilograms(double kg) { return Mass(require_finite(kg, "mass")); }
Energy joules(double j) { return Energy(require_finite(j, "energy")); }
Energy mev(double value_mev) { return Energy(require_finite(value_mev, "energy") * codata::joules_per_mev); }

double energy_as_mev(Energy e) { return require_finite(e.value(), "energy") / codata::joules_per_mev; }

std::string to_string(PlanckConvention c) { return c == PlanckConvention::Paper ? "paper" : "codata"; }

PlanckConvention planck_convention_from_string(const std::string& token) {
  if (token == "paper") return PlanckConvention::Paper;
  if (token == "codata") return PlanckConvention::Codata;
  throw ConfigError("unknown mode '" + token + "' (expected paper|codata)");
}

Constants Constants::paper() {
  return {PlanckConvention::Paper, Length(paper_planck_length), Mass(codata::proton_mass)};
}

Constants Constants::codata() {
  return {PlanckConvention::Codata, Length(codata::planck_length), Mass(codata::proton_mass)};
}

Constants Constants::for_convention(PlanckConvention c) {
  return c == PlanckConvention::Paper ? paper() : codata();
}

Constants Constants::with_nucleon_mass(Mass m) const {
  if (!std::isfinite(m.value()) || m.value() <= 0.0) throw InvalidQuantity("nucleon mass must be positive");
  return {convention_, planck_length_, m};
}

double Constants::hbar_c_si() const { return codata::reduced_planck * codata::speed_of_light; }

double Constants::hbar_c_mev_fm() const { return hbar_c_si() / codata::joules_per_mev * fm_per_meter; }

std::vector<ConstantRecord> Constants::records() const {
  const bool paper_mode = convention_ == PlanckConvention::Paper;
  return {
      {"G", G(), "m^3 kg^-1 s^-2", "CODATA 2018"},
      {"hbar", hbar(), "J s", "CODATA 2018 (exact)"},
      {"c", codata::speed_of_light, "m s^-1", "SI definition (exact)"},
      {"hbar_c", hbar_c_mev_fm(), "MeV fm", "derived: hbar*c"},
      {"mev", codata::joules_per_mev, "J", "SI definition (exact)"},
      {"planck_length", planck_length_.value(), "m",
       paper_mode ? "paper mode: 1e-35 m exactly" : "CODATA 2018"},
      {"nucleon_mass", nucleon_mass_.value(), "kg",
       nucleon_mass_.value() == codata::proton_mass ? "CODATA 2018 proton mass" : "user supplied"},
      {"default_d_n", default_d_n().value(), "m", "1 fm nucleon diameter"},
  };
}

}  // namespace surfgrav
