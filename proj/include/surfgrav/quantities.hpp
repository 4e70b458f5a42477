#ifndef SURFGRAV_QUANTITIES_HPP
#define SURFGRAV_QUANTITIES_HPP

#include <compare>
#include <string>
#include <vector>

namespace surfgrav {

/// A scalar carrying one fixed SI dimension. The dimension lives in the type
/// only; there is no runtime unit algebra.
template <class Tag>
class Quantity {
 public:
  constexpr Quantity() = default;
  constexpr explicit Quantity(double v) : value_(v) {}

  /// Value in the SI base unit of the dimension.
  constexpr double value() const { return value_; }

  constexpr Quantity operator-() const { return Quantity(-value_); }
  constexpr Quantity& operator+=(Quantity o) { value_ += o.value_; return *this; }
  constexpr Quantity& operator-=(Quantity o) { value_ -= o.value_; return *this; }
  constexpr Quantity& operator*=(double k) { value_ *= k; return *this; }

  friend constexpr Quantity operator+(Quantity a, Quantity b) { return Quantity(a.value_ + b.value_); }
  friend constexpr Quantity operator-(Quantity a, Quantity b) { return Quantity(a.value_ - b.value_); }
  friend constexpr Quantity operator*(Quantity a, double k) { return Quantity(a.value_ * k); }
  friend constexpr Quantity operator*(double k, Quantity a) { return Quantity(k * a.value_); }
  friend constexpr Quantity operator/(Quantity a, double k) { return Quantity(a.value_ / k); }
  friend constexpr double operator/(Quantity a, Quantity b) { return a.value_ / b.value_; }
  friend constexpr auto operator<=>(Quantity, Quantity) = default;

 private:
  double value_ = 0.0;
};

struct LengthTag {};
struct MassTag {};
struct ForceTag {};
struct EnergyTag {};

using Length = Quantity<LengthTag>;  // meters
using Mass = Quantity<MassTag>;      // kilograms
using Force = Quantity<ForceTag>;    // newtons
using Energy = Quantity<EnergyTag>;  // joules

/// Reference values (CODATA 2018 recommended values; SI-exact where the 2019
/// redefinition fixed them). Every other module reads constants from here.
namespace codata {
inline constexpr double gravitational_constant = 6.67430e-11;  // m^3 kg^-1 s^-2
inline constexpr double reduced_planck = 1.054571817e-34;      // J s
inline constexpr double speed_of_light = 299792458.0;          // m / s, exact
inline constexpr double joules_per_mev = 1.602176634e-13;      // exact
inline constexpr double proton_mass = 1.67262192369e-27;       // kg
inline constexpr double neutron_mass = 1.67492749804e-27;      // kg
inline constexpr double planck_length = 1.616255e-35;          // m
}  // namespace codata

/// Rounded Planck length used by the default "paper" mode: exactly 1e-35 m.
inline constexpr double paper_planck_length = 1e-35;
inline constexpr double meters_per_fm = 1e-15;
inline constexpr double fm_per_meter = 1e15;

Length fm_to_m(double fm);
double m_to_fm(Length x);
Length meters(double m);
Mass kilograms(double kg);
Energy joules(double j);
Energy mev(double value_mev);
double energy_as_mev(Energy e);

/// Which value of the Planck length bounds the modified law.
enum class PlanckConvention { Paper, Codata };

std::string to_string(PlanckConvention c);
PlanckConvention planck_convention_from_string(const std::string& token);

/// One documented row of the constants table.
struct ConstantRecord {
  std::string key;
  double value;
  std::string unit;
  std::string source;
};

/// Immutable bundle of the constants a calculation depends on.
class Constants {
 public:
  static Constants paper();
  static Constants codata();
  static Constants for_convention(PlanckConvention c);

  /// Copy with a different nucleon mass (default is the proton mass).
  Constants with_nucleon_mass(Mass m) const;

  PlanckConvention convention() const { return convention_; }
  double G() const { return codata::gravitational_constant; }
  double hbar() const { return codata::reduced_planck; }
  /// hbar*c in MeV fm.
  double hbar_c_mev_fm() const;
  /// hbar*c in J m.
  double hbar_c_si() const;
  Length planck_length() const { return planck_length_; }
  Mass nucleon_mass() const { return nucleon_mass_; }
  Length default_d_n() const { return fm_to_m(1.0); }

  std::vector<ConstantRecord> records() const;

 private:
  Constants(PlanckConvention c, Length planck, Mass nucleon)
      : convention_(c), planck_length_(planck), nucleon_mass_(nucleon) {}

  PlanckConvention convention_;
  Length planck_length_;
  Mass nucleon_mass_;
};

}  // namespace surfgrav

#endif  // SURFGRAV_QUANTITIES_HPP
