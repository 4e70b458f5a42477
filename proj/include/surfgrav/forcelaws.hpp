#ifndef SURFGRAV_FORCELAWS_HPP
#define SURFGRAV_FORCELAWS_HPP

#include <string>
#include <variant>

#include "surfgrav/quantities.hpp"

namespace surfgrav {

/// Two interacting bodies and the effective contact distance d_n between
/// their surfaces (one nucleon diameter for identical nucleons).
class ParticlePair {
 public:
  /// Throws InvalidQuantity unless m1, m2 > 0 and contact >= 0.
  ParticlePair(Mass m1, Mass m2, Length contact);

  /// Two nucleons of the configured nucleon mass separated by d_n.
  static ParticlePair nucleons(const Constants& c, Length contact);
  static ParticlePair nucleons(const Constants& c) { return nucleons(c, c.default_d_n()); }

  /// Effective contact distance for two bodies of different diameters.
  static Length contact_from_diameters(Length d1, Length d2);

  Mass m1() const { return m1_; }
  Mass m2() const { return m2_; }
  Length contact() const { return contact_; }
  Mass reduced_mass() const;

 private:
  Mass m1_;
  Mass m2_;
  Length contact_;
};

/// Geometry of a pair. The surface gap s is the primary coordinate; the
/// center distance D = s + d_n is derived. Constructing from the gap never
/// subtracts two nearly equal lengths.
class Separation {
 public:
  static Separation from_gap(Length gap, Length contact);
  /// The gap is computed as D - d_n here; prefer from_gap near contact.
  static Separation from_center_distance(Length center, Length contact);

  Length gap() const { return gap_; }
  Length center_distance() const { return center_; }
  Length contact() const { return contact_; }

 private:
  Separation(Length gap, Length center, Length contact) : gap_(gap), center_(center), contact_(contact) {}

  Length gap_;
  Length center_;
  Length contact_;
};

/// What the modified law does below the Planck length.
enum class CutoffPolicy {
  Error,          ///< throw PlanckBoundError
  ClampToPlanck,  ///< evaluate at s = l_P instead
};

struct Newtonian {};

struct Proposed {
  CutoffPolicy cutoff = CutoffPolicy::Error;
};

/// V(r) = -g2 * hbar*c * exp(-r/lambda) / r, with r the center distance.
struct Yukawa {
  Yukawa(double g2, Length lambda);

  double g2;
  Length lambda;
};

using PotentialSpec = std::variant<Newtonian, Proposed, Yukawa>;

std::string law_name(const PotentialSpec& spec);

// All forces are reported as positive attractive magnitudes.

Force force_newton(const ParticlePair& pair, const Separation& sep, const Constants& c);
Energy potential_newton(const ParticlePair& pair, const Separation& sep, const Constants& c);

/// G m1 m2 / s^2, evaluated directly on the surface gap.
Force force_proposed(const ParticlePair& pair, const Separation& sep, const Constants& c,
                     CutoffPolicy policy = CutoffPolicy::Error);
/// -G m1 m2 / s.
Energy potential_proposed(const ParticlePair& pair, const Separation& sep, const Constants& c,
                          CutoffPolicy policy = CutoffPolicy::Error);

Force force_yukawa(const Yukawa& spec, Length r, const Constants& c);
Energy potential_yukawa(const Yukawa& spec, Length r, const Constants& c);

/// Law-generic evaluation. Yukawa is evaluated at the center distance and
/// ignores the masses.
Force force(const PotentialSpec& spec, const ParticlePair& pair, const Separation& sep, const Constants& c);
Energy potential(const PotentialSpec& spec, const ParticlePair& pair, const Separation& sep,
                 const Constants& c);

/// ((s + d_n) / s)^2: modified over Newtonian force at the same geometry.
double strength_ratio(Length contact, Length gap);

/// Mediator rest energy for a force of the given range: hbar*c / lambda.
Energy pion_mass_from_range(Length lambda, const Constants& c);
/// Range of a force mediated by a particle of the given rest energy.
Length range_from_pion_mass(Energy rest_energy, const Constants& c);

/// Surface gap at which the strength ratio falls to 1 + epsilon, i.e. the
/// farthest gap an experiment of relative accuracy epsilon can tell the two
/// laws apart.
Length detectable_range(Length contact, double epsilon);

}  // namespace surfgrav

#endif  // SURFGRAV_FORCELAWS_HPP
