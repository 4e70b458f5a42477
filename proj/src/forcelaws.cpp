#include "surfgrav/forcelaws.hpp"

#include <cmath>

#include "surfgrav/errors.hpp"

namespace surfgrav {

namespace {

bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0.0; }

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

double require_center(const Separation& sep) {
  const double d = sep.center_distance().value();
  if (!(d > 0.0)) throw DomainError("center distance must be positive");
  return d;
}

// Surface gap after applying the Planck cutoff policy.
double effective_gap(const Separation& sep, const Constants& c, CutoffPolicy policy) {
  const double s = sep.gap().value();
  const double lp = c.planck_length().value();
  if (s >= lp) return s;
  if (policy == CutoffPolicy::ClampToPlanck) return lp;
  throw PlanckBoundError(s, lp);
}

double mass_product(const ParticlePair& pair) { return pair.m1().value() * pair.m2().value(); }

}  // namespace

ParticlePair::ParticlePair(Mass m1, Mass m2, Length contact) : m1_(m1), m2_(m2), contact_(contact) {
  if (!std::isfinite(m1.value()) || !std::isfinite(m2.value()) || m1.value() <= 0.0 || m2.value() <= 0.0)
    throw InvalidQuantity("particle masses must be positive and finite");
  if (!finite_nonneg(contact.value())) throw InvalidQuantity("contact distance must be non-negative");
}

ParticlePair ParticlePair::nucleons(const Constants& c, Length contact) {
  return {c.nucleon_mass(), c.nucleon_mass(), contact};
}

Length ParticlePair::contact_from_diameters(Length d1, Length d2) {
  if (!finite_nonneg(d1.value()) || !finite_nonneg(d2.value()))
    throw InvalidQuantity("diameters must be non-negative");
  return (d1 + d2) * 0.5;
}

Mass ParticlePair::reduced_mass() const {
  return Mass(m1_.value() * m2_.value() / (m1_.value() + m2_.value()));
}

Separation Separation::from_gap(Length gap, Length contact) {
  if (!finite_nonneg(gap.value())) throw DomainError("surface gap must be non-negative and finite");
  if (!finite_nonneg(contact.value())) throw InvalidQuantity("contact distance must be non-negative");
  return {gap, gap + contact, contact};
}

Separation Separation::from_center_distance(Length center, Length contact) {
  if (!std::isfinite(center.value())) throw DomainError("center distance must be finite");
  if (!finite_nonneg(contact.value())) throw InvalidQuantity("contact distance must be non-negative");
  if (center < contact) throw DomainError("center distance is smaller than the contact distance");
  return {center - contact, center, contact};
}

Yukawa::Yukawa(double g2_, Length lambda_) : g2(g2_), lambda(lambda_) {
  if (!std::isfinite(g2) || g2 < 0.0) throw DomainError("Yukawa coupling g2 must be >= 0");
  if (!std::isfinite(lambda.value()) || !(lambda.value() > 0.0))
    throw DomainError("Yukawa range must be positive");
}

std::string law_name(const PotentialSpec& spec) {
  return std::visit(overloaded{[](const Newtonian&) { return std::string("newton"); },
                               [](const Proposed&) { return std::string("proposed"); },
                               [](const Yukawa&) { return std::string("yukawa"); }},
                    spec);
}

Force force_newton(const ParticlePair& pair, const Separation& sep, const Constants& c) {
  const double d = require_center(sep);
  return Force(c.G() * mass_product(pair) / (d * d));
}

Energy potential_newton(const ParticlePair& pair, const Separation& sep, const Constants& c) {
  const double d = require_center(sep);
  return Energy(-c.G() * mass_product(pair) / d);
}

Force force_proposed(const ParticlePair& pair, const Separation& sep, const Constants& c, CutoffPolicy policy) {
  const double s = effective_gap(sep, c, policy);
  return Force(c.G() * mass_product(pair) / (s * s));
}

Energy potential_proposed(const ParticlePair& pair, const Separation& sep, const Constants& c,
                          CutoffPolicy policy) {
  const double s = effective_gap(sep, c, policy);
  return Energy(-c.G() * mass_product(pair) / s);
}

Force force_yukawa(const Yukawa& spec, Length r, const Constants& c) {
  const double x = r.value();
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("Yukawa distance must be positive");
  const double lam = spec.lambda.value();
  return Force(spec.g2 * c.hbar_c_si() * std::exp(-x / lam) * (1.0 / (x * x) + 1.0 / (lam * x)));
}

Energy potential_yukawa(const Yukawa& spec, Length r, const Constants& c) {
  const double x = r.value();
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("Yukawa distance must be positive");
  return Energy(-spec.g2 * c.hbar_c_si() * std::exp(-x / spec.lambda.value()) / x);
}

Force force(const PotentialSpec& spec, const ParticlePair& pair, const Separation& sep, const Constants& c) {
  return std::visit(
      overloaded{[&](const Newtonian&) { return force_newton(pair, sep, c); },
                 [&](const Proposed& p) { return force_proposed(pair, sep, c, p.cutoff); },
                 [&](const Yukawa& y) { return force_yukawa(y, sep.center_distance(), c); }},
      spec);
}

Energy potential(const PotentialSpec& spec, const ParticlePair& pair, const Separation& sep,
                 const Constants& c) {
  return std::visit(
      overloaded{[&](const Newtonian&) { return potential_newton(pair, sep, c); },
                 [&](const Proposed& p) { return potential_proposed(pair, sep, c, p.cutoff); },
                 [&](const Yukawa& y) { return potential_yukawa(y, sep.center_distance(), c); }},
      spec);
}

double strength_ratio(Length contact, Length gap) {
  const double s = gap.value();
  const double d = contact.value();
  if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("surface gap must be positive");
  if (!finite_nonneg(d)) throw DomainError("contact distance must be non-negative");
  const double t = 1.0 + d / s;
  return t * t;
}

Energy pion_mass_from_range(Length lambda, const Constants& c) {
  const double l = lambda.value();
  if (!(l > 0.0) || !std::isfinite(l)) throw DomainError("range must be positive");
  return Energy(c.hbar_c_si() / l);
}

Length range_from_pion_mass(Energy rest_energy, const Constants& c) {
  const double e = rest_energy.value();
  if (!(e > 0.0) || !std::isfinite(e)) throw DomainError("rest energy must be positive");
  return Length(c.hbar_c_si() / e);
}

Length detectable_range(Length contact, double epsilon) {
  const double d = contact.value();
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw DomainError("accuracy epsilon must be positive");
  if (!(d > 0.0) || !std::isfinite(d)) throw DomainError("contact distance must be positive");
  // d / (sqrt(1+e) - 1) rewritten without the cancellation at small e.
  return Length(d * (std::sqrt(1.0 + epsilon) + 1.0) / epsilon);
}

}  // namespace surfgrav
