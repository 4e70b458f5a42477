#include "surfgrav/boundstate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <variant>

#include "surfgrav/errors.hpp"

namespace surfgrav {

namespace {

constexpr double kRescaleThreshold = 1e150;
constexpr double kRescaleFactor = 1e-150;
constexpr double kRelativeTolerance = 1e-10;
constexpr int kMaxBisections = 2000;

// Potential tabulated once per solve. V[0] sits on the wall where u = 0 and is
// never used.
struct Grid {
  double x0 = 0.0;
  double h = 0.0;
  double scale = 0.0;  // 2 mu / hbar^2, SI
  std::vector<double> v;
  double v_min = 0.0;  // over the interior grid
  double well = 0.0;   // also includes the wall when V is finite there

  std::size_t size() const { return v.size(); }
  double x(std::size_t i) const { return x0 + static_cast<double>(i) * h; }
};

Grid tabulate(const RadialProblem& p) {
  p.validate();
  Grid g;
  const auto n = static_cast<std::size_t>(p.n_points);
  g.x0 = p.r_min.value();
  g.h = (p.r_max.value() - g.x0) / static_cast<double>(n - 1);
  const double hbar = codata::reduced_planck;
  g.scale = 2.0 * p.reduced_mass.value() / (hbar * hbar);
  g.v.assign(n, 0.0);
  g.v_min = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < n; ++i) {
    const double vi = p.potential.energy(Length(g.x(i))).value();
    if (!std::isfinite(vi)) throw ConfigError("potential is not finite on the grid at x = " + std::to_string(g.x(i)) + " m");
    g.v[i] = vi;
    g.v_min = std::min(g.v_min, vi);
  }
  g.well = g.v_min;
  if (g.x0 > 0.0) {
    const double wall = p.potential.energy(Length(g.x0)).value();
    if (std::isfinite(wall)) g.well = std::min(g.well, wall);
  }
  return g;
}

int sign_of(double u) { return (u > 0.0) - (u < 0.0); }

// Counts strict sign changes, skipping exact zeros.
struct NodeCounter {
  int last = 0;
  int count = 0;
  void push(double u) {
    const int s = sign_of(u);
    if (s == 0) return;
    if (last != 0 && s != last) ++count;
    last = s;
  }
};

// Numerov outward from the wall at x0. When `store` is non-null it receives
// u[0..stop] (rescaled consistently).
RadialShot shoot(const Grid& g, double energy, std::size_t stop, std::vector<double>* store) {
  const double c = g.h * g.h / 12.0;
  auto w = [&](std::size_t i) { return g.scale * (g.v[i] - energy); };

  double u_prev = 0.0;
  double u = 1.0;
  double w_prev = 0.0;  // multiplies u_prev = 0 on the first step
  double w_cur = w(1);
  NodeCounter nodes;
  nodes.push(u);
  if (store) {
    store->assign(stop + 1, 0.0);
    (*store)[1] = u;
  }
  for (std::size_t i = 1; i < stop; ++i) {
    const double w_next = w(i + 1);
    const double u_next =
        (2.0 * (1.0 + 5.0 * c * w_cur) * u - (1.0 - c * w_prev) * u_prev) / (1.0 - c * w_next);
    u_prev = u;
    u = u_next;
    w_prev = w_cur;
    w_cur = w_next;
    if (std::abs(u) > kRescaleThreshold) {
      u *= kRescaleFactor;
      u_prev *= kRescaleFactor;
      if (store)
        for (std::size_t j = 0; j <= i; ++j) (*store)[j] *= kRescaleFactor;
    }
    if (store) (*store)[i + 1] = u;
    nodes.push(u);
  }
  return {u, nodes.count};
}

// Numerov inward from the wall at the last grid point down to index `stop`.
std::vector<double> shoot_inward(const Grid& g, double energy, std::size_t stop) {
  const std::size_t n = g.size();
  const double c = g.h * g.h / 12.0;
  auto w = [&](std::size_t i) { return g.scale * (g.v[i] - energy); };
  std::vector<double> u(n, 0.0);
  u[n - 2] = 1.0;
  for (std::size_t i = n - 2; i > stop; --i) {
    const double next = (2.0 * (1.0 + 5.0 * c * w(i)) * u[i] - (1.0 - c * w(i + 1)) * u[i + 1]) /
                        (1.0 - c * w(i - 1));
    u[i - 1] = next;
    if (std::abs(next) > kRescaleThreshold)
      for (std::size_t j = i - 1; j < n; ++j) u[j] *= kRescaleFactor;
  }
  return u;
}

std::vector<double> eigenfunction(const Grid& g, double energy) {
  const std::size_t n = g.size();
  std::size_t turning = 0;
  for (std::size_t i = n - 1; i >= 1; --i) {
    if (g.v[i] < energy) {
      turning = i;
      break;
    }
  }
  std::vector<double> u;
  if (turning == 0 || turning + 3 >= n) {
    shoot(g, energy, n - 1, &u);
    u[n - 1] = 0.0;
    return u;
  }
  shoot(g, energy, turning, &u);
  const std::vector<double> inward = shoot_inward(g, energy, turning);
  const double ratio = inward[turning] != 0.0 ? u[turning] / inward[turning] : 0.0;
  u.resize(n);
  for (std::size_t i = turning + 1; i < n; ++i) u[i] = inward[i] * ratio;
  return u;
}

double trapezoid_norm2(const std::vector<double>& u, double h) {
  double sum = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double w = (i == 0 || i + 1 == u.size()) ? 0.5 : 1.0;
    sum += w * u[i] * u[i];
  }
  return sum * h;
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

RadialPotential RadialPotential::from_law(const PotentialSpec& spec, const ParticlePair& pair,
                                          const Constants& c) {
  return std::visit(
      overloaded{
          [&](const Newtonian&) {
            return RadialPotential{[pair, c](Length r) {
                                     return potential_newton(pair, Separation::from_gap(r, Length(0.0)), c);
                                   },
                                   Length(0.0), Length(0.0), "newton"};
          },
          [&](const Proposed&) {
            return RadialPotential{[pair, c](Length s) {
                                     return potential_proposed(pair, Separation::from_gap(s, pair.contact()), c,
                                                               CutoffPolicy::Error);
                                   },
                                   pair.contact(), c.planck_length(), "proposed"};
          },
          [&](const Yukawa& y) {
            return RadialPotential{[y, c](Length r) { return potential_yukawa(y, r, c); }, Length(0.0),
                                   Length(0.0), "yukawa"};
          }},
      spec);
}

RadialPotential RadialPotential::coulomb(double strength_j_m) {
  if (!std::isfinite(strength_j_m) || strength_j_m < 0.0) throw ConfigError("Coulomb strength must be >= 0");
  return {[strength_j_m](Length r) { return Energy(-strength_j_m / r.value()); }, Length(0.0), Length(0.0),
          "coulomb"};
}

void RadialProblem::validate() const {
  if (!potential.energy) throw ConfigError("radial problem has no potential");
  if (!std::isfinite(reduced_mass.value()) || !(reduced_mass.value() > 0.0))
    throw ConfigError("reduced mass must be positive");
  if (!std::isfinite(r_min.value()) || !std::isfinite(r_max.value()))
    throw ConfigError("grid bounds must be finite");
  if (!(r_min < r_max)) throw ConfigError("grid requires r_min < r_max");
  if (n_points < 1000) throw ConfigError("grid requires at least 1000 points");
  if (r_min < potential.min_coordinate)
    throw ConfigError("r_min lies below the admissible minimum for the " + potential.label + " potential");
}

RadialShot integrate_radial(const RadialProblem& problem, Energy trial_energy) {
  if (!std::isfinite(trial_energy.value())) throw DomainError("trial energy must be finite");
  const Grid g = tabulate(problem);
  return shoot(g, trial_energy.value(), g.size() - 1, nullptr);
}

BoundStateResult solve_bound_state(const RadialProblem& problem, int state_index) {
  if (state_index < 0) throw ConfigError("state index must be non-negative");
  const Grid g = tabulate(problem);
  const std::size_t last = g.size() - 1;
  auto nodes_at = [&](double e) { return shoot(g, e, last, nullptr).node_count; };

  BoundStateResult out;
  out.state_index = state_index;
  out.well_depth = Energy(g.well);
  if (!(g.v_min < 0.0)) {
    out.node_count = nodes_at(0.0);
    return out;
  }

  double lo = g.v_min;
  double hi = 0.0;
  int n_lo = nodes_at(lo);
  int n_hi = nodes_at(hi);
  out.bracket_width = Energy(hi - lo);
  if (n_hi <= state_index || n_lo > state_index) {
    out.node_count = n_hi;
    return out;
  }

  const double tol = kRelativeTolerance * std::abs(g.v_min);
  int iterations = 0;
  // Phase 1: isolate the eigenvalue by node count.
  while ((n_lo != state_index || n_hi != state_index + 1) && hi - lo > tol && iterations < kMaxBisections) {
    const double mid = 0.5 * (lo + hi);
    const int n = nodes_at(mid);
    if (n <= state_index) {
      lo = mid;
      n_lo = n;
    } else {
      hi = mid;
      n_hi = n;
    }
    ++iterations;
  }
  // Phase 2: refine on the sign of the terminal amplitude.
  int sign_lo = sign_of(shoot(g, lo, last, nullptr).terminal_amplitude);
  while (hi - lo > tol && iterations < kMaxBisections) {
    const double mid = 0.5 * (lo + hi);
    const int s = sign_of(shoot(g, mid, last, nullptr).terminal_amplitude);
    if (s == 0) {
      lo = hi = mid;
      break;
    }
    if (s == sign_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++iterations;
  }

  const double energy = 0.5 * (lo + hi);
  out.energy = Energy(energy);
  out.bracket_width = Energy(hi - lo);

  std::vector<double> u = eigenfunction(g, energy);
  const double norm = std::sqrt(trapezoid_norm2(u, g.h));
  NodeCounter nodes;
  for (std::size_t i = 1; i + 1 < u.size(); ++i) nodes.push(u[i]);
  out.node_count = nodes.count;
  out.converged = hi - lo <= tol && norm > 0.0 && std::isfinite(norm) && nodes.count == state_index;

  out.wavefunction.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    out.wavefunction.push_back({problem.potential.offset + Length(g.x(i)), norm > 0.0 ? u[i] / norm : 0.0});
  }
  return out;
}

VariationalBounds variational_bounds(const RadialProblem& problem) {
  const Grid g = tabulate(problem);
  const double length = problem.r_max.value() - problem.r_min.value();
  const double kinetic = 1.0 / g.scale;  // hbar^2 / (2 mu)
  const double k = std::numbers::pi / length;

  VariationalBounds b{Energy(std::numeric_limits<double>::infinity()),
                      Energy(kinetic * k * k + g.well)};

  auto rayleigh = [&](double inv_b) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 1; i < g.size(); ++i) {
      const double y = static_cast<double>(i) * g.h;
      const double w = (i + 1 == g.size()) ? 0.5 : 1.0;
      const double damp = std::exp(-y * inv_b);
      const double u = std::sin(k * y) * damp;
      const double du = (k * std::cos(k * y) - inv_b * std::sin(k * y)) * damp;
      num += w * (kinetic * du * du + g.v[i] * u * u);
      den += w * u * u;
    }
    return den > 0.0 ? num / den : std::numeric_limits<double>::infinity();
  };

  b.upper = Energy(rayleigh(0.0));
  // Decay lengths from L down to 20 grid spacings, quarter-decade steps.
  for (int j = 0; j <= 40; ++j) {
    const double decay = length * std::pow(10.0, -0.25 * j);
    if (decay < 20.0 * g.h) break;
    b.upper = Energy(std::min(b.upper.value(), rayleigh(1.0 / decay)));
  }
  return b;
}

}  // namespace surfgrav
