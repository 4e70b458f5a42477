#ifndef SURFGRAV_BOUNDSTATE_HPP
#define SURFGRAV_BOUNDSTATE_HPP

#include <functional>
#include <string>
#include <vector>

#include "surfgrav/forcelaws.hpp"
#include "surfgrav/quantities.hpp"

namespace surfgrav {

/// A central potential as seen by the radial solver.
///
/// The solver integrates in its own coordinate x. For s-waves the radial
/// equation has no centrifugal term and is translation invariant, so the
/// modified law is solved directly in the surface gap (x = s, offset d_n)
/// instead of in D = s + d_n, which could not resolve gaps near the Planck
/// length. Reported radii are offset + x.
struct RadialPotential {
  std::function<Energy(Length)> energy;
  Length offset{};
  /// Smallest admissible x (the Planck length for the modified law).
  Length min_coordinate{};
  std::string label;

  /// Binds a force law to a particle pair. The modified law uses a hard wall
  /// at the cutoff, so its cutoff policy is irrelevant here.
  static RadialPotential from_law(const PotentialSpec& spec, const ParticlePair& pair, const Constants& c);
  /// V(r) = -K / r, with K in J m.
  static RadialPotential coulomb(double strength_j_m);
};

/// s-wave problem u'' = (2 mu / hbar^2) (V(x) - E) u on a uniform grid with
/// hard walls u(x_min) = u(x_max) = 0.
struct RadialProblem {
  Mass reduced_mass;
  RadialPotential potential;
  Length r_min;
  Length r_max;
  int n_points = 20000;

  /// Throws ConfigError when the grid or the mass is unusable.
  void validate() const;
};

struct WavefunctionSample {
  Length r;  // offset + x
  double u;  // normalized so that the trapezoid integral of u^2 dr (meters) is 1
};

struct BoundStateResult {
  Energy energy{};
  int node_count = 0;
  std::vector<WavefunctionSample> wavefunction;
  bool converged = false;
  Energy bracket_width{};
  int state_index = 0;
  /// Deepest value of the potential on the grid, inner wall included.
  Energy well_depth{};
  std::string boundary = "hard wall at r_min and r_max";
};

struct RadialShot {
  double terminal_amplitude;  // u(x_max) after overflow rescaling
  int node_count;
};

/// Numerov outward integration at a trial energy.
RadialShot integrate_radial(const RadialProblem& problem, Energy trial_energy);

/// Node-count bisection followed by terminal-amplitude bisection. Returns a
/// non-converged result when state `state_index` has no eigenvalue in
/// (V_min, 0).
BoundStateResult solve_bound_state(const RadialProblem& problem, int state_index);

/// Independent bracket on the ground-state energy of the boxed problem.
struct VariationalBounds {
  /// Rayleigh quotient minimized over sin(pi x / L) * exp(-x / b) trials.
  Energy upper;
  /// Free-box ground energy plus the well depth; no state lies below it.
  Energy lower;

  bool proves_binding() const { return upper.value() < 0.0; }
  bool proves_no_binding() const { return lower.value() >= 0.0; }
};

VariationalBounds variational_bounds(const RadialProblem& problem);

}  // namespace surfgrav

#endif  // SURFGRAV_BOUNDSTATE_HPP
