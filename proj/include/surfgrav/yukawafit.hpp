#ifndef SURFGRAV_YUKAWAFIT_HPP
#define SURFGRAV_YUKAWAFIT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "surfgrav/forcelaws.hpp"
#include "surfgrav/quantities.hpp"

namespace surfgrav {

/// Fit of a Yukawa force (evaluated at the center distance D = s + d_n) to a
/// target force sampled on a log-spaced surface-gap window.
struct FitProblem {
  ParticlePair pair;
  Length s_lo;
  Length s_hi;
  int n_samples = 40;
  /// When set, the target is this Yukawa force instead of the modified law.
  std::optional<Yukawa> synthetic_target;
  std::uint64_t seed = 0;
  Length lambda_min = fm_to_m(0.1);
  Length lambda_max = fm_to_m(100.0);
  int max_iterations = 200;

  void validate(const Constants& c) const;
};

struct FitSample {
  Length gap;
  Length center;
  Force target;
};

struct FitResult {
  double g2 = 0.0;
  Length lambda{};
  double rms_relative_residual = 0.0;
  int iterations = 0;
  bool converged = false;
  /// Norm of the loss gradient in (log g2, log lambda) at the result.
  double gradient_norm = 0.0;
};

/// Target samples the fit works on.
std::vector<FitSample> fit_samples(const FitProblem& problem, const Constants& c);

/// Mean squared log residual, ln(F_yukawa / F_target), over the samples.
double fit_loss(const std::vector<FitSample>& samples, double g2, Length lambda, const Constants& c);

/// Multi-start grid over (log g2, log lambda) followed by Levenberg-Marquardt
/// refinement of the log residuals. Deterministic given problem.seed.
FitResult fit_yukawa(const FitProblem& problem, const Constants& c);

}  // namespace surfgrav

#endif  // SURFGRAV_YUKAWAFIT_HPP
