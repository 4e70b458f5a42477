#include "surfgrav/yukawafit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "surfgrav/errors.hpp"

namespace surfgrav {

namespace {

constexpr int kGridSize = 16;
constexpr int kRefinedStarts = 4;
constexpr double kGradientTolerance = 1e-8;
// The g2 grid spans this many e-folds either side of the profiled estimate.
constexpr double kCouplingSpan = 9.210340371976184;  // ln(1e4)

// Log residuals in normalized units: r_i = a + phi(d_i, lambda) - y_i with
// d_i, lambda in fm and a = ln(g2 * hbar_c * 1e30 / F_ref).
struct Normalized {
  std::vector<double> d;  // center distance, fm
  std::vector<double> y;  // ln(F_i / F_ref)
  double f_ref = 0.0;
};

double phi(double d, double lambda) { return -d / lambda + std::log(lambda + d) - std::log(lambda) - 2.0 * std::log(d); }

double dphi_dloglambda(double d, double lambda) { return d * d / (lambda * (lambda + d)); }

double loss_at(const Normalized& n, double a, double b) {
  const double lambda = std::exp(b);
  double sum = 0.0;
  for (std::size_t i = 0; i < n.d.size(); ++i) {
    const double r = a + phi(n.d[i], lambda) - n.y[i];
    sum += r * r;
  }
  return sum / static_cast<double>(n.d.size());
}

std::array<double, 2> gradient_at(const Normalized& n, double a, double b) {
  const double lambda = std::exp(b);
  std::array<double, 2> g{0.0, 0.0};
  for (std::size_t i = 0; i < n.d.size(); ++i) {
    const double r = a + phi(n.d[i], lambda) - n.y[i];
    g[0] += r;
    g[1] += r * dphi_dloglambda(n.d[i], lambda);
  }
  const double k = 2.0 / static_cast<double>(n.d.size());
  return {k * g[0], k * g[1]};
}

double profiled_coupling(const Normalized& n, double b) {
  const double lambda = std::exp(b);
  double sum = 0.0;
  for (std::size_t i = 0; i < n.d.size(); ++i) sum += n.y[i] - phi(n.d[i], lambda);
  return sum / static_cast<double>(n.d.size());
}

struct Refined {
  double a;
  double b;
  double loss;
  int iterations;
  bool converged;
  double gradient_norm;
};

Refined levenberg_marquardt(const Normalized& n, double a, double b, double b_min, double b_max, int max_iterations) {
  double loss = loss_at(n, a, b);
  double damping = 1e-3;
  int it = 0;
  bool converged = false;
  double gnorm = 0.0;
  for (;;) {
    const auto grad = gradient_at(n, a, b);
    gnorm = std::hypot(grad[0], grad[1]);
    if (gnorm <= kGradientTolerance * std::max(1.0, loss)) {
      converged = true;
      break;
    }
    if (it >= max_iterations) break;
    ++it;

    // Normal equations J^T J delta = -J^T r with J = [1, dphi/db].
    const double lambda = std::exp(b);
    double a00 = 0.0, a01 = 0.0, a11 = 0.0, g0 = 0.0, g1 = 0.0;
    for (std::size_t i = 0; i < n.d.size(); ++i) {
      const double r = a + phi(n.d[i], lambda) - n.y[i];
      const double j1 = dphi_dloglambda(n.d[i], lambda);
      a00 += 1.0;
      a01 += j1;
      a11 += j1 * j1;
      g0 += r;
      g1 += r * j1;
    }
    bool accepted = false;
    while (damping < 1e15) {
      const double m00 = a00 * (1.0 + damping);
      const double m11 = a11 * (1.0 + damping);
      const double det = m00 * m11 - a01 * a01;
      const double da = (-g0 * m11 + g1 * a01) / det;
      const double db = (-g1 * m00 + g0 * a01) / det;
      const double b_new = std::clamp(b + db, b_min, b_max);
      const double a_new = a + da;
      const double trial = loss_at(n, a_new, b_new);
      if (trial < loss) {
        a = a_new;
        b = b_new;
        loss = trial;
        damping = std::max(damping / 3.0, 1e-12);
        accepted = true;
        break;
      }
      damping *= 4.0;
    }
    if (!accepted) break;
  }
  return {a, b, loss, it, converged, gnorm};
}

// Uniform in [0, 1), independent of the standard library's distributions.
double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

void FitProblem::validate(const Constants& c) const {
  const double lo = s_lo.value();
  const double hi = s_hi.value();
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw ConfigError("fit window must be finite");
  if (lo < c.planck_length().value()) throw ConfigError("fit window starts below the Planck length");
  if (!(lo < hi)) throw ConfigError("fit window is empty (requires s_lo < s_hi)");
  if (n_samples < 10) throw ConfigError("fit requires at least 10 samples");
  if (!(lambda_min.value() > 0.0) || !(lambda_min < lambda_max) || !std::isfinite(lambda_max.value()))
    throw ConfigError("lambda search bounds must satisfy 0 < min < max");
  if (max_iterations <= 0) throw ConfigError("max_iterations must be positive");
}

std::vector<FitSample> fit_samples(const FitProblem& problem, const Constants& c) {
  problem.validate(c);
  const double log_lo = std::log(problem.s_lo.value());
  const double log_hi = std::log(problem.s_hi.value());
  std::vector<FitSample> out;
  out.reserve(static_cast<std::size_t>(problem.n_samples));
  for (int i = 0; i < problem.n_samples; ++i) {
    double s = std::exp(log_lo + (log_hi - log_lo) * i / (problem.n_samples - 1));
    if (i == 0) s = problem.s_lo.value();
    if (i == problem.n_samples - 1) s = problem.s_hi.value();
    const Separation sep = Separation::from_gap(Length(s), problem.pair.contact());
    const Force f = problem.synthetic_target ? force_yukawa(*problem.synthetic_target, sep.center_distance(), c)
                                             : force_proposed(problem.pair, sep, c);
    out.push_back({sep.gap(), sep.center_distance(), f});
  }
  return out;
}

double fit_loss(const std::vector<FitSample>& samples, double g2, Length lambda, const Constants& c) {
  if (samples.empty()) throw ConfigError("no samples");
  const Yukawa y(g2, lambda);
  double sum = 0.0;
  for (const auto& s : samples) {
    const double r = std::log(force_yukawa(y, s.center, c) / s.target);
    sum += r * r;
  }
  return sum / static_cast<double>(samples.size());
}

FitResult fit_yukawa(const FitProblem& problem, const Constants& c) {
  const std::vector<FitSample> samples = fit_samples(problem, c);
  const double lambda_min_fm = m_to_fm(problem.lambda_min);
  const double lambda_max_fm = m_to_fm(problem.lambda_max);

  const bool all_zero = std::all_of(samples.begin(), samples.end(), [](const FitSample& s) { return s.target.value() == 0.0; });
  if (all_zero) {
    FitResult r;
    r.g2 = 0.0;
    r.lambda = fm_to_m(std::sqrt(lambda_min_fm * lambda_max_fm));
    r.converged = true;
    return r;
  }
  Normalized n;
  n.f_ref = samples.front().target.value();
  for (const auto& s : samples) {
    if (!(s.target.value() > 0.0) || !std::isfinite(s.target.value()))
      throw ConfigError("target force must be positive throughout the window");
    n.d.push_back(m_to_fm(s.center));
    n.y.push_back(std::log(s.target.value() / n.f_ref));
  }

  const double b_min = std::log(lambda_min_fm);
  const double b_max = std::log(lambda_max_fm);
  const double b_step = (b_max - b_min) / (kGridSize - 1);
  const double a_center = profiled_coupling(n, 0.5 * (b_min + b_max));
  const double a_step = 2.0 * kCouplingSpan / (kGridSize - 1);

  struct Start {
    double a;
    double b;
    double loss;
  };
  std::vector<Start> starts;
  starts.reserve(kGridSize * kGridSize);
  std::mt19937_64 rng(problem.seed);
  for (int j = 0; j < kGridSize; ++j) {
    for (int i = 0; i < kGridSize; ++i) {
      const double jb = (unit_uniform(rng) - 0.5) * b_step;
      const double ja = (unit_uniform(rng) - 0.5) * a_step;
      const double b = std::clamp(b_min + j * b_step + jb, b_min, b_max);
      const double a = a_center - kCouplingSpan + i * a_step + ja;
      starts.push_back({a, b, loss_at(n, a, b)});
    }
  }
  std::stable_sort(starts.begin(), starts.end(), [](const Start& x, const Start& y) { return x.loss < y.loss; });

  Refined best{0, 0, std::numeric_limits<double>::infinity(), 0, false, 0};
  for (int k = 0; k < kRefinedStarts && k < static_cast<int>(starts.size()); ++k) {
    const Refined r = levenberg_marquardt(n, starts[k].a, starts[k].b, b_min, b_max, problem.max_iterations);
    if (r.loss < best.loss) best = r;
  }

  FitResult out;
  out.g2 = std::exp(best.a) * n.f_ref / (c.hbar_c_si() * 1e30);
  out.lambda = fm_to_m(std::exp(best.b));
  out.rms_relative_residual = std::sqrt(best.loss);
  out.iterations = best.iterations;
  out.converged = best.converged;
  out.gradient_norm = best.gradient_norm;
  return out;
}

}  // namespace surfgrav
