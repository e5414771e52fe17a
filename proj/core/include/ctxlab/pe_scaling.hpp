#pragma once

#include <vector>

#include "ctxlab/rope.hpp"

namespace ctxlab {

/// Context-length multiplier t relative to the pretraining length L.
struct ScalingFactor {
  double t = 1.0;

  ScalingFactor() = default;
  explicit ScalingFactor(double value);
};

enum class AlphaKind { PI, YARN };

/// Per-dimension multiplicative transform alpha(t) applied to the frequency
/// basis. PI scales every dimension by 1/t; YaRN applies the power law
/// (s*t)^(-2i/(d-2)) with 1-based i (the literal displayed form).
///
/// The literal YaRN form has alpha(1) != 1 unless s = 1, which breaks the
/// progressive-chain identity z(t) = z(1) + log alpha(t). With
/// normalize_at_one (default), alpha(t) is divided element-wise by alpha(1)
/// so that alpha(1) is exactly the all-ones vector.
struct AlphaSchedule {
  AlphaKind kind = AlphaKind::PI;
  double s = 1.0;                // YaRN scale parameter, unused for PI
  bool normalize_at_one = true;
};

/// Element-wise log of a scaled basis: z = log y. The state evolved by the
/// progressive chain and by the neural ODE.
struct LogBasis {
  std::vector<double> z;
};

LogBasis log_basis(const FrequencyBasis& basis);
FrequencyBasis exp_basis(const LogBasis& z, int dims);

/// Evaluate alpha(t) for head dimension d; returns a vector of length d/2.
std::vector<double> alpha(const AlphaSchedule& schedule, ScalingFactor t, int d);

/// y(t) = alpha(t) (element-wise) * theta.
FrequencyBasis scale_basis(const FrequencyBasis& basis, std::span<const double> alpha);

/// One link of the progressive chain: z(t) = z(t-1) + log(alpha(t)/alpha(t-1)).
LogBasis chain_step(const LogBasis& z_prev, std::span<const double> alpha_prev,
                    std::span<const double> alpha_cur);

/// Max absolute deviation between f(x, T*m, theta) and f(x, m, T*theta):
/// the position-index/frequency-basis equivalence, checked numerically.
double verify_theorem1(std::span<const double> x, Position m, double T,
                       const FrequencyBasis& basis);

}  // namespace ctxlab
