#include "ctxlab/pe_scaling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ctxlab {

ScalingFactor::ScalingFactor(double value) : t(value) {
  if (!(value >= 1.0) || !std::isfinite(value))
    throw std::invalid_argument("ScalingFactor: t must be finite and >= 1");
}

LogBasis log_basis(const FrequencyBasis& basis) {
  basis.validate();
  LogBasis out;
  out.z.resize(basis.values.size());
  std::transform(basis.values.begin(), basis.values.end(), out.z.begin(),
                 [](double v) { return std::log(v); });
  return out;
}

FrequencyBasis exp_basis(const LogBasis& z, int dims) {
  FrequencyBasis b;
  b.dims = dims;
  b.values.resize(z.z.size());
  std::transform(z.z.begin(), z.z.end(), b.values.begin(),
                 [](double v) { return std::exp(v); });
  b.validate();
  return b;
}

std::vector<double> alpha(const AlphaSchedule& schedule, ScalingFactor t, int d) {
  if (d < 2 || d % 2 != 0)
    throw std::invalid_argument("alpha: d must be even and >= 2");
  const std::size_t pairs = static_cast<std::size_t>(d) / 2;
  std::vector<double> out(pairs);
  switch (schedule.kind) {
    case AlphaKind::PI:
      std::fill(out.begin(), out.end(), 1.0 / t.t);
      break;
    case AlphaKind::YARN: {
      if (d < 4)
        throw std::invalid_argument("alpha: YaRN requires d >= 4 (d-2 exponent denominator)");
      if (!(schedule.s > 0.0))
        throw std::invalid_argument("alpha: YaRN scale s must be > 0");
      // literal displayed form: 1-based i = 1..d/2
      for (std::size_t i = 0; i < pairs; ++i) {
        const double expo = -2.0 * static_cast<double>(i + 1) / (d - 2);
        out[i] = std::pow(schedule.s * t.t, expo);
        if (schedule.normalize_at_one) out[i] /= std::pow(schedule.s, expo);
      }
      break;
    }
  }
  return out;
}

FrequencyBasis scale_basis(const FrequencyBasis& basis, std::span<const double> alpha) {
  basis.validate();
  if (alpha.size() != basis.values.size())
    throw std::invalid_argument("scale_basis: alpha length must equal d/2");
  FrequencyBasis out;
  out.dims = basis.dims;
  out.values.resize(basis.values.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (!(alpha[i] > 0.0))
      throw std::invalid_argument("scale_basis: alpha entries must be positive");
    out.values[i] = basis.values[i] * alpha[i];
  }
  return out;
}

LogBasis chain_step(const LogBasis& z_prev, std::span<const double> alpha_prev,
                    std::span<const double> alpha_cur) {
  if (alpha_prev.size() != z_prev.z.size() || alpha_cur.size() != z_prev.z.size())
    throw std::invalid_argument("chain_step: length mismatch");
  LogBasis out;
  out.z.resize(z_prev.z.size());
  for (std::size_t i = 0; i < out.z.size(); ++i) {
    if (!(alpha_prev[i] > 0.0) || !(alpha_cur[i] > 0.0))
      throw std::invalid_argument("chain_step: alpha entries must be positive");
    out.z[i] = z_prev.z[i] + std::log(alpha_cur[i]) - std::log(alpha_prev[i]);
  }
  return out;
}

double verify_theorem1(std::span<const double> x, Position m, double T,
                       const FrequencyBasis& basis) {
  if (!(T > 0.0))
    throw std::invalid_argument("verify_theorem1: T must be > 0");
  const std::vector<double> lhs = apply_rope(x, Position(T * m.value), basis);

  FrequencyBasis scaled = basis;
  for (double& v : scaled.values) v *= T;
  const std::vector<double> rhs = apply_rope(x, m, scaled);

  double dev = 0.0;
  for (std::size_t i = 0; i < lhs.size(); ++i)
    dev = std::max(dev, std::abs(lhs[i] - rhs[i]));
  return dev;
}

}  // namespace ctxlab
