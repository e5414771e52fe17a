#include "ctxlab/rope.hpp"

#include <cmath>
#include <stdexcept>

namespace ctxlab {

Position::Position(double v) : value(v) {
  if (!(v >= 0.0) || !std::isfinite(v))
    throw std::invalid_argument("Position must be finite and >= 0");
}

void FrequencyBasis::validate() const {
  if (dims < 2 || dims % 2 != 0)
    throw std::invalid_argument("FrequencyBasis: dims must be even and >= 2");
  if (values.size() != static_cast<std::size_t>(dims) / 2)
    throw std::invalid_argument("FrequencyBasis: values must have length d/2");
  for (double v : values)
    if (!(v > 0.0) || !std::isfinite(v))
      throw std::invalid_argument("FrequencyBasis: entries must be positive and finite");
}

FrequencyBasis make_basis(int d, double base) {
  if (d < 2 || d % 2 != 0)
    throw std::invalid_argument("make_basis: d must be even and >= 2");
  if (!(base > 1.0))
    throw std::invalid_argument("make_basis: base must be > 1");
  FrequencyBasis b;
  b.dims = d;
  b.values.resize(static_cast<std::size_t>(d) / 2);
  for (std::size_t i = 0; i < b.values.size(); ++i)
    b.values[i] = std::pow(base, -2.0 * static_cast<double>(i) / d);
  return b;
}

std::vector<double> apply_rope(std::span<const double> x, Position m,
                               const FrequencyBasis& basis) {
  if (x.size() != static_cast<std::size_t>(basis.dims))
    throw std::invalid_argument("apply_rope: x length must equal basis dims");
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < basis.values.size(); ++i) {
    const double angle = m.value * basis.values[i];
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const double a = x[2 * i];
    const double b = x[2 * i + 1];
    out[2 * i] = a * c - b * s;
    out[2 * i + 1] = a * s + b * c;
  }
  return out;
}

double rope_score(std::span<const double> q, std::span<const double> k,
                  Position m_q, Position m_k, const FrequencyBasis& basis) {
  if (q.size() != k.size())
    throw std::invalid_argument("rope_score: q and k lengths differ");
  const std::vector<double> qr = apply_rope(q, m_q, basis);
  const std::vector<double> kr = apply_rope(k, m_k, basis);
  double acc = 0.0;
  for (std::size_t i = 0; i < qr.size(); ++i) acc += qr[i] * kr[i];
  return acc;
}

}  // namespace ctxlab
