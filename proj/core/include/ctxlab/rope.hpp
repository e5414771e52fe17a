#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ctxlab {

/// Position index of a token. Real-valued: uniform position extrapolation
/// stretches integer indices by a non-integer factor.
struct Position {
  double value = 0.0;

  Position() = default;
  explicit Position(double v);
};

/// Per-pair rotation frequencies of rotary position embedding. For head
/// dimension d there are d/2 frequencies theta_i (radians per position unit);
/// every scaled PE variant is a different assignment of these values.
struct FrequencyBasis {
  int dims = 0;                 // head dimension d (even)
  std::vector<double> values;   // theta, length d/2, strictly positive

  std::size_t pairs() const { return values.size(); }
  void validate() const;        // throws std::invalid_argument on violation
};

/// Standard basis theta_i = base^(-2i/d) for i = 0..d/2-1 (theta_0 = 1).
FrequencyBasis make_basis(int d, double base);

/// Rotate each consecutive pair (x_{2i}, x_{2i+1}) by angle m * theta_i.
/// Pure rotation: per-pair Euclidean norm is preserved.
std::vector<double> apply_rope(std::span<const double> x, Position m,
                               const FrequencyBasis& basis);

/// Attention score <f(q, m_q), f(k, m_k)>. Depends on positions only through
/// the difference m_q - m_k.
double rope_score(std::span<const double> q, std::span<const double> k,
                  Position m_q, Position m_k, const FrequencyBasis& basis);

}  // namespace ctxlab
