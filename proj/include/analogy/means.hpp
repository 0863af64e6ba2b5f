#pragma once

#include <span>

#include "analogy/extended_power.hpp"
#include "analogy/quadruple.hpp"

namespace analogy {

/// Finite powers with magnitude below this are evaluated as the geometric mean.
/// The factored formula loses all accuracy in the exponent 1/p below it.
inline constexpr double kMinFinitePower = 1e-8;

/// Two strictly positive finite reals.
class PositivePair {
 public:
  /// Throws DomainError unless x > 0 and y > 0 (both finite).
  PositivePair(double x, double y);

  double x() const { return x_; }
  double y() const { return y_; }

 private:
  double x_;
  double y_;
};

/// Power mean of two positive numbers.
///
/// Finite powers use the factored form M * ((1 + (m/M)^p) / 2)^(1/p) with the
/// maximum factored out for p > 0 and the minimum for p < 0, so the inner power
/// stays in (0, 1] and nothing overflows. Zero is the geometric mean, NegInf and
/// PosInf are min and max. The result is clamped to [min, max].
double generalized_mean(const PositivePair& pair, ExtendedPower p);

/// Power mean of N positive values, same factoring against the max (p > 0) or
/// min (p < 0) element. Throws DomainError on an empty list or non-positive entry.
double generalized_mean_n(std::span<const double> values, ExtendedPower p);

/// m_p(a, d) - m_p(b, c). Throws DomainError if any term is not positive.
double delta(const Quadruple& q, ExtendedPower p);

}  // namespace analogy
