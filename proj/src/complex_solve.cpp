#include <algorithm>
#include <cmath>
#include <numbers>

#include <fmt/core.h>

#include "analogy/error.hpp"
#include "analogy/solver.hpp"

namespace analogy {

std::complex<double> principal_log(std::complex<double> z) {
  double angle = std::atan2(z.imag(), z.real());
  if (angle <= -std::numbers::pi) angle = std::numbers::pi;
  return {std::log(std::abs(z)), angle};
}

std::complex<double> complex_power(std::complex<double> z, double p, int branch) {
  const std::complex<double> log_z =
      principal_log(z) + std::complex<double>(0.0, 2.0 * std::numbers::pi * branch);
  return std::exp(p * log_z);
}

double complex_equation_residual(const ComplexKnownTerms& abc, std::complex<double> x, double p,
                                 int branch) {
  const auto pa = complex_power(abc[0], p);
  const auto pb = complex_power(abc[1], p);
  const auto pc = complex_power(abc[2], p);
  const auto px = complex_power(x, p, branch);
  return std::abs(pa + px - pb - pc) / (std::abs(pa) + std::abs(pb) + std::abs(pc));
}

SolveResult solve_complex(const ComplexKnownTerms& known, Position missing, ExtendedPower p) {
  for (const auto& z : known) {
    if (z == std::complex<double>(0.0, 0.0)) {
      throw DomainError("solve_complex: 0^p is undefined, knowns must be nonzero");
    }
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw DomainError("solve_complex: knowns must be finite");
    }
  }
  if (p.is_infinite()) throw DomainError("solve_complex needs a finite power");
  const auto [a, b, c] = move_unknown_to_d(known, missing);

  if (p.is_zero()) return UniqueComplex{(b / a) * c, 0};

  // (r z)^p = r^p z^p for real r > 0, so factoring out the largest (p > 0) or
  // smallest (p < 0) modulus keeps every power in range.
  const double power = p.value();
  const double moduli[] = {std::abs(a), std::abs(b), std::abs(c)};
  const double pivot = power > 0 ? *std::max_element(std::begin(moduli), std::end(moduli))
                                 : *std::min_element(std::begin(moduli), std::end(moduli));
  const std::complex<double> target =
      complex_power(b / pivot, power) + complex_power(c / pivot, power) - complex_power(a / pivot, power);
  if (target == std::complex<double>(0.0, 0.0)) return NoSolution{};

  const std::complex<double> root_log = principal_log(target) / power;
  const std::complex<double> x = pivot * std::exp(root_log);
  if (!std::isfinite(x.real()) || !std::isfinite(x.imag()) || x == std::complex<double>(0.0, 0.0)) {
    throw DomainError("solution of the analogical equation is out of double range");
  }
  // For |p| < 1 the root's angle can leave (-pi, pi]; record the sheet that
  // undoes the wrap so that x^p on it gives back the target.
  const double wrapped = principal_log(x / pivot).imag();
  const int branch = static_cast<int>(std::lround((root_log.imag() - wrapped) / (2.0 * std::numbers::pi)));
  return UniqueComplex{x, branch};
}

}  // namespace analogy
