#include "analogy/analogy_ops.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/core.h>

#include "analogy/error.hpp"
#include "analogy/means.hpp"

namespace analogy {

AnalogyVerdict check(const Quadruple& q, ExtendedPower p, double rel_tol) {
  require_all_positive(q, "check");
  if (!(rel_tol >= 0.0)) throw DomainError("rel_tol must be non-negative");
  const double extremes = generalized_mean(PositivePair(q.a(), q.d()), p);
  const double means = generalized_mean(PositivePair(q.b(), q.c()), p);
  const double residual = std::abs(extremes - means) / std::max(extremes, means);
  return {residual <= rel_tol, residual, p};
}

std::array<Quadruple, 8> equivalent_forms(const Quadruple& q) {
  const double a = q.a(), b = q.b(), c = q.c(), d = q.d();
  return {Quadruple(a, b, c, d), Quadruple(a, c, b, d), Quadruple(b, a, d, c),
          Quadruple(b, d, a, c), Quadruple(c, a, d, b), Quadruple(c, d, a, b),
          Quadruple(d, b, c, a), Quadruple(d, c, b, a)};
}

std::array<Quadruple, 3> reorderings(const std::array<double, 4>& terms) {
  std::array<double, 4> s = terms;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw DomainError("reorderings need four distinct terms; use classify_equality for ties");
  }
  return {Quadruple(s[0], s[1], s[2], s[3]), Quadruple(s[0], s[2], s[3], s[1]),
          Quadruple(s[0], s[3], s[1], s[2])};
}

Quadruple scale(const Quadruple& q, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw DomainError(fmt::format("scale factor must be positive and finite, got {}", lambda));
  }
  return Quadruple(lambda * q.a(), lambda * q.b(), lambda * q.c(), lambda * q.d());
}

Quadruple to_unit_interval(const Quadruple& q) {
  require_all_positive(q, "to_unit_interval");
  const double d = q.d();
  if (q.a() > d || q.b() > d || q.c() > d) {
    throw DomainError("to_unit_interval needs d to be the largest term; reorder with equivalent_forms");
  }
  return Quadruple(q.a() / d, q.b() / d, q.c() / d, 1.0);
}

std::array<double, 4> to_arithmetic(const Quadruple& q, ExtendedPower p) {
  require_all_positive(q, "to_arithmetic");
  if (p.is_infinite()) {
    throw DomainError("min/max analogies have no arithmetic reduction");
  }
  std::array<double, 4> image{};
  for (std::size_t i = 0; i < 4; ++i) {
    image[i] = p.is_zero() ? std::log(q[i]) : std::pow(q[i], p.value());
  }
  return image;
}

AnalogyVerdict check_arithmetic(const std::array<double, 4>& terms, double rel_tol) {
  const double extremes = terms[0] + terms[3];
  const double means = terms[1] + terms[2];
  const double scale_ref =
      std::max(std::abs(terms[0]) + std::abs(terms[3]), std::abs(terms[1]) + std::abs(terms[2]));
  const double residual = scale_ref == 0.0 ? 0.0 : std::abs(extremes - means) / scale_ref;
  return {residual <= rel_tol, residual, ExtendedPower::finite(1.0)};
}

Quadruple compose_powers(const Quadruple& q, ExtendedPower p, double exponent) {
  if (!q.all_positive()) {
    throw DomainError(
        "composition of powers is undefined with negative terms (it turns a valid "
        "analogy into one whose extremes do not frame the means)");
  }
  if (!p.is_finite()) throw DomainError("compose_powers needs a finite nonzero power");
  if (exponent == 0.0 || !std::isfinite(exponent)) {
    throw DomainError("compose_powers needs a finite nonzero exponent");
  }
  return Quadruple(std::pow(q.a(), exponent), std::pow(q.b(), exponent),
                   std::pow(q.c(), exponent), std::pow(q.d(), exponent));
}

Quadruple to_reciprocal(const Quadruple& q) {
  require_all_positive(q, "to_reciprocal");
  return Quadruple(1.0 / q.a(), 1.0 / q.b(), 1.0 / q.c(), 1.0 / q.d());
}

EqualityClass classify_equality(const std::array<double, 4>& terms) {
  for (double t : terms) {
    if (!(t > 0.0) || !std::isfinite(t)) {
      throw DomainError(fmt::format("classify_equality needs positive terms, got {}", t));
    }
  }
  std::array<double, 4> s = terms;
  std::sort(s.begin(), s.end());
  const bool low = s[0] == s[1];
  const bool mid = s[1] == s[2];
  const bool high = s[2] == s[3];
  if (s[0] == s[3]) return EqualityClass::AllEqual;
  if (low && high) return EqualityClass::PairwiseEqual;
  if (low) return EqualityClass::LowerPairEqual;
  if (high) return EqualityClass::UpperPairEqual;
  if (mid) return EqualityClass::MeansEqual;
  return EqualityClass::AllDistinct;
}

std::string to_string(EqualityClass cls) {
  switch (cls) {
    case EqualityClass::AllDistinct:
      return "all-distinct";
    case EqualityClass::MeansEqual:
      return "means-equal";
    case EqualityClass::PairwiseEqual:
      return "pairwise-equal";
    case EqualityClass::AllEqual:
      return "all-equal";
    case EqualityClass::LowerPairEqual:
      return "lower-pair-equal";
    case EqualityClass::UpperPairEqual:
      return "upper-pair-equal";
  }
  return "?";
}

BooleanVerdict boolean_check(const std::array<int, 4>& terms) {
  int trues = 0;
  for (int t : terms) {
    if (t != 0 && t != 1) throw DomainError(fmt::format("Boolean terms must be 0 or 1, got {}", t));
    trues += t;
  }
  if (trues % 2 != 0) {
    throw DomainError("not a Boolean analogy: an odd number of terms are true");
  }
  // Balanced patterns: the ascending ones 0:0::1:1 (and its forms) plus the
  // constants are valid; only the crossed 0:1::1:0 / 1:0::0:1 remain.
  const bool crossed = terms[0] == terms[3] && terms[1] == terms[2] && terms[0] != terms[1];
  return crossed ? BooleanVerdict::InvalidNoP : BooleanVerdict::ValidAllP;
}

std::string to_string(BooleanVerdict verdict) {
  return verdict == BooleanVerdict::ValidAllP ? "valid: every power validates"
                                              : "invalid: no power validates";
}

Quadruple negative_normalize(const Quadruple& q) {
  switch (q.sign_mode()) {
    case SignMode::AllNegative:
      return Quadruple(-q.a(), -q.b(), -q.c(), -q.d());
    case SignMode::TwoNegativeRatio:
      if (q.a() < 0) return Quadruple(-q.b(), -q.a(), q.c(), q.d());
      return Quadruple(q.a(), q.b(), -q.d(), -q.c());
    case SignMode::AllPositive:
      throw DomainError("negative_normalize: quadruple is already all-positive");
    case SignMode::Mixed:
      break;
  }
  throw DomainError(
      "negative_normalize: only two negative terms forming one ratio, or four negative "
      "terms, have a defined extension");
}

}  // namespace analogy
