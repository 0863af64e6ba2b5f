#include "analogy/quadruple.hpp"

#include <cmath>

#include <fmt/core.h>

#include "analogy/error.hpp"

namespace analogy {

SignMode sign_mode_of(double a, double b, double c, double d) {
  const bool na = a < 0, nb = b < 0, nc = c < 0, nd = d < 0;
  const int negatives = na + nb + nc + nd;
  if (negatives == 0) return SignMode::AllPositive;
  if (negatives == 4) return SignMode::AllNegative;
  if (negatives == 2 && ((na && nb) || (nc && nd))) return SignMode::TwoNegativeRatio;
  return SignMode::Mixed;
}

Quadruple::Quadruple(double a, double b, double c, double d) : terms_{a, b, c, d} {
  for (double t : terms_) {
    if (t == 0.0 || !std::isfinite(t)) {
      throw DomainError(fmt::format("quadruple terms must be nonzero and finite, got {}", t));
    }
  }
  sign_mode_ = sign_mode_of(a, b, c, d);
}

bool Quadruple::is_sorted() const {
  return terms_[0] <= terms_[1] && terms_[1] <= terms_[2] && terms_[2] <= terms_[3];
}

bool Quadruple::is_strictly_sorted() const {
  return terms_[0] < terms_[1] && terms_[1] < terms_[2] && terms_[2] < terms_[3];
}

std::string to_string(SignMode mode) {
  switch (mode) {
    case SignMode::AllPositive:
      return "all-positive";
    case SignMode::TwoNegativeRatio:
      return "two-negative-ratio";
    case SignMode::AllNegative:
      return "all-negative";
    case SignMode::Mixed:
      return "mixed";
  }
  return "?";
}

std::string to_string(const Quadruple& q) {
  return fmt::format("{:.10g} : {:.10g} :: {:.10g} : {:.10g}", q.a(), q.b(), q.c(), q.d());
}

void require_all_positive(const Quadruple& q, const char* operation) {
  if (!q.all_positive()) {
    throw DomainError(fmt::format("{} requires all terms positive, got {} ({})", operation,
                                  to_string(q), to_string(q.sign_mode())));
  }
}

}  // namespace analogy
