#include "analogy/means.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/core.h>

#include "analogy/error.hpp"

namespace analogy {

namespace {

bool is_positive_finite(double v) { return v > 0.0 && std::isfinite(v); }

double geometric_pair(double x, double y) { return std::sqrt(x) * std::sqrt(y); }

}  // namespace

PositivePair::PositivePair(double x, double y) : x_(x), y_(y) {
  if (!is_positive_finite(x) || !is_positive_finite(y)) {
    throw DomainError(fmt::format("generalized mean needs positive finite terms, got ({}, {})", x, y));
  }
}

double generalized_mean(const PositivePair& pair, ExtendedPower p) {
  const double lo = std::min(pair.x(), pair.y());
  const double hi = std::max(pair.x(), pair.y());

  double mean = 0.0;
  switch (p.kind()) {
    case ExtendedPower::Kind::NegInf:
      return lo;
    case ExtendedPower::Kind::PosInf:
      return hi;
    case ExtendedPower::Kind::Zero:
      mean = geometric_pair(lo, hi);
      break;
    case ExtendedPower::Kind::Finite: {
      const double power = p.value();
      if (std::abs(power) < kMinFinitePower) {
        mean = geometric_pair(lo, hi);
      } else if (power > 0) {
        mean = hi * std::pow(0.5 * (1.0 + std::pow(lo / hi, power)), 1.0 / power);
      } else {
        mean = lo * std::pow(0.5 * (1.0 + std::pow(hi / lo, power)), 1.0 / power);
      }
      break;
    }
  }
  return std::clamp(mean, lo, hi);
}

double generalized_mean_n(std::span<const double> values, ExtendedPower p) {
  if (values.empty()) throw DomainError("generalized mean of an empty list");
  for (double v : values) {
    if (!is_positive_finite(v)) {
      throw DomainError(fmt::format("generalized mean needs positive finite terms, got {}", v));
    }
  }
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  const double n = static_cast<double>(values.size());

  const auto geometric = [&] {
    double log_sum = 0.0;
    for (double v : values) log_sum += std::log(v / hi);
    return hi * std::exp(log_sum / n);
  };

  double mean = 0.0;
  switch (p.kind()) {
    case ExtendedPower::Kind::NegInf:
      return lo;
    case ExtendedPower::Kind::PosInf:
      return hi;
    case ExtendedPower::Kind::Zero:
      mean = geometric();
      break;
    case ExtendedPower::Kind::Finite: {
      const double power = p.value();
      if (std::abs(power) < kMinFinitePower) {
        mean = geometric();
        break;
      }
      const double pivot = power > 0 ? hi : lo;
      double sum = 0.0;
      for (double v : values) sum += std::pow(v / pivot, power);
      mean = pivot * std::pow(sum / n, 1.0 / power);
      break;
    }
  }
  return std::clamp(mean, lo, hi);
}

double delta(const Quadruple& q, ExtendedPower p) {
  require_all_positive(q, "delta");
  return generalized_mean(PositivePair(q.a(), q.d()), p) -
         generalized_mean(PositivePair(q.b(), q.c()), p);
}

}  // namespace analogy
