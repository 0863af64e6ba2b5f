#include "analogy/solver.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <utility>
#include <vector>

#include <fmt/core.h>

#include "analogy/bisection.hpp"
#include "analogy/error.hpp"
#include "analogy/means.hpp"

namespace analogy {

namespace {

void validate(const FindPOptions& o) {
  if (!(o.tol_p > 0.0)) throw DomainError("tol_p must be positive");
  if (!(o.p_max >= 1.0) || !std::isfinite(o.p_max)) throw DomainError("p_max must be finite and >= 1");
  if (o.max_iterations < 1) throw DomainError("max_iterations must be positive");
  if (!(o.zero_tol >= 0.0)) throw DomainError("zero_tol must be non-negative");
}

double relative_mismatch(const Quadruple& q, ExtendedPower p) {
  return check(q, p, 0.0).residual;
}

UniquePower closed_form(const Quadruple& q, ExtendedPower p) {
  return UniquePower{p, relative_mismatch(q, p), 0.0, 0};
}

}  // namespace

PowerResult find_p(const Quadruple& q, const FindPOptions& options) {
  require_all_positive(q, "find_p");
  if (!q.is_sorted()) {
    throw DomainError(fmt::format("find_p needs ascending terms, got {}", to_string(q)));
  }
  validate(options);

  switch (classify_equality(q.terms())) {
    case EqualityClass::AllEqual:
    case EqualityClass::PairwiseEqual:
      return AllPowers{};
    case EqualityClass::LowerPairEqual:
      return closed_form(q, ExtendedPower::neg_inf());
    case EqualityClass::UpperPairEqual:
      return closed_form(q, ExtendedPower::pos_inf());
    case EqualityClass::MeansEqual:
    case EqualityClass::AllDistinct:
      break;
  }

  const double geo_extremes = generalized_mean(PositivePair(q.a(), q.d()), ExtendedPower::zero());
  const double geo_means = generalized_mean(PositivePair(q.b(), q.c()), ExtendedPower::zero());
  const double delta_zero = geo_extremes - geo_means;
  if (std::abs(delta_zero) <= options.zero_tol * geo_extremes) {
    return closed_form(q, ExtendedPower::zero());
  }

  // delta is strictly increasing in p: a negative delta(0) puts the root on the
  // positive half-line, a positive one on the negative half-line.
  const double side = delta_zero < 0 ? 1.0 : -1.0;
  const auto f = [&](double t) { return delta(q, ExtendedPower::finite(side * t)); };
  const auto unique_at = [&](double t, double width, int iterations) -> PowerResult {
    const ExtendedPower p = ExtendedPower::finite(side * t);
    return UniquePower{p, relative_mismatch(q, p), width, iterations};
  };

  double lo = 0.0;
  double f_lo = delta_zero;
  double hi = 1.0;
  for (;;) {
    const double f_hi = f(hi);
    if (f_hi == 0.0) return unique_at(hi, 0.0, 0);
    if ((f_hi < 0) != (f_lo < 0)) break;
    lo = hi;
    f_lo = f_hi;
    hi *= 2.0;
    if (hi > options.p_max) {
      return DegenerateInfinite{side > 0 ? ExtendedPower::pos_inf() : ExtendedPower::neg_inf()};
    }
  }

  const BisectionResult root = bisect(f, lo, hi, f_lo, options.tol_p, options.max_iterations);
  return unique_at(root.root, root.hi - root.lo, root.iterations);
}

bool extremes_frame_means(const Quadruple& q) {
  const auto [e_lo, e_hi] = std::minmax({q.a(), q.d()});
  const auto [m_lo, m_hi] = std::minmax({q.b(), q.c()});
  return (e_lo <= m_lo && e_hi >= m_hi) || (m_lo <= e_lo && m_hi >= e_hi);
}

PowerResult find_p_in_arrangement(const Quadruple& q, const FindPOptions& options) {
  require_all_positive(q, "find_p_in_arrangement");
  const auto [e_lo, e_hi] = std::minmax({q.a(), q.d()});
  const auto [m_lo, m_hi] = std::minmax({q.b(), q.c()});
  // Swapping the extremes, swapping the means and inverting the ratios are all
  // equivalent forms, so a framing arrangement has the same power as its
  // ascending rewrite.
  if (e_lo <= m_lo && e_hi >= m_hi) return find_p(Quadruple(e_lo, m_lo, m_hi, e_hi), options);
  if (m_lo <= e_lo && m_hi >= e_hi) return find_p(Quadruple(m_lo, e_lo, e_hi, m_hi), options);
  return NoPower{NoPowerReason::ExtremesDoNotFrameMeans};
}

PowerResult boolean_power(BooleanVerdict verdict) {
  if (verdict == BooleanVerdict::ValidAllP) return AllPowers{};
  return NoPower{NoPowerReason::BooleanCross};
}

std::string to_string(NoPowerReason reason) {
  switch (reason) {
    case NoPowerReason::ExtremesDoNotFrameMeans:
      return "extremes-do-not-frame-means";
    case NoPowerReason::BooleanCross:
      return "boolean-cross";
  }
  return "?";
}

std::size_t sign_change_scan(const Quadruple& q, double p_lo, double p_hi, std::size_t n,
                             unsigned workers) {
  require_all_positive(q, "sign_change_scan");
  if (!q.is_sorted()) throw DomainError("sign_change_scan needs an ascending quadruple");
  if (!(p_lo < p_hi) || !std::isfinite(p_lo) || !std::isfinite(p_hi)) {
    throw DomainError(fmt::format("invalid scan interval [{}, {}]", p_lo, p_hi));
  }
  if (n < 2) throw DomainError("sign_change_scan needs at least two grid points");

  const double step = (p_hi - p_lo) / static_cast<double>(n - 1);
  const auto grid_point = [&](std::size_t i) {
    return i + 1 == n ? p_hi : p_lo + step * static_cast<double>(i);
  };

  std::vector<double> values(n, 0.0);
  std::vector<char> skip(n, 0);
  const auto evaluate = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const double p = grid_point(i);
      if (std::abs(p) < kMinFinitePower) {
        skip[i] = 1;
      } else {
        values[i] = delta(q, ExtendedPower::finite(p));
      }
    }
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  if (workers <= 1) {
    evaluate(0, n);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (std::size_t begin = 0; begin < n; begin += chunk) {
      pool.emplace_back(evaluate, begin, std::min(n, begin + chunk));
    }
  }

  const bool has_zero_sample = p_lo <= 0.0 && 0.0 <= p_hi;
  const double delta_zero = has_zero_sample ? delta(q, ExtendedPower::zero()) : 0.0;

  std::size_t changes = 0;
  int last_sign = 0;
  const auto feed = [&](double v) {
    const int sign = (v > 0) - (v < 0);
    if (sign == 0) return;
    if (last_sign != 0 && sign != last_sign) ++changes;
    last_sign = sign;
  };
  bool zero_fed = !has_zero_sample;
  for (std::size_t i = 0; i < n; ++i) {
    const double p = grid_point(i);
    if (!zero_fed && p >= 0.0) {
      feed(delta_zero);
      zero_fed = true;
    }
    if (!skip[i]) feed(values[i]);
  }
  if (!zero_fed) feed(delta_zero);
  return changes;
}

SolveResult solve_real(const KnownTerms& known, Position missing, ExtendedPower p) {
  for (double t : known) {
    if (!(t > 0.0) || !std::isfinite(t)) {
      throw DomainError(fmt::format("solve_real needs positive finite knowns, got {}", t));
    }
  }
  const auto [a, b, c] = move_unknown_to_d(known, missing);

  switch (p.kind()) {
    case ExtendedPower::Kind::Zero:
      return UniqueReal{(b / a) * c};
    case ExtendedPower::Kind::NegInf: {
      const double m = std::min(b, c);
      if (a < m) return NoSolution{};
      if (a == m) return HalfLineAtLeast{a};
      return UniqueReal{m};
    }
    case ExtendedPower::Kind::PosInf: {
      const double m = std::max(b, c);
      if (a > m) return NoSolution{};
      if (a == m) return HalfLineAtMost{a};
      return UniqueReal{m};
    }
    case ExtendedPower::Kind::Finite:
      break;
  }

  const double power = p.value();
  const double pivot = power > 0 ? std::max({a, b, c}) : std::min({a, b, c});
  const double target =
      std::pow(b / pivot, power) + std::pow(c / pivot, power) - std::pow(a / pivot, power);
  if (!(target > 0.0)) return NoSolution{};
  const double x = pivot * std::pow(target, 1.0 / power);
  if (!std::isfinite(x) || x == 0.0) {
    throw DomainError("solution of the analogical equation is out of double range");
  }
  return UniqueReal{x};
}

std::string to_string(Position position) {
  switch (position) {
    case Position::A:
      return "a";
    case Position::B:
      return "b";
    case Position::C:
      return "c";
    case Position::D:
      return "d";
  }
  return "?";
}

}  // namespace analogy
