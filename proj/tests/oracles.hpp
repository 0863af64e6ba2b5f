#pragma once

// Test-only reference computations, deliberately independent of the library's
// evaluation paths.

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <vector>

namespace oracle {

/// Textbook power mean ((x^p + y^p) / 2)^(1/p) in long double, no factoring.
inline long double naive_mean(long double x, long double y, long double p) {
  if (p == 0) return std::sqrt(x * y);
  return std::pow((std::pow(x, p) + std::pow(y, p)) / 2, 1 / p);
}

/// Root of naive_mean(a,d,p) - naive_mean(b,c,p) by plain sampling + secant refinement,
/// on a bracket supplied by the caller.
inline long double naive_power(const std::array<long double, 4>& q, long double lo, long double hi) {
  auto f = [&](long double p) { return naive_mean(q[0], q[3], p) - naive_mean(q[1], q[2], p); };
  long double flo = f(lo);
  for (int i = 0; i < 200; ++i) {
    const long double mid = (lo + hi) / 2;
    const long double fm = f(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

/// Every arrangement among the 24 permutations that keeps the analogy
/// m(x0, x3) = m(x1, x2) invariant for arbitrary values: the extremes stay a
/// pair and the means stay a pair.
template <class T>
std::vector<std::array<T, 4>> pair_preserving_permutations(const std::array<T, 4>& q) {
  std::array<int, 4> idx{0, 1, 2, 3};
  std::vector<std::array<T, 4>> out;
  do {
    const bool extremes_pair = (idx[0] == 0 && idx[3] == 3) || (idx[0] == 3 && idx[3] == 0) ||
                               (idx[0] == 1 && idx[3] == 2) || (idx[0] == 2 && idx[3] == 1);
    if (extremes_pair) out.push_back({q[idx[0]], q[idx[1]], q[idx[2]], q[idx[3]]});
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

/// Strictly ascending quadruple with terms drawn uniformly from [lo, hi].
inline std::array<double, 4> ordered_quadruple(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  for (;;) {
    std::array<double, 4> t{u(rng), u(rng), u(rng), u(rng)};
    std::sort(t.begin(), t.end());
    if (t[0] < t[1] && t[1] < t[2] && t[2] < t[3]) return t;
  }
}

/// Log-uniform positive value in [lo, hi].
inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

}  // namespace oracle

namespace oracle {

/// Fourth term d of a : b :: c : d in power p, in long double: d^p = b^p + c^p - a^p.
/// Returns a negative value when no positive d exists. `bias` shifts d^p by
/// bias * max(a^p, b^p, c^p) to build quadruples that clearly fail.
inline double fourth_term(double a, double b, double c, double p, double bias = 0.0) {
  const long double ap = std::pow(static_cast<long double>(a), p);
  const long double bp = std::pow(static_cast<long double>(b), p);
  const long double cp = std::pow(static_cast<long double>(c), p);
  const long double target = bp + cp - ap + bias * std::max({ap, bp, cp});
  if (!(target > 0)) return -1.0;
  return static_cast<double>(std::pow(target, 1 / static_cast<long double>(p)));
}

/// Power in [-8, 8] with |p| >= 1e-2.
inline double moderate_power(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-8, 8);
  for (;;) {
    const double p = u(rng);
    if (std::abs(p) >= 1e-2) return p;
  }
}

struct Case {
  std::array<double, 4> terms;
  double p;
  bool holds;
};

/// Alternates exact analogies in power p and quadruples whose arithmetic image
/// misses by about one percent.
inline Case analogy_case(std::mt19937_64& rng, double p, bool holds) {
  for (;;) {
    const double a = log_uniform(rng, 0.1, 10);
    const double b = log_uniform(rng, 0.1, 10);
    const double c = log_uniform(rng, 0.1, 10);
    const double d = fourth_term(a, b, c, p, holds ? 0.0 : 0.01);
    if (d > 0 && std::isfinite(d)) return Case{{a, b, c, d}, p, holds};
  }
}

}  // namespace oracle
