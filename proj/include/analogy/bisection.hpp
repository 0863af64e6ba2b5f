#pragma once

#include <cmath>
#include <vector>

namespace analogy {

struct BisectionResult {
  double root = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  int iterations = 0;
  /// The function evaluated to exactly zero at `root`.
  bool exact = false;
};

/// Dichotomic search for a sign change of `f` on [lo, hi].
///
/// `f_lo` is the value (or just the sign) of f at `lo`; it is passed in so that
/// `lo` itself is never evaluated. f(hi) must have the opposite sign. Halves the
/// bracket until its width is <= `tol` or `max_iterations` is reached, and
/// returns the midpoint of the final bracket. When `widths` is given, the bracket
/// width after every iteration is appended to it.
template <class F>
BisectionResult bisect(F&& f, double lo, double hi, double f_lo, double tol, int max_iterations,
                       std::vector<double>* widths = nullptr) {
  BisectionResult result;
  const bool lo_negative = f_lo < 0;
  while (hi - lo > tol && result.iterations < max_iterations) {
    const double mid = lo + 0.5 * (hi - lo);
    const double f_mid = f(mid);
    ++result.iterations;
    if (f_mid == 0.0) {
      result.root = mid;
      result.lo = mid;
      result.hi = mid;
      result.exact = true;
      if (widths) widths->push_back(0.0);
      return result;
    }
    if ((f_mid < 0) == lo_negative) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (widths) widths->push_back(hi - lo);
  }
  result.lo = lo;
  result.hi = hi;
  result.root = lo + 0.5 * (hi - lo);
  return result;
}

}  // namespace analogy
