#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <string>
#include <variant>

#include "analogy/analogy_ops.hpp"
#include "analogy/extended_power.hpp"
#include "analogy/quadruple.hpp"

namespace analogy {

// ---------------------------------------------------------------------------
// Finding the power of a quadruple

struct UniquePower {
  ExtendedPower p;
  /// Relative mismatch of the two means at p (same measure as check()).
  double residual = 0.0;
  /// Width of the final bisection bracket; 0 for closed-form answers.
  double bracket_width = 0.0;
  int iterations = 0;
};

/// Every power, finite or infinite, validates the analogy.
struct AllPowers {};

enum class NoPowerReason { ExtremesDoNotFrameMeans, BooleanCross };

struct NoPower {
  NoPowerReason reason;
};

/// No sign change of delta up to |p| = p_max: numerically indistinguishable
/// from the min (NegInf) or max (PosInf) limit.
struct DegenerateInfinite {
  ExtendedPower side;
};

using PowerResult = std::variant<UniquePower, AllPowers, NoPower, DegenerateInfinite>;

struct FindPOptions {
  /// Stop when the bisection bracket is at most this wide.
  double tol_p = 1e-10;
  /// Bracket expansion gives up beyond this |p|.
  double p_max = 512.0;
  int max_iterations = 200;
  /// p = 0 is declared when |sqrt(ad) - sqrt(bc)| <= zero_tol * sqrt(ad).
  double zero_tol = 1e-12;
};

/// The unique power of an ascending quadruple a <= b <= c <= d of positive terms.
///
/// Ties are resolved by classify_equality: all-equal and pairwise-equal give
/// AllPowers, a = b < d gives -inf, a < c = d gives +inf. Otherwise delta(0) is
/// tested first and its sign picks the half-line that is bisected; the bracket
/// starts at |p| = 1 and doubles up to p_max. Throws DomainError on unsorted or
/// non-positive input.
PowerResult find_p(const Quadruple& q, const FindPOptions& options = {});

/// The power of a quadruple taken in the given arrangement, without choosing a
/// reordering. Returns NoPower(ExtremesDoNotFrameMeans) unless the extremes
/// frame the means or the means frame the extremes; otherwise the arrangement is
/// brought to ascending order through the eight equivalent forms and solved by
/// find_p.
PowerResult find_p_in_arrangement(const Quadruple& q, const FindPOptions& options = {});

/// True when min/max of {a, d} enclose {b, c} or the reverse.
bool extremes_frame_means(const Quadruple& q);

/// ValidAllP -> AllPowers, InvalidNoP -> NoPower(BooleanCross).
PowerResult boolean_power(BooleanVerdict verdict);

std::string to_string(NoPowerReason reason);

/// Number of strict sign alternations of delta over an n-point uniform grid on
/// [p_lo, p_hi] plus the exact sample at p = 0 (grid points with |p| < 1e-8 are
/// dropped in favour of it). Zeros do not break a run. Requires an
/// ascending positive quadruple, p_lo < p_hi and n >= 2. The grid is evaluated
/// across `workers` threads (0 = hardware concurrency); the count does not
/// depend on the partitioning.
std::size_t sign_change_scan(const Quadruple& q, double p_lo, double p_hi, std::size_t n,
                             unsigned workers = 0);

// ---------------------------------------------------------------------------
// Solving analogical equations

enum class Position { A, B, C, D };

struct UniqueReal {
  double x;
};

struct UniqueComplex {
  std::complex<double> x;
  /// Sheet of the logarithm of x on which x^p reproduces the target:
  /// x^p = exp(p * (Log x + 2*pi*i*branch)). Zero when the principal power
  /// already does; nonzero only for |p| < 1.
  int branch = 0;
};

/// Every x >= bound (with p = -inf).
struct HalfLineAtLeast {
  double bound;
};

/// Every x in (0, bound] (with p = +inf).
struct HalfLineAtMost {
  double bound;
};

struct NoSolution {};

using SolveResult = std::variant<UniqueReal, UniqueComplex, HalfLineAtLeast, HalfLineAtMost, NoSolution>;

/// Known terms in position order with the missing one removed, e.g. for a
/// missing B: (a, c, d).
using KnownTerms = std::array<double, 3>;
using ComplexKnownTerms = std::array<std::complex<double>, 3>;

/// Re-expresses the knowns so that the unknown sits in position D, using
/// d:b::c:a (missing A), c:a::d:b (missing B) and b:d::a:c (missing C).
/// Returns (a', b', c') of a':b'::c':x.
template <class T>
std::array<T, 3> move_unknown_to_d(const std::array<T, 3>& known, Position missing) {
  switch (missing) {
    case Position::A:
      return {known[2], known[0], known[1]};
    case Position::B:
      return {known[1], known[0], known[2]};
    case Position::C:
      return {known[1], known[2], known[0]};
    case Position::D:
      break;
  }
  return known;
}

/// Positive real solution of the analogical equation. Finite p: x^p = b^p + c^p - a^p
/// when that is positive; Zero: x = bc/a; -inf / +inf follow the min / max case
/// analysis and may yield a half-line.
SolveResult solve_real(const KnownTerms& known, Position missing, ExtendedPower p);

/// Complex solution with principal-branch powers z^p = exp(p Log z),
/// Im Log z in (-pi, pi]. p must be Finite or Zero; knowns must be nonzero.
SolveResult solve_complex(const ComplexKnownTerms& known, Position missing, ExtendedPower p);

/// Principal logarithm with the imaginary part in (-pi, pi] (a negative zero
/// imaginary part counts as +0).
std::complex<double> principal_log(std::complex<double> z);

/// exp(p * (Log z + 2*pi*i*branch)).
std::complex<double> complex_power(std::complex<double> z, double p, int branch = 0);

/// |a^p + x^p - b^p - c^p| / (|a^p| + |b^p| + |c^p|) with principal powers for the
/// knowns and x^p taken on the given branch.
double complex_equation_residual(const ComplexKnownTerms& abc, std::complex<double> x, double p,
                                 int branch = 0);

std::string to_string(Position position);

}  // namespace analogy
