#pragma once

#include <array>
#include <string>

#include "analogy/extended_power.hpp"
#include "analogy/quadruple.hpp"

namespace analogy {

inline constexpr double kDefaultRelTol = 1e-9;

struct AnalogyVerdict {
  bool holds = false;
  /// |m_p(a,d) - m_p(b,c)| / max(m_p(a,d), m_p(b,c)).
  double residual = 0.0;
  ExtendedPower p_used = ExtendedPower::zero();
};

/// Analogy in power p: m_p(a, d) == m_p(b, c) up to `rel_tol` relative.
/// Only all-positive quadruples are accepted; negatives go through
/// negative_normalize first.
AnalogyVerdict check(const Quadruple& q, ExtendedPower p, double rel_tol = kDefaultRelTol);

/// The eight equivalent arrangements, original first:
///   a:b::c:d  a:c::b:d  b:a::d:c  b:d::a:c  c:a::d:b  c:d::a:b  d:b::c:a  d:c::b:a
std::array<Quadruple, 8> equivalent_forms(const Quadruple& q);

/// With (a, b, c, d) the ascending sort of `terms`, returns
/// [a:b::c:d, a:c::d:b, a:d::b:c]. Throws DomainError on repeated values.
std::array<Quadruple, 3> reorderings(const std::array<double, 4>& terms);

/// Which reordering to use when a quadruple is not given in ascending order.
enum class Arrangement { Sorted, Acdb, Adbc };

Quadruple scale(const Quadruple& q, double lambda);

/// Divides every term by d. Requires all-positive terms and d maximal.
Quadruple to_unit_interval(const Quadruple& q);

/// Image of q under x -> x^p (Finite p) or x -> ln x (Zero). The image is an
/// arithmetic analogy iff q is an analogy in power p. Returned as plain terms
/// because logarithms may be zero or negative.
std::array<double, 4> to_arithmetic(const Quadruple& q, ExtendedPower p);

/// Arithmetic analogy on arbitrary real terms: |(a + d) - (b + c)| relative to
/// max(|a| + |d|, |b| + |c|).
AnalogyVerdict check_arithmetic(const std::array<double, 4>& terms, double rel_tol = kDefaultRelTol);

/// (a^s, b^s, c^s, d^s): analogy in p*s of q <=> analogy in p of the result.
/// Refuses any quadruple that is not all-positive, a non-finite p, and s == 0.
Quadruple compose_powers(const Quadruple& q, ExtendedPower p, double exponent);

/// (1/a, 1/b, 1/c, 1/d): analogy in p of q <=> analogy in -p of the result.
Quadruple to_reciprocal(const Quadruple& q);

enum class EqualityClass {
  AllDistinct,
  MeansEqual,      // b = c only
  PairwiseEqual,   // a = b and c = d
  AllEqual,
  LowerPairEqual,  // a = b, c < d: only p = -inf
  UpperPairEqual,  // a < b, c = d: only p = +inf
};

/// Sorts the four positive terms ascending and compares them exactly.
EqualityClass classify_equality(const std::array<double, 4>& terms);

std::string to_string(EqualityClass cls);

enum class BooleanVerdict { ValidAllP, InvalidNoP };

/// 0 = false, 1 = true. Patterns reducible to 0:0::0:0, 1:1::1:1 or 0:0::1:1 are
/// valid for every power; 0:1::1:0 and 1:0::0:1 are valid for none. Patterns
/// with an odd number of trues are not Boolean analogies and raise DomainError.
BooleanVerdict boolean_check(const std::array<int, 4>& terms);

std::string to_string(BooleanVerdict verdict);

/// Maps a two-negative-ratio or all-negative quadruple onto positive terms:
///   (-b):(-a)::c:d        -> a:b::c:d
///   c:d::(-b):(-a)        -> c:d::a:b   (through symmetry of conformity)
///   (-a):(-b)::(-c):(-d)  -> a:b::c:d
Quadruple negative_normalize(const Quadruple& q);

}  // namespace analogy
