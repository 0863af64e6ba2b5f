#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "analogy/analogy_ops.hpp"
#include "analogy/error.hpp"
#include "oracles.hpp"

using namespace analogy;

namespace {

ExtendedPower fin(double p) { return ExtendedPower::finite(p); }

Quadruple max_last_form(const Quadruple& q) {
  for (const auto& form : equivalent_forms(q)) {
    if (form.d() >= form.a() && form.d() >= form.b() && form.d() >= form.c()) return form;
  }
  FAIL("no equivalent form puts the maximum last");
  return q;
}

}  // namespace

TEST_CASE("check examples") {
  CHECK(check(Quadruple(1, 2, 3, 4), fin(1)).holds);
  CHECK(check(Quadruple(1, 2, 2, 4), ExtendedPower::zero()).holds);
  CHECK(check(Quadruple(2, 3.5, 4.5, 5), fin(3.06), 1e-3).holds);
  CHECK_FALSE(check(Quadruple(2, 3.5, 4.5, 5), fin(3.06)).holds);
  CHECK_FALSE(check(Quadruple(3, 2, 4, 5), fin(1)).holds);

  const auto v = check(Quadruple(1, 2, 3, 5), fin(1));
  CHECK_FALSE(v.holds);
  CHECK(v.residual == doctest::Approx(0.5 / 3.0));
  CHECK(v.p_used == fin(1));
}

TEST_CASE("check refuses negative terms") {
  CHECK_THROWS_AS(check(Quadruple(-3, -2, 4, 5), fin(1)), DomainError);
  CHECK_THROWS_AS(check(Quadruple(-1, -2, -3, -4), fin(1)), DomainError);
  CHECK_THROWS_AS(Quadruple(0, 1, 2, 3), DomainError);
}

TEST_CASE("min and max analogies") {
  CHECK(check(Quadruple(1, 1, 2, 5), ExtendedPower::neg_inf()).holds);
  CHECK_FALSE(check(Quadruple(1, 1, 2, 5), ExtendedPower::pos_inf()).holds);
  CHECK(check(Quadruple(1, 3, 5, 5), ExtendedPower::pos_inf()).holds);
}

TEST_CASE("equivalent forms: golden order") {
  const auto forms = equivalent_forms(Quadruple(1, 2, 3, 4));
  const std::array<std::array<double, 4>, 8> expected{{{1, 2, 3, 4},
                                                       {1, 3, 2, 4},
                                                       {2, 1, 4, 3},
                                                       {2, 4, 1, 3},
                                                       {3, 1, 4, 2},
                                                       {3, 4, 1, 2},
                                                       {4, 2, 3, 1},
                                                       {4, 3, 2, 1}}};
  for (std::size_t i = 0; i < 8; ++i) CHECK(forms[i].terms() == expected[i]);
}

TEST_CASE("equivalent forms match the pair-preserving permutations") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const std::array<double, 4> t{oracle::log_uniform(rng, 0.1, 10), oracle::log_uniform(rng, 0.1, 10),
                                  oracle::log_uniform(rng, 0.1, 10), oracle::log_uniform(rng, 0.1, 10)};
    std::set<std::array<double, 4>> got;
    for (const auto& f : equivalent_forms(Quadruple(t))) got.insert(f.terms());
    const auto ref = oracle::pair_preserving_permutations(t);
    const std::set<std::array<double, 4>> expected(ref.begin(), ref.end());
    CHECK(got.size() == 8);
    CHECK(got == expected);
  }
  for (const auto& f : equivalent_forms(Quadruple(1, 1, 1, 1))) CHECK(f == Quadruple(1, 1, 1, 1));
  const auto forms = equivalent_forms(Quadruple(-1, 2, 3, 4));
  CHECK(forms[0] == Quadruple(-1, 2, 3, 4));
}

TEST_CASE("three reorderings") {
  const auto r = reorderings({5, 2, 4.5, 3.5});
  CHECK(r[0] == Quadruple(2, 3.5, 4.5, 5));
  CHECK(r[1] == Quadruple(2, 4.5, 5, 3.5));
  CHECK(r[2] == Quadruple(2, 5, 3.5, 4.5));
  CHECK(reorderings({1, 2, 3, 4})[0] == Quadruple(1, 2, 3, 4));
  CHECK(reorderings({4, 3, 2, 1})[0] == Quadruple(1, 2, 3, 4));
  CHECK_THROWS_AS(reorderings({1, 2, 2, 4}), DomainError);
}

TEST_CASE("every arrangement of four distinct terms is a form of exactly one reordering") {
  const std::array<double, 4> terms{0.3, 1.7, 2.2, 9.0};
  const auto base = reorderings(terms);
  std::array<int, 4> idx{0, 1, 2, 3};
  do {
    const Quadruple q(terms[idx[0]], terms[idx[1]], terms[idx[2]], terms[idx[3]]);
    int matches = 0;
    for (const auto& r : base) {
      const auto forms = equivalent_forms(r);
      matches += std::count(forms.begin(), forms.end(), q) > 0;
    }
    CHECK(matches == 1);
  } while (std::next_permutation(idx.begin(), idx.end()));
}

TEST_CASE("scale") {
  CHECK(scale(Quadruple(1, 2, 3, 4), 2) == Quadruple(2, 4, 6, 8));
  CHECK(scale(Quadruple(2, 3.5, 4.5, 5), 1) == Quadruple(2, 3.5, 4.5, 5));
  const Quadruple half = scale(Quadruple(1, 2, 2, 4), 0.5);
  CHECK(half == Quadruple(0.5, 1, 1, 2));
  CHECK(half.a() * half.d() == half.b() * half.c());
  CHECK(check(half, ExtendedPower::zero()).holds);
  CHECK_THROWS_AS(scale(Quadruple(1, 2, 3, 4), 0), DomainError);
  CHECK_THROWS_AS(scale(Quadruple(1, 2, 3, 4), -2), DomainError);
}

TEST_CASE("to_unit_interval") {
  const Quadruple u = to_unit_interval(Quadruple(2, 3.5, 4.5, 5));
  CHECK(u.a() == doctest::Approx(0.4));
  CHECK(u.b() == doctest::Approx(0.7));
  CHECK(u.c() == doctest::Approx(0.9));
  CHECK(u.d() == 1.0);
  CHECK(to_unit_interval(Quadruple(1, 1, 1, 1)) == Quadruple(1, 1, 1, 1));
  CHECK(to_unit_interval(Quadruple(1, 2, 2, 4)) == Quadruple(0.25, 0.5, 0.5, 1));
  CHECK_THROWS_AS(to_unit_interval(Quadruple(5, 3.5, 4.5, 2)), DomainError);
}

TEST_CASE("to_arithmetic") {
  const auto sq = to_arithmetic(Quadruple(1, 2, 2, std::sqrt(7.0)), fin(2));
  CHECK(sq[0] == doctest::Approx(1));
  CHECK(sq[1] == doctest::Approx(4));
  CHECK(sq[2] == doctest::Approx(4));
  CHECK(sq[3] == doctest::Approx(7));
  CHECK(check_arithmetic(sq).holds);

  const auto logs = to_arithmetic(Quadruple(1, 2, 2, 4), ExtendedPower::zero());
  CHECK(logs[0] == 0.0);
  CHECK(logs[1] == doctest::Approx(std::log(2.0)));
  CHECK(logs[3] == doctest::Approx(std::log(4.0)));
  CHECK(check_arithmetic(logs).holds);

  const auto image = to_arithmetic(Quadruple(2, 3.5, 4.5, 5), fin(3.06));
  // 2^3.06 + 5^3.06 against 3.5^3.06 + 4.5^3.06, evaluated directly.
  const double lhs = std::pow(2.0, 3.06) + std::pow(5.0, 3.06);
  const double rhs = std::pow(3.5, 3.06) + std::pow(4.5, 3.06);
  CHECK(image[0] + image[3] == doctest::Approx(lhs));
  CHECK(std::abs(lhs - rhs) / rhs < 1e-2);

  CHECK_THROWS_AS(to_arithmetic(Quadruple(1, 2, 3, 4), ExtendedPower::pos_inf()), DomainError);
  CHECK_THROWS_AS(to_arithmetic(Quadruple(1, 2, 3, 4), ExtendedPower::neg_inf()), DomainError);
}

TEST_CASE("compose_powers") {
  const Quadruple q(1, 2, 3, 4);
  const Quadruple composed = compose_powers(q, fin(2), 0.5);
  CHECK(composed.b() == doctest::Approx(std::sqrt(2.0)));
  CHECK(composed.c() == doctest::Approx(std::sqrt(3.0)));
  CHECK(composed.d() == doctest::Approx(2.0));
  // 1^2 + 2^2 against sqrt(2)^2 + sqrt(3)^2: 5 = 5.
  CHECK(check(q, fin(1)).holds);
  CHECK(check(composed, fin(2)).holds);
  CHECK(compose_powers(q, fin(3), 1.0) == q);

  CHECK_THROWS_AS(compose_powers(Quadruple(-3, -2, 4, 5), fin(1), 2), DomainError);
  CHECK_THROWS_AS(compose_powers(Quadruple(3, -2, -4, 5), fin(1), 0.5), DomainError);
  CHECK_THROWS_AS(compose_powers(q, fin(1), 0.0), DomainError);
  CHECK_THROWS_AS(compose_powers(q, ExtendedPower::zero(), 2.0), DomainError);
}

TEST_CASE("to_reciprocal") {
  const Quadruple r = to_reciprocal(Quadruple(1, 2, 3, 4));
  CHECK(r.b() == 0.5);
  CHECK(r.c() == doctest::Approx(1.0 / 3.0));
  CHECK(r.d() == 0.25);
  CHECK(to_reciprocal(Quadruple(1, 1, 1, 1)) == Quadruple(1, 1, 1, 1));
  CHECK(check(r, fin(-1)).holds);
}

TEST_CASE("classify_equality") {
  CHECK(classify_equality({3, 3, 3, 3}) == EqualityClass::AllEqual);
  CHECK(classify_equality({2, 2, 5, 5}) == EqualityClass::PairwiseEqual);
  CHECK(classify_equality({5, 2, 5, 2}) == EqualityClass::PairwiseEqual);
  CHECK(classify_equality({2, 3, 3, 5}) == EqualityClass::MeansEqual);
  CHECK(classify_equality({1, 2, 3, 4}) == EqualityClass::AllDistinct);
  CHECK(classify_equality({2, 2, 3, 5}) == EqualityClass::LowerPairEqual);
  CHECK(classify_equality({2, 2, 2, 5}) == EqualityClass::LowerPairEqual);
  CHECK(classify_equality({2, 3, 5, 5}) == EqualityClass::UpperPairEqual);
  CHECK(classify_equality({2, 5, 5, 5}) == EqualityClass::UpperPairEqual);
  CHECK_THROWS_AS(classify_equality({0, 1, 2, 3}), DomainError);
}

TEST_CASE("equality classes: every power validates the tied cases") {
  for (double p : {-50.0, -1.0, 0.0, 0.3, 1.0, 7.0}) {
    const auto power = ExtendedPower::from_double(p);
    CHECK(check(Quadruple(3, 3, 3, 3), power).holds);
    CHECK(check(Quadruple(2, 2, 5, 5), power).holds);
  }
  CHECK(check(Quadruple(2, 2, 5, 5), ExtendedPower::neg_inf()).holds);
  CHECK(check(Quadruple(2, 2, 5, 5), ExtendedPower::pos_inf()).holds);
}

TEST_CASE("Boolean analogies") {
  CHECK(boolean_check({0, 0, 1, 1}) == BooleanVerdict::ValidAllP);
  CHECK(boolean_check({0, 1, 0, 1}) == BooleanVerdict::ValidAllP);
  CHECK(boolean_check({0, 0, 0, 0}) == BooleanVerdict::ValidAllP);
  CHECK(boolean_check({1, 1, 1, 1}) == BooleanVerdict::ValidAllP);
  CHECK(boolean_check({0, 1, 1, 0}) == BooleanVerdict::InvalidNoP);
  CHECK(boolean_check({1, 0, 0, 1}) == BooleanVerdict::InvalidNoP);
  CHECK_THROWS_AS(boolean_check({0, 2, 1, 1}), DomainError);
  CHECK_THROWS_AS(boolean_check({0, 0, 0, 1}), DomainError);
}

TEST_CASE("Boolean verdicts agree with reduction through the eight forms") {
  const std::set<std::array<int, 4>> valid{{0, 0, 0, 0}, {1, 1, 1, 1}, {0, 0, 1, 1}};
  const std::set<std::array<int, 4>> crossed{{0, 1, 1, 0}};
  for (int bits = 0; bits < 16; ++bits) {
    const std::array<int, 4> t{bits >> 3 & 1, bits >> 2 & 1, bits >> 1 & 1, bits & 1};
    bool to_valid = false;
    bool to_crossed = false;
    for (const auto& form : oracle::pair_preserving_permutations(t)) {
      to_valid |= valid.count(form) > 0;
      to_crossed |= crossed.count(form) > 0;
    }
    CAPTURE(bits);
    if (to_valid) {
      CHECK(boolean_check(t) == BooleanVerdict::ValidAllP);
    } else if (to_crossed) {
      CHECK(boolean_check(t) == BooleanVerdict::InvalidNoP);
    } else {
      CHECK_THROWS_AS(boolean_check(t), DomainError);
    }
  }
}

TEST_CASE("negative_normalize") {
  const Quadruple first = negative_normalize(Quadruple(-3, -2, 4, 5));
  CHECK(first == Quadruple(2, 3, 4, 5));
  CHECK(check(first, fin(1)).holds);

  const Quadruple crossed = negative_normalize(Quadruple(-2, -3, 4, 5));
  CHECK(crossed == Quadruple(3, 2, 4, 5));
  CHECK_FALSE(check(crossed, fin(1)).holds);

  // -1 - (-2) = -3 - (-4) directly, and the image keeps the arithmetic analogy.
  CHECK(-1.0 - -2.0 == -3.0 - -4.0);
  const Quadruple negatives = negative_normalize(Quadruple(-1, -2, -3, -4));
  CHECK(negatives == Quadruple(1, 2, 3, 4));
  CHECK(check(negatives, fin(1)).holds);

  // Second ratio negative: 4:5::(-3):(-2) goes through symmetry.
  const Quadruple second = negative_normalize(Quadruple(4, 5, -3, -2));
  CHECK(second == Quadruple(4, 5, 2, 3));
  CHECK(check(second, fin(1)).holds);

  CHECK_THROWS_AS(negative_normalize(Quadruple(1, 2, 3, 4)), DomainError);
  CHECK_THROWS_AS(negative_normalize(Quadruple(3, -2, -4, 5)), DomainError);
  CHECK_THROWS_AS(negative_normalize(Quadruple(-3, 2, 4, 5)), DomainError);
}

TEST_CASE("sign modes") {
  CHECK(Quadruple(1, 2, 3, 4).sign_mode() == SignMode::AllPositive);
  CHECK(Quadruple(-1, -2, 3, 4).sign_mode() == SignMode::TwoNegativeRatio);
  CHECK(Quadruple(1, 2, -3, -4).sign_mode() == SignMode::TwoNegativeRatio);
  CHECK(Quadruple(-1, 2, -3, 4).sign_mode() == SignMode::Mixed);
  CHECK(Quadruple(1, -2, -3, 4).sign_mode() == SignMode::Mixed);
  CHECK(Quadruple(-1, -2, -3, -4).sign_mode() == SignMode::AllNegative);
}

TEST_CASE("reductions preserve the verdict (randomized)") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 300; ++trial) {
    const double p = oracle::moderate_power(rng);
    const auto c = oracle::analogy_case(rng, p, trial % 2 == 0);
    const Quadruple q(c.terms);
    const auto power = fin(p);
    const bool holds = check(q, power).holds;
    REQUIRE(holds == c.holds);

    for (const auto& form : equivalent_forms(q)) CHECK(check(form, power).holds == holds);

    const double lambda = oracle::log_uniform(rng, 1e-3, 1e3);
    CHECK(check(scale(q, lambda), power).holds == holds);
    CHECK(check(to_unit_interval(max_last_form(q)), power).holds == holds);
    CHECK(check(Quadruple(to_arithmetic(q, power)), fin(1), 1e-6).holds == holds);
    CHECK(check(to_reciprocal(q), power.negated()).holds == holds);
    CHECK(check(Quadruple(c.terms[2], c.terms[3], c.terms[0], c.terms[1]), power).holds == holds);

    double s = std::uniform_real_distribution<double>(-3, 3)(rng);
    if (std::abs(s) < 0.1) s = 0.5;
    CHECK(check(compose_powers(q, fin(p / s), s), fin(p / s)).holds == holds);
  }
}

TEST_CASE("reflexivity holds for every power") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = oracle::log_uniform(rng, 1e-3, 1e3);
    const double b = oracle::log_uniform(rng, 1e-3, 1e3);
    const double p = std::uniform_real_distribution<double>(-300, 300)(rng);
    CHECK(check(Quadruple(a, b, a, b), fin(p)).holds);
    CHECK(check(Quadruple(a, b, a, b), ExtendedPower::zero()).holds);
    CHECK(check(Quadruple(a, b, a, b), ExtendedPower::neg_inf()).holds);
    CHECK(check(Quadruple(a, b, a, b), ExtendedPower::pos_inf()).holds);
  }
}
