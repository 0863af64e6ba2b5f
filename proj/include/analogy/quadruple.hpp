#pragma once

#include <array>
#include <string>

namespace analogy {

/// Sign pattern of a quadruple. TwoNegativeRatio means exactly the two terms of
/// one ratio, (a, b) or (c, d), are negative.
enum class SignMode { AllPositive, TwoNegativeRatio, AllNegative, Mixed };

/// Four nonzero finite terms a : b :: c : d. Extremes are a and d, means are b and c.
class Quadruple {
 public:
  /// Throws DomainError if a term is zero or non-finite.
  Quadruple(double a, double b, double c, double d);
  explicit Quadruple(const std::array<double, 4>& terms)
      : Quadruple(terms[0], terms[1], terms[2], terms[3]) {}

  double a() const { return terms_[0]; }
  double b() const { return terms_[1]; }
  double c() const { return terms_[2]; }
  double d() const { return terms_[3]; }
  const std::array<double, 4>& terms() const { return terms_; }
  double operator[](std::size_t i) const { return terms_[i]; }

  SignMode sign_mode() const { return sign_mode_; }
  bool all_positive() const { return sign_mode_ == SignMode::AllPositive; }
  /// a <= b <= c <= d.
  bool is_sorted() const;
  /// a < b < c < d.
  bool is_strictly_sorted() const;

  friend bool operator==(const Quadruple&, const Quadruple&) = default;

 private:
  std::array<double, 4> terms_;
  SignMode sign_mode_;
};

SignMode sign_mode_of(double a, double b, double c, double d);

std::string to_string(SignMode mode);
std::string to_string(const Quadruple& q);

/// Throws DomainError unless every term is strictly positive.
void require_all_positive(const Quadruple& q, const char* operation);

}  // namespace analogy
