#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace analogy {

/// A power on the extended real line: a finite nonzero real, exactly zero
/// (geometric mean) or one of the two infinite limits (min / max).
class ExtendedPower {
 public:
  enum class Kind { Finite, Zero, NegInf, PosInf };

  /// Throws DomainError when `value` is zero, NaN or infinite.
  static ExtendedPower finite(double value);
  static constexpr ExtendedPower zero() { return ExtendedPower(Kind::Zero, 0.0); }
  static constexpr ExtendedPower neg_inf() { return ExtendedPower(Kind::NegInf, 0.0); }
  static constexpr ExtendedPower pos_inf() { return ExtendedPower(Kind::PosInf, 0.0); }

  /// Maps 0 to Zero, +-infinity to the limits and anything else to Finite.
  static ExtendedPower from_double(double value);

  /// Accepts decimal literals plus "inf", "+inf", "-inf" (case-insensitive).
  static ExtendedPower parse(std::string_view text);

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::Finite; }
  constexpr bool is_zero() const { return kind_ == Kind::Zero; }
  constexpr bool is_infinite() const { return kind_ == Kind::NegInf || kind_ == Kind::PosInf; }

  /// Position on the extended real line (0 for Zero, +-inf for the limits).
  double value() const;

  /// The opposite power; Zero stays Zero and the limits swap.
  ExtendedPower negated() const;

  friend bool operator==(const ExtendedPower& lhs, const ExtendedPower& rhs) {
    return lhs.kind_ == rhs.kind_ && lhs.payload_ == rhs.payload_;
  }
  friend std::partial_ordering operator<=>(const ExtendedPower& lhs, const ExtendedPower& rhs) {
    return lhs.value() <=> rhs.value();
  }

 private:
  constexpr ExtendedPower(Kind kind, double payload) : kind_(kind), payload_(payload) {}

  Kind kind_;
  double payload_;
};

std::string to_string(const ExtendedPower& p);

}  // namespace analogy
