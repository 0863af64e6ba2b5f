#include "analogy/extended_power.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>

#include <fmt/core.h>

#include "analogy/error.hpp"

namespace analogy {

ExtendedPower ExtendedPower::finite(double value) {
  if (value == 0.0 || !std::isfinite(value)) {
    throw DomainError(fmt::format("finite power must be a nonzero finite real, got {}", value));
  }
  return ExtendedPower(Kind::Finite, value);
}

ExtendedPower ExtendedPower::from_double(double value) {
  if (std::isnan(value)) throw DomainError("power is NaN");
  if (value == 0.0) return zero();
  if (std::isinf(value)) return value < 0 ? neg_inf() : pos_inf();
  return finite(value);
}

ExtendedPower ExtendedPower::parse(std::string_view text) {
  std::string lowered(text);
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lowered == "inf" || lowered == "+inf" || lowered == "infinity" || lowered == "+infinity") {
    return pos_inf();
  }
  if (lowered == "-inf" || lowered == "-infinity") return neg_inf();

  std::string_view digits = lowered;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  double value = 0.0;
  const auto* end = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(digits.data(), end, value);
  if (ec != std::errc() || ptr != end || digits.empty() || !std::isfinite(value)) {
    throw DomainError(fmt::format("cannot parse power '{}'", text));
  }
  return from_double(value);
}

double ExtendedPower::value() const {
  switch (kind_) {
    case Kind::Finite:
      return payload_;
    case Kind::Zero:
      return 0.0;
    case Kind::NegInf:
      return -std::numeric_limits<double>::infinity();
    case Kind::PosInf:
      return std::numeric_limits<double>::infinity();
  }
  return 0.0;
}

ExtendedPower ExtendedPower::negated() const {
  switch (kind_) {
    case Kind::Finite:
      return finite(-payload_);
    case Kind::Zero:
      return zero();
    case Kind::NegInf:
      return pos_inf();
    case Kind::PosInf:
      return neg_inf();
  }
  return zero();
}

std::string to_string(const ExtendedPower& p) {
  switch (p.kind()) {
    case ExtendedPower::Kind::Finite:
      return fmt::format("{:.10g}", p.value());
    case ExtendedPower::Kind::Zero:
      return "0";
    case ExtendedPower::Kind::NegInf:
      return "-inf";
    case ExtendedPower::Kind::PosInf:
      return "+inf";
  }
  return "?";
}

}  // namespace analogy
