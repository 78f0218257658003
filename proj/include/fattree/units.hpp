#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>

namespace fattree {

/// Integer-backed physical or monetary quantity. The tag fixes the unit:
/// Money counts currency minor units, Power milliwatts, Weight grams.
template <class Tag>
struct Quantity {
  std::int64_t value = 0;

  constexpr Quantity() = default;
  constexpr explicit Quantity(std::int64_t v) : value(v) {}

  constexpr Quantity& operator+=(Quantity o) {
    value += o.value;
    return *this;
  }
  constexpr Quantity& operator-=(Quantity o) {
    value -= o.value;
    return *this;
  }
  friend constexpr Quantity operator+(Quantity a, Quantity b) { return Quantity(a.value + b.value); }
  friend constexpr Quantity operator-(Quantity a, Quantity b) { return Quantity(a.value - b.value); }
  friend constexpr Quantity operator*(std::int64_t k, Quantity a) { return Quantity(k * a.value); }
  friend constexpr Quantity operator*(Quantity a, std::int64_t k) { return Quantity(k * a.value); }
  friend constexpr bool operator==(Quantity, Quantity) = default;
  friend constexpr auto operator<=>(Quantity, Quantity) = default;
};

struct MoneyTag {};
struct PowerTag {};
struct WeightTag {};

using Money = Quantity<MoneyTag>;   // currency minor units (cents)
using Power = Quantity<PowerTag>;   // milliwatts
using Weight = Quantity<WeightTag>; // grams

inline constexpr std::int64_t kMinorPerMajor = 100;
inline constexpr std::int64_t kMilli = 1000;

constexpr Money dollars(std::int64_t major) { return Money(major * kMinorPerMajor); }
constexpr Power watts(std::int64_t w) { return Power(w * kMilli); }
constexpr Weight kilograms(std::int64_t kg) { return Weight(kg * kMilli); }

namespace detail {

inline std::string fixed_point(std::int64_t value, std::int64_t scale, int places, bool trim) {
  bool negative = value < 0;
  std::uint64_t mag = negative ? static_cast<std::uint64_t>(-value) : static_cast<std::uint64_t>(value);
  std::string out = (negative ? "-" : "") + std::to_string(mag / static_cast<std::uint64_t>(scale));
  std::string frac = std::to_string(mag % static_cast<std::uint64_t>(scale));
  frac = std::string(static_cast<std::size_t>(places) - frac.size(), '0') + frac;
  if (trim) {
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
  }
  if (!frac.empty()) out += "." + frac;
  return out;
}

/// Parses a non-negative decimal with at most `places` fractional digits into scaled integer units.
inline std::optional<std::int64_t> parse_fixed(std::string_view text, int places) {
  if (text.empty()) return std::nullopt;
  std::int64_t whole = 0;
  std::int64_t frac = 0;
  int frac_digits = 0;
  bool seen_dot = false;
  bool any_digit = false;
  for (char c : text) {
    if (c == '.') {
      if (seen_dot) return std::nullopt;
      seen_dot = true;
      continue;
    }
    if (c < '0' || c > '9') return std::nullopt;
    any_digit = true;
    if (seen_dot) {
      if (++frac_digits > places) return std::nullopt;
      frac = frac * 10 + (c - '0');
    } else {
      if (whole > INT64_MAX / 100) return std::nullopt;
      whole = whole * 10 + (c - '0');
    }
  }
  if (!any_digit) return std::nullopt;
  std::int64_t scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  for (int i = frac_digits; i < places; ++i) frac *= 10;
  return whole * scale + frac;
}

} // namespace detail

/// "259920.00"
inline std::string format_money(Money m) { return detail::fixed_point(m.value, kMinorPerMajor, 2, false); }

/// Whole currency units, rounded half away from zero.
inline std::int64_t money_major_rounded(Money m) {
  std::int64_t v = m.value;
  std::int64_t half = kMinorPerMajor / 2;
  return v >= 0 ? (v + half) / kMinorPerMajor : -((-v + half) / kMinorPerMajor);
}

/// Watts with trailing zeros trimmed ("152", "4.5").
inline std::string format_watts(Power p) { return detail::fixed_point(p.value, kMilli, 3, true); }
inline std::string format_kg(Weight w) { return detail::fixed_point(w.value, kMilli, 3, true); }

inline std::optional<Money> parse_money(std::string_view major_units) {
  auto v = detail::parse_fixed(major_units, 2);
  if (!v) return std::nullopt;
  return Money(*v);
}
inline std::optional<Power> parse_watts(std::string_view text) {
  auto v = detail::parse_fixed(text, 3);
  if (!v) return std::nullopt;
  return Power(*v);
}
inline std::optional<Weight> parse_kg(std::string_view text) {
  auto v = detail::parse_fixed(text, 3);
  if (!v) return std::nullopt;
  return Weight(*v);
}

/// Converts a JSON-style number in base units (watts, kilograms) to milli-units.
/// Values with more than three fractional digits are rejected.
inline std::optional<std::int64_t> milli_from_number(double x) {
  if (!std::isfinite(x) || x < 0) return std::nullopt;
  double scaled = x * static_cast<double>(kMilli);
  double r = std::round(scaled);
  if (std::fabs(scaled - r) > 1e-6 * std::max(1.0, std::fabs(scaled))) return std::nullopt;
  return static_cast<std::int64_t>(r);
}

} // namespace fattree
