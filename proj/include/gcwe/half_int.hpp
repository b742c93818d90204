#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace gcwe {

/// Exact half-integer, stored as twice its value. All spin labels (j, m)
/// in this library are HalfInt so label arithmetic and comparisons never
/// touch floating point.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr HalfInt(int whole) : twice_(2 * whole) {}

  static constexpr HalfInt from_twice(int twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }

  constexpr int twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr double value() const { return twice_ / 2.0; }

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }
  constexpr HalfInt& operator-=(HalfInt o) {
    twice_ -= o.twice_;
    return *this;
  }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) {
    return from_twice(a.twice_ + b.twice_);
  }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) {
    return from_twice(a.twice_ - b.twice_);
  }
  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

  constexpr HalfInt abs() const { return twice_ < 0 ? -*this : *this; }

  /// True when this and `o` differ by an integer (same parity of twice()).
  constexpr bool same_parity(HalfInt o) const {
    return (twice_ - o.twice_) % 2 == 0;
  }

  /// Reduced-fraction rendering: "2", "3/2", "-1/2", "0".
  std::string str() const;

  /// Parses "3/2", "-1/2", "2", "+1". Returns nullopt on malformed input.
  static std::optional<HalfInt> parse(std::string_view text);

 private:
  int twice_ = 0;
};

constexpr HalfInt half_from_sign(int sign) { return HalfInt::from_twice(sign); }

/// Small exact rational with normalized sign and reduced terms; enough for
/// Casimir eigenvalues j(j+1).
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational reduced(long long n, long long d);
  std::string str() const;
  friend constexpr bool operator==(const Rational&, const Rational&) = default;
};

}  // namespace gcwe
