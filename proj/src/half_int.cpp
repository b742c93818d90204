#include "gcwe/half_int.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace gcwe {

std::string HalfInt::str() const {
  if (twice_ % 2 == 0) {
    return std::to_string(twice_ / 2);
  }
  return std::to_string(twice_) + "/2";
}

std::optional<HalfInt> HalfInt::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return std::nullopt;

  auto parse_int = [](std::string_view s, long long& out) {
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
  };

  const auto slash = text.find('/');
  long long num = 0;
  if (slash == std::string_view::npos) {
    if (!parse_int(text, num)) return std::nullopt;
    return HalfInt::from_twice(static_cast<int>(2 * num));
  }
  long long den = 0;
  if (!parse_int(text.substr(0, slash), num)) return std::nullopt;
  if (!parse_int(text.substr(slash + 1), den)) return std::nullopt;
  if (den == 2) return HalfInt::from_twice(static_cast<int>(num));
  if (den == 1) return HalfInt::from_twice(static_cast<int>(2 * num));
  if (den == 4 && num % 2 == 0) return HalfInt::from_twice(static_cast<int>(num / 2));
  return std::nullopt;
}

Rational Rational::reduced(long long n, long long d) {
  if (d == 0) throw std::invalid_argument("Rational: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const long long g = std::gcd(n < 0 ? -n : n, d);
  return Rational{g ? n / g : 0, g ? d / g : 1};
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace gcwe
