#include "polycx/rational.hpp"

#include <charconv>

namespace polycx {

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec == std::errc::result_out_of_range) {
    if (ec == std::errc::result_out_of_range) throw RationalOverflow();
    throw std::invalid_argument("not a rational: '" + std::string(whole) + "'");
  }
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument("not a rational: '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  auto den = text.substr(slash + 1);
  if (!den.empty() && (den.front() == '-' || den.front() == '+'))
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  std::int64_t d = parse_int(den, text);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash), text), d);
}

}  // namespace polycx
