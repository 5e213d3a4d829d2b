#include "addspan/rational.hpp"

#include <charconv>
#include <numeric>

namespace addspan {

namespace {

std::int64_t narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow");
  return static_cast<std::int64_t>(v);
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t out = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("not a rational number: '" + std::string(whole) + "'");
  }
  return out;
}

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return Rational(parse_int(text.substr(0, slash), text),
                    parse_int(text.substr(slash + 1), text));
  }
  auto dot = text.find('.');
  if (dot == std::string_view::npos) return Rational(parse_int(text, text));

  std::string_view int_part = text.substr(0, dot);
  std::string_view frac_part = text.substr(dot + 1);
  if (frac_part.empty() || frac_part.size() > 18 ||
      frac_part.find_first_not_of("0123456789") != std::string_view::npos) {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  }
  bool negative = !int_part.empty() && int_part.front() == '-';
  if (negative || (!int_part.empty() && int_part.front() == '+')) int_part.remove_prefix(1);
  std::int64_t whole = int_part.empty() ? 0 : parse_int(int_part, text);
  if (whole < 0) throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");

  std::int64_t scale = 1;
  for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
  std::int64_t frac = parse_int(frac_part, text);
  std::int64_t num = narrow(static_cast<__int128>(whole) * scale + frac);
  return Rational(negative ? -num : num, scale);
}

std::int64_t Rational::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  __int128 num = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
  __int128 den = static_cast<__int128>(a.den_) * b.den_;
  __int128 g = gcd128(num, den);
  if (g == 0) g = 1;
  return Rational(narrow(num / g), narrow(den / g));
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  return lhs <=> rhs;
}

}  // namespace addspan
