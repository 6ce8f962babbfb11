#include "gammakit/oligopoly/rational.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace gammakit::oligopoly {

namespace {

using Wide = __int128;

std::int64_t narrow(Wide v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("rational overflow");
  return static_cast<std::int64_t>(v);
}

std::invalid_argument malformed(std::string_view whole) {
  return std::invalid_argument("malformed rational '" + std::string(whole) + "'");
}

std::int64_t parse_integer(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) throw malformed(whole);
  return v;
}

// Decimal text as an unreduced fraction.
std::pair<Wide, Wide> parse_decimal(std::string_view s, std::string_view whole) {
  bool negative = false;
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) negative = s[i++] == '-';
  Wide mantissa = 0;
  int exponent = 0;
  bool digits = false;
  bool point = false;
  bool has_exponent = false;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa = mantissa * 10 + (c - '0');
      if (mantissa > INT64_MAX) throw std::overflow_error("rational overflow");
      if (point) --exponent;
      digits = true;
    } else if (c == '.' && !point) {
      point = true;
    } else if (c == 'e' || c == 'E') {
      has_exponent = true;
      ++i;
      break;
    } else {
      throw malformed(whole);
    }
  }
  if (!digits) throw malformed(whole);
  if (has_exponent) exponent += static_cast<int>(parse_integer(s.substr(i), whole));
  if (exponent > 18 || exponent < -18) throw std::overflow_error("rational overflow");
  Wide scale = 1;
  for (int k = 0; k < std::abs(exponent); ++k) scale *= 10;
  if (negative) mantissa = -mantissa;
  if (exponent >= 0) return {mantissa * scale, 1};
  return {mantissa, scale};
}

}  // namespace

Rational Rational::reduce(Wide num, Wide den) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide a = num < 0 ? -num : num;
  Wide b = den;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  Rational r;
  r.num_ = narrow(num);
  r.den_ = narrow(den);
  return r;
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  *this = reduce(numerator, denominator);
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto [num, den] = parse_decimal(text, text);
    return reduce(num, den);
  }
  const std::int64_t p = parse_integer(text.substr(0, slash), text);
  const std::int64_t q = parse_integer(text.substr(slash + 1), text);
  if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return reduce(p, q);
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw std::invalid_argument("non-finite number");
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc()) throw std::invalid_argument("cannot format number");
  const std::string_view text(buf, static_cast<std::size_t>(ptr - buf));
  auto [num, den] = parse_decimal(text, text);
  return reduce(num, den);
}

double Rational::to_double() const {
  // Exact when both parts fit in 53 bits; division then rounds once.
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::reduce(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_,
                          Wide(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational::reduce(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_,
                          Wide(a.den_) * b.den_);
}

bool operator<(const Rational& a, const Rational& b) {
  return Wide(a.num_) * b.den_ < Wide(b.num_) * a.den_;
}

}  // namespace gammakit::oligopoly
