#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace gammakit::oligopoly {

/// Exact rational with 64-bit numerator and positive denominator, always in
/// lowest terms. Arithmetic throws std::overflow_error instead of wrapping.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator = 1);

  /// Accepts "p/q", integers and plain decimals ("2.4", "-0.15", "1e-3").
  static Rational parse(std::string_view text);
  /// Shortest decimal that round-trips to `value`, read back exactly.
  static Rational from_double(double value);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  double to_double() const;
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend bool operator<(const Rational& a, const Rational& b);

 private:
  static Rational reduce(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace gammakit::oligopoly
