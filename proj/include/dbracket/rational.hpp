#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

namespace dbracket {

/// Exact rational scalar of unbounded precision.
///
/// Values whose numerator and denominator fit in 64 bits are held inline;
/// anything larger is promoted to a shared, immutable GMP rational and
/// demoted again as soon as it fits. The value is canonical (positive
/// denominator, coprime parts) after every operation, so `==` is exact.
class Rational {
public:
  Rational() = default;
  Rational(int value) : num_(value) {}        // NOLINT(google-explicit-constructor)
  Rational(long value) : num_(value) {        // NOLINT(google-explicit-constructor)
    if (value == INT64_MIN) *this = Rational(mpq_class(value));
  }
  Rational(long numerator, long denominator);
  explicit Rational(const mpq_class& value);

  /// Parses "n" or "n/d" with an optional leading minus sign.
  static Rational parse(std::string_view text);

  [[nodiscard]] bool is_zero() const { return !big_ && num_ == 0; }
  [[nodiscard]] int sign() const;
  [[nodiscard]] mpz_class numerator() const;
  [[nodiscard]] mpz_class denominator() const;
  [[nodiscard]] mpq_class to_mpq() const;

  /// Always "numerator/denominator", including "/1" for integers.
  [[nodiscard]] std::string to_exact_string() const;
  /// "n" for integers, "n/d" otherwise.
  [[nodiscard]] std::string to_string() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& x);

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

/// `acc += a * b`, skipping the work when either factor is zero.
inline void add_product(Rational& acc, const Rational& a, const Rational& b) {
  if (a.is_zero() || b.is_zero()) return;
  acc += a * b;
}

}  // namespace dbracket
