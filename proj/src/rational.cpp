#include "dbracket/rational.hpp"

#include <cctype>
#include <numeric>

#include "dbracket/errors.hpp"

namespace dbracket {

namespace {

using Wide = __int128;
using UWide = unsigned __int128;

constexpr Wide kMaxSmall = INT64_MAX;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

UWide wide_gcd(UWide a, UWide b) {
  while (b != 0) {
    if (a <= UINT64_MAX && b <= UINT64_MAX)
      return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    UWide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

mpz_class to_mpz(Wide x) {
  const bool negative = x < 0;
  UWide mag = negative ? -static_cast<UWide>(x) : static_cast<UWide>(x);
  mpz_class z(static_cast<unsigned long>(mag >> 64));
  z <<= 64;
  z += static_cast<unsigned long>(mag & UINT64_MAX);
  return negative ? mpz_class(-z) : z;
}

}  // namespace

Rational Rational::from_wide(Wide num, Wide den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const UWide mag = num < 0 ? -static_cast<UWide>(num) : static_cast<UWide>(num);
  const UWide g = wide_gcd(mag, static_cast<UWide>(den));
  if (g > 1) {
    num /= static_cast<Wide>(g);
    den /= static_cast<Wide>(g);
  }
  if (num >= -kMaxSmall && num <= kMaxSmall && den <= kMaxSmall) {
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  Rational r;
  r.big_ = std::make_shared<const mpq_class>(to_mpz(num), to_mpz(den));
  return r;
}

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  *this = from_wide(numerator, denominator);
}

Rational::Rational(const mpq_class& value) {
  mpq_class q = value;
  q.canonicalize();
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p() && q.get_num() != INT64_MIN) {
    num_ = q.get_num().get_si();
    den_ = q.get_den().get_si();
  } else {
    big_ = std::make_shared<const mpq_class>(std::move(q));
  }
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) throw ParseError("not a rational: '" + std::string(text) + "'");

  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  if (text.front() == '-') n = -n;
  return Rational(mpq_class(n, d));
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

mpz_class Rational::numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_class(num_); }

mpz_class Rational::denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_class(den_); }

mpq_class Rational::to_mpq() const { return big_ ? *big_ : mpq_class(mpz_class(num_), mpz_class(den_)); }

std::string Rational::to_exact_string() const { return numerator().get_str() + "/" + denominator().get_str(); }

std::string Rational::to_string() const {
  if (!big_) return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  return big_->get_den() == 1 ? big_->get_num().get_str() : to_exact_string();
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (rhs.is_zero()) return *this;
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) return *this = from_wide(Wide(num_) + rhs.num_, 1);
    return *this = from_wide(Wide(num_) * rhs.den_ + Wide(rhs.num_) * den_, Wide(den_) * rhs.den_);
  }
  return *this = Rational(mpq_class(to_mpq() + rhs.to_mpq()));
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (rhs.is_zero()) return *this;
  if (!big_ && !rhs.big_) {
    if (den_ == 1 && rhs.den_ == 1) return *this = from_wide(Wide(num_) - rhs.num_, 1);
    return *this = from_wide(Wide(num_) * rhs.den_ - Wide(rhs.num_) * den_, Wide(den_) * rhs.den_);
  }
  return *this = Rational(mpq_class(to_mpq() - rhs.to_mpq()));
}

Rational& Rational::operator*=(const Rational& rhs) {
  if (is_zero()) return *this;
  if (rhs.is_zero()) return *this = Rational();
  if (!big_ && !rhs.big_) return *this = from_wide(Wide(num_) * rhs.num_, Wide(den_) * rhs.den_);
  return *this = Rational(mpq_class(to_mpq() * rhs.to_mpq()));
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  if (!big_ && !rhs.big_) return *this = from_wide(Wide(num_) * rhs.den_, Wide(den_) * rhs.num_);
  return *this = Rational(mpq_class(to_mpq() / rhs.to_mpq()));
}

Rational operator-(const Rational& x) {
  if (!x.big_) {
    Rational r;
    r.num_ = -x.num_;
    r.den_ = x.den_;
    return r;
  }
  return Rational(mpq_class(-*x.big_));
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  // canonical storage: a small value never equals a big one
  if (!a.big_ || !b.big_) return false;
  return cmp(*a.big_, *b.big_) == 0;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return Wide(a.num_) * b.den_ <=> Wide(b.num_) * a.den_;
  const int c = cmp(a.to_mpq(), b.to_mpq());
  return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace dbracket
