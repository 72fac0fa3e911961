#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "poncelet/errors.hpp"

namespace poncelet {

using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator (zero is 0/1). Thin value wrapper over GMP's mpq_class.
class Rational {
 public:
  Rational() = default;
  Rational(int value) : value_(static_cast<long>(value)) {}
  Rational(long value) : value_(value) {}
  Rational(long long value) : value_(static_cast<long>(value)) {}
  Rational(unsigned value) : value_(static_cast<unsigned long>(value)) {}
  Rational(unsigned long value) : value_(value) {}
  Rational(const BigInt& value) : value_(value) {}
  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InvalidInput("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }
  explicit Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

  /// Parses "p" or "p/q" (optional leading sign on p, q must be nonzero).
  static Rational parse(std::string_view text) {
    const auto bad = [&] { return InvalidInput("cannot parse rational '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    const auto slash = text.find('/');
    const auto is_integer = [](std::string_view s, bool allow_sign) {
      if (s.empty()) return false;
      std::size_t i = 0;
      if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
      if (i == s.size()) return false;
      for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
      return true;
    };
    auto strip_plus = [](std::string_view s) {
      return (!s.empty() && s[0] == '+') ? s.substr(1) : s;
    };
    if (slash == std::string_view::npos) {
      if (!is_integer(text, true)) throw bad();
      return Rational(BigInt(std::string(strip_plus(text))));
    }
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!is_integer(num, true) || !is_integer(den, false)) throw bad();
    return Rational(BigInt(std::string(strip_plus(num))), BigInt(std::string(den)));
  }

  [[nodiscard]] BigInt numerator() const { return value_.get_num(); }
  [[nodiscard]] BigInt denominator() const { return value_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

  [[nodiscard]] Rational inverse() const {
    if (is_zero()) throw DegeneracyError("inverse of zero");
    return Rational(mpq_class(1) / value_);
  }
  [[nodiscard]] Rational abs() const { return Rational(mpq_class(::abs(value_))); }

  /// Height max(|p|, q).
  [[nodiscard]] BigInt height() const {
    BigInt p = ::abs(value_.get_num());
    return p > value_.get_den() ? p : BigInt(value_.get_den());
  }

  [[nodiscard]] double to_double() const { return value_.get_d(); }

  /// "p/q", or "p" when q = 1.
  [[nodiscard]] std::string to_string() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DegeneracyError("division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

inline Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

inline BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace poncelet
