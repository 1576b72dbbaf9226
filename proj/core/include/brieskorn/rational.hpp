#ifndef BRIESKORN_RATIONAL_HPP
#define BRIESKORN_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "brieskorn/errors.hpp"

namespace brieskorn {

// Arbitrary-precision integer.  We use GMP's C++ layer directly; there is no
// point wrapping it.
using Integer = mpz_class;

// Exact rational number.  Thin wrapper around mpq_class that guarantees the
// canonical form (reduced, positive denominator) after every operation and
// throws DomainError instead of dividing by zero.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {} // NOLINT: implicit on purpose, mirrors int
  Rational(const Integer &n) : v_(n) {}
  Rational(const Integer &num, const Integer &den);
  Rational(long num, long den);

  static Rational parse(const std::string &text);

  const Integer num() const { return v_.get_num(); }
  const Integer den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  // "p/q" with "/q" elided when q == 1.
  std::string str() const;

  Rational operator-() const;

  Rational &operator+=(const Rational &o);
  Rational &operator-=(const Rational &o);
  Rational &operator*=(const Rational &o);
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

  friend bool operator==(const Rational &a, const Rational &b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Rational &a, const Rational &b) {
    return a.v_ != b.v_;
  }
  friend bool operator<(const Rational &a, const Rational &b) {
    return a.v_ < b.v_;
  }
  friend bool operator<=(const Rational &a, const Rational &b) {
    return a.v_ <= b.v_;
  }
  friend bool operator>(const Rational &a, const Rational &b) {
    return a.v_ > b.v_;
  }
  friend bool operator>=(const Rational &a, const Rational &b) {
    return a.v_ >= b.v_;
  }

  // Largest integer <= and smallest integer >= this value.
  Integer floor() const;
  Integer ceil() const;

  // Fractional part in [0,1):  *this - floor(*this).
  Rational frac() const;

  friend std::ostream &operator<<(std::ostream &os, const Rational &r);

private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

// n! as an Integer; n must be >= 0.
Integer factorial(long n);

// Binomial coefficient C(n, k); zero when k < 0 or k > n.
Integer binomial(long n, long k);

} // namespace brieskorn

#endif // BRIESKORN_RATIONAL_HPP
