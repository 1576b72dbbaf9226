#include "brieskorn/rational.hpp"

#include <ostream>

namespace brieskorn {

Rational::Rational(const Integer &num, const Integer &den) {
  if (sgn(den) == 0) {
    throw DomainError("rational with zero denominator");
  }
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

Rational Rational::parse(const std::string &text) {
  std::string t = text;
  // mpq_class accepts "p/q" directly but silently tolerates some garbage and
  // aborts on division by zero, so validate first.
  if (t.empty()) {
    throw ParseError("empty rational literal");
  }
  const auto slash = t.find('/');
  const auto is_int = [](const std::string &s) {
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) {
      return false;
    }
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        return false;
      }
    }
    return true;
  };
  if (slash == std::string::npos) {
    if (!is_int(t)) {
      throw ParseError("bad rational literal: '" + text + "'");
    }
    return Rational(Integer(t));
  }
  const std::string ns = t.substr(0, slash);
  const std::string ds = t.substr(slash + 1);
  if (!is_int(ns) || !is_int(ds)) {
    throw ParseError("bad rational literal: '" + text + "'");
  }
  const Integer den(ds);
  if (sgn(den) == 0) {
    throw ParseError("zero denominator in rational literal: '" + text + "'");
  }
  return Rational(Integer(ns), den);
}

std::string Rational::str() const {
  if (v_.get_den() == 1) {
    return v_.get_num().get_str();
  }
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational &Rational::operator+=(const Rational &o) {
  v_ += o.v_;
  return *this;
}

Rational &Rational::operator-=(const Rational &o) {
  v_ -= o.v_;
  return *this;
}

Rational &Rational::operator*=(const Rational &o) {
  v_ *= o.v_;
  return *this;
}

Rational &Rational::operator/=(const Rational &o) {
  if (o.is_zero()) {
    throw DomainError("division by zero");
  }
  v_ /= o.v_;
  return *this;
}

Integer Rational::floor() const {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

Integer Rational::ceil() const {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return q;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

std::ostream &operator<<(std::ostream &os, const Rational &r) {
  return os << r.str();
}

Integer factorial(long n) {
  if (n < 0) {
    throw DomainError("factorial of negative number");
  }
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

Integer binomial(long n, long k) {
  if (k < 0 || k > n) {
    return 0;
  }
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return b;
}

} // namespace brieskorn

