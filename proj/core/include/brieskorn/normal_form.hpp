#ifndef BRIESKORN_NORMAL_FORM_HPP
#define BRIESKORN_NORMAL_FORM_HPP

#include <map>
#include <string>
#include <tuple>

#include "brieskorn/deform.hpp"
#include "brieskorn/rational.hpp"
#include "brieskorn/shape.hpp"

namespace brieskorn {

// Normal form of a class [x^nu w0]: either zero, or a box exponent times a
// non-negative power of u with an exact scalar factor.
struct ReductionResult {
  bool zero = false;
  long j = 0;       // accumulated u-power, >= 0
  GammaIndex nu;    // inside the box when !zero
  Rational coeff;   // nonzero when !zero

  static ReductionResult make_zero() { return {true, 0, {}, Rational(0)}; }
};

// Rewrite [x^nu w0] into the box basis: per coordinate, an exponent value of
// m_i - 1 kills the class; an exponent >= m_i trades m_i powers of x_i for
// one power of u and the factor (nu_i - m_i + 1)/m_i.  The coordinates do not
// interact, so the result is independent of processing order.
ReductionResult reduce_monomial(const BPShape &shape, const MonomialIndex &nu);

// Element of the truncated formal module: finite sum of terms
// c * u^j * [x^nu w0] * s^a with |a| <= k and nu in the box (stored by rank).
class NormalFormElement {
public:
  using Key = std::tuple<DeformIndex, long, std::size_t>; // (a, j, nu-rank)

  NormalFormElement(const BPShape &shape, long k);

  const BPShape &shape() const { return shape_; }
  long truncation() const { return k_; }
  const std::map<Key, Rational> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // accumulate; silently drops terms that cancel to zero
  void add(const DeformIndex &a, long j, std::size_t nu_rank,
           const Rational &c);

  NormalFormElement &operator+=(const NormalFormElement &o);
  NormalFormElement &operator-=(const NormalFormElement &o);
  NormalFormElement scaled(const Rational &c) const;

  // multiply by the monomial s^b (terms pushed past the truncation are
  // dropped, consistent with the formal s-adic setting)
  NormalFormElement s_shifted(const DeformIndex &b) const;

  std::string str(const GammaTable &table) const; // diagnostics

  friend bool operator==(const NormalFormElement &x,
                         const NormalFormElement &y) {
    return x.shape_ == y.shape_ && x.k_ == y.k_ && x.terms_ == y.terms_;
  }

private:
  BPShape shape_;
  long k_;
  std::map<Key, Rational> terms_;
};

} // namespace brieskorn

#endif // BRIESKORN_NORMAL_FORM_HPP
