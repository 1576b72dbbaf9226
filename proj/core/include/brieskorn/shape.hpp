#ifndef BRIESKORN_SHAPE_HPP
#define BRIESKORN_SHAPE_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "brieskorn/rational.hpp"

namespace brieskorn {

// Exponent vector of a monomial in the ambient variables x_1..x_n.
using MonomialIndex = std::vector<long>;

// Exponent vector constrained to the box prod [0, m_i - 2]; these label the
// standard monomial basis of the Milnor algebra of x_1^{m_1}+...+x_n^{m_n}.
using GammaIndex = std::vector<long>;

// The exponents (m_1, ..., m_n) of a Brieskorn-Pham polynomial
// f = x_1^{m_1} + ... + x_n^{m_n}.  Every m_i must be >= 2.
class BPShape {
public:
  explicit BPShape(std::vector<long> exponents);

  // Parse "7,3" or "2, 2, 2".
  static BPShape parse(const std::string &text);

  std::size_t vars() const { return m_.size(); }
  long exponent(std::size_t i) const { return m_[i]; }
  const std::vector<long> &exponents() const { return m_; }

  // prod (m_i - 1), the rank of the Milnor algebra.
  Integer milnor_number() const;

  // All box exponents, ascending in lexicographic order.
  std::vector<GammaIndex> gamma_set() const;

  // True when every coordinate lies in [0, m_i - 2].
  bool in_gamma(const GammaIndex &nu) const;

  std::string str() const; // "7,3"

  friend bool operator==(const BPShape &a, const BPShape &b) {
    return a.m_ == b.m_;
  }

private:
  std::vector<long> m_;
};

// For a weighted covering of degree r with weights a_i, the column of
// reduced data (b_i, c_i) = (r, a_i)/gcd(r, a_i).  Returns (b, c).
std::pair<std::vector<Integer>, std::vector<Integer>>
covering_exponents(const Integer &r, const std::vector<Integer> &a);

} // namespace brieskorn

#endif // BRIESKORN_SHAPE_HPP
