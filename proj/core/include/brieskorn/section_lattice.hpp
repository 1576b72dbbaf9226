#ifndef BRIESKORN_SECTION_LATTICE_HPP
#define BRIESKORN_SECTION_LATTICE_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "brieskorn/rational.hpp"

namespace brieskorn {

// One term of a declared t-action: coeff * u^j * v_target.
struct ActionTerm {
  std::size_t target = 0;
  long j = 0;
  Rational coeff;

  friend bool operator==(const ActionTerm &a, const ActionTerm &b) {
    return a.target == b.target && a.j == b.j && a.coeff == b.coeff;
  }
};

// Finite-rank module over Laurent polynomials in u with an explicit t-action
// on the basis v_0..v_{mu-1}.  alpha_k is the eigenvalue of the semisimple
// part attached to v_k; the full action of t on v_k is the declared term list.
class AbstractLattice {
public:
  AbstractLattice(std::vector<Rational> alphas,
                  std::vector<std::vector<ActionTerm>> t_action);

  // the weighted-homogeneous model: t v_k = alpha_k u v_k
  static AbstractLattice semisimple(std::vector<Rational> alphas);

  std::size_t rank() const { return alphas_.size(); }
  const Rational &alpha(std::size_t k) const { return alphas_[k]; }
  const std::vector<Rational> &alphas() const { return alphas_; }
  const std::vector<ActionTerm> &t_terms(std::size_t k) const {
    return t_action_[k];
  }

  friend bool operator==(const AbstractLattice &a, const AbstractLattice &b) {
    return a.alphas_ == b.alphas_ && a.t_action_ == b.t_action_;
  }

private:
  std::vector<Rational> alphas_;
  std::vector<std::vector<ActionTerm>> t_action_;
};

// Finite sum of terms coeff * u^j * v_k, keyed by (k, j).
class LatticeElement {
public:
  using Key = std::pair<std::size_t, long>;

  LatticeElement() = default;
  static LatticeElement basis(std::size_t label, long j = 0);

  const std::map<Key, Rational> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(std::size_t label, long j, const Rational &c);

  LatticeElement &operator+=(const LatticeElement &o);
  LatticeElement &operator-=(const LatticeElement &o);
  LatticeElement scaled(const Rational &c) const;
  LatticeElement u_shifted(long dj) const; // multiply by u^dj

  std::string str() const; // diagnostics, e.g. "v1 - 1/2·u^2·v3"

  friend bool operator==(const LatticeElement &a, const LatticeElement &b) {
    return a.terms_ == b.terms_;
  }

private:
  std::map<Key, Rational> terms_;
};

// Exact application of t, extended from the declared basis action by
// linearity and the commutation rule t(u^j v) = u^j (t v) + j u^{j+1} v.
LatticeElement t_apply(const AbstractLattice &lattice, const LatticeElement &x);

} // namespace brieskorn

#endif // BRIESKORN_SECTION_LATTICE_HPP
