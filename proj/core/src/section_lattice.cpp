#include "brieskorn/section_lattice.hpp"

#include <algorithm>

#include "brieskorn/errors.hpp"

namespace brieskorn {

AbstractLattice::AbstractLattice(std::vector<Rational> alphas,
                                 std::vector<std::vector<ActionTerm>> t_action)
    : alphas_(std::move(alphas)), t_action_(std::move(t_action)) {
  if (alphas_.empty()) {
    throw DomainError("lattice rank must be >= 1");
  }
  if (t_action_.size() != alphas_.size()) {
    throw DomainError("t-action must cover every basis label");
  }
  for (auto &terms : t_action_) {
    for (const ActionTerm &term : terms) {
      if (term.target >= alphas_.size()) {
        throw DomainError("t-action target out of range");
      }
      if (term.coeff.is_zero()) {
        throw DomainError("t-action terms must have nonzero coefficients");
      }
    }
    // canonical order so structurally equal lattices compare equal
    std::sort(terms.begin(), terms.end(),
              [](const ActionTerm &x, const ActionTerm &y) {
                return std::tie(x.target, x.j) < std::tie(y.target, y.j);
              });
    for (std::size_t i = 1; i < terms.size(); ++i) {
      if (terms[i - 1].target == terms[i].target &&
          terms[i - 1].j == terms[i].j) {
        throw DomainError("duplicate t-action term");
      }
    }
  }
}

AbstractLattice AbstractLattice::semisimple(std::vector<Rational> alphas) {
  std::vector<std::vector<ActionTerm>> action(alphas.size());
  for (std::size_t k = 0; k < alphas.size(); ++k) {
    if (!alphas[k].is_zero()) {
      action[k].push_back({k, 1, alphas[k]});
    }
  }
  return AbstractLattice(std::move(alphas), std::move(action));
}

LatticeElement LatticeElement::basis(std::size_t label, long j) {
  LatticeElement e;
  e.add(label, j, Rational(1));
  return e;
}

void LatticeElement::add(std::size_t label, long j, const Rational &c) {
  if (c.is_zero()) {
    return;
  }
  const Key key{label, j};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }
}

LatticeElement &LatticeElement::operator+=(const LatticeElement &o) {
  for (const auto &[key, c] : o.terms_) {
    add(key.first, key.second, c);
  }
  return *this;
}

LatticeElement &LatticeElement::operator-=(const LatticeElement &o) {
  for (const auto &[key, c] : o.terms_) {
    add(key.first, key.second, -c);
  }
  return *this;
}

LatticeElement LatticeElement::scaled(const Rational &c) const {
  LatticeElement out;
  if (c.is_zero()) {
    return out;
  }
  for (const auto &[key, v] : terms_) {
    out.terms_.emplace(key, v * c);
  }
  return out;
}

LatticeElement LatticeElement::u_shifted(long dj) const {
  LatticeElement out;
  for (const auto &[key, v] : terms_) {
    out.terms_.emplace(Key{key.first, key.second + dj}, v);
  }
  return out;
}

std::string LatticeElement::str() const {
  if (terms_.empty()) {
    return "0";
  }
  std::string s;
  for (const auto &[key, c] : terms_) {
    if (!s.empty()) {
      s += " + ";
    }
    s += c.str();
    if (key.second != 0) {
      s += "·u^" + std::to_string(key.second);
    }
    s += "·v" + std::to_string(key.first + 1);
  }
  return s;
}

LatticeElement t_apply(const AbstractLattice &lattice,
                       const LatticeElement &x) {
  LatticeElement out;
  for (const auto &[key, c] : x.terms()) {
    const auto &[label, j] = key;
    if (label >= lattice.rank()) {
      throw DomainError("lattice element label out of range");
    }
    // t(u^j v) = u^j (t v) + j u^{j+1} v
    for (const ActionTerm &term : lattice.t_terms(label)) {
      out.add(term.target, term.j + j, c * term.coeff);
    }
    if (j != 0) {
      out.add(label, j + 1, c * Rational(j));
    }
  }
  return out;
}

} // namespace brieskorn

