#include "brieskorn/normal_form.hpp"

#include "brieskorn/errors.hpp"
#include "brieskorn/primitive_form.hpp"

namespace brieskorn {

ReductionResult reduce_monomial(const BPShape &shape, const MonomialIndex &nu) {
  if (nu.size() != shape.vars()) {
    throw DomainError("monomial arity does not match shape");
  }
  ReductionResult res;
  res.j = 0;
  res.nu = nu;
  res.coeff = 1;
  for (std::size_t i = 0; i < shape.vars(); ++i) {
    const long m = shape.exponent(i);
    if (res.nu[i] < 0) {
      throw DomainError("monomial exponent must be >= 0");
    }
    if (res.nu[i] % m == m - 1) {
      return ReductionResult::make_zero();
    }
    while (res.nu[i] >= m) {
      res.coeff *= Rational(res.nu[i] - m + 1, m);
      res.nu[i] -= m;
      res.j += 1;
    }
  }
  return res;
}

NormalFormElement::NormalFormElement(const BPShape &shape, long k)
    : shape_(shape), k_(k) {
  if (k < 0) {
    throw DomainError("truncation order must be >= 0");
  }
}

void NormalFormElement::add(const DeformIndex &a, long j, std::size_t nu_rank,
                            const Rational &c) {
  if (c.is_zero()) {
    return;
  }
  if (a.degree() > k_) {
    throw DomainError("term beyond s-degree truncation");
  }
  const Key key{a, j, nu_rank};
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

NormalFormElement &NormalFormElement::operator+=(const NormalFormElement &o) {
  for (const auto &[key, c] : o.terms_) {
    add(std::get<0>(key), std::get<1>(key), std::get<2>(key), c);
  }
  return *this;
}

NormalFormElement &NormalFormElement::operator-=(const NormalFormElement &o) {
  for (const auto &[key, c] : o.terms_) {
    add(std::get<0>(key), std::get<1>(key), std::get<2>(key), -c);
  }
  return *this;
}

NormalFormElement NormalFormElement::scaled(const Rational &c) const {
  NormalFormElement out(shape_, k_);
  if (c.is_zero()) {
    return out;
  }
  for (const auto &[key, v] : terms_) {
    out.terms_.emplace(key, v * c);
  }
  return out;
}

NormalFormElement NormalFormElement::s_shifted(const DeformIndex &b) const {
  NormalFormElement out(shape_, k_);
  for (const auto &[key, v] : terms_) {
    const DeformIndex a = std::get<0>(key).plus(b);
    if (a.degree() > k_) {
      continue;
    }
    out.add(a, std::get<1>(key), std::get<2>(key), v);
  }
  return out;
}

std::string NormalFormElement::str(const GammaTable &table) const {
  if (terms_.empty()) {
    return "0";
  }
  std::string s;
  for (const auto &[key, c] : terms_) {
    if (!s.empty()) {
      s += " + ";
    }
    const auto &[a, j, rank] = key;
    s += c.str();
    s += "·u^" + std::to_string(j);
    s += "·[" + render_form_factor(table.at(rank)) + " w0]";
    if (!a.is_zero()) {
      s += "·" + render_index(table, a);
    }
  }
  return s;
}

} // namespace brieskorn

