#include "brieskorn/operators.hpp"

#include <map>

namespace brieskorn {

namespace {

struct SeriesTables {
  GammaTable gamma;
  std::vector<DeformIndex> all;    // every b with |b| <= k, sorted
  std::vector<MonomialIndex> p;    // p(b) aligned with all
  std::vector<Rational> inv_fact;  // 1/b! aligned with all

  SeriesTables(const BPShape &shape, long k) : gamma(shape) {
    LevelSets sets = level_sets(gamma, k);
    all = std::move(sets.all);
    p.reserve(all.size());
    inv_fact.reserve(all.size());
    for (const DeformIndex &b : all) {
      p.push_back(decompose(gamma, b).p);
      inv_fact.push_back(Rational(Integer(1), b.index_factorial()));
    }
  }
};

Rational signed_coeff(const SeriesTables &t, std::size_t bi, int sign) {
  Rational c = t.inv_fact[bi];
  if (sign < 0 && t.all[bi].degree() % 2 != 0) {
    return -c;
  }
  return c;
}

NormalFormElement apply_series(const NormalFormElement &x, int sign) {
  const SeriesTables t(x.shape(), x.truncation());
  NormalFormElement out(x.shape(), x.truncation());
  const std::size_t n = x.shape().vars();
  for (const auto &[key, c] : x.terms()) {
    const auto &[a, j, rank] = key;
    const GammaIndex &nu = t.gamma.at(rank);
    const long budget = x.truncation() - a.degree();
    for (std::size_t bi = 0; bi < t.all.size(); ++bi) {
      const DeformIndex &b = t.all[bi];
      if (b.degree() > budget) {
        break; // sorted by degree
      }
      MonomialIndex exponent(n);
      for (std::size_t i = 0; i < n; ++i) {
        exponent[i] = nu[i] + t.p[bi][i];
      }
      const ReductionResult red = reduce_monomial(x.shape(), exponent);
      if (red.zero) {
        continue;
      }
      out.add(a.plus(b), j - b.degree() + red.j, t.gamma.rank(red.nu),
              c * signed_coeff(t, bi, sign) * red.coeff);
    }
  }
  return out;
}

// unreduced representative terms c * u^j * x^nu w0 * s^a
using CochainKey = std::tuple<DeformIndex, long, MonomialIndex>;
using Cochain = std::map<CochainKey, Rational>;

Cochain apply_series_raw(const Cochain &x, const SeriesTables &t, long k,
                         int sign) {
  Cochain out;
  const std::size_t n = t.gamma.shape().vars();
  for (const auto &[key, c] : x) {
    const auto &[a, j, nu] = key;
    const long budget = k - a.degree();
    for (std::size_t bi = 0; bi < t.all.size(); ++bi) {
      const DeformIndex &b = t.all[bi];
      if (b.degree() > budget) {
        break;
      }
      MonomialIndex exponent(n);
      for (std::size_t i = 0; i < n; ++i) {
        exponent[i] = nu[i] + t.p[bi][i];
      }
      const CochainKey nk{a.plus(b), j - b.degree(), std::move(exponent)};
      const Rational v = c * signed_coeff(t, bi, sign);
      auto it = out.find(nk);
      if (it == out.end()) {
        out.emplace(nk, v);
      } else {
        it->second += v;
        if (it->second.is_zero()) {
          out.erase(it);
        }
      }
    }
  }
  return out;
}

} // namespace

NormalFormElement phi_apply(const NormalFormElement &x) {
  return apply_series(x, -1);
}

NormalFormElement psi_apply(const NormalFormElement &x) {
  return apply_series(x, +1);
}

NormalFormElement phi_psi_roundtrip(const NormalFormElement &x) {
  const SeriesTables t(x.shape(), x.truncation());
  Cochain lift;
  for (const auto &[key, c] : x.terms()) {
    const auto &[a, j, rank] = key;
    lift.emplace(CochainKey{a, j, t.gamma.at(rank)}, c);
  }
  const Cochain forward = apply_series_raw(lift, t, x.truncation(), -1);
  const Cochain back = apply_series_raw(forward, t, x.truncation(), +1);
  NormalFormElement out(x.shape(), x.truncation());
  for (const auto &[key, c] : back) {
    const auto &[a, j, nu] = key;
    const ReductionResult red = reduce_monomial(x.shape(), nu);
    if (red.zero) {
      continue;
    }
    out.add(a, j + red.j, t.gamma.rank(red.nu), c * red.coeff);
  }
  return out;
}

} // namespace brieskorn

