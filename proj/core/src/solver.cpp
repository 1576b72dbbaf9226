#include "brieskorn/solver.hpp"

#include <map>

#include "brieskorn/errors.hpp"
#include "brieskorn/normal_form.hpp"

namespace brieskorn {

namespace {

// coefficient of one basis vector u^j [x^nu w0] inside one s-monomial slot
using Slot = std::map<std::pair<long, std::size_t>, Rational>;

void slot_add(Slot &slot, long j, std::size_t rank, const Rational &c) {
  if (c.is_zero()) {
    return;
  }
  const auto key = std::make_pair(j, rank);
  auto it = slot.find(key);
  if (it == slot.end()) {
    slot.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) {
      slot.erase(it);
    }
  }
}

} // namespace

std::pair<Expansion, SolveReport> solve_primitive(const BPShape &shape,
                                                  long k) {
  const GammaTable table(shape);
  const LevelSets sets = level_sets(table, k);

  // series data shared by every forward image
  std::vector<MonomialIndex> p_of(sets.all.size());
  std::vector<Rational> coeff_of(sets.all.size()); // (-1)^{|b'|}/b'!
  for (std::size_t i = 0; i < sets.all.size(); ++i) {
    p_of[i] = decompose(table, sets.all[i]).p;
    Rational c(Integer(1), sets.all[i].index_factorial());
    coeff_of[i] = sets.all[i].degree() % 2 != 0 ? -c : c;
  }

  std::map<DeformIndex, Slot> acc;
  std::map<DeformIndex, Decomposition> adm;
  for (const DeformIndex &a : sets.admissible) {
    adm.emplace(a, decompose(table, a));
  }

  Expansion exp{shape, k, {}};
  SolveReport report;

  for (const DeformIndex &a : sets.all) {
    const Slot empty;
    const auto slot_it = acc.find(a);
    const Slot &slot = slot_it == acc.end() ? empty : slot_it->second;

    const auto adm_it = adm.find(a);
    if (adm_it == adm.end()) {
      // no coefficient lives here; nothing may survive at u-power >= 0
      SolveReport::Residual res{a, 0, 0};
      bool any = false;
      for (const auto &[key, c] : slot) {
        if (key.first >= 0) {
          throw ConsistencyFailure(
              "non-admissible index " + a.str() +
              " has residual content at u-power >= 0");
        }
        res.term_count += 1;
        res.max_upower = any ? std::max(res.max_upower, key.first) : key.first;
        any = true;
      }
      report.checked += 1;
      if (any) {
        report.residuals.push_back(std::move(res));
      }
      continue;
    }

    const Decomposition &dec = adm_it->second;
    const std::size_t target_rank = table.rank(dec.r);

    // the s^a equation must be a single scalar equation on u^{e_a}[x^{r(a)}]
    Rational measured;
    for (const auto &[key, c] : slot) {
      if (key.first < 0) {
        continue;
      }
      if (key.first != dec.e || key.second != target_rank) {
        throw ConsistencyFailure("equation at " + a.str() +
                                 " spreads over multiple basis vectors");
      }
      measured = c;
    }

    const Rational ca = (a.is_zero() ? Rational(1) : Rational(0)) - measured;
    exp.coefficients.emplace(a, ca);
    if (ca.is_zero()) {
      continue;
    }

    // fold ca * (forward image of u^{e_a}[x^{r(a)}] s^a) into the accumulator
    for (std::size_t bi = 0; bi < sets.all.size(); ++bi) {
      const DeformIndex &b = sets.all[bi];
      if (a.degree() + b.degree() > k) {
        break;
      }
      MonomialIndex exponent(shape.vars());
      for (std::size_t i = 0; i < shape.vars(); ++i) {
        exponent[i] = dec.r[i] + p_of[bi][i];
      }
      const ReductionResult red = reduce_monomial(shape, exponent);
      if (red.zero) {
        continue;
      }
      slot_add(acc[a.plus(b)], dec.e - b.degree() + red.j,
               table.rank(red.nu), ca * coeff_of[bi] * red.coeff);
    }
  }
  return {std::move(exp), std::move(report)};
}

} // namespace brieskorn

