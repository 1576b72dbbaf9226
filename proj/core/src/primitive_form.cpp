#include "brieskorn/primitive_form.hpp"

#include <sstream>

#include "brieskorn/errors.hpp"
#include "brieskorn/parallel.hpp"

namespace brieskorn {

std::vector<long> q_ab(const GammaTable &table, const DeformIndex &a,
                       const DeformIndex &b) {
  if (!a.contains(b)) {
    throw DomainError("q_ab requires b <= a componentwise");
  }
  const BPShape &shape = table.shape();
  const Decomposition db = decompose(table, b);
  const Decomposition dab = decompose(table, a.minus(b));
  std::vector<long> q(shape.vars());
  for (std::size_t i = 0; i < shape.vars(); ++i) {
    q[i] = (db.r[i] + dab.p[i]) / shape.exponent(i);
  }
  return q;
}

namespace {

// One summand of the recursion for the pair (a, b):
//   (-1)^{|a-b|} * c_b / (a-b)! * prod_i prod_{l=1}^{q_i} (r(b)_i + p(a-b)_i - l*m_i + 1)/m_i
Rational recursion_term(const GammaTable &table, const DeformIndex &a,
                        const DeformIndex &b, const Rational &cb) {
  const BPShape &shape = table.shape();
  const DeformIndex diff = a.minus(b);
  const Decomposition db = decompose(table, b);
  const Decomposition dd = decompose(table, diff);

  Rational term = cb / Rational(diff.index_factorial());
  if (diff.degree() % 2 != 0) {
    term = -term;
  }
  for (std::size_t i = 0; i < shape.vars(); ++i) {
    const long m = shape.exponent(i);
    const long top = db.r[i] + dd.p[i];
    const long q = top / m;
    for (long l = 1; l <= q; ++l) {
      term *= Rational(top - l * m + 1, m);
      if (term.is_zero()) {
        return term;
      }
    }
  }
  return term;
}

} // namespace

Expansion expand(const BPShape &shape, long k) {
  const GammaTable table(shape);
  const LevelSets sets = level_sets(table, k);

  Expansion exp{shape, k, {}};
  std::map<DeformIndex, Rational> &memo = exp.coefficients;

  // Group admissible indices by degree; all coefficients of one degree depend
  // only on strictly smaller degrees, so a level can be done in parallel.
  std::size_t lo = 0;
  while (lo < sets.admissible.size()) {
    std::size_t hi = lo;
    const long d = sets.admissible[lo].degree();
    while (hi < sets.admissible.size() && sets.admissible[hi].degree() == d) {
      ++hi;
    }
    std::vector<Rational> level(hi - lo);
    parallel_for(lo, hi, [&](std::size_t idx) {
      const DeformIndex &a = sets.admissible[idx];
      if (a.is_zero()) {
        level[idx - lo] = 1; // normalization of the constant term
        return;
      }
      Rational sum;
      for (const DeformIndex &b : enumerate_below(a)) {
        const auto it = memo.find(b);
        if (it == memo.end()) {
          continue; // non-admissible b contributes 0
        }
        if (it->second.is_zero()) {
          continue;
        }
        sum += recursion_term(table, a, b, it->second);
      }
      level[idx - lo] = -sum;
    });
    for (std::size_t idx = lo; idx < hi; ++idx) {
      memo.emplace(sets.admissible[idx], level[idx - lo]);
    }
    lo = hi;
  }
  return exp;
}

std::string render_form_factor(const MonomialIndex &r) {
  std::string s;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] == 0) {
      continue;
    }
    if (!s.empty()) {
      s += "·";
    }
    s += "x" + std::to_string(i + 1);
    if (r[i] != 1) {
      s += "^" + std::to_string(r[i]);
    }
  }
  return s.empty() ? "1" : s;
}

std::vector<std::string> render_lines(const Expansion &exp) {
  const GammaTable table(exp.shape);
  std::vector<std::string> lines;
  lines.reserve(exp.coefficients.size());
  for (const auto &[a, c] : exp.coefficients) {
    const Decomposition dec = decompose(table, a);
    std::string line = render_index(table, a);
    line += " · " + render_form_factor(dec.r);
    line += " · dt^" + std::to_string(-dec.e);
    line += " · " + c.str();
    lines.push_back(std::move(line));
  }
  return lines;
}

std::string render(const Expansion &exp) {
  std::string out;
  for (const std::string &line : render_lines(exp)) {
    out += line;
    out += "\n";
  }
  return out;
}

std::string render_tsv(const Expansion &exp) {
  const GammaTable table(exp.shape);
  std::string out;
  for (const auto &[a, c] : exp.coefficients) {
    const Decomposition dec = decompose(table, a);
    out += render_index(table, a);
    out += "\t" + render_form_factor(dec.r);
    out += "\t" + std::to_string(dec.e);
    out += "\t" + c.str();
    out += "\n";
  }
  return out;
}

} // namespace brieskorn

