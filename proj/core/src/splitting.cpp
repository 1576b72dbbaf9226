#include "brieskorn/splitting.hpp"

#include <algorithm>
#include <set>

#include "brieskorn/errors.hpp"

namespace brieskorn {

namespace {

// A position (level p, index i within the level), ordered lexicographically.
struct Pos {
  long p = 0;
  long i = 0;
};

bool pos_less(const Pos &a, const Pos &b) {
  if (a.p != b.p) {
    return a.p < b.p;
  }
  return a.i < b.i;
}

bool pos_eq(const Pos &a, const Pos &b) { return a.p == b.p && a.i == b.i; }

std::vector<Pos> all_positions(const FilteredPairedSpace &space) {
  std::vector<Pos> out;
  for (const auto &[p, dim] : space.levels()) {
    for (long i = 0; i < dim; ++i) {
      out.push_back(Pos{p, i});
    }
  }
  return out;
}

// Pairs (A, B) with level(A) + level(B) below the weight and A <= B (strict
// when the weight is odd, since the pairing of a vector with itself then
// vanishes identically); each such pair carries one orthogonality relation.
std::vector<std::pair<Pos, Pos>>
relation_pairs(const FilteredPairedSpace &space) {
  const bool even = space.weight() % 2 == 0;
  const auto positions = all_positions(space);
  std::vector<std::pair<Pos, Pos>> out;
  for (const Pos &a : positions) {
    for (const Pos &b : positions) {
      if (a.p + b.p >= space.weight()) {
        continue;
      }
      if (pos_less(a, b) || (even && pos_eq(a, b))) {
        out.emplace_back(a, b);
      }
    }
  }
  return out;
}

// The relation attached to (A, B) pins down the coefficient at
// (A, (m - level(B), index(B))).
ThetaKey determined_key(const FilteredPairedSpace &space,
                        const std::pair<Pos, Pos> &rel) {
  return ThetaKey{rel.first.p, rel.first.i, space.weight() - rel.second.p,
                  rel.second.i};
}

} // namespace

SplittingParameters
independent_parameter_set(const FilteredPairedSpace &space) {
  const auto positions = all_positions(space);

  std::set<ThetaKey> depending;
  for (const auto &rel : relation_pairs(space)) {
    depending.insert(determined_key(space, rel));
  }

  SplittingParameters out;
  for (const Pos &a : positions) {
    for (const Pos &b : positions) {
      if (a.p >= b.p) {
        continue;
      }
      const ThetaKey key{a.p, a.i, b.p, b.i};
      if (depending.count(key)) {
        out.depending.push_back(key);
      } else {
        out.independent.push_back(key);
      }
    }
  }
  std::sort(out.depending.begin(), out.depending.end());
  return out;
}

Integer parameter_count(const std::map<long, long> &dims, long m) {
  for (const auto &[p, e] : dims) {
    if (e <= 0) {
      throw DomainError("parameter_count: level dimensions must be positive");
    }
    auto mirror = dims.find(m - p);
    if (mirror == dims.end() || mirror->second != e) {
      throw DomainError("parameter_count: dimensions are not symmetric about "
                        "the weight");
    }
  }

  Integer total = 0;
  for (auto it = dims.begin(); it != dims.end(); ++it) {
    for (auto jt = std::next(it); jt != dims.end(); ++jt) {
      if (it->first + jt->first < m) {
        total += Integer(it->second) * Integer(jt->second);
      }
    }
  }
  const bool even = m % 2 == 0;
  for (const auto &[p, e] : dims) {
    if (2 * p < m) {
      total += even ? binomial(e, 2) : binomial(e + 1, 2);
    }
  }
  return total;
}

Integer class_parameter_count(const std::map<long, long> &dims) {
  for (const auto &[p, e] : dims) {
    (void)p;
    if (e <= 0) {
      throw DomainError(
          "class_parameter_count: level dimensions must be positive");
    }
  }
  Integer total = 0;
  for (auto it = dims.begin(); it != dims.end(); ++it) {
    for (auto jt = std::next(it); jt != dims.end(); ++jt) {
      total += Integer(it->second) * Integer(jt->second);
    }
  }
  return total;
}

Splitting solve_splitting(const FilteredPairedSpace &space,
                          const AdaptedBasis &basis,
                          const std::map<ThetaKey, Rational> &assignment) {
  const std::size_t dim = space.dim();
  const long m = space.weight();
  if (basis.vectors.rows() != dim || basis.vectors.cols() != dim) {
    throw DomainError("solve_splitting: basis size does not match the space");
  }
  for (const auto &[p, e] : space.levels()) {
    (void)e;
    if (!basis.signs.count(p)) {
      throw DomainError("solve_splitting: basis is missing the sign of level " +
                        std::to_string(p));
    }
  }

  const SplittingParameters params = independent_parameter_set(space);
  {
    std::set<ThetaKey> independent(params.independent.begin(),
                                   params.independent.end());
    for (const auto &[key, value] : assignment) {
      (void)value;
      if (!independent.count(key)) {
        throw DomainError("solve_splitting: assignment contains a key that is "
                          "not an independent parameter");
      }
    }
    for (const ThetaKey &key : params.independent) {
      if (!assignment.count(key)) {
        throw IncompleteAssignment(
            "solve_splitting: assignment misses an independent parameter");
      }
    }
  }

  std::map<ThetaKey, Rational> theta = assignment;
  const auto eps = [&](long p) { return Rational(basis.signs.at(p)); };
  const auto lookup = [&](long p, long i, long q, long j) -> Rational {
    if (p == q) {
      // The leading coefficient of a splitting vector at its own position.
      return i == j ? Rational(1) : Rational(0);
    }
    if (p > q) {
      return Rational(0);
    }
    auto it = theta.find(ThetaKey{p, i, q, j});
    if (it == theta.end()) {
      throw SolveOrderViolation(
          "solve_splitting: needed a coefficient that has not been "
          "determined yet");
    }
    return it->second;
  };

  // Each relation consumes determined coefficients only from relations with a
  // strictly larger level sum, so walk the level sum downwards.
  std::vector<std::pair<Pos, Pos>> rels = relation_pairs(space);
  std::stable_sort(rels.begin(), rels.end(),
                   [](const auto &x, const auto &y) {
                     return x.first.p + x.second.p > y.first.p + y.second.p;
                   });

  for (const auto &[a, b] : rels) {
    Rational quad;
    for (const auto &[r, er] : space.levels()) {
      if (r <= a.p || r >= m - b.p) {
        continue;
      }
      for (long k = 0; k < er; ++k) {
        const Rational left = lookup(a.p, a.i, r, k);
        if (left.is_zero()) {
          continue;
        }
        quad += eps(r) * left * lookup(b.p, b.i, m - r, k);
      }
    }

    const ThetaKey target = determined_key(space, {a, b});
    Rational value;
    if (pos_eq(a, b)) {
      // The two boundary terms of the relation coincide.
      value = -quad / (Rational(2) * eps(a.p));
    } else {
      value = (-eps(a.p) * lookup(b.p, b.i, m - a.p, a.i) - quad) /
              eps(m - b.p);
    }
    if (!theta.emplace(target, value).second) {
      throw SolveOrderViolation(
          "solve_splitting: a coefficient was determined twice");
    }
  }

  Splitting out;
  out.theta = std::move(theta);
  out.vectors = basis.vectors;
  for (const auto &[key, value] : out.theta) {
    if (value.is_zero()) {
      continue;
    }
    const std::size_t col = space.offset(space.level_index(key[0])) +
                            static_cast<std::size_t>(key[1]);
    const std::size_t src = space.offset(space.level_index(key[2])) +
                            static_cast<std::size_t>(key[3]);
    for (std::size_t row = 0; row < out.vectors.rows(); ++row) {
      out.vectors.at(row, col) += value * basis.vectors.at(row, src);
    }
  }
  return out;
}

bool verify_orthogonal(const FilteredPairedSpace &space,
                       const Splitting &splitting) {
  const Matrix gram =
      splitting.vectors.transpose() * space.pairing() * splitting.vectors;
  std::vector<long> level_of(space.dim());
  for (std::size_t idx = 0; idx < space.level_count(); ++idx) {
    for (long i = 0; i < space.level_dim(idx); ++i) {
      level_of[space.offset(idx) + static_cast<std::size_t>(i)] =
          space.level(idx);
    }
  }
  for (std::size_t row = 0; row < gram.rows(); ++row) {
    for (std::size_t col = 0; col < gram.cols(); ++col) {
      if (level_of[row] + level_of[col] == space.weight()) {
        continue;
      }
      if (!gram.at(row, col).is_zero()) {
        return false;
      }
    }
  }
  return true;
}

} // namespace brieskorn
