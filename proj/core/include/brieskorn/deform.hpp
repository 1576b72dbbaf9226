#ifndef BRIESKORN_DEFORM_HPP
#define BRIESKORN_DEFORM_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "brieskorn/rational.hpp"
#include "brieskorn/shape.hpp"

namespace brieskorn {

// The box exponents of a shape in ascending lexicographic order, with rank
// lookup in both directions.  Ranks are 0-based.
class GammaTable {
public:
  explicit GammaTable(const BPShape &shape);

  const BPShape &shape() const { return shape_; }
  std::size_t size() const { return list_.size(); }
  const GammaIndex &at(std::size_t rank) const { return list_[rank]; }
  const std::vector<GammaIndex> &list() const { return list_; }

  // Rank of nu; throws DomainError when nu is not a box exponent.
  std::size_t rank(const GammaIndex &nu) const;

private:
  BPShape shape_;
  std::vector<GammaIndex> list_;
  std::map<GammaIndex, std::size_t> rank_;
};

// A multi-index over the box exponents: finitely many ranks with positive
// multiplicities.  These index the deformation directions s_nu and the
// coefficients of the primitive form expansion.
//
// Ordering is (total degree, then lexicographic on the dense count vector),
// which matches the order the degree-by-degree solve consumes indices in.
class DeformIndex {
public:
  DeformIndex() = default;

  // a single rank with multiplicity count (count >= 1)
  static DeformIndex single(std::size_t rank, long count);

  // entries sorted by rank, all counts >= 1
  const std::vector<std::pair<std::size_t, long>> &entries() const {
    return entries_;
  }

  bool is_zero() const { return entries_.empty(); }
  long degree() const { return degree_; } // |a| = sum of counts
  long count(std::size_t rank) const;

  // add `count` to the multiplicity of `rank` (count may be negative as long
  // as the result stays >= 0)
  void add(std::size_t rank, long count);

  DeformIndex plus(const DeformIndex &o) const;

  // componentwise difference; requires o <= *this componentwise
  DeformIndex minus(const DeformIndex &o) const;

  // componentwise o[r] <= this[r]
  bool contains(const DeformIndex &o) const;

  // prod over ranks of count!
  Integer index_factorial() const;

  std::string str() const; // "{(5,1):3, (4,1):1}"-style, for diagnostics

  friend bool operator==(const DeformIndex &a, const DeformIndex &b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator!=(const DeformIndex &a, const DeformIndex &b) {
    return !(a == b);
  }
  friend bool operator<(const DeformIndex &a, const DeformIndex &b);

private:
  std::vector<std::pair<std::size_t, long>> entries_;
  long degree_ = 0;
};

// The numerical data attached to a deformation index:
//   p_i = sum_nu nu_i * a_nu       (exponents of x^{p})
//   p_i = q_i * m_i + r_i          (division with remainder, 0 <= r_i < m_i)
//   e   = sum_i q_i - |a|          (net power of the u-variable)
struct Decomposition {
  MonomialIndex p;
  std::vector<long> q;
  std::vector<long> r;
  long e = 0;

  // whether every r_i avoids m_i - 1, i.e. r is a box exponent
  bool remainder_in_box = false;
};

Decomposition decompose(const GammaTable &table, const DeformIndex &a);

// All indices of degree <= k ("all") and the subset with e >= 0 and box
// remainder ("admissible"), both sorted ascending.
struct LevelSets {
  std::vector<DeformIndex> all;
  std::vector<DeformIndex> admissible;
};

LevelSets level_sets(const GammaTable &table, long k);

// All b with 0 <= b < a componentwise (a itself excluded), sorted ascending;
// there are prod(a_nu + 1) - 1 of them.
std::vector<DeformIndex> enumerate_below(const DeformIndex &a);

// Render an index the way expansions print it: "s_{(5,1)}^3" factors joined
// with "·"; the empty index renders as "1".
std::string render_index(const GammaTable &table, const DeformIndex &a);

} // namespace brieskorn

#endif // BRIESKORN_DEFORM_HPP
