#ifndef BRIESKORN_FILTERED_SPACE_HPP
#define BRIESKORN_FILTERED_SPACE_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "brieskorn/matrix.hpp"

namespace brieskorn {

// A finite decreasing filtration indexed by the integer levels present,
// together with a (-1)^m-symmetric pairing S on the whole space.  The basis
// is ordered by level ascending, then index inside the level; F^p is the span
// of all basis vectors at levels >= p.
//
// Construction validates: symmetric level dimensions (e_p = e_{m-p}),
// S^T = (-1)^m S, and S(F^p, F^q) = 0 whenever p + q > m.
class FilteredPairedSpace {
public:
  FilteredPairedSpace(long m, std::vector<std::pair<long, long>> levels,
                      Matrix pairing);

  long weight() const { return m_; }
  std::size_t level_count() const { return levels_.size(); }
  long level(std::size_t idx) const { return levels_[idx].first; }
  long level_dim(std::size_t idx) const { return levels_[idx].second; }
  const std::vector<std::pair<long, long>> &levels() const { return levels_; }

  std::size_t dim() const { return dim_; }
  const Matrix &pairing() const { return pairing_; }

  // first basis position of a level (by index into levels())
  std::size_t offset(std::size_t idx) const { return offsets_[idx]; }

  // index into levels() for the level value p; DomainError when absent
  std::size_t level_index(long p) const;
  bool has_level(long p) const;
  long dim_at(long p) const; // 0 when absent

private:
  long m_;
  std::vector<std::pair<long, long>> levels_; // (p, e_p), p ascending
  std::vector<std::size_t> offsets_;
  std::size_t dim_ = 0;
  Matrix pairing_;
};

// Basis adapted to the pairing: columns (in the same level-block layout as
// the input basis) with S(v_{p,i}, v_{q,j}) = sign_p * [p+q == m] * [i == j],
// every v_{p,i} supported on levels >= p.
struct AdaptedBasis {
  Matrix vectors;
  std::map<long, int> signs; // p -> +1/-1, sign_p = (-1)^m * sign_{m-p}
};

// Constructive lift: peel the extreme level pair, biorthogonalize, kill the
// self-pairing of the low level using the top level, recurse on the middle.
// A middle level at exactly m/2 is normalized by congruence diagonalization;
// over the rationals that final scaling needs each pivot to be a square times
// the block sign, and a DomainError reports when the input leaves Q.
// DegeneratePairing signals a singular graded block.
AdaptedBasis adapted_basis(const FilteredPairedSpace &space);

} // namespace brieskorn

#endif // BRIESKORN_FILTERED_SPACE_HPP
