#include "brieskorn/filtered_space.hpp"

#include <algorithm>

#include "brieskorn/errors.hpp"

namespace brieskorn {

FilteredPairedSpace::FilteredPairedSpace(
    long m, std::vector<std::pair<long, long>> levels, Matrix pairing)
    : m_(m), levels_(std::move(levels)), pairing_(std::move(pairing)) {
  if (levels_.empty()) {
    throw DomainError("filtered space needs at least one level");
  }
  std::sort(levels_.begin(), levels_.end());
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (levels_[i].second <= 0) {
      throw DomainError("level dimensions must be positive");
    }
    if (i > 0 && levels_[i - 1].first == levels_[i].first) {
      throw DomainError("duplicate filtration level");
    }
    offsets_.push_back(dim_);
    dim_ += static_cast<std::size_t>(levels_[i].second);
  }
  for (const auto &[p, e] : levels_) {
    if (!has_level(m_ - p) || dim_at(m_ - p) != e) {
      throw DomainError("level dimensions must satisfy e_p = e_{m-p}");
    }
  }
  if (pairing_.rows() != dim_ || pairing_.cols() != dim_) {
    throw DomainError("pairing matrix size does not match the space");
  }
  const bool even = m_ % 2 == 0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      const Rational mirrored =
          even ? pairing_.at(j, i) : -pairing_.at(j, i);
      if (pairing_.at(i, j) != mirrored) {
        throw DomainError("pairing is not (-1)^m-symmetric");
      }
    }
  }
  // S(F^p, F^q) = 0 for p + q > m, blockwise
  for (std::size_t bi = 0; bi < levels_.size(); ++bi) {
    for (std::size_t bj = 0; bj < levels_.size(); ++bj) {
      if (levels_[bi].first + levels_[bj].first <= m_) {
        continue;
      }
      for (long r = 0; r < levels_[bi].second; ++r) {
        for (long c = 0; c < levels_[bj].second; ++c) {
          if (!pairing_.at(offsets_[bi] + r, offsets_[bj] + c).is_zero()) {
            throw DomainError(
                "pairing must vanish on levels with p + q > m");
          }
        }
      }
    }
  }
}

std::size_t FilteredPairedSpace::level_index(long p) const {
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (levels_[i].first == p) {
      return i;
    }
  }
  throw DomainError("no such filtration level");
}

bool FilteredPairedSpace::has_level(long p) const {
  for (const auto &[q, e] : levels_) {
    if (q == p) {
      return true;
    }
  }
  return false;
}

long FilteredPairedSpace::dim_at(long p) const {
  for (const auto &[q, e] : levels_) {
    if (q == p) {
      return e;
    }
  }
  return 0;
}

namespace {

// S(x, y) for column vectors over the ambient basis
Rational pair_columns(const Matrix &s, const Matrix &cols, std::size_t x,
                      std::size_t y) {
  Rational acc;
  for (std::size_t i = 0; i < s.rows(); ++i) {
    if (cols.at(i, x).is_zero()) {
      continue;
    }
    for (std::size_t j = 0; j < s.cols(); ++j) {
      acc += cols.at(i, x) * s.at(i, j) * cols.at(j, y);
    }
  }
  return acc;
}

struct Peeler {
  const FilteredPairedSpace &space;
  Matrix v; // working columns, ambient layout
  std::map<long, int> signs;

  explicit Peeler(const FilteredPairedSpace &s)
      : space(s), v(Matrix::identity(s.dim())) {}

  Rational sp(std::size_t x, std::size_t y) const {
    return pair_columns(space.pairing(), v, x, y);
  }

  // column range of a level value
  std::pair<std::size_t, std::size_t> range(long p) const {
    const std::size_t idx = space.level_index(p);
    const std::size_t off = space.offset(idx);
    return {off, off + static_cast<std::size_t>(space.level_dim(idx))};
  }

  void add_to_column(std::size_t dst, std::size_t src, const Rational &c) {
    for (std::size_t i = 0; i < v.rows(); ++i) {
      v.at(i, dst) += c * v.at(i, src);
    }
  }

  void scale_column(std::size_t dst, const Rational &c) {
    for (std::size_t i = 0; i < v.rows(); ++i) {
      v.at(i, dst) *= c;
    }
  }

  // Normalize the levels from lo_idx to hi_idx (inclusive index range into
  // space.levels()); everything outside is already final and orthogonal to
  // this middle block.
  void peel(std::size_t lo_idx, std::size_t hi_idx);

  // single central level (m even, 2p = m): congruence-diagonalize
  void normalize_middle(long p);
};

void Peeler::peel(std::size_t lo_idx, std::size_t hi_idx) {
  if (lo_idx > hi_idx) {
    return;
  }
  const long m = space.weight();
  const long a = space.level(lo_idx);
  const long b = space.level(hi_idx);
  if (a == b) {
    if (2 * a != m) {
      throw DomainError("unpaired extreme level"); // excluded by construction
    }
    normalize_middle(a);
    return;
  }
  if (a + b != m) {
    throw DomainError("extreme levels do not pair"); // excluded as well
  }
  const auto [alo, ahi] = range(a);
  const auto [blo, bhi] = range(b);
  const std::size_t e = ahi - alo;

  // Gram block S(v_a, v_b) must be invertible (induced graded pairing)
  Matrix gram(e, e);
  for (std::size_t i = 0; i < e; ++i) {
    for (std::size_t j = 0; j < e; ++j) {
      gram.at(i, j) = sp(alo + i, blo + j);
    }
  }
  Matrix minv;
  try {
    minv = gram.inverse();
  } catch (const DomainError &) {
    throw DegeneratePairing("graded pairing block at level " +
                            std::to_string(a) + " is singular");
  }

  // replace the a-level columns so that S(v_{a,i}, v_{b,j}) = delta_ij;
  // with new_i = sum_l C(l,i) old_l this needs C^T * gram = id, i.e.
  // C = (gram^{-1})^T
  {
    Matrix fresh(v.rows(), e);
    for (std::size_t i = 0; i < e; ++i) {
      for (std::size_t r = 0; r < v.rows(); ++r) {
        Rational acc;
        for (std::size_t l = 0; l < e; ++l) {
          acc += v.at(r, alo + l) * minv.at(i, l);
        }
        fresh.at(r, i) = acc;
      }
    }
    for (std::size_t i = 0; i < e; ++i) {
      for (std::size_t r = 0; r < v.rows(); ++r) {
        v.at(r, alo + i) = fresh.at(r, i);
      }
    }
  }
  signs[a] = 1;
  signs[b] = (m % 2 == 0) ? 1 : -1;

  // cancel the residual self-pairing of level a using level b partners;
  // S(v_b, v_b) = 0 because b + b > m, so these corrections are free
  {
    const int even = (m % 2 == 0) ? 1 : -1;
    Matrix lambda(e, e);
    for (std::size_t i = 0; i < e; ++i) {
      for (std::size_t j = 0; j < e; ++j) {
        const Rational d = sp(alo + i, alo + j);
        lambda.at(i, j) = even == 1 ? d / Rational(2) : -d / Rational(2);
      }
    }
    for (std::size_t i = 0; i < e; ++i) {
      for (std::size_t j = 0; j < e; ++j) {
        if (!lambda.at(i, j).is_zero()) {
          add_to_column(alo + i, blo + j, -lambda.at(i, j));
        }
      }
    }
  }

  if (lo_idx + 1 > hi_idx) {
    return;
  }
  // recurse on the strictly-inner levels
  peel(lo_idx + 1, hi_idx - 1);

  // make the finished middle columns orthogonal to level a (their pairing
  // against level b already vanishes since r + b > m); correcting with v_b
  // keeps every middle-middle and middle-b pairing intact
  const int even = (m % 2 == 0) ? 1 : -1;
  for (std::size_t idx = lo_idx + 1; idx < hi_idx; ++idx) {
    const auto [rlo, rhi] = range(space.level(idx));
    for (std::size_t col = rlo; col < rhi; ++col) {
      for (std::size_t jb = 0; jb < e; ++jb) {
        const Rational mix = sp(col, alo + jb);
        if (!mix.is_zero()) {
          // S(v_b_j, v_a_j) = (-1)^m, so subtracting mix*(-1)^m*v_b_j
          // clears S(col, v_a_j)
          add_to_column(col, blo + jb,
                        even == 1 ? -mix : mix);
        }
      }
    }
  }
}

void Peeler::normalize_middle(long p) {
  const long m = space.weight();
  if (m % 2 != 0) {
    // the (-1)^m-antisymmetric middle Gram has zero diagonal; a symplectic
    // middle block cannot satisfy S(v_i, v_j) = sign * delta_ij at all
    throw DomainError("odd weight cannot carry a self-paired middle level");
  }
  const auto [lo, hi] = range(p);
  const std::size_t e = hi - lo;

  // congruence diagonalization of the symmetric middle Gram
  for (std::size_t i = 0; i < e; ++i) {
    if (sp(lo + i, lo + i).is_zero()) {
      // repair the pivot with a partner column; v_i + t*v_j has self-pairing
      // t^2 S(j,j) + 2t S(i,j), nonzero for t = 1 or t = -1 when S(i,j) != 0
      std::size_t j = i + 1;
      for (; j < e; ++j) {
        if (!sp(lo + i, lo + j).is_zero()) {
          break;
        }
      }
      if (j == e) {
        throw DegeneratePairing("middle graded block is singular");
      }
      add_to_column(lo + i, lo + j, Rational(1));
      if (sp(lo + i, lo + i).is_zero()) {
        add_to_column(lo + i, lo + j, Rational(-2));
      }
    }
    const Rational pivot = sp(lo + i, lo + i);
    if (pivot.is_zero()) {
      throw DegeneratePairing("middle graded block is singular");
    }
    for (std::size_t j = i + 1; j < e; ++j) {
      const Rational mix = sp(lo + i, lo + j);
      if (!mix.is_zero()) {
        add_to_column(lo + j, lo + i, -mix / pivot);
      }
    }
  }

  // all pivots must now be sign * square for a single sign epsilon_{m/2}
  int sign = 0;
  std::vector<Rational> scale(e);
  for (std::size_t i = 0; i < e; ++i) {
    const Rational pivot = sp(lo + i, lo + i);
    const int s = pivot.sign();
    if (sign == 0) {
      sign = s;
    } else if (s != sign) {
      throw DomainError(
          "middle level pivots have mixed signs; no rational normalization");
    }
    // pivot = sign * (num/den); need sqrt(|pivot|) rational
    const Integer num = pivot.num() * (s < 0 ? -1 : 1);
    const Integer den = pivot.den();
    Integer sqrt_num, sqrt_den;
    mpz_sqrt(sqrt_num.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sqrt_den.get_mpz_t(), den.get_mpz_t());
    if (sqrt_num * sqrt_num != num || sqrt_den * sqrt_den != den) {
      throw DomainError("middle level pivot " + pivot.str() +
                        " is not a rational square times a sign");
    }
    scale[i] = Rational(sqrt_den, sqrt_num);
  }
  for (std::size_t i = 0; i < e; ++i) {
    scale_column(lo + i, scale[i]);
  }
  signs[p] = sign;
}

} // namespace

AdaptedBasis adapted_basis(const FilteredPairedSpace &space) {
  Peeler peeler(space);
  peeler.peel(0, space.level_count() - 1);
  return AdaptedBasis{std::move(peeler.v), std::move(peeler.signs)};
}

} // namespace brieskorn

