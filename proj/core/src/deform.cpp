#include "brieskorn/deform.hpp"

#include <algorithm>

#include "brieskorn/errors.hpp"

namespace brieskorn {

GammaTable::GammaTable(const BPShape &shape)
    : shape_(shape), list_(shape.gamma_set()) {
  for (std::size_t i = 0; i < list_.size(); ++i) {
    rank_[list_[i]] = i;
  }
}

std::size_t GammaTable::rank(const GammaIndex &nu) const {
  auto it = rank_.find(nu);
  if (it == rank_.end()) {
    throw DomainError("exponent is not in the box");
  }
  return it->second;
}

DeformIndex DeformIndex::single(std::size_t rank, long count) {
  DeformIndex a;
  a.add(rank, count);
  return a;
}

long DeformIndex::count(std::size_t rank) const {
  for (const auto &[r, c] : entries_) {
    if (r == rank) {
      return c;
    }
  }
  return 0;
}

void DeformIndex::add(std::size_t rank, long count) {
  if (count == 0) {
    return;
  }
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), rank,
      [](const auto &e, std::size_t r) { return e.first < r; });
  if (it != entries_.end() && it->first == rank) {
    it->second += count;
    if (it->second < 0) {
      throw DomainError("deform index multiplicity went negative");
    }
    if (it->second == 0) {
      entries_.erase(it);
    }
  } else {
    if (count < 0) {
      throw DomainError("deform index multiplicity went negative");
    }
    entries_.insert(it, {rank, count});
  }
  degree_ += count;
}

DeformIndex DeformIndex::plus(const DeformIndex &o) const {
  DeformIndex out = *this;
  for (const auto &[r, c] : o.entries_) {
    out.add(r, c);
  }
  return out;
}

DeformIndex DeformIndex::minus(const DeformIndex &o) const {
  DeformIndex out = *this;
  for (const auto &[r, c] : o.entries_) {
    out.add(r, -c);
  }
  return out;
}

bool DeformIndex::contains(const DeformIndex &o) const {
  for (const auto &[r, c] : o.entries_) {
    if (count(r) < c) {
      return false;
    }
  }
  return true;
}

Integer DeformIndex::index_factorial() const {
  Integer f = 1;
  for (const auto &[r, c] : entries_) {
    f *= factorial(c);
  }
  return f;
}

std::string DeformIndex::str() const {
  if (entries_.empty()) {
    return "{}";
  }
  std::string s = "{";
  bool first = true;
  for (const auto &[r, c] : entries_) {
    if (!first) {
      s += ", ";
    }
    first = false;
    s += std::to_string(r) + ":" + std::to_string(c);
  }
  return s + "}";
}

bool operator<(const DeformIndex &a, const DeformIndex &b) {
  if (a.degree_ != b.degree_) {
    return a.degree_ < b.degree_;
  }
  // lexicographic on the dense count vector: walk ranks in increasing order;
  // at the first rank where the counts differ, the smaller count wins
  auto ia = a.entries_.begin(), ib = b.entries_.begin();
  while (ia != a.entries_.end() && ib != b.entries_.end()) {
    if (ia->first != ib->first) {
      // one side has count 0 at the smaller rank
      return ia->first < ib->first ? false : true;
    }
    if (ia->second != ib->second) {
      return ia->second < ib->second;
    }
    ++ia;
    ++ib;
  }
  if (ia != a.entries_.end()) {
    return false; // a has extra positive count where b has zero
  }
  if (ib != b.entries_.end()) {
    return true;
  }
  return false;
}

Decomposition decompose(const GammaTable &table, const DeformIndex &a) {
  const BPShape &shape = table.shape();
  const std::size_t n = shape.vars();
  Decomposition d;
  d.p.assign(n, 0);
  for (const auto &[rank, c] : a.entries()) {
    if (rank >= table.size()) {
      throw DomainError("deform index rank out of range");
    }
    const GammaIndex &nu = table.at(rank);
    for (std::size_t i = 0; i < n; ++i) {
      d.p[i] += nu[i] * c;
    }
  }
  d.q.assign(n, 0);
  d.r.assign(n, 0);
  d.remainder_in_box = true;
  for (std::size_t i = 0; i < n; ++i) {
    const long m = shape.exponent(i);
    d.q[i] = d.p[i] / m;
    d.r[i] = d.p[i] % m;
    d.e += d.q[i];
    if (d.r[i] == m - 1) {
      d.remainder_in_box = false;
    }
  }
  d.e -= a.degree();
  return d;
}

namespace {

void fill_degree(std::size_t rank, std::size_t nranks, long remaining,
                 DeformIndex &scratch, std::vector<DeformIndex> &out) {
  if (rank == nranks) {
    if (remaining == 0) {
      out.push_back(scratch);
    }
    return;
  }
  if (rank == nranks - 1) {
    // last rank absorbs whatever is left
    scratch.add(rank, remaining);
    out.push_back(scratch);
    scratch.add(rank, -remaining);
    return;
  }
  for (long c = 0; c <= remaining; ++c) {
    scratch.add(rank, c);
    fill_degree(rank + 1, nranks, remaining - c, scratch, out);
    scratch.add(rank, -c);
  }
}

} // namespace

LevelSets level_sets(const GammaTable &table, long k) {
  if (k < 0) {
    throw DomainError("truncation order must be >= 0");
  }
  LevelSets sets;
  for (long d = 0; d <= k; ++d) {
    DeformIndex scratch;
    fill_degree(0, table.size(), d, scratch, sets.all);
  }
  std::sort(sets.all.begin(), sets.all.end());
  for (const DeformIndex &a : sets.all) {
    const Decomposition dec = decompose(table, a);
    if (dec.e >= 0 && dec.remainder_in_box) {
      sets.admissible.push_back(a);
    }
  }
  return sets;
}

std::vector<DeformIndex> enumerate_below(const DeformIndex &a) {
  std::vector<DeformIndex> out;
  out.emplace_back();
  for (const auto &[rank, cmax] : a.entries()) {
    std::vector<DeformIndex> next;
    next.reserve(out.size() * (cmax + 1));
    for (const DeformIndex &b : out) {
      for (long c = 0; c <= cmax; ++c) {
        DeformIndex nb = b;
        nb.add(rank, c);
        next.push_back(std::move(nb));
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  out.pop_back(); // drop a itself, the unique maximum in this order
  return out;
}

std::string render_index(const GammaTable &table, const DeformIndex &a) {
  if (a.is_zero()) {
    return "1";
  }
  std::string s;
  bool first = true;
  for (const auto &[rank, c] : a.entries()) {
    if (!first) {
      s += "·";
    }
    first = false;
    const GammaIndex &nu = table.at(rank);
    std::string tup = "(";
    for (std::size_t i = 0; i < nu.size(); ++i) {
      if (i) {
        tup += ",";
      }
      tup += std::to_string(nu[i]);
    }
    tup += ")";
    s += "s_{" + tup + "}";
    if (c != 1) {
      s += "^" + std::to_string(c);
    }
  }
  return s;
}

} // namespace brieskorn

