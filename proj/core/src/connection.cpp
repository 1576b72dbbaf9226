#include "brieskorn/connection.hpp"

#include <algorithm>
#include <map>

#include "brieskorn/errors.hpp"

namespace brieskorn {

namespace {

// dense coordinates of a set of elements over the union of their (k,j) keys
struct Coordinates {
  std::map<LatticeElement::Key, std::size_t> row_of;

  void collect(const LatticeElement &x) {
    for (const auto &[key, c] : x.terms()) {
      row_of.emplace(key, 0);
    }
  }
  void freeze() {
    std::size_t i = 0;
    for (auto &[key, row] : row_of) {
      row = i++;
    }
  }
  std::vector<Rational> vec(const LatticeElement &x) const {
    std::vector<Rational> v(row_of.size());
    for (const auto &[key, c] : x.terms()) {
      v[row_of.at(key)] = c;
    }
    return v;
  }
};

} // namespace

ConnectionPair compute_connection(
    const AbstractLattice &lattice,
    const std::vector<LatticeElement> &generators) {
  const std::size_t mu = generators.size();
  if (mu == 0) {
    throw DomainError("need at least one generator");
  }

  std::vector<LatticeElement> images;
  std::vector<LatticeElement> shifted;
  images.reserve(mu);
  shifted.reserve(mu);
  for (const LatticeElement &w : generators) {
    images.push_back(t_apply(lattice, w));
    shifted.push_back(w.u_shifted(1));
  }

  Coordinates coords;
  for (const LatticeElement &w : generators) {
    coords.collect(w);
  }
  for (const LatticeElement &x : shifted) {
    coords.collect(x);
  }
  for (const LatticeElement &x : images) {
    coords.collect(x);
  }
  coords.freeze();

  const std::size_t rows = coords.row_of.size();
  Matrix basis(rows, 2 * mu);
  for (std::size_t c = 0; c < mu; ++c) {
    const auto wv = coords.vec(generators[c]);
    const auto uv = coords.vec(shifted[c]);
    for (std::size_t r = 0; r < rows; ++r) {
      basis.at(r, c) = wv[r];
      basis.at(r, mu + c) = uv[r];
    }
  }
  if (basis.rank() != 2 * mu) {
    throw DependentGenerators(
        "generators and their u-shifts are linearly dependent");
  }

  ConnectionPair pair{Matrix(mu, mu), Matrix(mu, mu)};
  for (std::size_t i = 0; i < mu; ++i) {
    const SolveResult res = solve_exact(basis, coords.vec(images[i]));
    if (res.status != SolveStatus::kUnique) {
      throw NotGood("t-image of generator " + std::to_string(i + 1) +
                    " falls outside the span of {w, u·w}");
    }
    for (std::size_t k = 0; k < mu; ++k) {
      pair.a0.at(k, i) = res.solution[k];
      pair.a1.at(k, i) = res.solution[mu + k];
    }
  }
  return pair;
}

A1Spectrum a1_spectrum(const ConnectionPair &pair) {
  const Matrix &a1 = pair.a1;
  const std::size_t n = a1.rows();
  bool lower = true, upper = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!a1.at(i, j).is_zero()) {
        lower = false;
      }
      if (!a1.at(j, i).is_zero()) {
        upper = false;
      }
    }
  }
  if (!lower && !upper) {
    throw NonTriangular("A1 is not triangular in the supplied basis");
  }

  std::vector<Rational> diag(n);
  for (std::size_t i = 0; i < n; ++i) {
    diag[i] = a1.at(i, i);
  }
  std::sort(diag.begin(), diag.end());

  A1Spectrum spec;
  for (const Rational &lambda : diag) {
    if (!spec.eigenvalues.empty() && spec.eigenvalues.back().first == lambda) {
      spec.eigenvalues.back().second += 1;
    } else {
      spec.eigenvalues.emplace_back(lambda, 1);
    }
  }

  // semisimple <=> geometric multiplicity matches algebraic one everywhere
  long geometric_total = 0;
  for (const auto &[lambda, mult] : spec.eigenvalues) {
    Matrix shifted = a1;
    for (std::size_t i = 0; i < n; ++i) {
      shifted.at(i, i) -= lambda;
    }
    geometric_total += static_cast<long>(n - shifted.rank());
  }
  spec.semisimple = geometric_total == static_cast<long>(n);
  return spec;
}

bool is_very_good(const AbstractLattice &lattice,
                  const std::vector<LatticeElement> &generators) {
  Coordinates coords;
  for (const LatticeElement &w : generators) {
    coords.collect(w);
  }
  coords.freeze();

  Matrix span(generators.size(), coords.row_of.size());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto v = coords.vec(generators[i]);
    for (std::size_t j = 0; j < v.size(); ++j) {
      span.at(i, j) = v[j];
    }
  }

  for (const LatticeElement &w : generators) {
    // split w into graded components deg(u^j v_k) = alpha_k + j
    std::map<Rational, LatticeElement> components;
    for (const auto &[key, c] : w.terms()) {
      const Rational deg = lattice.alpha(key.first) + Rational(key.second);
      components[deg].add(key.first, key.second, c);
    }
    if (components.size() <= 1) {
      continue; // already homogeneous
    }
    for (const auto &[deg, comp] : components) {
      if (!in_row_space(span, coords.vec(comp))) {
        return false;
      }
    }
  }
  return true;
}

} // namespace brieskorn

