#ifndef BRIESKORN_SPLITTING_HPP
#define BRIESKORN_SPLITTING_HPP

#include <array>
#include <map>
#include <vector>

#include "brieskorn/filtered_space.hpp"
#include "brieskorn/rational.hpp"

namespace brieskorn {

// One correction coefficient theta_{(p,i),(q,j)} attaching v_{q,j} to the
// splitting vector at (p,i); only p < q occurs.  Indices i, j are 0-based
// within their levels.
using ThetaKey = std::array<long, 4>; // {p, i, q, j}

// The correction coefficients split into a free set and a determined set:
// J = {((p,i),(q,j)) : p < q}, R = the pairs with p + q < m and (p,i) <= (q,j)
// (strict < when m is odd), and gamma(R) = {((p,i),(m-q,j))} are the
// determined ones.  independent = J \ gamma(R).
struct SplittingParameters {
  std::vector<ThetaKey> independent;
  std::vector<ThetaKey> depending;
};

SplittingParameters independent_parameter_set(const FilteredPairedSpace &space);

// Closed-form count of the independent set:
//   sum_{p<q<m-p} e_p e_q  +  sum_{p<m/2} C(e_p, 2)      (m even)
//                             sum_{p<m/2} C(e_p + 1, 2)  (m odd)
// dims must satisfy e_p = e_{m-p}.
Integer parameter_count(const std::map<long, long> &dims, long m);

// Count for one residue class of a conjugate pair, where the pairing couples
// the class only with its partner: every cross-level coefficient is free on
// one side and determined on the other, giving sum_{p<q} e_p e_q.
Integer class_parameter_count(const std::map<long, long> &dims);

// A full splitting: vectors w_{p,i} (columns, same layout as the adapted
// basis) together with every theta value used.
struct Splitting {
  Matrix vectors;
  std::map<ThetaKey, Rational> theta;
};

// Determine all depending coefficients from an assignment of the independent
// ones, walking the defining relations in decreasing p + q (each relation
// only consumes values from strictly larger p + q, plus independent ones).
// Throws IncompleteAssignment when the assignment misses an independent key,
// DomainError when it contains an unknown key, and SolveOrderViolation if the
// traversal ever needs a value that is not available (internal bug guard).
Splitting solve_splitting(const FilteredPairedSpace &space,
                          const AdaptedBasis &basis,
                          const std::map<ThetaKey, Rational> &assignment);

// Exact check of S(w_{p,i}, w_{q,j}) = 0 for all p + q != m.
bool verify_orthogonal(const FilteredPairedSpace &space,
                       const Splitting &splitting);

} // namespace brieskorn

#endif // BRIESKORN_SPLITTING_HPP
