#ifndef BRIESKORN_CONNECTION_HPP
#define BRIESKORN_CONNECTION_HPP

#include <utility>
#include <vector>

#include "brieskorn/matrix.hpp"
#include "brieskorn/section_lattice.hpp"

namespace brieskorn {

// Connection data of a good section: t * w_i = sum_k (A0)_{ki} w_k
//                                            + sum_k (A1)_{ki} u * w_k.
// Columns correspond to generators, exactly as the defining relation reads.
struct ConnectionPair {
  Matrix a0;
  Matrix a1;
};

// Solve the exact linear system expressing each t*w_i over {w_k} + {u*w_k}.
// Throws DependentGenerators when the 2*rank candidate vectors are linearly
// dependent (expression not unique), NotGood when some t*w_i falls outside
// their span.
ConnectionPair compute_connection(const AbstractLattice &lattice,
                                  const std::vector<LatticeElement> &generators);

// Eigenvalues of A1 read off a triangular matrix, with algebraic
// multiplicities, plus exact semisimplicity (minimal polynomial squarefree,
// decided by ranks of A1 - lambda*I).  NonTriangular when A1 is neither
// lower- nor upper-triangular.
struct A1Spectrum {
  std::vector<std::pair<Rational, long>> eigenvalues; // ascending
  bool semisimple = false;
};

A1Spectrum a1_spectrum(const ConnectionPair &pair);

// Whether the span of the generators has a basis of elements that are each
// homogeneous for the grading deg(u^j v_k) = alpha_k + j.  Checked by exact
// row reduction: the span is graded iff every graded component of every
// generator stays inside the span.
bool is_very_good(const AbstractLattice &lattice,
                  const std::vector<LatticeElement> &generators);

} // namespace brieskorn

#endif // BRIESKORN_CONNECTION_HPP
