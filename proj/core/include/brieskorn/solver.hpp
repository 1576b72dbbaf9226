#ifndef BRIESKORN_SOLVER_HPP
#define BRIESKORN_SOLVER_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "brieskorn/primitive_form.hpp"

namespace brieskorn {

// What was left over at the s-monomials that carry no coefficient: for every
// non-admissible index the solver checks that nothing survives at u-power
// >= 0 and records the strictly negative remainder.
struct SolveReport {
  struct Residual {
    DeformIndex a;
    long max_upower = 0; // largest u-power present (always < 0)
    std::size_t term_count = 0;
  };
  std::vector<Residual> residuals;
  std::size_t checked = 0; // non-admissible slots inspected
};

// Brute-force determination of the expansion coefficients, independent of the
// closed-form recursion: ascending over all indices of degree <= k, choose
// each c_a so that the forward operator image of the accumulated element has
// no u-power >= 0 content at s^a (beyond the constant normalization).  Each
// s^a equation must concentrate on the single basis vector u^{e_a}[x^{r(a)}];
// anything else raises ConsistencyFailure.
std::pair<Expansion, SolveReport> solve_primitive(const BPShape &shape, long k);

} // namespace brieskorn

#endif // BRIESKORN_SOLVER_HPP
