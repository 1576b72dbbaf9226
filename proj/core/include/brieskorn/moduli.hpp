#ifndef BRIESKORN_MODULI_HPP
#define BRIESKORN_MODULI_HPP

#include <utility>
#include <vector>

#include "brieskorn/rational.hpp"
#include "brieskorn/spectrum.hpp"

namespace brieskorn {

// Number of independent splitting parameters attached to a symmetric
// spectrum, broken down by eigenvalue class.  Classes are labelled by the
// fractional part of the exponents, folded into [0, 1/2] (a class and its
// conjugate are counted once).
struct ModuliDimension {
  Integer total = 0;
  std::vector<std::pair<Rational, Integer>> classes; // (residue, contribution)
};

// Group the exponents by fractional part and add up, per class:
//   residue 0:        parameter_count of the integer levels, weight = vars
//   residue 1/2:      parameter_count of the levels, weight = vars - 1
//   residue in (0,1/2): class_parameter_count of the levels (the conjugate
//                      class supplies the pairing and contributes no further
//                      parameters)
// The spectrum must be symmetric (DomainError otherwise).
ModuliDimension moduli_dimension(const Spectrum &spectrum);

} // namespace brieskorn

#endif // BRIESKORN_MODULI_HPP
