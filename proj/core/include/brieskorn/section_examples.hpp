#ifndef BRIESKORN_SECTION_EXAMPLES_HPP
#define BRIESKORN_SECTION_EXAMPLES_HPP

#include <map>
#include <string>
#include <vector>

#include "brieskorn/section_lattice.hpp"

namespace brieskorn {

// A lattice together with a candidate generator set for a section.
struct SectionModel {
  AbstractLattice lattice;
  std::vector<LatticeElement> generators;
};

// The four worked model families.  Parameters are exact rationals:
//   ex41: e (nonzero); optional integer exponents a, b >= 2 (default 7, 3)
//         fixing the two-variable exponent spectrum.
//   ex42: beta, c.
//   ex43: c, cp, gamma (gamma nonzero); the six exponents are fixed constants.
//   ex44: gamma1..gamma4, c (nonzero), cp (nonzero).
// Unknown names or missing/invalid values raise DomainError.
SectionModel build_example(const std::string &name,
                           const std::map<std::string, Rational> &parameters);

} // namespace brieskorn

#endif // BRIESKORN_SECTION_EXAMPLES_HPP
