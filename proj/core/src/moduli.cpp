#include "brieskorn/moduli.hpp"

#include <map>

#include "brieskorn/errors.hpp"
#include "brieskorn/splitting.hpp"

namespace brieskorn {

ModuliDimension moduli_dimension(const Spectrum &spectrum) {
  if (!spectrum.verify_symmetry()) {
    throw DomainError("moduli_dimension: spectrum is not symmetric");
  }
  const long vars = static_cast<long>(spectrum.vars());

  // residue (fractional part in [0,1)) -> level p -> dimension
  std::map<Rational, std::map<long, long>> by_class;
  for (const auto &[alpha, mult] : spectrum.grouped()) {
    by_class[alpha.frac()][alpha.floor().get_si()] += mult;
  }

  const Rational half(1, 2);
  ModuliDimension out;
  for (const auto &[residue, dims] : by_class) {
    if (residue > half) {
      continue; // already counted with the conjugate class
    }
    Integer contribution;
    if (residue.is_zero()) {
      contribution = parameter_count(dims, vars);
    } else if (residue == half) {
      contribution = parameter_count(dims, vars - 1);
    } else {
      contribution = class_parameter_count(dims);
    }
    out.total += contribution;
    out.classes.emplace_back(residue, contribution);
  }
  return out;
}

} // namespace brieskorn
