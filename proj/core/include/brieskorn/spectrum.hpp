#ifndef BRIESKORN_SPECTRUM_HPP
#define BRIESKORN_SPECTRUM_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "brieskorn/rational.hpp"
#include "brieskorn/shape.hpp"

namespace brieskorn {

// A multiset of rational exponents attached to a singularity in `vars`
// variables.  Values are kept sorted ascending, with repeats.
class Spectrum {
public:
  Spectrum(std::vector<Rational> values, std::size_t vars);

  const std::vector<Rational> &values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  std::size_t vars() const { return vars_; }

  long multiplicity(const Rational &alpha) const;

  // distinct values with multiplicities, ascending
  std::vector<std::pair<Rational, long>> grouped() const;

  // multiset symmetry alpha <-> vars - alpha
  bool verify_symmetry() const;

  // smallest value together with its multiplicity
  std::pair<Rational, long> min_exponent() const;

private:
  std::vector<Rational> values_;
  std::size_t vars_;
};

// The exponents sum_i (nu_i + 1)/m_i over all box exponents nu.  The result
// has exactly milnor_number(shape) entries and is symmetric about vars/2.
Spectrum bp_exponents(const BPShape &shape);

} // namespace brieskorn

#endif // BRIESKORN_SPECTRUM_HPP
