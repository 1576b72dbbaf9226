#include "brieskorn/spectrum.hpp"

#include <algorithm>

#include "brieskorn/errors.hpp"

namespace brieskorn {

Spectrum::Spectrum(std::vector<Rational> values, std::size_t vars)
    : values_(std::move(values)), vars_(vars) {
  if (values_.empty()) {
    throw DomainError("spectrum must be nonempty");
  }
  std::sort(values_.begin(), values_.end());
}

long Spectrum::multiplicity(const Rational &alpha) const {
  const auto [lo, hi] = std::equal_range(values_.begin(), values_.end(), alpha);
  return static_cast<long>(hi - lo);
}

std::vector<std::pair<Rational, long>> Spectrum::grouped() const {
  std::vector<std::pair<Rational, long>> out;
  for (const Rational &v : values_) {
    if (!out.empty() && out.back().first == v) {
      ++out.back().second;
    } else {
      out.emplace_back(v, 1);
    }
  }
  return out;
}

bool Spectrum::verify_symmetry() const {
  const Rational center(static_cast<long>(vars_));
  std::size_t i = 0, j = values_.size();
  while (i < j) {
    --j;
    if (values_[i] + values_[j] != center) {
      return false;
    }
    ++i;
  }
  return true;
}

std::pair<Rational, long> Spectrum::min_exponent() const {
  return {values_.front(), multiplicity(values_.front())};
}

Spectrum bp_exponents(const BPShape &shape) {
  std::vector<Rational> values;
  for (const GammaIndex &nu : shape.gamma_set()) {
    Rational alpha;
    for (std::size_t i = 0; i < shape.vars(); ++i) {
      alpha += Rational(nu[i] + 1, shape.exponent(i));
    }
    values.push_back(alpha);
  }
  return Spectrum(std::move(values), shape.vars());
}

} // namespace brieskorn

