#include "brieskorn/shape.hpp"

#include <cstdlib>
#include <sstream>

#include "brieskorn/errors.hpp"

namespace brieskorn {

BPShape::BPShape(std::vector<long> exponents) : m_(std::move(exponents)) {
  if (m_.empty()) {
    throw DomainError("shape needs at least one exponent");
  }
  for (long m : m_) {
    if (m < 2) {
      throw DomainError("shape exponents must be >= 2");
    }
  }
}

BPShape BPShape::parse(const std::string &text) {
  std::vector<long> m;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string item = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    // trim spaces; every segment (including after a trailing comma) must be
    // a full integer
    std::size_t b = item.find_first_not_of(" \t");
    std::size_t e = item.find_last_not_of(" \t");
    if (b == std::string::npos) {
      throw ParseError("bad shape: '" + text + "'");
    }
    item = item.substr(b, e - b + 1);
    char *end = nullptr;
    long v = std::strtol(item.c_str(), &end, 10);
    if (end == item.c_str() || *end != '\0') {
      throw ParseError("bad shape: '" + text + "'");
    }
    m.push_back(v);
    if (comma == std::string::npos) {
      break;
    }
    start = comma + 1;
  }
  return BPShape(std::move(m));
}

Integer BPShape::milnor_number() const {
  Integer mu = 1;
  for (long m : m_) {
    mu *= (m - 1);
  }
  return mu;
}

std::vector<GammaIndex> BPShape::gamma_set() const {
  std::vector<GammaIndex> out;
  GammaIndex nu(m_.size(), 0);
  while (true) {
    out.push_back(nu);
    // increment in lex order: bump the last coordinate, carry left
    std::size_t i = m_.size();
    while (i > 0) {
      --i;
      if (nu[i] + 1 <= m_[i] - 2) {
        ++nu[i];
        for (std::size_t j = i + 1; j < m_.size(); ++j) {
          nu[j] = 0;
        }
        break;
      }
      if (i == 0) {
        return out;
      }
    }
  }
}

bool BPShape::in_gamma(const GammaIndex &nu) const {
  if (nu.size() != m_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < m_.size(); ++i) {
    if (nu[i] < 0 || nu[i] > m_[i] - 2) {
      return false;
    }
  }
  return true;
}

std::string BPShape::str() const {
  std::string s;
  for (std::size_t i = 0; i < m_.size(); ++i) {
    if (i) {
      s += ",";
    }
    s += std::to_string(m_[i]);
  }
  return s;
}

std::pair<std::vector<Integer>, std::vector<Integer>>
covering_exponents(const Integer &r, const std::vector<Integer> &a) {
  if (r <= 0) {
    throw DomainError("covering degree must be positive");
  }
  std::vector<Integer> b, c;
  b.reserve(a.size());
  c.reserve(a.size());
  for (const Integer &ai : a) {
    if (ai <= 0) {
      throw DomainError("covering weights must be positive");
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), ai.get_mpz_t());
    b.push_back(r / g);
    c.push_back(ai / g);
  }
  return {b, c};
}

} // namespace brieskorn

