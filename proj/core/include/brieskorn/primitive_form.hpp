#ifndef BRIESKORN_PRIMITIVE_FORM_HPP
#define BRIESKORN_PRIMITIVE_FORM_HPP

#include <map>
#include <string>
#include <vector>

#include "brieskorn/deform.hpp"
#include "brieskorn/rational.hpp"
#include "brieskorn/shape.hpp"

namespace brieskorn {

// Truncated Taylor expansion of the primitive form: one exact coefficient c_a
// for every admissible index a of degree <= k (zero coefficients included, so
// the key set is exactly the admissible level set).  The constant term is 1.
struct Expansion {
  BPShape shape;
  long k = 0;
  std::map<DeformIndex, Rational> coefficients;
};

// Per-coordinate floor quotients floor((r(b)_i + p(a-b)_i) / m_i).
// Requires b <= a componentwise.
std::vector<long> q_ab(const GammaTable &table, const DeformIndex &a,
                       const DeformIndex &b);

// The closed-form recursion: c_a determined by all strictly smaller admissible
// coefficients.  Indices of equal degree are independent of one another, so
// each degree level may be evaluated in parallel.
Expansion expand(const BPShape &shape, long k);

// One line per coefficient: "<s-monomial> · <form factor> · dt^<power> · <c>",
// e.g. "s_{(5,1)}^3 · x1 · dt^0 · 1/49"; the constant row is
// "1 · 1 · dt^0 · 1".  Rows ordered by (degree, lex).
std::vector<std::string> render_lines(const Expansion &exp);
std::string render(const Expansion &exp);

// Tab-separated rows: monomial, form factor, e, coefficient.
std::string render_tsv(const Expansion &exp);

// Monomial factor x^r with 1-based variables, e.g. "x1", "x1^2·x2"; "1" for
// r = 0.
std::string render_form_factor(const MonomialIndex &r);

// JSON document {"shape":[...],"k":...,"terms":[{a,monomial,g,e,c}...]} and
// its exact inverse.
std::string expansion_to_json(const Expansion &exp);
Expansion expansion_from_json(const std::string &text);

} // namespace brieskorn

#endif // BRIESKORN_PRIMITIVE_FORM_HPP
