#ifndef BRIESKORN_OPERATORS_HPP
#define BRIESKORN_OPERATORS_HPP

#include "brieskorn/normal_form.hpp"

namespace brieskorn {

// The truncated exponential-operator pair relating the deformed and
// undeformed modules.  Both act term by term: a term with s-degree |a| is
// multiplied by the series
//     sum_b  sign^{|b|} * s^b * x^{p(b)} / b! * u^{-|b|}
// over all b with |a| + |b| <= k (sign = -1 for the forward direction, +1 for
// the inverse), after which every monomial is rewritten into the box basis.
NormalFormElement phi_apply(const NormalFormElement &x);
NormalFormElement psi_apply(const NormalFormElement &x);

// The two series are exact mutual inverses *before* rewriting: composing them
// on representatives and rewriting once at the end returns the input up to
// s-degree k.  Composing the public operations instead (rewriting in between)
// is lossy for most shapes, because rewriting collapses distinct
// representatives whose later products differ.  Use this for inverse checks.
NormalFormElement phi_psi_roundtrip(const NormalFormElement &x);

} // namespace brieskorn

#endif // BRIESKORN_OPERATORS_HPP
