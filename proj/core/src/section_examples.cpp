#include "brieskorn/section_examples.hpp"

#include "brieskorn/errors.hpp"
#include "brieskorn/shape.hpp"
#include "brieskorn/spectrum.hpp"

namespace brieskorn {

namespace {

class Params {
public:
  Params(const std::string &name, const std::map<std::string, Rational> &map)
      : name_(name), map_(map) {}

  Rational required(const std::string &key) const {
    const auto it = map_.find(key);
    if (it == map_.end()) {
      throw DomainError(name_ + " requires parameter '" + key + "'");
    }
    used_ += 1;
    return it->second;
  }

  Rational nonzero(const std::string &key) const {
    const Rational v = required(key);
    if (v.is_zero()) {
      throw DomainError(name_ + " parameter '" + key + "' must be nonzero");
    }
    return v;
  }

  Rational optional(const std::string &key, const Rational &fallback) const {
    const auto it = map_.find(key);
    if (it == map_.end()) {
      return fallback;
    }
    used_ += 1;
    return it->second;
  }

  void finish() const {
    if (used_ != map_.size()) {
      throw DomainError(name_ + " received an unknown parameter");
    }
  }

private:
  std::string name_;
  const std::map<std::string, Rational> &map_;
  mutable std::size_t used_ = 0;
};

long small_exponent(const Rational &v, const std::string &what) {
  if (!v.is_integer() || v < Rational(2) || v > Rational(64)) {
    throw DomainError(what + " must be an integer in [2, 64]");
  }
  return v.num().get_si();
}

// One-parameter deformation of the weighted-homogeneous section: replace the
// extreme generators by w_1 = u v_1 and w_mu = (1/e) v_1 + u^{-1} v_mu, which
// shifts the first exponent up and the last one down by one.
SectionModel make_ex41(const Params &p) {
  const Rational e = p.nonzero("e");
  const long a = small_exponent(p.optional("a", Rational(7)), "ex41 'a'");
  const long b = small_exponent(p.optional("b", Rational(3)), "ex41 'b'");
  p.finish();

  const Spectrum spec = bp_exponents(BPShape({a, b}));
  const std::vector<Rational> &alphas = spec.values();
  const std::size_t mu = alphas.size();
  if (mu < 2) {
    throw DomainError("ex41 needs rank >= 2");
  }

  SectionModel model{AbstractLattice::semisimple(alphas), {}};
  model.generators.push_back(LatticeElement::basis(0, 1)); // u v_1
  for (std::size_t k = 1; k + 1 < mu; ++k) {
    model.generators.push_back(LatticeElement::basis(k));
  }
  LatticeElement last;
  last.add(0, 0, Rational(1) / e);
  last.add(mu - 1, -1, Rational(1));
  model.generators.push_back(std::move(last));
  return model;
}

// Rank-3 model with one nilpotent coupling: t e_1 = beta u e_1 + e_3.
SectionModel make_ex42(const Params &p) {
  const Rational beta = p.required("beta");
  const Rational c = p.required("c");
  p.finish();

  std::vector<Rational> alphas{beta, beta, beta + 1};
  std::vector<std::vector<ActionTerm>> action(3);
  action[0].push_back({0, 1, beta});
  action[0].push_back({2, 0, Rational(1)});
  if (!beta.is_zero()) {
    action[1].push_back({1, 1, beta});
  }
  if (!(beta + 1).is_zero()) {
    action[2].push_back({2, 1, beta + 1});
  }

  SectionModel model{AbstractLattice(std::move(alphas), std::move(action)),
                     {}};
  model.generators.push_back(LatticeElement::basis(0));
  model.generators.push_back(LatticeElement::basis(1));
  LatticeElement third = LatticeElement::basis(2);
  third.add(1, 1, -c); // e_3 - c u e_2
  model.generators.push_back(std::move(third));
  return model;
}

// Six-generator tensor model.  Basis labels and exponents:
//   v_1=(1,20):32/15  v_2=(2,2):17/15   v_3=(14,20):47/15
//   v_4=(1,1):13/15   v_5=(13,19):43/15 v_6=(14,1):28/15
// with couplings t v_1 = a_1 u v_1 + v_3 and t v_4 = a_4 u v_4 + v_6.
SectionModel make_ex43(const Params &p) {
  const Rational c = p.required("c");
  const Rational cp = p.required("cp");
  const Rational gamma = p.nonzero("gamma");
  p.finish();

  const std::vector<Rational> alphas{
      Rational(32, 15), Rational(17, 15), Rational(47, 15),
      Rational(13, 15), Rational(43, 15), Rational(28, 15)};

  std::vector<std::vector<ActionTerm>> action(6);
  for (std::size_t k = 0; k < 6; ++k) {
    action[k].push_back({k, 1, alphas[k]});
  }
  action[0].push_back({2, 0, Rational(1)});
  action[3].push_back({5, 0, Rational(1)});

  // the normalization constant of the coupled pair; gamma = -4/(15 e)
  const Rational e = Rational(-4, 15) / gamma;

  SectionModel model{AbstractLattice(alphas, std::move(action)), {}};

  LatticeElement w1;
  w1.add(3, 0, Rational(1) / e);
  w1.add(0, -1, Rational(1));
  model.generators.push_back(std::move(w1));

  model.generators.push_back(LatticeElement::basis(1));

  LatticeElement w3;
  w3.add(5, 0, Rational(1) / e);
  w3.add(2, -1, Rational(1));
  w3.add(1, 1, -c);
  model.generators.push_back(std::move(w3));

  model.generators.push_back(LatticeElement::basis(3, 1));

  LatticeElement w5 = LatticeElement::basis(4);
  w5.add(3, 2, cp);
  model.generators.push_back(std::move(w5));

  model.generators.push_back(LatticeElement::basis(5, 1));
  return model;
}

// Rank-4 semisimple model whose generators mix eigenvectors so that A0 picks
// up the four exponent differences.
SectionModel make_ex44(const Params &p) {
  const Rational g1 = p.required("gamma1");
  const Rational g2 = p.required("gamma2");
  const Rational g3 = p.required("gamma3");
  const Rational g4 = p.required("gamma4");
  const Rational c = p.nonzero("c");
  const Rational cp = p.nonzero("cp");
  p.finish();

  const Rational cpp = cp / c;

  SectionModel model{AbstractLattice::semisimple({g1, g2, g3, g4}), {}};
  model.generators.push_back(LatticeElement::basis(0, 1)); // u v_1

  LatticeElement w2 = LatticeElement::basis(0);
  w2.add(1, 0, -cpp);
  w2.add(2, 0, c);
  model.generators.push_back(std::move(w2));

  model.generators.push_back(LatticeElement::basis(2, 1)); // u v_3

  LatticeElement w4 = LatticeElement::basis(0);
  w4.add(2, 0, c);
  w4.add(3, 0, cp);
  model.generators.push_back(std::move(w4));
  return model;
}

} // namespace

SectionModel build_example(const std::string &name,
                           const std::map<std::string, Rational> &parameters) {
  const Params p(name, parameters);
  if (name == "ex41") {
    return make_ex41(p);
  }
  if (name == "ex42") {
    return make_ex42(p);
  }
  if (name == "ex43") {
    return make_ex43(p);
  }
  if (name == "ex44") {
    return make_ex44(p);
  }
  throw DomainError("unknown example model '" + name + "'");
}

} // namespace brieskorn

