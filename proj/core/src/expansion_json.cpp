#include <nlohmann/json.hpp>

#include "brieskorn/errors.hpp"
#include "brieskorn/primitive_form.hpp"

namespace brieskorn {

using nlohmann::json;

std::string expansion_to_json(const Expansion &exp) {
  const GammaTable table(exp.shape);
  json doc;
  doc["shape"] = exp.shape.exponents();
  doc["k"] = exp.k;
  doc["terms"] = json::array();
  for (const auto &[a, c] : exp.coefficients) {
    const Decomposition dec = decompose(table, a);
    json term;
    json idx = json::array();
    for (const auto &[rank, count] : a.entries()) {
      idx.push_back(json::array({table.at(rank), count}));
    }
    term["a"] = std::move(idx);
    term["monomial"] = render_index(table, a);
    term["g"] = render_form_factor(dec.r);
    term["e"] = dec.e;
    term["c"] = c.str();
    doc["terms"].push_back(std::move(term));
  }
  return doc.dump(2) + "\n";
}

Expansion expansion_from_json(const std::string &text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception &e) {
    throw ParseError(std::string("bad expansion document: ") + e.what());
  }
  try {
    const BPShape shape(doc.at("shape").get<std::vector<long>>());
    const GammaTable table(shape);
    Expansion exp{shape, doc.at("k").get<long>(), {}};
    for (const json &term : doc.at("terms")) {
      DeformIndex a;
      for (const json &pair : term.at("a")) {
        const GammaIndex nu = pair.at(0).get<GammaIndex>();
        a.add(table.rank(nu), pair.at(1).get<long>());
      }
      const Rational c = Rational::parse(term.at("c").get<std::string>());
      // cross-check the redundant fields so corrupted documents are rejected
      const Decomposition dec = decompose(table, a);
      if (term.at("e").get<long>() != dec.e ||
          term.at("g").get<std::string>() != render_form_factor(dec.r) ||
          term.at("monomial").get<std::string>() != render_index(table, a)) {
        throw ParseError("expansion term fields are inconsistent");
      }
      if (!exp.coefficients.emplace(a, c).second) {
        throw ParseError("duplicate expansion term");
      }
    }
    return exp;
  } catch (const json::exception &e) {
    throw ParseError(std::string("bad expansion document: ") + e.what());
  }
}

} // namespace brieskorn

