#include "brieskorn/model_io.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "brieskorn/errors.hpp"

namespace brieskorn {

namespace {

long parse_long(const std::string &tok, const std::string &what) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(tok, &pos);
    if (pos != tok.size()) {
      throw std::invalid_argument(tok);
    }
    return v;
  } catch (const std::exception &) {
    throw ParseError("bad " + what + ": '" + tok + "'");
  }
}

std::size_t parse_label(const std::string &tok, std::size_t rank,
                        const std::string &what) {
  const long v = parse_long(tok, what);
  if (v < 1 || static_cast<std::size_t>(v) > rank) {
    throw ParseError(what + " out of range: '" + tok + "'");
  }
  return static_cast<std::size_t>(v - 1);
}

} // namespace

SectionModel parse_model(std::istream &in) {
  std::optional<std::size_t> rank;
  std::vector<std::optional<Rational>> alphas;
  std::vector<std::vector<ActionTerm>> action;
  std::vector<bool> has_action;
  std::map<std::size_t, LatticeElement> gens;

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ss(line);
    std::string verb;
    if (!(ss >> verb)) {
      continue; // blank
    }
    const auto fail = [&](const std::string &msg) -> void {
      throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    };
    std::vector<std::string> args;
    for (std::string tok; ss >> tok;) {
      args.push_back(tok);
    }

    try {
      if (verb == "rank") {
        if (rank) {
          fail("duplicate rank");
        }
        if (args.size() != 1) {
          fail("rank takes one value");
        }
        const long v = parse_long(args[0], "rank");
        if (v < 1) {
          fail("rank must be >= 1");
        }
        rank = static_cast<std::size_t>(v);
        alphas.assign(*rank, std::nullopt);
        action.assign(*rank, {});
        has_action.assign(*rank, false);
        continue;
      }
      if (!rank) {
        fail("'rank' must come first");
      }
      if (verb == "alpha") {
        if (args.size() != 2) {
          fail("alpha takes <label> <rational>");
        }
        const std::size_t k = parse_label(args[0], *rank, "label");
        if (alphas[k]) {
          fail("duplicate alpha for label " + args[0]);
        }
        alphas[k] = Rational::parse(args[1]);
      } else if (verb == "t") {
        if (args.size() != 4) {
          fail("t takes <label> <target> <j> <rational>");
        }
        const std::size_t k = parse_label(args[0], *rank, "label");
        const std::size_t target = parse_label(args[1], *rank, "target");
        const long j = parse_long(args[2], "u-power");
        action[k].push_back({target, j, Rational::parse(args[3])});
        has_action[k] = true;
      } else if (verb == "tzero") {
        if (args.size() != 1) {
          fail("tzero takes <label>");
        }
        const std::size_t k = parse_label(args[0], *rank, "label");
        has_action[k] = true; // declared empty action, no semisimple default
      } else if (verb == "gen") {
        if (args.size() != 4) {
          fail("gen takes <i> <label> <j> <rational>");
        }
        const long i = parse_long(args[0], "generator index");
        if (i < 1) {
          fail("generator index must be >= 1");
        }
        const std::size_t label = parse_label(args[1], *rank, "label");
        const long j = parse_long(args[2], "u-power");
        gens[static_cast<std::size_t>(i)].add(label, j,
                                              Rational::parse(args[3]));
      } else {
        fail("unknown directive '" + verb + "'");
      }
    } catch (const ParseError &e) {
      if (std::string(e.what()).rfind("line ", 0) == 0) {
        throw;
      }
      fail(e.what());
    }
  }

  if (!rank) {
    throw ParseError("model has no 'rank' directive");
  }
  std::vector<Rational> alpha_values;
  alpha_values.reserve(*rank);
  for (std::size_t k = 0; k < *rank; ++k) {
    if (!alphas[k]) {
      throw ParseError("missing alpha for label " + std::to_string(k + 1));
    }
    alpha_values.push_back(*alphas[k]);
    if (!has_action[k] && !alphas[k]->is_zero()) {
      action[k].push_back({k, 1, *alphas[k]}); // semisimple default
    }
  }

  SectionModel model{AbstractLattice(std::move(alpha_values),
                                     std::move(action)),
                     {}};
  std::size_t expected = 1;
  for (const auto &[idx, element] : gens) {
    if (idx != expected) {
      throw ParseError("generator indices must cover 1..G without gaps");
    }
    if (element.is_zero()) {
      throw ParseError("generator " + std::to_string(idx) + " is zero");
    }
    model.generators.push_back(element);
    ++expected;
  }
  if (model.generators.empty()) {
    throw ParseError("model declares no generators");
  }
  return model;
}

SectionModel parse_model_text(const std::string &text) {
  std::istringstream in(text);
  return parse_model(in);
}

std::string write_model(const SectionModel &model) {
  std::string out;
  const AbstractLattice &lattice = model.lattice;
  out += "rank " + std::to_string(lattice.rank()) + "\n";
  for (std::size_t k = 0; k < lattice.rank(); ++k) {
    out += "alpha " + std::to_string(k + 1) + " " + lattice.alpha(k).str() +
           "\n";
  }
  for (std::size_t k = 0; k < lattice.rank(); ++k) {
    if (lattice.t_terms(k).empty() && !lattice.alpha(k).is_zero()) {
      out += "tzero " + std::to_string(k + 1) + "\n";
      continue;
    }
    for (const ActionTerm &term : lattice.t_terms(k)) {
      out += "t " + std::to_string(k + 1) + " " +
             std::to_string(term.target + 1) + " " + std::to_string(term.j) +
             " " + term.coeff.str() + "\n";
    }
  }
  for (std::size_t i = 0; i < model.generators.size(); ++i) {
    for (const auto &[key, c] : model.generators[i].terms()) {
      out += "gen " + std::to_string(i + 1) + " " +
             std::to_string(key.first + 1) + " " + std::to_string(key.second) +
             " " + c.str() + "\n";
    }
  }
  return out;
}

} // namespace brieskorn

