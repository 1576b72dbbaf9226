// brieskorn: batch CLI over the exact-arithmetic library.  One subcommand per
// invocation; every number in the output is an exact rational "p/q".
// Exit codes: 0 success, 1 usage error, 2 domain/parse error,
// 3 failed cross-check.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "brieskorn/connection.hpp"
#include "brieskorn/errors.hpp"
#include "brieskorn/model_io.hpp"
#include "brieskorn/moduli.hpp"
#include "brieskorn/primitive_form.hpp"
#include "brieskorn/shape.hpp"
#include "brieskorn/solver.hpp"
#include "brieskorn/spectrum.hpp"
#include "brieskorn/splitting.hpp"

namespace {

using namespace brieskorn;

void run_spectrum(const std::string &mstr) {
  const Spectrum spectrum = bp_exponents(BPShape::parse(mstr));
  for (const auto &[value, mult] : spectrum.grouped()) {
    std::cout << value.str() << ' ' << mult << '\n';
  }
}

void run_milnor(const std::string &mstr) {
  std::cout << BPShape::parse(mstr).milnor_number().get_str() << '\n';
}

void run_primitive_form(const std::string &mstr, long k,
                        const std::string &format, bool oracle_check) {
  const BPShape shape = BPShape::parse(mstr);
  const Expansion expansion = expand(shape, k);

  if (format == "json") {
    std::cout << expansion_to_json(expansion);
  } else if (format == "tsv") {
    std::cout << render_tsv(expansion);
  } else if (format.empty() || format == "table") {
    std::cout << render(expansion);
  } else {
    throw DomainError("unknown format: " + format);
  }

  if (oracle_check) {
    const auto [solved, report] = solve_primitive(shape, k);
    (void)report;
    if (!(solved.coefficients == expansion.coefficients)) {
      throw ConsistencyFailure(
          "oracle disagrees with the closed-form recursion");
    }
    std::cout << "oracle: agree\n";
  }
}

void run_moduli_dim(const std::string &mstr) {
  const ModuliDimension dim = moduli_dimension(bp_exponents(BPShape::parse(mstr)));
  for (const auto &[residue, contribution] : dim.classes) {
    std::cout << "class " << residue.str() << ' ' << contribution.get_str()
              << '\n';
  }
  std::cout << "total " << dim.total.get_str() << '\n';
}

void print_matrix(const char *name, const Matrix &m) {
  std::cout << name << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::cout << (j ? " " : "") << m.at(i, j).str();
    }
    std::cout << '\n';
  }
}

void run_section_analyze(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw DomainError("cannot open model file: " + path);
  }
  const SectionModel model = parse_model(in);
  const ConnectionPair pair = compute_connection(model.lattice, model.generators);

  std::cout << "generators " << model.generators.size() << '\n';
  print_matrix("A0", pair.a0);
  print_matrix("A1", pair.a1);
  try {
    const A1Spectrum spec = a1_spectrum(pair);
    std::cout << "eigenvalues\n";
    for (const auto &[value, mult] : spec.eigenvalues) {
      std::cout << value.str() << ' ' << mult << '\n';
    }
    std::cout << "semisimple " << (spec.semisimple ? "true" : "false") << '\n';
  } catch (const NonTriangular &) {
    std::cout << "eigenvalues nontriangular\n";
  }
  std::cout << "very-good "
            << (is_very_good(model.lattice, model.generators) ? "true"
                                                              : "false")
            << '\n';
}

std::map<long, long> parse_dims(const std::string &text) {
  std::map<long, long> dims;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw ParseError("dims entry is not \"level:dim\": " + item);
    }
    try {
      const long p = std::stol(item.substr(0, colon));
      const long e = std::stol(item.substr(colon + 1));
      if (!dims.emplace(p, e).second) {
        throw ParseError("dims lists level " + std::to_string(p) + " twice");
      }
    } catch (const std::invalid_argument &) {
      throw ParseError("dims entry is not numeric: " + item);
    } catch (const std::out_of_range &) {
      throw ParseError("dims entry out of range: " + item);
    }
  }
  if (dims.empty()) {
    throw ParseError("dims is empty");
  }
  return dims;
}

void run_splitting_count(const std::string &dims_text, long weight) {
  std::cout << parameter_count(parse_dims(dims_text), weight).get_str()
            << '\n';
}

void run_covering(long r, const std::string &weights_text) {
  std::vector<Integer> weights;
  std::stringstream ss(weights_text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      weights.emplace_back(std::stol(item));
    } catch (const std::exception &) {
      throw ParseError("weight is not an integer: " + item);
    }
  }
  const auto [b, c] = covering_exponents(Integer(r), weights);
  const auto join = [](const std::vector<Integer> &xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) {
        out += ',';
      }
      out += xs[i].get_str();
    }
    return out;
  };
  std::cout << "b " << join(b) << '\n' << "c " << join(c) << '\n';
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact primitive-form, spectrum and splitting computations "
               "for Brieskorn-Pham singularities"};
  app.require_subcommand(1);

  std::string shape_text;
  long k = 0;
  std::string format;
  bool oracle_check = false;
  std::string model_path;
  std::string dims_text;
  long weight = 0;
  long degree = 0;
  std::string weights_text;

  CLI::App *spectrum =
      app.add_subcommand("spectrum", "Exponent spectrum of a shape");
  spectrum->add_option("-m,--shape", shape_text, "exponents, e.g. 7,3")
      ->required();

  CLI::App *milnor = app.add_subcommand("milnor", "Milnor number of a shape");
  milnor->add_option("-m,--shape", shape_text, "exponents, e.g. 6,5")
      ->required();

  CLI::App *primitive = app.add_subcommand(
      "primitive-form", "Taylor coefficients of the primitive form");
  primitive->add_option("-m,--shape", shape_text, "exponents, e.g. 7,3")
      ->required();
  primitive->add_option("-k,--order", k, "truncation order")->required();
  primitive->add_option("--format", format, "table (default), tsv or json");
  primitive->add_flag("--oracle-check", oracle_check,
                      "re-derive every coefficient with the operator-series "
                      "solver and compare");

  CLI::App *moduli =
      app.add_subcommand("moduli-dim", "Splitting-parameter count by class");
  moduli->add_option("-m,--shape", shape_text, "exponents, e.g. 5,5")
      ->required();

  CLI::App *section = app.add_subcommand(
      "section-analyze", "Connection matrices of a lattice-model file");
  section->add_option("--model", model_path, "model file path")->required();

  CLI::App *splitting = app.add_subcommand(
      "splitting-count", "Independent parameters of an orthogonal splitting");
  splitting
      ->add_option("--dims", dims_text,
                   "level dimensions, e.g. \"0:1,3:1\"")
      ->required();
  splitting->add_option("--weight", weight, "pairing weight m")->required();

  CLI::App *covering = app.add_subcommand(
      "covering", "Reduced covering exponents (b_i, c_i) of a weighted cover");
  covering->add_option("-r,--degree", degree, "covering degree")->required();
  covering->add_option("-a,--weights", weights_text, "weights, e.g. 4,9")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (spectrum->parsed()) {
      run_spectrum(shape_text);
    } else if (milnor->parsed()) {
      run_milnor(shape_text);
    } else if (primitive->parsed()) {
      run_primitive_form(shape_text, k, format, oracle_check);
    } else if (moduli->parsed()) {
      run_moduli_dim(shape_text);
    } else if (section->parsed()) {
      run_section_analyze(model_path);
    } else if (splitting->parsed()) {
      run_splitting_count(dims_text, weight);
    } else if (covering->parsed()) {
      run_covering(degree, weights_text);
    }
  } catch (const ConsistencyFailure &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
