#ifndef BRIESKORN_MODEL_IO_HPP
#define BRIESKORN_MODEL_IO_HPP

#include <iosfwd>
#include <string>

#include "brieskorn/section_examples.hpp"

namespace brieskorn {

// Line-based lattice-model format.  Blank lines and '#' comments are
// ignored; fields are whitespace-separated; all labels are 1-based and all
// rationals are written "p/q" with no internal whitespace:
//
//   rank N                      (first directive)
//   alpha <label> <rational>    (exactly once per label)
//   t <label> <target> <j> <rational>
//       one term of t·v_label; labels without t-lines default to the
//       semisimple action t·v_k = alpha_k·u·v_k
//   tzero <label>               (declares t·v_label = 0 explicitly)
//   gen <i> <label> <j> <rational>
//       one term of generator i; generator indices must cover 1..G
SectionModel parse_model(std::istream &in);
SectionModel parse_model_text(const std::string &text);

// Canonical serialization; parse_model(write_model(m)) reproduces m exactly.
std::string write_model(const SectionModel &model);

} // namespace brieskorn

#endif // BRIESKORN_MODEL_IO_HPP
