#ifndef BRIESKORN_ERRORS_HPP
#define BRIESKORN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace brieskorn {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

// Input outside the domain of an operation (bad exponent shape, zero
// denominator, pivot that cannot be normalised over the rationals, ...).
class DomainError : public Error {
public:
  explicit DomainError(const std::string &msg) : Error(msg) {}
};

// An internal cross-check failed.  This is the "stop, something is
// mathematically wrong" escape hatch; it should never fire on valid input.
class ConsistencyFailure : public Error {
public:
  explicit ConsistencyFailure(const std::string &msg) : Error(msg) {}
};

// Malformed text input (shape strings, model files, serialized expansions).
class ParseError : public Error {
public:
  explicit ParseError(const std::string &msg) : Error(msg) {}
};

// The t-action does not restrict to the chosen generators: the system
// t*w_i = A0*w + A1*u*w has no exact solution.
class NotGood : public Error {
public:
  explicit NotGood(const std::string &msg) : Error(msg) {}
};

// Candidate generators are linearly dependent, so connection matrices are
// not uniquely determined.
class DependentGenerators : public Error {
public:
  explicit DependentGenerators(const std::string &msg) : Error(msg) {}
};

// Residue matrix has no triangular structure to read eigenvalues from.
class NonTriangular : public Error {
public:
  explicit NonTriangular(const std::string &msg) : Error(msg) {}
};

// A pairing block that must be nondegenerate is singular.
class DegeneratePairing : public Error {
public:
  explicit DegeneratePairing(const std::string &msg) : Error(msg) {}
};

// A splitting solve was asked to finish with free parameters left unset.
class IncompleteAssignment : public Error {
public:
  explicit IncompleteAssignment(const std::string &msg) : Error(msg) {}
};

// Splitting relations were requested in an order that uses unknowns which
// have not been determined yet.
class SolveOrderViolation : public Error {
public:
  explicit SolveOrderViolation(const std::string &msg) : Error(msg) {}
};

} // namespace brieskorn

#endif // BRIESKORN_ERRORS_HPP
