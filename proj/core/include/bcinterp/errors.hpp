#ifndef BCINTERP_ERRORS_HPP
#define BCINTERP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bcinterp {

// All recoverable failures are reported through typed exceptions rooted at
// Error; callers that need to distinguish cases catch the concrete type.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero rational function") {}
};

class IllFormedSpec : public Error {
public:
  explicit IllFormedSpec(const std::string& what) : Error("ill-formed specialization: " + what) {}
};

class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error("parse error at byte " + std::to_string(position) + ": " + what), position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

class ExponentOverflow : public Error {
public:
  ExponentOverflow() : Error("64-bit exponent overflow in monomial arithmetic") {}
};

class OutOfDiagram : public Error {
public:
  OutOfDiagram(long i, long j)
      : Error("square (" + std::to_string(i) + "," + std::to_string(j) + ") lies outside the diagram") {}
};

class NotInBox : public Error {
public:
  NotInBox() : Error("partition does not fit in the prescribed box") {}
};

class NotStrictlyPositive : public Error {
public:
  NotStrictlyPositive() : Error("last part must be strictly positive") {}
};

class LengthExceeded : public Error {
public:
  LengthExceeded() : Error("partition has more parts than variables") {}
};

class SingularSystem : public Error {
public:
  SingularSystem() : Error("interpolation system is singular (arithmetic bug)") {}
};

class NotSymmetric : public Error {
public:
  NotSymmetric() : Error("input is not a symmetric polynomial") {}
};

class NotInAlgebra : public Error {
public:
  NotInAlgebra() : Error("input is not invariant in the starred variables") {}
};

class DegreeExceeded : public Error {
public:
  DegreeExceeded() : Error("expansion residual is nonzero at the stated degree bound") {}
};

class ZeroCoordinate : public Error {
public:
  ZeroCoordinate() : Error("evaluation point has a zero coordinate") {}
};

class MuNNonzero : public Error {
public:
  MuNNonzero() : Error("integral representation requires the last part of mu to vanish") {}
};

class ConstantTermInMeasure : public Error {
public:
  ConstantTermInMeasure() : Error("integrand has a nonzero constant term against d_q z / z") {}
};

class MissingEvaluation : public Error {
public:
  explicit MissingEvaluation(const std::string& mu)
      : Error("evaluation table has no entry for partition " + mu) {}
};

class DegenerateEigenvalue : public Error {
public:
  DegenerateEigenvalue() : Error("coinciding eigenvalues; parameters are non-generic, re-sample") {}
};

class NotSelfDual : public Error {
public:
  NotSelfDual() : Error("parameters do not satisfy the self-duality constraint") {}
};

class InsufficientProbes : public Error {
public:
  InsufficientProbes() : Error("probe count must exceed the degree bound") {}
};

}  // namespace bcinterp

#endif
