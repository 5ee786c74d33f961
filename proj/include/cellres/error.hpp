#ifndef CELLRES_ERROR_HPP
#define CELLRES_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cellres {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text.  `line()` is 1-based; 0 means "no specific line".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A precondition on the mathematical input does not hold (connectivity,
/// genericity, ...).  The CLI maps all of these to exit code 3.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class EmptyBoundedComplex : public PreconditionError {
 public:
  EmptyBoundedComplex()
      : PreconditionError("the arrangement has no vertices, so its bounded complex is empty") {}
};

/// Carries the offending flat (0-based hyperplane indices).
class NotGeneralPosition : public PreconditionError {
 public:
  explicit NotGeneralPosition(std::vector<std::size_t> flat);
  const std::vector<std::size_t>& flat() const { return flat_; }

 private:
  std::vector<std::size_t> flat_;
};

class GenericityFailure : public PreconditionError {
 public:
  explicit GenericityFailure(std::vector<std::size_t> flat);
  const std::vector<std::size_t>& flat() const { return flat_; }

 private:
  std::vector<std::size_t> flat_;
};

class NotSquarefree : public PreconditionError {
 public:
  NotSquarefree() : PreconditionError("monomial ideal is not squarefree") {}
};

class NonOrientableCell : public PreconditionError {
 public:
  explicit NonOrientableCell(std::size_t cell)
      : PreconditionError("cell " + std::to_string(cell) +
                          " admits no consistent incidence signs"),
        cell_(cell) {}
  std::size_t cell() const { return cell_; }

 private:
  std::size_t cell_;
};

class NotComparable : public PreconditionError {
 public:
  NotComparable() : PreconditionError("lattice elements are not comparable") {}
};

class NotGraded : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotComplete : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class Disconnected : public PreconditionError {
 public:
  Disconnected() : PreconditionError("graph is not connected") {}
};

class HasIsthmus : public PreconditionError {
 public:
  explicit HasIsthmus(std::size_t edge)
      : PreconditionError("edge " + std::to_string(edge + 1) + " is an isthmus"), edge_(edge) {}
  std::size_t edge() const { return edge_; }

 private:
  std::size_t edge_;
};

}  // namespace cellres

#endif  // CELLRES_ERROR_HPP
