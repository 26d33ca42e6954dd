#ifndef PCST_ERROR_HPP
#define PCST_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pcst {

/// Malformed or semantically invalid input (instance files, reports, flags).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural property the algorithm relies on was observed to fail.
/// Always indicates a bug, never bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An operation was called outside its precondition.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The requested problem has no feasible solution (e.g. quota above total profit).
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exhaustive routine was asked to run beyond its size cap.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pcst

#endif  // PCST_ERROR_HPP
