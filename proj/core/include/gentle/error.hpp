#ifndef GENTLE_ERROR_HPP
#define GENTLE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gentle {

enum class Err {
  Parse,
  Semantic,
  InfiniteFamily,
  PreconditionO,
  PreconditionIStar,
  PreconditionIIa,
  NotNilpotent,
  BudgetExceeded,
  NoSolution,
  NotJordanRecoverable,
  AmbiguityBug,
  VerificationFailed,
  InternalSearchFailure,
  SizeMismatch,
  Incomparable,
  Internal,
};

class GentleError : public std::runtime_error {
 public:
  GentleError(Err code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) {
  throw GentleError(code, what);
}

}  // namespace gentle

#endif
