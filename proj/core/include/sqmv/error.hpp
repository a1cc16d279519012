#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sqmv {

// Root of every library exception. Rejections of proofs and countermodels
// are verdicts, not errors, and never surface through this hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t pos, std::string expected)
      : Error("syntax error at " + std::to_string(pos) + ": expected " + expected),
        pos_(pos),
        expected_(std::move(expected)) {}
  std::size_t position() const { return pos_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t pos_;
  std::string expected_;
};

#define SQMV_ERROR(Name)          \
  class Name : public Error {     \
   public:                        \
    using Error::Error;           \
  };

SQMV_ERROR(SignatureError)
SQMV_ERROR(ModeError)
SQMV_ERROR(MissingBinding)
SQMV_ERROR(SpecError)
SQMV_ERROR(ClosureError)
SQMV_ERROR(DomainError)
SQMV_ERROR(StrategyError)
SQMV_ERROR(UnboundVariable)
SQMV_ERROR(ClassError)
SQMV_ERROR(NotCompatible)
SQMV_ERROR(UnknownAxiom)
SQMV_ERROR(CertificationFailed)
SQMV_ERROR(PathMismatch)
SQMV_ERROR(NotRegular)
SQMV_ERROR(SourceProofInvalid)
SQMV_ERROR(ScriptFormatError)

#undef SQMV_ERROR

}  // namespace sqmv
