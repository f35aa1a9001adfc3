#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace spinal {

/// Base class of every error raised by the library. `code()` is a short,
/// stable tag that the command-line tool prints verbatim.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

#define SPINAL_DEFINE_ERROR(Name, tag)                                         \
  class Name : public Error {                                                  \
  public:                                                                      \
    explicit Name(const std::string& message) : Error(tag, message) {}         \
  }

SPINAL_DEFINE_ERROR(InvalidNetworkError, "invalid-network");
SPINAL_DEFINE_ERROR(NotMemberError, "non-member");
SPINAL_DEFINE_ERROR(SpineMismatchError, "spine-mismatch");
SPINAL_DEFINE_ERROR(LabelModeError, "label-mode");
SPINAL_DEFINE_ERROR(ClassMembershipError, "class-membership");
SPINAL_DEFINE_ERROR(MalformedPartitionError, "malformed-partition");
SPINAL_DEFINE_ERROR(MalformedLrqError, "malformed-lrq");
SPINAL_DEFINE_ERROR(RangeError, "range");
SPINAL_DEFINE_ERROR(BudgetExceededError, "budget-exceeded");
SPINAL_DEFINE_ERROR(InvalidChoiceError, "invalid-choice");
SPINAL_DEFINE_ERROR(MarkedTreeError, "invalid-marked-tree");
SPINAL_DEFINE_ERROR(LabelCollisionError, "label-collision");

#undef SPINAL_DEFINE_ERROR

/// Input text that could not be parsed. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
public:
  ParseError(int line, const std::string& message)
      : Error("parse", line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}

  int line() const noexcept { return line_; }

private:
  int line_;
};

} // namespace spinal
