#pragma once

#include <stdexcept>
#include <string>

namespace fomc {

/// Base class of every error raised by the library for bad input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation needs a sentence and receives an open formula.
class NotASentence : public Error {
 public:
  using Error::Error;
};

/// A world name that does not belong to the model it was looked up in.
class UnknownWorld : public Error {
 public:
  using Error::Error;
};

/// A search exceeded its configured expansion budget. Callers must report
/// this as "unknown", never as a negative answer.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Evaluation reached a variable with no interpretation, or expanded a
/// formula variable in a cycle. Unreachable for sentences; seeing one means
/// the sentence checker let something through.
class InterpretationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fomc
