#pragma once

#include <stdexcept>
#include <string>

namespace triplesys {

/// An operation was called outside the hypothesis it needs (threshold not met,
/// host too small, base not a K4, ...).
class PreconditionViolated : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A step of a constructive proof failed to produce the object the proof
/// promises. Reaching this on a valid input would falsify the theorem being
/// replayed, so the message carries the full local state.
class InternalContradiction : public std::runtime_error {
 public:
  InternalContradiction(const std::string& what, std::string diagnostics)
      : std::runtime_error(what), diagnostics_(std::move(diagnostics)) {}

  const std::string& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::string diagnostics_;
};

/// Malformed hypergraph file or certificate document.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  /// 1-based line number, or 0 when not tied to a line.
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace triplesys
