#ifndef BCC_ERRORS_HPP
#define BCC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bcc {

/// Raised by the configuration file parser; carries a 1-based line number
/// (0 when the error is not tied to a specific line).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

/// Raised when an operation requires hypotheses (reduced, connected, tree)
/// that the given configuration does not satisfy.
class HypothesisError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when random generation exhausts its rejection budget.
class GenerationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bcc

#endif
