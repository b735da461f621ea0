#ifndef GLAB_ERRORS_HPP
#define GLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace glab {

// Caller passed an argument outside the operation's range (bad vertex id,
// null graph where one is required, ...).
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument is in range but the mathematical object is undefined for it
// (link of a non-face, localization at a dependent set, ...).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Request exceeds a documented size cap.
class unsupported_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t line)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace glab

#endif  // GLAB_ERRORS_HPP
