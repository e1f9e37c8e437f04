#ifndef DSHUFFLE_ERRORS_HPP
#define DSHUFFLE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dshuffle {

/// Raised when an argument lies outside the domain an operation is defined on
/// (a word ending in x_0 handed to the letter-to-index bijection, an
/// inadmissible word handed to the numeric evaluator, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the word grammar parsers; carries the 0-based offset of the
/// offending character in the input text.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error("position " + std::to_string(position) + ": " + message),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace dshuffle

#endif  // DSHUFFLE_ERRORS_HPP
