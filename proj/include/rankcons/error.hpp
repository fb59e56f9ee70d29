#ifndef RANKCONS_ERROR_HPP
#define RANKCONS_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rankcons {

// Bad argument to an operation (unknown item id, absent item, missing
// parameter, out-of-range parameter).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A ranking that is not well formed (duplicate item, empty tie group).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed ranking document. `line()` is 1-based, 0 when not line oriented.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Input outside the domain of a pairwise index (partial, tied or
// non-conjoint rankings for Kendall/Spearman).
class UnsupportedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Brute-force enumeration refused because the input is too large.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rankcons

#endif  // RANKCONS_ERROR_HPP
