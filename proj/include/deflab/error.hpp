#ifndef DEFLAB_ERROR_HPP
#define DEFLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace deflab {

enum class ErrorKind {
  syntax,
  unknown_generator,
  empty_generators,
  invalid_argument,
  limit_exceeded,
  incomplete_table,
  composition_nonzero,
  invalid_quotient,
  incompatible_subgroup,
  zero_witness,
  witness_not_in_kernel,
  search_exhausted,
  non_normal_subgroup,
  cap_exceeded,
  invalid_certificate,
  internal
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the presentation parser; carries the 0-based byte offset.
class SyntaxError : public Error {
 public:
  SyntaxError(ErrorKind kind, std::size_t position, const std::string& what)
      : Error(kind, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace deflab

#endif  // DEFLAB_ERROR_HPP
