#ifndef SYMGB_ERRORS_HPP
#define SYMGB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symgb
{

/// Malformed polynomial, monomial or cycle text. `position()` is a byte offset.
class ParseError : public std::invalid_argument
{
public:
  ParseError(std::string const &what, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position)),
      position_(position)
  {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// Operands live in different coefficient domains (e.g. two distinct primes).
class DomainMismatch : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// Orbit enumeration inside a reduction step went over its work cap.
class OrbitSearchLimit : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

} // namespace symgb

#endif // SYMGB_ERRORS_HPP
