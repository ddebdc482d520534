#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hesscalc {

/// Raised by the text parsers (polynomials, permutations, Hessenberg
/// functions, ideal files). `position` is the 1-based offset of the
/// offending character in the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Raised when an exact division is requested but the divisor does not
/// divide the dividend. Carries the nonzero remainder (formatted).
class DivisionError : public std::runtime_error {
public:
    DivisionError(const std::string& what, std::string remainder)
        : std::runtime_error(what + " (remainder: " + remainder + ")"),
          remainder_(std::move(remainder)) {}

    const std::string& remainder() const { return remainder_; }

private:
    std::string remainder_;
};

} // namespace hesscalc
