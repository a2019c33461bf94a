#ifndef IELKIT_ERRORS_HPP
#define IELKIT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace iel {

// Base class for everything this library throws on bad input or
// arithmetic overflow.  Internal logic errors use assert instead.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed expression text.  Offset is the byte position of the
// offending token within the input string.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& msg, std::size_t offset)
        : Error(msg), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Variable subscript outside 1..n.
class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

// Arity outside the supported range.
class ArityError : public Error {
public:
    using Error::Error;
};

// Two operands with different arities were combined.
class ArityMismatch : public Error {
public:
    using Error::Error;
};

// A checked int64 computation left the representable range.
class OverflowError : public Error {
public:
    using Error::Error;
};

// A numeric argument outside its documented domain.
class RangeError : public Error {
public:
    using Error::Error;
};

// An indicator sequence was requested for the empty index set.
class EmptyIndexError : public Error {
public:
    using Error::Error;
};

}  // namespace iel

#endif  // IELKIT_ERRORS_HPP
