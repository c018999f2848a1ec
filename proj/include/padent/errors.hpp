#pragma once

#include <stdexcept>
#include <string>

namespace padent {

// Malformed input: bad rational literal, unknown prime key, bad polynomial.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Well-formed input that violates a mathematical precondition
// (hom-constraint, dimension mismatch, rank deficiency, ...).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace padent
