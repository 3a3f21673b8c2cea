#ifndef PLUCKER_ERRORS_HPP
#define PLUCKER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace plucker {

// Base class for all recoverable domain errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two values from different ring contexts (n or field differ) were combined.
struct ContextMismatch : Error {
    using Error::Error;
};

// Scalars from different fields were combined.
struct FieldMismatch : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

// Exact division was requested but the divisor leaves a remainder, or a
// standard-form bracket polynomial has a tableau without the column (1,2).
struct NotDivisible : Error {
    using Error::Error;
};

// A representation was requested for a polynomial that is not invariant.
struct NotInvariant : Error {
    using Error::Error;
};

// Invariance decisions are refused over finite fields: the bracket criterion
// is unsound there (x1^p*y1 - x1*y1^p is an SL2(F_p)-invariant that is not a
// polynomial in the brackets).
struct FiniteFieldUnsupported : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(int line_, int col_, const std::string& what_)
        : Error("syntax error at " + std::to_string(line_) + ":" +
                std::to_string(col_) + ": " + what_),
          line(line_),
          col(col_) {}
    int line;
    int col;
};

// A bracket expression mixed with x/y variables (or vice versa).
struct MixedExpression : Error {
    using Error::Error;
};

// The straightening rewrite exceeded its fuel bound.  Straightening always
// terminates, so running out of fuel signals an implementation bug (or an
// absurdly small --fuel setting), not a property of the input.
struct FuelExhausted : Error {
    using Error::Error;
};

// An internal consistency check failed; this is a bug, not a user error.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace plucker

#endif
