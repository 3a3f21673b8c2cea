#ifndef PLUCKER_FORMAT_HPP
#define PLUCKER_FORMAT_HPP

#include <string>

#include "json.hpp"

#include "plucker/bracket.hpp"
#include "plucker/ring.hpp"

namespace plucker {

/// Canonical text form: terms in decreasing monomial order, variables inside
/// a monomial in position order, e.g. "x1^2*y2 - 3/4*y1*x2 + 5".  The output
/// re-parses to the same value.
std::string to_text(const Polynomial& p);

/// Canonical text form: terms in decreasing tableau order, repeated columns
/// with powers, e.g. "[1,3]*[2,4] - [1,2]*[3,4]".
std::string to_text(const BracketPolynomial& b);

/// Integers stay JSON numbers within the 53-bit safe range and become
/// decimal strings beyond it.
nlohmann::ordered_json json_integer(const mpz_class& v);

/// Rationals: integer-valued ones follow json_integer, others are "a/b"
/// strings; residues follow json_integer.
nlohmann::ordered_json json_scalar(const Scalar& s);

}  // namespace plucker

#endif
