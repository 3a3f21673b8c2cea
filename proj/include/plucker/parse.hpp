#ifndef PLUCKER_PARSE_HPP
#define PLUCKER_PARSE_HPP

#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

#include "plucker/bracket.hpp"
#include "plucker/ring.hpp"

namespace plucker {

/// Ambient parameters for one CLI job: every expression elaborates relative
/// to these.
struct JobConfig {
    int n;
    Field field;
};

/// Largest exponent literal the parser accepts.
inline constexpr std::int64_t kMaxExponent = 1'000'000;

/// Abstract syntax for the expression language
///
///   expr    := term (('+'|'-') term)*
///   term    := factor ('*' factor)*
///   factor  := atom ('^' nat)?
///   atom    := rational | var | bracket | '-' atom | '(' expr ')'
///   var     := ('x'|'y') nat
///   bracket := '[' nat ',' nat ']'
///
/// Whitespace is insignificant between tokens; juxtaposition is not
/// multiplication.  A rational literal is "a" or "a/b".
struct Expression {
    enum class Kind {
        Integer,
        Rational,
        Variable,
        Bracket,
        Negate,
        Add,
        Subtract,
        Multiply,
        Power,
    };

    Kind kind;
    int line = 1;
    int col = 1;

    mpz_class integer;        // Integer
    mpz_class num, den;       // Rational
    char var = 'x';           // Variable: 'x' or 'y'
    int index = 0;            // Variable / Bracket first index
    int second = 0;           // Bracket second index
    std::int64_t exponent = 0;  // Power
    std::vector<Expression> children;
};

/// Parse one expression.  Index bounds are checked against cfg.n; syntax
/// errors carry 1-based line/column.
Expression parse_expression(std::string_view text, const JobConfig& cfg);

/// Evaluate a pure variable/constant expression in K[x,y].  A bracket atom
/// raises MixedExpression.
Polynomial elaborate_polynomial(const Expression& e, const JobConfig& cfg);

/// Evaluate a pure bracket/constant expression in the bracket algebra, with
/// [i,i] = 0 and [j,i] = -[i,j] applied at each atom.  A variable atom
/// raises MixedExpression.
BracketPolynomial elaborate_bracket(const Expression& e, const JobConfig& cfg);

/// Dispatch on the atoms present: bracket atoms select the bracket algebra,
/// variable atoms the polynomial ring, mixing them is an error, and a
/// constant-only expression elaborates as a polynomial.
std::variant<Polynomial, BracketPolynomial> elaborate(const Expression& e,
                                                      const JobConfig& cfg);

}  // namespace plucker

#endif
