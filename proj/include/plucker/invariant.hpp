#ifndef PLUCKER_INVARIANT_HPP
#define PLUCKER_INVARIANT_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "plucker/bracket.hpp"
#include "plucker/ring.hpp"

namespace plucker {

/// 2x2 matrix over the coefficient field, acting on every variable pair by
/// (x_i, y_i) -> (a*x_i + b*y_i, c*x_i + d*y_i).
struct ActionMatrix {
    Scalar a, b, c, d;

    static ActionMatrix identity(const Field& f) {
        return {Scalar::of(f, 1), Scalar::of(f, 0), Scalar::of(f, 0), Scalar::of(f, 1)};
    }
    Scalar det() const { return a * d - b * c; }
    ActionMatrix operator*(const ActionMatrix& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
};

/// G . p, i.e. p(a*x_i + b*y_i, c*x_i + d*y_i).
Polynomial apply_matrix(const Polynomial& p, const ActionMatrix& m);

/// True iff G . p == det(G) * p.  Throws on a singular matrix.
bool check_semi_invariant(const Polynomial& p, const ActionMatrix& m);

struct Bidegree {
    std::int64_t x_degree = 0;
    std::int64_t y_degree = 0;
    friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

struct Obstruction {
    enum class Kind {
        UnequalBidegree,  // a component with x-degree != y-degree
        IdentityFailure,  // the bracket-substitution identity failed
    };
    Kind kind;
    Bidegree bidegree;  // the offending component's bidegree
};

/// Outcome of the constructive SL2-invariance test.  When the verdict is
/// positive the representation is a standard-form bracket polynomial whose
/// expansion is exactly the input.
struct InvarianceCertificate {
    bool verdict = false;
    std::vector<Bidegree> component_bidegrees;
    std::optional<Obstruction> obstruction;
    std::optional<BracketPolynomial> representation;
};

/// Decide SL2-invariance constructively: each bihomogeneous component must
/// have bidegree (m, m) and satisfy
///
///     expand([1,2])^m * component == component(x_i -> f_{1,i}, y_i -> f_{2,i})
///
/// and on acceptance the certificate carries the bracket representation
/// (straightened substitution image divided by [1,2] m times, per
/// component).  Rationals only (the criterion is unsound over finite
/// fields); requires n >= 2.
InvarianceCertificate sl2_certificate(const Polynomial& p,
                                      std::int64_t fuel = kDefaultStraightenFuel);

/// Independent cross-check: SL2 is generated by the two elementary shears,
/// so p is invariant iff it is fixed by x_i -> x_i + t*y_i and by
/// y_i -> y_i + t*x_i with t a fresh variable, as exact identities.
/// Rationals only.
bool sl2_invariant_by_generators(const Polynomial& p);

/// Bracket representation of an SL2-invariant.  Throws NotInvariant when
/// sl2_certificate rejects.
BracketPolynomial represent_sl2(const Polynomial& p,
                                std::int64_t fuel = kDefaultStraightenFuel);

/// Decide whether num/den is a GL2-invariant rational function via the
/// cross-multiplied substitution identity
///
///     num * D' * F^deg(num) == den * N' * F^deg(den)
///
/// where N', D' are the images of num, den under x_i -> f_{1,i},
/// y_i -> f_{2,i}, homogenized to the maximal total degree by powers of
/// F = expand([1,2]).  Rationals only; requires n >= 2 and den != 0.
bool gl2_invariant(const Polynomial& num, const Polynomial& den);

/// Bracket numerator/denominator pair for a GL2-invariant num/den, each in
/// standard form, with common [1,2] factors cancelled; their expansions
/// satisfy expand(first) * den == expand(second) * num.  Throws NotInvariant
/// when gl2_invariant rejects.
std::pair<BracketPolynomial, BracketPolynomial> represent_gl2(
    const Polynomial& num, const Polynomial& den,
    std::int64_t fuel = kDefaultStraightenFuel);

/// Result of checking G . p == det(G) * p over a whole finite matrix group
/// (or a random sample of it).
struct SemiInvarianceScan {
    mpz_class group_size;       // |GL2(F_p)| = (p^2-1)(p^2-p)
    std::uint64_t checked = 0;  // matrices actually verified
    bool all_semi_invariant = false;
};

inline constexpr std::uint64_t kMaxExhaustiveGroupOrder = 1'000'000;
inline constexpr int kDefaultSampleCount = 500;

/// Verify semi-invariance of p over GL2(F_p), exhaustively (group order
/// capped at kMaxExhaustiveGroupOrder) or on a deterministic random sample.
/// The scan stops at the first violation.  Prime-field contexts only.
SemiInvarianceScan scan_gl2_semi_invariance(const Polynomial& p, bool exhaustive,
                                            int samples = kDefaultSampleCount);

struct CounterexampleReport {
    std::uint64_t prime = 0;
    int index = 0;
    mpz_class group_size;
    std::uint64_t checked = 0;
    bool semi_invariant = false;
    bool bidegree_obstruction = false;
};

/// Verify the finite-field counterexample family: over F_p the polynomial
/// p_i = x_i^p * y_i - x_i * y_i^p satisfies G . p_i == det(G) * p_i for
/// every invertible G (so it is SL2(F_p)-invariant), yet it has a component
/// with unequal bidegree, which certifies that it is not a polynomial in
/// the brackets.
CounterexampleReport finite_field_counterexample(std::uint64_t prime, int index,
                                                 bool exhaustive);

}  // namespace plucker

#endif
