#ifndef PLUCKER_RING_HPP
#define PLUCKER_RING_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plucker/field.hpp"

namespace plucker {

/// Ambient ring K[x1,y1,...,xn,yn]: the number of variable pairs plus the
/// coefficient field.  Every polynomial is interpreted relative to one
/// context; mixing contexts is a hard error, never a silent coercion.
struct RingContext {
    RingContext(int n_, Field field_) : n(n_), field(std::move(field_)) {
        if (n < 1) throw Error("ring context needs n >= 1");
    }
    int n;
    Field field;
    friend bool operator==(const RingContext&, const RingContext&) = default;
};

/// A power product of the 2n variables, stored as the exponent vector in
/// position order x1,y1,x2,y2,...,xn,yn.
///
/// Comparison is pure lexicographic with precedence x1 < y1 < x2 < ... < yn:
/// exponents are compared starting from the highest-precedence variable yn
/// and scanning down.  Under this order the leading monomial of the
/// expansion of f_{i,j} (i < j) is x_i*y_j.
class Monomial {
public:
    explicit Monomial(int n) : e_(2 * static_cast<std::size_t>(n), 0) {}
    explicit Monomial(std::vector<std::int64_t> exponents) : e_(std::move(exponents)) {}

    static Monomial x(int n, int i) { return unit(n, position_x(i)); }
    static Monomial y(int n, int i) { return unit(n, position_y(i)); }

    /// Exponent-vector position of x_i / y_i (1-based i).
    static int position_x(int i) { return 2 * (i - 1); }
    static int position_y(int i) { return 2 * (i - 1) + 1; }

    int width() const { return static_cast<int>(e_.size()); }
    int pairs() const { return width() / 2; }
    std::int64_t exponent(int pos) const { return e_[static_cast<std::size_t>(pos)]; }
    std::int64_t x_exponent(int i) const { return e_[static_cast<std::size_t>(position_x(i))]; }
    std::int64_t y_exponent(int i) const { return e_[static_cast<std::size_t>(position_y(i))]; }
    void bump(int pos, std::int64_t by) { e_[static_cast<std::size_t>(pos)] += by; }

    bool is_constant() const;
    std::int64_t total_degree() const;
    std::int64_t x_degree() const;
    std::int64_t y_degree() const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    /// Componentwise difference; requires o.divides(*this).
    Monomial divided_by(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    std::strong_ordering operator<=>(const Monomial& o) const;

    const std::vector<std::int64_t>& exponents() const { return e_; }

private:
    static Monomial unit(int n, int pos) {
        Monomial m(n);
        m.e_[static_cast<std::size_t>(pos)] = 1;
        return m;
    }
    std::vector<std::int64_t> e_;
};

struct BihomogeneousComponent;

/// Sparse multivariate polynomial: a term map Monomial -> nonzero Scalar,
/// ordered by the declared monomial order.  Immutable value semantics; all
/// operations are pure.
class Polynomial {
public:
    explicit Polynomial(RingContext ctx) : ctx_(std::move(ctx)) {}

    static Polynomial constant(const RingContext& ctx, const Scalar& c);
    static Polynomial constant(const RingContext& ctx, std::int64_t c);
    static Polynomial variable(const RingContext& ctx, int pos);
    static Polynomial x(const RingContext& ctx, int i) { return variable(ctx, Monomial::position_x(i)); }
    static Polynomial y(const RingContext& ctx, int i) { return variable(ctx, Monomial::position_y(i)); }
    static Polynomial term(const RingContext& ctx, Monomial m, const Scalar& c);

    const RingContext& context() const { return ctx_; }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const Scalar& c) const;
    Polynomial pow(std::int64_t e) const;

    /// Ring-homomorphic image: replace each variable by its image polynomial
    /// (positions of this context; images live in `target`), expand, collect.
    /// Throws when a variable occurring in this polynomial has no image, or
    /// when an image lives in the wrong context.
    Polynomial substitute(const std::vector<std::optional<Polynomial>>& images,
                          const RingContext& target) const;

    /// Quotient q with q*d == *this, by single-divisor reduction under the
    /// declared order.  Throws NotDivisible when a remainder appears.
    Polynomial exact_div(const Polynomial& d) const;

    /// Maximal term under the declared order.  Throws on the zero polynomial.
    std::pair<Monomial, Scalar> leading_term() const;

    /// Partition of the terms by (total x-degree, total y-degree), sorted by
    /// bidegree; the parts are nonzero and sum to the polynomial.
    std::vector<BihomogeneousComponent> bihomogeneous_components() const;

    /// Partition by total degree (for rational-invariance homogenization).
    std::map<std::int64_t, Polynomial> total_degree_components() const;

    /// Max total degree over the terms; 0 for the zero polynomial.
    std::int64_t total_degree() const;

    bool operator==(const Polynomial& o) const {
        return ctx_ == o.ctx_ && terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

private:
    void add_term(const Monomial& m, const Scalar& c);
    void check_context(const Polynomial& o) const;

    RingContext ctx_;
    std::map<Monomial, Scalar> terms_;
};

struct BihomogeneousComponent {
    std::int64_t x_degree;
    std::int64_t y_degree;
    Polynomial part;
};

}  // namespace plucker

#endif
