#ifndef PLUCKER_BRACKET_HPP
#define PLUCKER_BRACKET_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "plucker/ring.hpp"

namespace plucker {

/// One bracket f_{i,j}; stored columns always satisfy i < j.
struct Column {
    int i = 0;
    int j = 0;
    friend auto operator<=>(const Column&, const Column&) = default;
};

struct NormalizedColumn {
    int sign;                      // +1, -1, or 0 (0 for f_{i,i})
    std::optional<Column> column;  // empty iff sign == 0
};

/// f_{i,i} = 0 and f_{j,i} = -f_{i,j}: (0, none) if i == j, (+1, (i,j)) if
/// i < j, (-1, (j,i)) if i > j.  Indices must lie in [1, n].
NormalizedColumn normalize_column(int i, int j, int n);

/// A bracket monomial: multiset of columns, stored sorted by (i, j).  The
/// empty tableau is the bracket monomial 1.
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(std::vector<Column> columns);

    const std::vector<Column>& columns() const { return cols_; }
    int size() const { return static_cast<int>(cols_.size()); }
    bool empty() const { return cols_.empty(); }
    int max_index() const;

    /// With the columns sorted by (i, j), the top row is nondecreasing by
    /// construction; the tableau is standard iff the bottom row is too.
    bool is_standard() const;

    /// Index k of the first adjacent pair (k, k+1) violating standardness.
    std::optional<int> first_violation() const;

    bool contains(Column c) const;
    Tableau without_one(Column c) const;
    Tableau with(Column c) const;
    Tableau concat(const Tableau& o) const;

    /// Multiset of all indices appearing in the two rows.
    std::map<int, int> index_multiset() const;

    friend bool operator==(const Tableau&, const Tableau&) = default;
    friend auto operator<=>(const Tableau& a, const Tableau& b) {
        return a.cols_ <=> b.cols_;
    }

private:
    std::vector<Column> cols_;
};

struct PluckerSummand {
    int sign;  // +1 or -1
    Column first;
    Column second;
};

/// Rewrite the product of a violating pair (a.i <= b.i and a.j > b.j) by the
/// three-term relation f_{i,j}f_{k,l} = f_{i,k}f_{j,l} - f_{i,l}f_{j,k},
/// renormalizing each factor; a summand containing f_{r,r} = 0 is dropped.
/// Throws when the pair is not violating.
std::vector<PluckerSummand> plucker_step(Column a, Column b);

inline constexpr std::int64_t kDefaultStraightenFuel = 1'000'000;

/// Sparse element of the bracket algebra K[f_ij]: a term map
/// Tableau -> nonzero Scalar.  "Standard form" means every tableau is
/// standard; straighten() computes the unique standard form.
class BracketPolynomial {
public:
    explicit BracketPolynomial(RingContext ctx) : ctx_(std::move(ctx)) {}

    static BracketPolynomial constant(const RingContext& ctx, const Scalar& c);
    static BracketPolynomial term(const RingContext& ctx, Tableau t, const Scalar& c);
    /// Single bracket [i,j] normalized per f_{i,i} = 0, f_{j,i} = -f_{i,j}.
    static BracketPolynomial bracket(const RingContext& ctx, int i, int j);

    const RingContext& context() const { return ctx_; }
    const std::map<Tableau, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    BracketPolynomial operator-() const;
    BracketPolynomial operator+(const BracketPolynomial& o) const;
    BracketPolynomial operator-(const BracketPolynomial& o) const;
    BracketPolynomial operator*(const BracketPolynomial& o) const;
    BracketPolynomial& operator+=(const BracketPolynomial& o) { return *this = *this + o; }
    BracketPolynomial& operator-=(const BracketPolynomial& o) { return *this = *this - o; }
    BracketPolynomial& operator*=(const BracketPolynomial& o) { return *this = *this * o; }
    BracketPolynomial scaled(const Scalar& c) const;
    BracketPolynomial pow(std::int64_t e) const;

    bool is_standard_form() const;

    /// Rewrite into the standard-product basis by iterated Plücker steps.
    /// The result expands to the same polynomial and is the unique standard
    /// form.  Fuel bounds the number of rewrite steps; exhausting it raises
    /// FuelExhausted, which signals a bug rather than a property of the
    /// input.
    BracketPolynomial straighten(std::int64_t fuel = kDefaultStraightenFuel) const;

    /// Ring-homomorphic image in K[x,y]: column (i,j) -> x_i*y_j - y_i*x_j.
    Polynomial expand() const;

    /// Remove one column (1,2) from every tableau.  Requires standard form;
    /// throws NotDivisible when some tableau lacks the column, which (by the
    /// basis property) certifies that the expansion is not divisible by
    /// x1*y2 - y1*x2.
    BracketPolynomial divide_by_f12() const;

    /// Structural equality (same stored terms); equality modulo the Plücker
    /// relations is bracket_equal.
    bool operator==(const BracketPolynomial& o) const {
        return ctx_ == o.ctx_ && terms_ == o.terms_;
    }
    bool operator!=(const BracketPolynomial& o) const { return !(*this == o); }

private:
    void add_term(const Tableau& t, const Scalar& c);
    void check_context(const BracketPolynomial& o) const;

    RingContext ctx_;
    std::map<Tableau, Scalar> terms_;
};

/// Equality in the bracket algebra: equal straightened forms.
bool bracket_equal(const BracketPolynomial& a, const BracketPolynomial& b);

}  // namespace plucker

#endif
