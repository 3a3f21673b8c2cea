#include "plucker/bracket.hpp"

#include <algorithm>
#include <string>

namespace plucker {

namespace {

std::string column_str(Column c) {
    return "[" + std::to_string(c.i) + "," + std::to_string(c.j) + "]";
}

}  // namespace

NormalizedColumn normalize_column(int i, int j, int n) {
    if (i < 1 || j < 1 || i > n || j > n)
        throw Error("bracket index out of range: " + column_str({i, j}) +
                    " with n = " + std::to_string(n));
    if (i == j) return {0, std::nullopt};
    if (i < j) return {+1, Column{i, j}};
    return {-1, Column{j, i}};
}

Tableau::Tableau(std::vector<Column> columns) : cols_(std::move(columns)) {
    for (const Column& c : cols_)
        if (!(0 < c.i && c.i < c.j))
            throw Error("malformed tableau column " + column_str(c));
    std::sort(cols_.begin(), cols_.end());
}

int Tableau::max_index() const {
    int m = 0;
    for (const Column& c : cols_) m = std::max(m, c.j);
    return m;
}

bool Tableau::is_standard() const { return !first_violation().has_value(); }

std::optional<int> Tableau::first_violation() const {
    // Sorted by (i, j), so the top row is nondecreasing and a violation is
    // exactly a descent in the bottom row.
    for (std::size_t k = 0; k + 1 < cols_.size(); ++k)
        if (cols_[k].j > cols_[k + 1].j) return static_cast<int>(k);
    return std::nullopt;
}

bool Tableau::contains(Column c) const {
    return std::binary_search(cols_.begin(), cols_.end(), c);
}

Tableau Tableau::without_one(Column c) const {
    Tableau r = *this;
    auto it = std::lower_bound(r.cols_.begin(), r.cols_.end(), c);
    if (it == r.cols_.end() || !(*it == c))
        throw Error("tableau has no column " + column_str(c));
    r.cols_.erase(it);
    return r;
}

Tableau Tableau::with(Column c) const {
    Tableau r = *this;
    r.cols_.insert(std::upper_bound(r.cols_.begin(), r.cols_.end(), c), c);
    return r;
}

Tableau Tableau::concat(const Tableau& o) const {
    std::vector<Column> cols;
    cols.reserve(cols_.size() + o.cols_.size());
    std::merge(cols_.begin(), cols_.end(), o.cols_.begin(), o.cols_.end(),
               std::back_inserter(cols));
    Tableau r;
    r.cols_ = std::move(cols);
    return r;
}

std::map<int, int> Tableau::index_multiset() const {
    std::map<int, int> m;
    for (const Column& c : cols_) {
        ++m[c.i];
        ++m[c.j];
    }
    return m;
}

std::vector<PluckerSummand> plucker_step(Column a, Column b) {
    if (!(0 < a.i && a.i < a.j) || !(0 < b.i && b.i < b.j))
        throw Error("plucker_step on malformed columns");
    if (!(a.i <= b.i && a.j > b.j))
        throw Error("plucker_step on a non-violating pair " + column_str(a) +
                    column_str(b));
    // f_{i,j}f_{k,l} = f_{i,k}f_{j,l} - f_{i,l}f_{j,k} with (i,j) = a and
    // (k,l) = b, each factor renormalized.
    const int n = std::max(a.j, b.j);
    std::vector<PluckerSummand> out;
    auto push = [&](int rel_sign, int p, int q, int r, int s) {
        NormalizedColumn u = normalize_column(p, q, n);
        NormalizedColumn v = normalize_column(r, s, n);
        if (u.sign == 0 || v.sign == 0) return;
        out.push_back({rel_sign * u.sign * v.sign, *u.column, *v.column});
    };
    push(+1, a.i, b.i, a.j, b.j);
    push(-1, a.i, b.j, a.j, b.i);
    return out;
}

BracketPolynomial BracketPolynomial::constant(const RingContext& ctx, const Scalar& c) {
    BracketPolynomial b(ctx);
    if (!c.in_field(ctx.field))
        throw FieldMismatch("constant coefficient not in the context field");
    if (!c.is_zero()) b.terms_.emplace(Tableau(), c);
    return b;
}

BracketPolynomial BracketPolynomial::term(const RingContext& ctx, Tableau t, const Scalar& c) {
    if (t.max_index() > ctx.n)
        throw ContextMismatch("tableau index exceeds the context n");
    if (!c.in_field(ctx.field))
        throw FieldMismatch("term coefficient not in the context field");
    BracketPolynomial b(ctx);
    if (!c.is_zero()) b.terms_.emplace(std::move(t), c);
    return b;
}

BracketPolynomial BracketPolynomial::bracket(const RingContext& ctx, int i, int j) {
    NormalizedColumn nc = normalize_column(i, j, ctx.n);
    if (nc.sign == 0) return BracketPolynomial(ctx);
    return term(ctx, Tableau({*nc.column}), Scalar::of(ctx.field, nc.sign));
}

void BracketPolynomial::check_context(const BracketPolynomial& o) const {
    if (!(ctx_ == o.ctx_))
        throw ContextMismatch("bracket polynomials from different ring contexts");
}

void BracketPolynomial::add_term(const Tableau& t, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(t);
    if (it == terms_.end()) {
        terms_.emplace(t, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

BracketPolynomial BracketPolynomial::operator-() const {
    BracketPolynomial r(ctx_);
    for (const auto& [t, c] : terms_) r.terms_.emplace(t, -c);
    return r;
}

BracketPolynomial BracketPolynomial::operator+(const BracketPolynomial& o) const {
    check_context(o);
    BracketPolynomial r = *this;
    for (const auto& [t, c] : o.terms_) r.add_term(t, c);
    return r;
}

BracketPolynomial BracketPolynomial::operator-(const BracketPolynomial& o) const {
    check_context(o);
    BracketPolynomial r = *this;
    for (const auto& [t, c] : o.terms_) r.add_term(t, -c);
    return r;
}

BracketPolynomial BracketPolynomial::operator*(const BracketPolynomial& o) const {
    check_context(o);
    BracketPolynomial r(ctx_);
    for (const auto& [ta, ca] : terms_)
        for (const auto& [tb, cb] : o.terms_) r.add_term(ta.concat(tb), ca * cb);
    return r;
}

BracketPolynomial BracketPolynomial::scaled(const Scalar& c) const {
    if (!c.in_field(ctx_.field))
        throw FieldMismatch("scale factor not in the context field");
    BracketPolynomial r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [t, k] : terms_) r.add_term(t, k * c);
    return r;
}

BracketPolynomial BracketPolynomial::pow(std::int64_t e) const {
    if (e < 0) throw Error("negative bracket power");
    BracketPolynomial acc = constant(ctx_, Scalar::of(ctx_.field, 1));
    BracketPolynomial base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return acc;
}

bool BracketPolynomial::is_standard_form() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& term) { return term.first.is_standard(); });
}

namespace {

using TableauCombination = std::map<Tableau, Scalar>;

// Rewrite chains shorten a nonnegative measure each step, so this bound is
// never the limiting factor at sane sizes; it only converts a pathological
// deep recursion into a clean error instead of a stack overflow.
constexpr int kMaxStraightenDepth = 20'000;

// Normal form of a single tableau.  The memo table is private to one
// straighten() call: Plücker rewriting re-derives identical subproblems
// exponentially often without it.
const TableauCombination& straighten_tableau(
    const Tableau& t, const RingContext& ctx,
    std::map<Tableau, TableauCombination>& memo, std::int64_t& fuel, int depth) {
    auto hit = memo.find(t);
    if (hit != memo.end()) return hit->second;

    std::optional<int> k = t.first_violation();
    if (!k) {
        TableauCombination self;
        self.emplace(t, Scalar::of(ctx.field, 1));
        return memo.emplace(t, std::move(self)).first->second;
    }

    if (--fuel < 0)
        throw FuelExhausted("straightening fuel exhausted; this indicates a bug "
                            "(or an unreasonably small --fuel)");
    if (depth > kMaxStraightenDepth)
        throw FuelExhausted("straightening recursion too deep");

    const auto& cols = t.columns();
    Column a = cols[static_cast<std::size_t>(*k)];
    Column b = cols[static_cast<std::size_t>(*k) + 1];
    Tableau rest;
    {
        std::vector<Column> remaining;
        remaining.reserve(cols.size() - 2);
        for (std::size_t idx = 0; idx < cols.size(); ++idx)
            if (idx != static_cast<std::size_t>(*k) &&
                idx != static_cast<std::size_t>(*k) + 1)
                remaining.push_back(cols[idx]);
        rest = Tableau(std::move(remaining));
    }

    TableauCombination acc;
    for (const PluckerSummand& s : plucker_step(a, b)) {
        Tableau replaced = rest.with(s.first).with(s.second);
        const TableauCombination& sub =
            straighten_tableau(replaced, ctx, memo, fuel, depth + 1);
        Scalar sign = Scalar::of(ctx.field, s.sign);
        for (const auto& [st, sc] : sub) {
            Scalar add = sc * sign;
            auto it = acc.find(st);
            if (it == acc.end()) {
                if (!add.is_zero()) acc.emplace(st, add);
            } else {
                it->second += add;
                if (it->second.is_zero()) acc.erase(it);
            }
        }
    }
    return memo.emplace(t, std::move(acc)).first->second;
}

}  // namespace

BracketPolynomial BracketPolynomial::straighten(std::int64_t fuel) const {
    BracketPolynomial result(ctx_);
    std::map<Tableau, TableauCombination> memo;
    for (const auto& [t, c] : terms_) {
        const TableauCombination& nf = straighten_tableau(t, ctx_, memo, fuel, 0);
        for (const auto& [st, sc] : nf) result.add_term(st, sc * c);
    }
#ifndef NDEBUG
    if (!(result.expand() == expand()))
        throw InternalError("straighten changed the expansion");
#endif
    return result;
}

Polynomial BracketPolynomial::expand() const {
    Polynomial acc(ctx_);
    std::map<Column, Polynomial> cache;
    auto column_poly = [&](Column c) -> const Polynomial& {
        auto it = cache.find(c);
        if (it == cache.end()) {
            Polynomial f = Polynomial::x(ctx_, c.i) * Polynomial::y(ctx_, c.j) -
                           Polynomial::y(ctx_, c.i) * Polynomial::x(ctx_, c.j);
            it = cache.emplace(c, std::move(f)).first;
        }
        return it->second;
    };
    for (const auto& [t, c] : terms_) {
        Polynomial prod = Polynomial::constant(ctx_, c);
        for (const Column& col : t.columns()) prod *= column_poly(col);
        acc += prod;
    }
    return acc;
}

BracketPolynomial BracketPolynomial::divide_by_f12() const {
    if (!is_standard_form())
        throw Error("divide_by_f12 requires a standard-form input");
    const Column f12{1, 2};
    BracketPolynomial r(ctx_);
    for (const auto& [t, c] : terms_) {
        if (!t.contains(f12))
            throw NotDivisible("tableau without column [1,2]; the expansion is "
                               "not divisible by the bracket [1,2]");
        // (1,2) is the minimal column, so removing it keeps the rows sorted.
        Tableau quotient = t.without_one(f12);
        if (!quotient.is_standard())
            throw InternalError("divide_by_f12 produced a non-standard tableau");
        r.add_term(quotient, c);
    }
    return r;
}

bool bracket_equal(const BracketPolynomial& a, const BracketPolynomial& b) {
    if (!(a.context() == b.context()))
        throw ContextMismatch("bracket polynomials from different ring contexts");
    return a.straighten().terms() == b.straighten().terms();
}

}  // namespace plucker
