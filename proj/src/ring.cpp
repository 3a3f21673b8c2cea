#include "plucker/ring.hpp"

#include <algorithm>

namespace plucker {

bool Monomial::is_constant() const {
    return std::all_of(e_.begin(), e_.end(), [](std::int64_t v) { return v == 0; });
}

std::int64_t Monomial::total_degree() const {
    std::int64_t d = 0;
    for (std::int64_t v : e_) d += v;
    return d;
}

std::int64_t Monomial::x_degree() const {
    std::int64_t d = 0;
    for (std::size_t k = 0; k < e_.size(); k += 2) d += e_[k];
    return d;
}

std::int64_t Monomial::y_degree() const {
    std::int64_t d = 0;
    for (std::size_t k = 1; k < e_.size(); k += 2) d += e_[k];
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] += o.e_[k];
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (std::size_t k = 0; k < e_.size(); ++k)
        if (e_[k] > o.e_[k]) return false;
    return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] -= o.e_[k];
    return r;
}

std::strong_ordering Monomial::operator<=>(const Monomial& o) const {
    if (e_.size() != o.e_.size())
        throw ContextMismatch("comparing monomials of different widths");
    // Scan from yn (the highest-precedence variable) down to x1.
    for (std::size_t k = e_.size(); k-- > 0;) {
        if (e_[k] != o.e_[k])
            return e_[k] < o.e_[k] ? std::strong_ordering::less
                                   : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

Polynomial Polynomial::constant(const RingContext& ctx, const Scalar& c) {
    Polynomial p(ctx);
    if (!c.in_field(ctx.field))
        throw FieldMismatch("constant coefficient not in the context field");
    if (!c.is_zero()) p.terms_.emplace(Monomial(ctx.n), c);
    return p;
}

Polynomial Polynomial::constant(const RingContext& ctx, std::int64_t c) {
    return constant(ctx, Scalar::of(ctx.field, c));
}

Polynomial Polynomial::variable(const RingContext& ctx, int pos) {
    if (pos < 0 || pos >= 2 * ctx.n) throw Error("variable position out of range");
    Monomial m(ctx.n);
    m.bump(pos, 1);
    return term(ctx, std::move(m), Scalar::of(ctx.field, 1));
}

Polynomial Polynomial::term(const RingContext& ctx, Monomial m, const Scalar& c) {
    if (m.width() != 2 * ctx.n) throw ContextMismatch("monomial width differs from context");
    if (!c.in_field(ctx.field))
        throw FieldMismatch("term coefficient not in the context field");
    Polynomial p(ctx);
    if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
    return p;
}

void Polynomial::check_context(const Polynomial& o) const {
    if (!(ctx_ == o.ctx_))
        throw ContextMismatch("polynomials from different ring contexts");
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ctx_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_context(o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_context(o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_context(o);
    Polynomial r(ctx_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    if (!c.in_field(ctx_.field))
        throw FieldMismatch("scale factor not in the context field");
    Polynomial r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.add_term(m, k * c);
    return r;
}

Polynomial Polynomial::pow(std::int64_t e) const {
    if (e < 0) throw Error("negative polynomial power");
    Polynomial acc = constant(ctx_, 1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return acc;
}

Polynomial Polynomial::substitute(const std::vector<std::optional<Polynomial>>& images,
                                  const RingContext& target) const {
    if (ctx_.field != target.field)
        throw ContextMismatch("substitution must stay within one coefficient field");
    for (const auto& img : images)
        if (img && !(img->context() == target))
            throw ContextMismatch("substitution image in the wrong context");

    // Lazily extended power cache per variable position.
    std::vector<std::vector<Polynomial>> powers(static_cast<std::size_t>(2 * ctx_.n));
    auto image_power = [&](int pos, std::int64_t e) -> const Polynomial& {
        auto& cache = powers[static_cast<std::size_t>(pos)];
        if (cache.empty()) {
            if (pos >= static_cast<int>(images.size()) ||
                !images[static_cast<std::size_t>(pos)]) {
                int i = pos / 2 + 1;
                throw Error(std::string("no substitution image for variable ") +
                            (pos % 2 == 0 ? "x" : "y") + std::to_string(i));
            }
            cache.push_back(Polynomial::constant(target, 1));
            cache.push_back(*images[static_cast<std::size_t>(pos)]);
        }
        while (static_cast<std::int64_t>(cache.size()) <= e)
            cache.push_back(cache.back() * cache[1]);
        return cache[static_cast<std::size_t>(e)];
    };

    Polynomial acc(target);
    for (const auto& [m, c] : terms_) {
        Polynomial prod = Polynomial::constant(target, c);
        for (int pos = 0; pos < m.width(); ++pos) {
            std::int64_t e = m.exponent(pos);
            if (e != 0) prod *= image_power(pos, e);
        }
        acc += prod;
    }
    return acc;
}

Polynomial Polynomial::exact_div(const Polynomial& d) const {
    check_context(d);
    if (d.is_zero()) throw DivisionByZero("division by the zero polynomial");
    auto [lm_d, lc_d] = d.leading_term();
    Polynomial q(ctx_);
    Polynomial r = *this;
    while (!r.is_zero()) {
        auto [lm_r, lc_r] = r.leading_term();
        if (!lm_d.divides(lm_r))
            throw NotDivisible("exact division leaves a remainder");
        Polynomial t = term(ctx_, lm_r.divided_by(lm_d), lc_r / lc_d);
        q += t;
        r -= t * d;
    }
    return q;
}

std::pair<Monomial, Scalar> Polynomial::leading_term() const {
    if (terms_.empty()) throw Error("leading term of the zero polynomial");
    const auto& [m, c] = *terms_.rbegin();
    return {m, c};
}

std::vector<BihomogeneousComponent> Polynomial::bihomogeneous_components() const {
    std::map<std::pair<std::int64_t, std::int64_t>, Polynomial> parts;
    for (const auto& [m, c] : terms_) {
        auto key = std::make_pair(m.x_degree(), m.y_degree());
        auto it = parts.find(key);
        if (it == parts.end()) it = parts.emplace(key, Polynomial(ctx_)).first;
        it->second.add_term(m, c);
    }
    std::vector<BihomogeneousComponent> out;
    out.reserve(parts.size());
    for (auto& [key, part] : parts)
        out.push_back({key.first, key.second, std::move(part)});
    return out;
}

std::map<std::int64_t, Polynomial> Polynomial::total_degree_components() const {
    std::map<std::int64_t, Polynomial> parts;
    for (const auto& [m, c] : terms_) {
        auto it = parts.find(m.total_degree());
        if (it == parts.end()) it = parts.emplace(m.total_degree(), Polynomial(ctx_)).first;
        it->second.add_term(m, c);
    }
    return parts;
}

std::int64_t Polynomial::total_degree() const {
    std::int64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

}  // namespace plucker
