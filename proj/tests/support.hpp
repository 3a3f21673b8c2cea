// Shared test helpers: deterministic random generators, independent oracles,
// and small enumerations.  Test-only; the oracles deliberately avoid the
// library code paths they are used to check.
#ifndef PLUCKER_TESTS_SUPPORT_HPP
#define PLUCKER_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "plucker/invariant.hpp"
#include "plucker/ring.hpp"

namespace plucker::testing {

struct Rng {
    explicit Rng(std::uint64_t seed) : g(seed) {}
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(g);
    }
    std::mt19937_64 g;
};

inline Scalar random_scalar(const Field& f, Rng& r, bool nonzero = false) {
    for (;;) {
        Scalar s = f.is_rationals()
                       ? Scalar::rational(r.range(-9, 9), r.range(1, 9))
                       : Scalar::residue(static_cast<std::uint64_t>(
                                             r.range(0, static_cast<std::int64_t>(
                                                            f.modulus() - 1))),
                                         f.modulus());
        if (!nonzero || !s.is_zero()) return s;
    }
}

inline Monomial random_monomial(const RingContext& ctx, Rng& r, int max_exp = 2) {
    Monomial m(ctx.n);
    for (int pos = 0; pos < 2 * ctx.n; ++pos) m.bump(pos, r.range(0, max_exp));
    return m;
}

inline Polynomial random_polynomial(const RingContext& ctx, Rng& r,
                                    int max_terms = 4, int max_exp = 2) {
    Polynomial p(ctx);
    std::int64_t terms = r.range(0, max_terms);
    for (std::int64_t k = 0; k < terms; ++k)
        p += Polynomial::term(ctx, random_monomial(ctx, r, max_exp),
                              random_scalar(ctx.field, r));
    return p;
}

inline Column random_column(int n, Rng& r) {
    int i = static_cast<int>(r.range(1, n - 1));
    int j = static_cast<int>(r.range(i + 1, n));
    return Column{i, j};
}

inline Tableau random_tableau(int n, Rng& r, int max_cols = 4) {
    std::vector<Column> cols;
    std::int64_t k = r.range(0, max_cols);
    for (std::int64_t c = 0; c < k; ++c) cols.push_back(random_column(n, r));
    return Tableau(std::move(cols));
}

inline BracketPolynomial random_bracket_polynomial(const RingContext& ctx, Rng& r,
                                                   int max_terms = 5,
                                                   int max_cols = 4) {
    BracketPolynomial b(ctx);
    std::int64_t terms = r.range(0, max_terms);
    for (std::int64_t k = 0; k < terms; ++k)
        b += BracketPolynomial::term(ctx, random_tableau(ctx.n, r, max_cols),
                                     random_scalar(ctx.field, r));
    return b;
}

inline ActionMatrix random_invertible(const Field& f, Rng& r) {
    for (;;) {
        ActionMatrix m{random_scalar(f, r), random_scalar(f, r),
                       random_scalar(f, r), random_scalar(f, r)};
        if (!m.det().is_zero()) return m;
    }
}

// Product of elementary shears, so the determinant is exactly 1.
inline ActionMatrix random_sl2(const Field& f, Rng& r) {
    Scalar one = Scalar::of(f, 1);
    Scalar zero = Scalar::of(f, 0);
    ActionMatrix m = ActionMatrix::identity(f);
    for (int k = 0; k < 3; ++k) {
        Scalar t = random_scalar(f, r);
        ActionMatrix shear = (k % 2 == 0) ? ActionMatrix{one, t, zero, one}
                                          : ActionMatrix{one, zero, t, one};
        m = m * shear;
    }
    return m;
}

inline std::vector<ActionMatrix> all_invertible(std::uint64_t p) {
    std::vector<ActionMatrix> out;
    for (std::uint64_t a = 0; a < p; ++a)
        for (std::uint64_t b = 0; b < p; ++b)
            for (std::uint64_t c = 0; c < p; ++c)
                for (std::uint64_t d = 0; d < p; ++d) {
                    ActionMatrix m{Scalar::residue(a, p), Scalar::residue(b, p),
                                   Scalar::residue(c, p), Scalar::residue(d, p)};
                    if (!m.det().is_zero()) out.push_back(m);
                }
    return out;
}

// Independent evaluation oracle: plain scalar arithmetic, term by term.
inline Scalar eval_at(const Polynomial& p, const std::vector<Scalar>& point) {
    Scalar acc = Scalar::of(p.context().field, 0);
    for (const auto& [m, c] : p.terms()) {
        Scalar t = c;
        for (int pos = 0; pos < m.width(); ++pos)
            if (m.exponent(pos) != 0)
                t = t * point[static_cast<std::size_t>(pos)].pow(m.exponent(pos));
        acc = acc + t;
    }
    return acc;
}

inline std::vector<Scalar> random_point(const RingContext& ctx, Rng& r) {
    std::vector<Scalar> pt;
    for (int pos = 0; pos < 2 * ctx.n; ++pos) pt.push_back(random_scalar(ctx.field, r));
    return pt;
}

// x_i*y_j - y_i*x_j assembled from raw monomials, bypassing the bracket
// module (oracle for bracket_expand).
inline Polynomial hand_bracket_expansion(const RingContext& ctx, int i, int j) {
    Monomial m1(ctx.n), m2(ctx.n);
    m1.bump(Monomial::position_x(i), 1);
    m1.bump(Monomial::position_y(j), 1);
    m2.bump(Monomial::position_y(i), 1);
    m2.bump(Monomial::position_x(j), 1);
    return Polynomial::term(ctx, m1, Scalar::of(ctx.field, 1)) -
           Polynomial::term(ctx, m2, Scalar::of(ctx.field, 1));
}

// All standard tableaux with up to max_cols columns on indices 1..n.
inline std::vector<Tableau> standard_tableaux(int n, int max_cols) {
    std::vector<Column> all;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) all.push_back(Column{i, j});

    std::vector<Tableau> out;
    std::vector<Column> current;
    auto recurse = [&](auto&& self, std::size_t from) -> void {
        Tableau t(current);
        if (t.is_standard()) out.push_back(t);
        if (static_cast<int>(current.size()) == max_cols) return;
        for (std::size_t k = from; k < all.size(); ++k) {
            current.push_back(all[k]);
            self(self, k);  // multisets: the same column may repeat
            current.pop_back();
        }
    };
    recurse(recurse, 0);
    return out;
}

// Substitution images x_i -> f_{1,i}, y_i -> f_{2,i} assembled by hand (the
// identity-check oracle used by the certificate tests).
inline std::vector<std::optional<Polynomial>> hand_sigma_images(const RingContext& ctx) {
    std::vector<std::optional<Polynomial>> images(static_cast<std::size_t>(2 * ctx.n));
    for (int i = 1; i <= ctx.n; ++i) {
        Polynomial fx(ctx);  // f_{1,i}; zero when i == 1
        if (i != 1) fx = hand_bracket_expansion(ctx, 1, i);
        Polynomial fy(ctx);  // f_{2,i}; -f_{1,2} when i == 1, zero when i == 2
        if (i == 1)
            fy = -hand_bracket_expansion(ctx, 1, 2);
        else if (i != 2)
            fy = hand_bracket_expansion(ctx, 2, i);
        images[static_cast<std::size_t>(Monomial::position_x(i))] = fx;
        images[static_cast<std::size_t>(Monomial::position_y(i))] = fy;
    }
    return images;
}

}  // namespace plucker::testing

#endif
