#include "plucker/invariant.hpp"

#include <random>
#include <string>

namespace plucker {

Polynomial apply_matrix(const Polynomial& p, const ActionMatrix& m) {
    const RingContext& ctx = p.context();
    for (const Scalar* s : {&m.a, &m.b, &m.c, &m.d})
        if (!s->in_field(ctx.field))
            throw FieldMismatch("matrix entry not in the context field");
    std::vector<std::optional<Polynomial>> images(static_cast<std::size_t>(2 * ctx.n));
    for (int i = 1; i <= ctx.n; ++i) {
        Polynomial xi = Polynomial::x(ctx, i);
        Polynomial yi = Polynomial::y(ctx, i);
        images[static_cast<std::size_t>(Monomial::position_x(i))] =
            xi.scaled(m.a) + yi.scaled(m.b);
        images[static_cast<std::size_t>(Monomial::position_y(i))] =
            xi.scaled(m.c) + yi.scaled(m.d);
    }
    return p.substitute(images, ctx);
}

bool check_semi_invariant(const Polynomial& p, const ActionMatrix& m) {
    if (m.det().is_zero()) throw Error("semi-invariance check needs det != 0");
    return apply_matrix(p, m) == p.scaled(m.det());
}

namespace {

void require_rationals(const Polynomial& p, const char* what) {
    if (!p.context().field.is_rationals())
        throw FiniteFieldUnsupported(
            std::string(what) +
            " is refused over finite fields: the bracket criterion is unsound "
            "there (over F_p the polynomial x1^p*y1 - x1*y1^p is fixed by every "
            "determinant-1 matrix yet is not a polynomial in the brackets; see "
            "the counterexample command)");
}

void require_pairs(const RingContext& ctx, const char* what) {
    if (ctx.n < 2)
        throw Error(std::string(what) + " needs a context with n >= 2");
}

// Substitution x_i -> f_{1,i}, y_i -> f_{2,i} in K[x,y]; note f_{1,1} = 0,
// f_{2,1} = -f_{1,2} and f_{2,2} = 0.
Polynomial sigma_substitute(const Polynomial& p) {
    const RingContext& ctx = p.context();
    std::vector<std::optional<Polynomial>> images(static_cast<std::size_t>(2 * ctx.n));
    for (int i = 1; i <= ctx.n; ++i) {
        images[static_cast<std::size_t>(Monomial::position_x(i))] =
            BracketPolynomial::bracket(ctx, 1, i).expand();
        images[static_cast<std::size_t>(Monomial::position_y(i))] =
            BracketPolynomial::bracket(ctx, 2, i).expand();
    }
    return p.substitute(images, ctx);
}

// The same substitution landing in the bracket algebra: a monomial maps to a
// single tableau (or dies when it contains x_1 or y_2, whose images vanish),
// with a sign flip for every power of y_1.
BracketPolynomial sigma_bracket(const Polynomial& p) {
    const RingContext& ctx = p.context();
    BracketPolynomial acc(ctx);
    for (const auto& [mono, coeff] : p.terms()) {
        if (mono.x_exponent(1) > 0 || (ctx.n >= 2 && mono.y_exponent(2) > 0)) continue;
        std::vector<Column> cols;
        int sign = 1;
        for (std::int64_t k = 0; k < mono.y_exponent(1); ++k) {
            cols.push_back(Column{1, 2});  // f_{2,1} = -f_{1,2}
            sign = -sign;
        }
        for (int i = 2; i <= ctx.n; ++i) {
            for (std::int64_t k = 0; k < mono.x_exponent(i); ++k)
                cols.push_back(Column{1, i});
            if (i >= 3)
                for (std::int64_t k = 0; k < mono.y_exponent(i); ++k)
                    cols.push_back(Column{2, i});
        }
        acc += BracketPolynomial::term(ctx, Tableau(std::move(cols)),
                                       coeff * Scalar::of(ctx.field, sign));
    }
    return acc;
}

Polynomial f12_expansion(const RingContext& ctx) {
    return BracketPolynomial::bracket(ctx, 1, 2).expand();
}

}  // namespace

InvarianceCertificate sl2_certificate(const Polynomial& p, std::int64_t fuel) {
    require_rationals(p, "SL2-invariance testing");
    require_pairs(p.context(), "SL2-invariance testing");
    const RingContext& ctx = p.context();

    InvarianceCertificate cert;
    auto components = p.bihomogeneous_components();
    for (const auto& comp : components)
        cert.component_bidegrees.push_back({comp.x_degree, comp.y_degree});

    for (const auto& comp : components) {
        if (comp.x_degree != comp.y_degree) {
            cert.obstruction = Obstruction{Obstruction::Kind::UnequalBidegree,
                                           {comp.x_degree, comp.y_degree}};
            return cert;
        }
    }

    const Polynomial f12 = f12_expansion(ctx);
    for (const auto& comp : components) {
        const std::int64_t m = comp.x_degree;
        if (!(f12.pow(m) * comp.part == sigma_substitute(comp.part))) {
            cert.obstruction = Obstruction{Obstruction::Kind::IdentityFailure,
                                           {m, m}};
            return cert;
        }
    }

    // Constructive part: straighten the bracket-side image and peel off the
    // certified power of [1,2].
    BracketPolynomial rep(ctx);
    for (const auto& comp : components) {
        BracketPolynomial b = sigma_bracket(comp.part).straighten(fuel);
        for (std::int64_t k = 0; k < comp.x_degree; ++k) {
            try {
                b = b.divide_by_f12();
            } catch (const NotDivisible&) {
                throw InternalError(
                    "bracket division failed after the identity was certified");
            }
        }
        rep += b;
    }
    cert.verdict = true;
    cert.representation = std::move(rep);
    return cert;
}

bool sl2_invariant_by_generators(const Polynomial& p) {
    require_rationals(p, "SL2-invariance testing");
    const RingContext& ctx = p.context();
    const RingContext wide{ctx.n + 1, ctx.field};
    const Polynomial t = Polynomial::x(wide, ctx.n + 1);

    std::vector<std::optional<Polynomial>> embed(static_cast<std::size_t>(2 * ctx.n));
    std::vector<std::optional<Polynomial>> shear_x = embed;
    std::vector<std::optional<Polynomial>> shear_y = embed;
    for (int i = 1; i <= ctx.n; ++i) {
        Polynomial xi = Polynomial::x(wide, i);
        Polynomial yi = Polynomial::y(wide, i);
        std::size_t px = static_cast<std::size_t>(Monomial::position_x(i));
        std::size_t py = static_cast<std::size_t>(Monomial::position_y(i));
        embed[px] = xi;
        embed[py] = yi;
        shear_x[px] = xi + t * yi;
        shear_x[py] = yi;
        shear_y[px] = xi;
        shear_y[py] = yi + t * xi;
    }
    const Polynomial reference = p.substitute(embed, wide);
    return p.substitute(shear_x, wide) == reference &&
           p.substitute(shear_y, wide) == reference;
}

BracketPolynomial represent_sl2(const Polynomial& p, std::int64_t fuel) {
    InvarianceCertificate cert = sl2_certificate(p, fuel);
    if (!cert.verdict) {
        const Obstruction& o = *cert.obstruction;
        std::string reason =
            o.kind == Obstruction::Kind::UnequalBidegree
                ? "a component has bidegree (" + std::to_string(o.bidegree.x_degree) +
                      "," + std::to_string(o.bidegree.y_degree) + ")"
                : "the bracket-substitution identity fails at bidegree (" +
                      std::to_string(o.bidegree.x_degree) + "," +
                      std::to_string(o.bidegree.y_degree) + ")";
        throw NotInvariant("polynomial is not SL2-invariant: " + reason);
    }
    return *std::move(cert.representation);
}

namespace {

// N' of the invariance identity: substitute each total-degree part and
// rebalance with powers of F so the whole image sits over F^deg.
Polynomial homogenized_sigma(const Polynomial& p, std::int64_t deg, const Polynomial& f12) {
    Polynomial acc(p.context());
    for (const auto& [d, part] : p.total_degree_components())
        acc += sigma_substitute(part) * f12.pow(deg - d);
    return acc;
}

BracketPolynomial homogenized_sigma_bracket(const Polynomial& p, std::int64_t deg) {
    const RingContext& ctx = p.context();
    BracketPolynomial acc(ctx);
    const BracketPolynomial f12b = BracketPolynomial::bracket(ctx, 1, 2);
    for (const auto& [d, part] : p.total_degree_components())
        acc += sigma_bracket(part) * f12b.pow(deg - d);
    return acc;
}

}  // namespace

bool gl2_invariant(const Polynomial& num, const Polynomial& den) {
    if (!(num.context() == den.context()))
        throw ContextMismatch("numerator and denominator from different contexts");
    require_rationals(num, "GL2-invariance testing");
    require_pairs(num.context(), "GL2-invariance testing");
    if (den.is_zero()) throw DivisionByZero("zero denominator");

    const Polynomial f12 = f12_expansion(num.context());
    const std::int64_t deg_num = num.total_degree();
    const std::int64_t deg_den = den.total_degree();
    const Polynomial n_image = homogenized_sigma(num, deg_num, f12);
    const Polynomial d_image = homogenized_sigma(den, deg_den, f12);
    if (d_image.is_zero())
        throw Error(
            "the denominator vanishes under the bracket substitution "
            "x_i -> f_{1,i}, y_i -> f_{2,i}; the substitution identity cannot "
            "decide this fraction - cancel common factors of num/den first");
    return num * d_image * f12.pow(deg_num) == den * n_image * f12.pow(deg_den);
}

std::pair<BracketPolynomial, BracketPolynomial> represent_gl2(const Polynomial& num,
                                                              const Polynomial& den,
                                                              std::int64_t fuel) {
    if (!gl2_invariant(num, den))
        throw NotInvariant("num/den is not a GL2-invariant rational function");
    const RingContext& ctx = num.context();
    if (num.is_zero())
        return {BracketPolynomial(ctx),
                BracketPolynomial::constant(ctx, Scalar::of(ctx.field, 1))};

    const std::int64_t deg = std::max(num.total_degree(), den.total_degree());
    BracketPolynomial nb = homogenized_sigma_bracket(num, deg).straighten(fuel);
    BracketPolynomial db = homogenized_sigma_bracket(den, deg).straighten(fuel);

    // Cancel shared [1,2] columns so (f13, f12) comes back as itself rather
    // than as (f12*f13, f12^2).
    for (;;) {
        BracketPolynomial n2(ctx), d2(ctx);
        try {
            n2 = nb.divide_by_f12();
            d2 = db.divide_by_f12();
        } catch (const NotDivisible&) {
            break;
        }
        nb = std::move(n2);
        db = std::move(d2);
    }

    if (!(nb.expand() * den == db.expand() * num))
        throw InternalError("GL2 representation failed the cross-multiplication check");
    return {std::move(nb), std::move(db)};
}

SemiInvarianceScan scan_gl2_semi_invariance(const Polynomial& p, bool exhaustive,
                                            int samples) {
    const Field& field = p.context().field;
    if (!field.is_prime_field())
        throw Error("the GL2 scan enumerates a finite group; use a prime field");
    const std::uint64_t q = field.modulus();

    SemiInvarianceScan scan;
    mpz_class q2 = mpz_class(static_cast<unsigned long>(q)) *
                   mpz_class(static_cast<unsigned long>(q));
    scan.group_size = (q2 - 1) * (q2 - static_cast<unsigned long>(q));
    scan.all_semi_invariant = true;

    auto check_one = [&](const ActionMatrix& m) {
        ++scan.checked;
        if (!check_semi_invariant(p, m)) {
            scan.all_semi_invariant = false;
            return false;
        }
        return true;
    };

    if (exhaustive) {
        if (scan.group_size > kMaxExhaustiveGroupOrder)
            throw Error("group order " + scan.group_size.get_str() +
                        " exceeds the exhaustive-mode bound " +
                        std::to_string(kMaxExhaustiveGroupOrder));
        for (std::uint64_t a = 0; a < q; ++a)
            for (std::uint64_t b = 0; b < q; ++b)
                for (std::uint64_t c = 0; c < q; ++c)
                    for (std::uint64_t d = 0; d < q; ++d) {
                        ActionMatrix m{Scalar::residue(a, q), Scalar::residue(b, q),
                                       Scalar::residue(c, q), Scalar::residue(d, q)};
                        if (m.det().is_zero()) continue;
                        if (!check_one(m)) return scan;
                    }
        return scan;
    }

    std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ (q * 0x100000001b3ull));
    std::uniform_int_distribution<std::uint64_t> dist(0, q - 1);
    for (int s = 0; s < samples; ++s) {
        ActionMatrix m = ActionMatrix::identity(field);
        do {
            m = ActionMatrix{Scalar::residue(dist(rng), q), Scalar::residue(dist(rng), q),
                             Scalar::residue(dist(rng), q), Scalar::residue(dist(rng), q)};
        } while (m.det().is_zero());
        if (!check_one(m)) return scan;
    }
    return scan;
}

CounterexampleReport finite_field_counterexample(std::uint64_t prime, int index,
                                                 bool exhaustive) {
    if (index < 1) throw Error("counterexample index must be >= 1");
    const Field field = Field::prime(prime);
    const RingContext ctx{index, field};
    const std::int64_t q = static_cast<std::int64_t>(prime);

    // p_i = x_i^q * y_i - x_i * y_i^q
    Monomial m1(ctx.n), m2(ctx.n);
    m1.bump(Monomial::position_x(index), q);
    m1.bump(Monomial::position_y(index), 1);
    m2.bump(Monomial::position_x(index), 1);
    m2.bump(Monomial::position_y(index), q);
    Polynomial p = Polynomial::term(ctx, m1, Scalar::of(field, 1)) -
                   Polynomial::term(ctx, m2, Scalar::of(field, 1));

    SemiInvarianceScan scan = scan_gl2_semi_invariance(p, exhaustive);

    CounterexampleReport report;
    report.prime = prime;
    report.index = index;
    report.group_size = scan.group_size;
    report.checked = scan.checked;
    report.semi_invariant = scan.all_semi_invariant;
    report.bidegree_obstruction = false;
    for (const auto& comp : p.bihomogeneous_components())
        if (comp.x_degree != comp.y_degree) report.bidegree_obstruction = true;
    return report;
}

}  // namespace plucker
