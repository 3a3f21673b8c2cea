#include "plucker/field.hpp"

namespace plucker {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) acc = mulmod_u64(acc, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return acc;
}

}  // namespace

bool is_prime_u64(std::uint64_t m) {
    if (m < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (m == q) return true;
        if (m % q == 0) return false;
    }
    // Miller-Rabin; this witness set is deterministic for all 64-bit inputs.
    std::uint64_t d = m - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                            19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, m);
        if (x == 1 || x == m - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, m);
            if (x == m - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (p >= (1ull << 62))
        throw Error("prime modulus too large (need p < 2^62): " + std::to_string(p));
    if (!is_prime_u64(p))
        throw Error("modulus is not prime: " + std::to_string(p));
    return Field(Kind::PrimeField, p);
}

std::string Field::name() const {
    return is_rationals() ? "Q" : "F" + std::to_string(p_);
}

Scalar Scalar::rational(mpq_class q) {
    q.canonicalize();
    return Scalar(std::move(q), 0, 0);
}

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(std::move(q), 0, 0);
}

Scalar Scalar::residue(std::uint64_t r, std::uint64_t p) {
    if (p == 0) throw Error("residue needs a nonzero modulus");
    return Scalar(mpq_class(), r % p, p);
}

Scalar Scalar::of(const Field& field, std::int64_t value) {
    return of(field, mpz_class(static_cast<long>(value)));
}

Scalar Scalar::of(const Field& field, const mpz_class& value) {
    if (field.is_rationals()) return rational(mpq_class(value));
    mpz_class m(static_cast<unsigned long>(field.modulus()));
    mpz_class r = value % m;
    if (r < 0) r += m;
    return residue(r.get_ui(), field.modulus());
}

Scalar Scalar::ratio(const Field& field, const mpz_class& a, const mpz_class& b) {
    if (b == 0) throw DivisionByZero("rational with zero denominator");
    if (field.is_rationals()) {
        mpq_class q(a);
        q /= mpq_class(b);
        return rational(std::move(q));
    }
    return of(field, a) / of(field, b);
}

bool Scalar::in_field(const Field& f) const {
    return f.is_rationals() ? is_rational() : p_ == f.modulus();
}

bool Scalar::is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }

bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1 % p_; }

void Scalar::check_same_field(const Scalar& o) const {
    if (p_ != o.p_)
        throw FieldMismatch("scalars from different fields: " + str() + " vs " + o.str());
}

Scalar Scalar::operator-() const {
    if (p_ == 0) return Scalar(mpq_class(-q_), 0, 0);
    return Scalar(mpq_class(), r_ == 0 ? 0 : p_ - r_, p_);
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    if (p_ == 0) return Scalar(mpq_class(q_ + o.q_), 0, 0);
    std::uint64_t s = r_ + o.r_;
    if (s >= p_) s -= p_;
    return Scalar(mpq_class(), s, p_);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    if (p_ == 0) return Scalar(mpq_class(q_ * o.q_), 0, 0);
    return Scalar(mpq_class(), mulmod_u64(r_, o.r_, p_), p_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    if (p_ == 0) return Scalar(mpq_class(1 / q_), 0, 0);
    return Scalar(mpq_class(), powmod_u64(r_, p_ - 2, p_), p_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(o);
    return *this * o.inverse();
}

Scalar Scalar::pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    if (p_ != 0) return Scalar(mpq_class(), powmod_u64(r_, static_cast<std::uint64_t>(e), p_), p_);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), q_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_mpz_t(), q_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    return Scalar(mpq_class(num) / mpq_class(den), 0, 0);
}

bool Scalar::operator==(const Scalar& o) const {
    if (p_ != o.p_) return false;
    return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
    if (p_ == 0) return q_.get_str();
    return std::to_string(r_);
}

}  // namespace plucker
