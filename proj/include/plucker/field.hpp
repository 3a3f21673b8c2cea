#ifndef PLUCKER_FIELD_HPP
#define PLUCKER_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "plucker/errors.hpp"

namespace plucker {

/// Deterministic 64-bit primality test (Miller-Rabin with fixed witnesses).
bool is_prime_u64(std::uint64_t m);

/// Coefficient field descriptor: the rationals, or a prime field F_p.
class Field {
public:
    enum class Kind { Rationals, PrimeField };

    static Field rationals() { return Field(Kind::Rationals, 0); }
    /// Throws Error unless p is prime (and small enough for modular
    /// arithmetic on 64-bit residues, p < 2^62).
    static Field prime(std::uint64_t p);

    Kind kind() const { return kind_; }
    bool is_rationals() const { return kind_ == Kind::Rationals; }
    bool is_prime_field() const { return kind_ == Kind::PrimeField; }
    std::uint64_t modulus() const { return p_; }

    /// "Q" or "F<p>", the CLI spelling.
    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    Field(Kind kind, std::uint64_t p) : kind_(kind), p_(p) {}
    Kind kind_;
    std::uint64_t p_;
};

/// An exact field element: a reduced arbitrary-precision rational, or a
/// residue in [0, p).  The modulus is carried in the value so arithmetic is
/// closed; combining scalars from different fields throws FieldMismatch.
class Scalar {
public:
    Scalar() : q_(0), r_(0), p_(0) {}  // rational zero

    static Scalar rational(mpq_class q);
    static Scalar rational(long num, long den = 1);
    static Scalar residue(std::uint64_t r, std::uint64_t p);

    /// Element of `field` from a machine integer.
    static Scalar of(const Field& field, std::int64_t value);
    /// Element of `field` from an arbitrary-precision integer.
    static Scalar of(const Field& field, const mpz_class& value);
    /// a/b in `field`; over F_p this is a * b^-1 and b ≡ 0 throws.
    static Scalar ratio(const Field& field, const mpz_class& a, const mpz_class& b);

    bool is_rational() const { return p_ == 0; }
    bool in_field(const Field& f) const;
    const mpq_class& rat() const { return q_; }
    std::uint64_t res() const { return r_; }
    std::uint64_t modulus() const { return p_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    /// Throws DivisionByZero when o is zero.
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const;
    /// e may be negative (inverts first); 0^0 = 1.
    Scalar pow(std::int64_t e) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Exact decimal text: "7", "-3/4", residues as their canonical
    /// representative in [0, p).
    std::string str() const;

private:
    Scalar(mpq_class q, std::uint64_t r, std::uint64_t p)
        : q_(std::move(q)), r_(r), p_(p) {}
    void check_same_field(const Scalar& o) const;

    mpq_class q_;        // value when p_ == 0, always canonical
    std::uint64_t r_;    // value when p_ != 0, in [0, p_)
    std::uint64_t p_;    // 0 marks a rational
};

}  // namespace plucker

#endif
