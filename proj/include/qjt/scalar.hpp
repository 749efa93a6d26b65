#ifndef QJT_SCALAR_HPP
#define QJT_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qjt {

/*
 * Exact scalars in one of two modes:
 *   - Rational: arbitrary-precision fractions, always canonical
 *     (lowest terms, positive denominator).
 *   - PrimeField(p): canonical representatives in [0, p), p a prime
 *     exceeding 2^30 so that products fit in 64 bits.
 *
 * Mixing modes in one operation throws FieldMismatchError; conversions
 * are explicit via to_field().
 */

class FieldMismatchError : public std::invalid_argument {
public:
    explicit FieldMismatchError(const std::string& what)
        : std::invalid_argument(what) {}
};

class DivisionByZeroError : public std::domain_error {
public:
    DivisionByZeroError() : std::domain_error("division by zero") {}
};

struct FieldSpec {
    enum class Kind { Rational, Prime };
    Kind kind = Kind::Rational;
    std::uint64_t prime = 0;

    static FieldSpec rational() { return FieldSpec{Kind::Rational, 0}; }
    static FieldSpec prime_field(std::uint64_t p);

    bool operator==(const FieldSpec&) const = default;
    std::string str() const;
};

// Deterministic Miller-Rabin, valid for all n < 3.3e24.
bool is_prime_u64(std::uint64_t n);

// Random 31-bit prime (> 2^30), derived deterministically from the seed.
std::uint64_t random_prime_31bit(std::uint64_t seed);

// Default prime for bulk sampling: 2^31 - 1.
inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);

class Scalar {
public:
    Scalar() : field_(FieldSpec::rational()), rat_(0) {}

    static Scalar rational(mpq_class v);
    static Scalar rational(long num, long den);
    static Scalar prime_field(std::uint64_t v, std::uint64_t p);
    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    static Scalar from_int(long v, const FieldSpec& f);
    // Parses "p/q" or an integer string, in the given field.
    static Scalar parse(const std::string& text, const FieldSpec& f);

    const FieldSpec& field() const { return field_; }
    bool is_rational() const { return field_.kind == FieldSpec::Kind::Rational; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar inverse() const;
    Scalar pow(unsigned long e) const;

    // Mode accessors; throw on the wrong mode.
    const mpq_class& rat() const;
    std::uint64_t fp() const;

    // Lift to Q: identity on rationals, representative in [0, p) on Fp.
    mpq_class lift() const;

    // Explicit conversion. Rational -> PrimeField reduces num/den mod p and
    // throws if p divides the denominator. PrimeField -> Rational or to a
    // different prime is rejected.
    Scalar to_field(const FieldSpec& f) const;

    std::string str() const;

private:
    FieldSpec field_;
    mpq_class rat_;
    std::uint64_t val_ = 0;

    void check_same(const Scalar& o) const;
};

}  // namespace qjt

#endif
