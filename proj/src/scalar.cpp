#include "qjt/scalar.hpp"

namespace qjt {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// splitmix64, used wherever we need a cheap deterministic stream
std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // These bases are a deterministic test for n < 3.3e24.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t random_prime_31bit(std::uint64_t seed) {
    std::uint64_t state = seed ^ 0xa02bdbf7bb3c0a7ULL;
    for (;;) {
        std::uint64_t c = (splitmix64(state) % (1ULL << 30)) + (1ULL << 30);
        c |= 1;
        if (is_prime_u64(c)) return c;
    }
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw DivisionByZeroError();
    return powmod(a, p - 2, p);
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
    if (p <= (1ULL << 30) || p >= (1ULL << 32))
        throw std::invalid_argument("prime field characteristic must lie in (2^30, 2^32)");
    if (!is_prime_u64(p))
        throw std::invalid_argument("prime field characteristic is not prime: " + std::to_string(p));
    return FieldSpec{Kind::Prime, p};
}

std::string FieldSpec::str() const {
    if (kind == Kind::Rational) return "q";
    return "fp:" + std::to_string(prime);
}

Scalar Scalar::rational(mpq_class v) {
    Scalar s;
    s.field_ = FieldSpec::rational();
    v.canonicalize();
    s.rat_ = std::move(v);
    return s;
}

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw DivisionByZeroError();
    mpq_class v(num, den);
    v.canonicalize();
    return rational(std::move(v));
}

Scalar Scalar::prime_field(std::uint64_t v, std::uint64_t p) {
    FieldSpec f = FieldSpec::prime_field(p);
    Scalar s;
    s.field_ = f;
    s.val_ = v % p;
    return s;
}

Scalar Scalar::zero(const FieldSpec& f) { return from_int(0, f); }
Scalar Scalar::one(const FieldSpec& f) { return from_int(1, f); }

Scalar Scalar::from_int(long v, const FieldSpec& f) {
    if (f.kind == FieldSpec::Kind::Rational) return rational(mpq_class(v));
    Scalar s;
    s.field_ = f;
    long long m = static_cast<long long>(v) % static_cast<long long>(f.prime);
    if (m < 0) m += static_cast<long long>(f.prime);
    s.val_ = static_cast<std::uint64_t>(m);
    return s;
}

Scalar Scalar::parse(const std::string& text, const FieldSpec& f) {
    mpq_class v;
    if (v.set_str(text, 10) != 0)
        throw std::invalid_argument("cannot parse rational: '" + text + "'");
    v.canonicalize();
    Scalar r = rational(std::move(v));
    return f.kind == FieldSpec::Kind::Rational ? r : r.to_field(f);
}

bool Scalar::is_zero() const {
    return is_rational() ? rat_ == 0 : val_ == 0;
}

bool Scalar::is_one() const {
    return is_rational() ? rat_ == 1 : val_ == 1;
}

void Scalar::check_same(const Scalar& o) const {
    if (field_ != o.field_)
        throw FieldMismatchError("scalar modes differ: " + field_.str() + " vs " + o.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar r = *this;
    if (is_rational()) {
        r.rat_ += o.rat_;
    } else {
        r.val_ += o.val_;
        if (r.val_ >= field_.prime) r.val_ -= field_.prime;
    }
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(o);
    Scalar r = *this;
    if (is_rational()) {
        r.rat_ -= o.rat_;
    } else {
        r.val_ = r.val_ >= o.val_ ? r.val_ - o.val_ : r.val_ + field_.prime - o.val_;
    }
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar r = *this;
    if (is_rational()) {
        r.rat_ *= o.rat_;
    } else {
        r.val_ = mulmod(r.val_, o.val_, field_.prime);
    }
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
    return *this * o.inverse();
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (is_rational()) {
        r.rat_ = -r.rat_;
    } else if (r.val_ != 0) {
        r.val_ = field_.prime - r.val_;
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    check_same(o);
    return is_rational() ? rat_ == o.rat_ : val_ == o.val_;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZeroError();
    Scalar r = *this;
    if (is_rational()) {
        r.rat_ = 1 / rat_;
    } else {
        r.val_ = mod_inverse(val_, field_.prime);
    }
    return r;
}

Scalar Scalar::pow(unsigned long e) const {
    Scalar acc = Scalar::one(field_);
    Scalar base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

const mpq_class& Scalar::rat() const {
    if (!is_rational()) throw FieldMismatchError("not a rational scalar");
    return rat_;
}

std::uint64_t Scalar::fp() const {
    if (is_rational()) throw FieldMismatchError("not a prime-field scalar");
    return val_;
}

mpq_class Scalar::lift() const {
    if (is_rational()) return rat_;
    return mpq_class(static_cast<unsigned long>(val_));
}

Scalar Scalar::to_field(const FieldSpec& f) const {
    if (field_ == f) return *this;
    if (!is_rational() || f.kind != FieldSpec::Kind::Prime)
        throw FieldMismatchError("only Rational -> PrimeField conversion is supported");
    const std::uint64_t p = f.prime;
    mpz_class num = rat_.get_num(), den = rat_.get_den();
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class nm = num % pz, dm = den % pz;
    if (nm < 0) nm += pz;
    std::uint64_t n = nm.get_ui(), d = dm.get_ui();
    if (d == 0)
        throw FieldMismatchError("denominator divisible by field characteristic");
    Scalar s;
    s.field_ = f;
    s.val_ = mulmod(n, mod_inverse(d, p), p);
    return s;
}

std::string Scalar::str() const {
    if (is_rational()) return rat_.get_str();
    return std::to_string(val_);
}

}  // namespace qjt
