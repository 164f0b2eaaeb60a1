#include "hc/scalar.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hc {

// ---------------------------------------------------------------------------
// QuadScalar

QuadScalar::QuadScalar(const Rational& r) { insert_term(1, r); }

QuadScalar QuadScalar::root_term(const Rational& coeff, long radicand) {
    if (radicand < 1) throw ScalarError("radicand must be positive");
    QuadScalar q;
    q.insert_term(radicand, coeff);
    return q;
}

void QuadScalar::insert_term(long d, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), d,
        [](const std::pair<long, Rational>& t, long key) { return t.first < key; });
    if (it == terms_.end() || it->first != d) {
        terms_.emplace(it, d, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool QuadScalar::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().first == 1);
}

Rational QuadScalar::rational_part() const {
    for (const auto& [d, c] : terms_)
        if (d == 1) return c;
    return Rational(0);
}

QuadScalar QuadScalar::operator-() const {
    QuadScalar q;
    q.terms_.reserve(terms_.size());
    for (const auto& [d, c] : terms_) q.terms_.emplace_back(d, -c);
    return q;
}

QuadScalar QuadScalar::operator+(const QuadScalar& o) const {
    QuadScalar q = *this;
    for (const auto& [d, c] : o.terms_) q.insert_term(d, c);
    return q;
}

QuadScalar QuadScalar::operator-(const QuadScalar& o) const {
    QuadScalar q = *this;
    for (const auto& [d, c] : o.terms_) q.insert_term(d, -c);
    return q;
}

QuadScalar QuadScalar::operator*(const QuadScalar& o) const {
    QuadScalar q;
    // sqrt(d1)*sqrt(d2) = g*sqrt(d1*d2/g^2) with g = gcd(d1, d2); the reduced
    // radicand is squarefree since d1/g and d2/g are coprime squarefree
    // numbers.
    if (terms_.size() == 1 && o.terms_.size() == 1) {
        const auto& [d1, c1] = terms_.front();
        const auto& [d2, c2] = o.terms_.front();
        long g = std::gcd(d1, d2);
        Rational coeff = c1 * c2;
        if (g != 1) coeff = coeff * Rational(static_cast<long long>(g));
        if (!coeff.is_zero())
            q.terms_.emplace_back((d1 / g) * (d2 / g), std::move(coeff));
        return q;
    }
    for (const auto& [d1, c1] : terms_) {
        for (const auto& [d2, c2] : o.terms_) {
            long g = std::gcd(d1, d2);
            long d3 = (d1 / g) * (d2 / g);
            Rational coeff = c1 * c2;
            if (g != 1) coeff = coeff * Rational(static_cast<long long>(g));
            q.insert_term(d3, coeff);
        }
    }
    return q;
}

QuadScalar QuadScalar::inverse() const {
    if (terms_.empty()) throw ScalarError("inverse of zero");
    if (terms_.size() != 1)
        throw ScalarError("inverse of multi-term quadratic value: " + str());
    const auto& [d, c] = terms_.front();
    // (c*sqrt(d))^-1 = 1/(c*d) * sqrt(d)
    Rational inv_coeff = Rational(1) / (c * Rational(static_cast<long long>(d)));
    return root_term(inv_coeff, d);
}

QuadScalar QuadScalar::sqrt_rational(const Rational& r) {
    if (r.is_zero()) return QuadScalar();
    if (r < 0) throw ScalarError("square root of negative rational: " + r.str());
    // sqrt(a/b) = sqrt(a*b)/b
    mpz_class ab = r.numerator() * r.denominator();
    mpz_class sq, rad;
    squarefree_split(ab, sq, rad);
    Rational coeff{mpq_class(sq, r.denominator())};
    if (!rad.fits_slong_p()) throw ScalarError("radicand too large");
    return root_term(coeff, rad.get_si());
}

std::string QuadScalar::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (d == 1) {
            os << c.str();
        } else {
            if (c != 1) os << c.str() << "*";
            os << "sqrt(" << d << ")";
        }
    }
    return os.str();
}

void squarefree_split(const mpz_class& n, mpz_class& square_root, mpz_class& radicand) {
    if (n <= 0) throw ScalarError("squarefree_split expects a positive integer");
    mpz_class m = n;
    square_root = 1;
    radicand = 1;
    for (mpz_class f = 2; f * f <= m; ++f) {
        if (m % f != 0) continue;
        int e = 0;
        while (m % f == 0) {
            m /= f;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) square_root *= f;
        if (e % 2) radicand *= f;
    }
    radicand *= m;
}

// ---------------------------------------------------------------------------
// FpScalar

bool is_odd_prime(std::uint32_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::uint32_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t r = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

bool is_residue(std::uint32_t p, std::uint32_t x) {
    if (x == 0) return true;
    return pow_mod(x, (p - 1) / 2, p) == 1;
}

// Tonelli-Shanks square root of a residue mod p; returns the smaller root.
std::uint32_t sqrt_mod_p(std::uint32_t p, std::uint32_t n) {
    if (n == 0) return 0;
    if (p % 4 == 3) {
        auto r = static_cast<std::uint32_t>(pow_mod(n, (p + 1) / 4, p));
        return std::min(r, p - r);
    }
    std::uint32_t q = p - 1, s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    std::uint32_t z = FpScalar::nonresidue(p);
    std::uint64_t m = s;
    std::uint64_t c = pow_mod(z, q, p);
    std::uint64_t t = pow_mod(n, q, p);
    std::uint64_t r = pow_mod(n, (q + 1) / 2, p);
    while (t != 1) {
        std::uint64_t i = 0, tt = t;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        std::uint64_t b = c;
        for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = b * b % p;
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    auto root = static_cast<std::uint32_t>(r);
    return std::min(root, p - root);
}

}  // namespace

FpScalar::FpScalar(std::uint32_t p, std::uint32_t a, std::uint32_t b)
    : p_(p), a_(a % p), b_(b % p) {
    if (!is_odd_prime(p)) throw ScalarError("characteristic must be an odd prime");
}

std::uint32_t FpScalar::nonresidue(std::uint32_t p) {
    for (std::uint32_t d = 2; d < p; ++d)
        if (!is_residue(p, d)) return d;
    throw ScalarError("no quadratic nonresidue found; p is not prime?");
}

FpScalar FpScalar::from_int(std::uint32_t p, long v) {
    long m = v % static_cast<long>(p);
    if (m < 0) m += p;
    return FpScalar(p, static_cast<std::uint32_t>(m), 0);
}

FpScalar FpScalar::from_rational(std::uint32_t p, const Rational& r) {
    mpz_class num = r.numerator() % p;
    mpz_class den = r.denominator() % p;
    if (num < 0) num += p;
    if (den == 0) throw ScalarError("denominator divisible by p");
    FpScalar n = from_int(p, num.get_si());
    FpScalar d = from_int(p, den.get_si());
    return n * d.inverse();
}

FpScalar FpScalar::sqrt_prime_field(std::uint32_t p, std::uint32_t r) {
    r %= p;
    if (r == 0) return FpScalar(p, 0, 0);
    if (is_residue(p, r)) return FpScalar(p, sqrt_mod_p(p, r), 0);
    // r = delta^2 * (r / delta^2) with r/delta^2 a residue, so the root is
    // b*delta with b = sqrt(r/delta^2).
    std::uint32_t d = nonresidue(p);
    std::uint64_t dinv = pow_mod(d, p - 2, p);
    auto quotient = static_cast<std::uint32_t>(r * dinv % p);
    return FpScalar(p, 0, sqrt_mod_p(p, quotient));
}

void FpScalar::check_same_field(const FpScalar& o) const {
    if (p_ != o.p_) throw ScalarError("mixed characteristics in FpScalar arithmetic");
}

FpScalar FpScalar::operator-() const {
    return FpScalar(p_, a_ ? p_ - a_ : 0, b_ ? p_ - b_ : 0);
}

FpScalar FpScalar::operator+(const FpScalar& o) const {
    check_same_field(o);
    return FpScalar(p_, (a_ + o.a_) % p_, (b_ + o.b_) % p_);
}

FpScalar FpScalar::operator-(const FpScalar& o) const { return *this + (-o); }

FpScalar FpScalar::operator*(const FpScalar& o) const {
    check_same_field(o);
    std::uint64_t d = nonresidue(p_);
    std::uint64_t a = (static_cast<std::uint64_t>(a_) * o.a_ +
                       static_cast<std::uint64_t>(b_) * o.b_ % p_ * d) % p_;
    std::uint64_t b = (static_cast<std::uint64_t>(a_) * o.b_ +
                       static_cast<std::uint64_t>(b_) * o.a_) % p_;
    return FpScalar(p_, static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
}

FpScalar FpScalar::inverse() const {
    if (is_zero()) throw ScalarError("inverse of zero");
    // (a + b d)^-1 = (a - b d) / (a^2 - b^2 delta^2); the norm is nonzero
    // because delta^2 is a nonresidue.
    std::uint64_t d = nonresidue(p_);
    std::uint64_t norm = (static_cast<std::uint64_t>(a_) * a_ % p_ + p_ -
                          static_cast<std::uint64_t>(b_) * b_ % p_ * d % p_) % p_;
    std::uint64_t ninv = pow_mod(norm, p_ - 2, p_);
    FpScalar conj(p_, a_, b_ ? p_ - b_ : 0);
    FpScalar scale(p_, static_cast<std::uint32_t>(ninv), 0);
    return conj * scale;
}

std::string FpScalar::str() const {
    std::ostringstream os;
    if (b_ == 0) {
        os << a_;
    } else if (a_ == 0) {
        os << b_ << "d";
    } else {
        os << a_ << "+" << b_ << "d";
    }
    os << " (mod " << p_ << ")";
    return os.str();
}

// ---------------------------------------------------------------------------
// Scalar

Scalar Scalar::zero(std::uint32_t p) { return from_int(p, 0); }
Scalar Scalar::one(std::uint32_t p) { return from_int(p, 1); }

Scalar Scalar::from_int(std::uint32_t p, long v) {
    Scalar s;
    s.p_ = p;
    if (p == 0) {
        s.quad_ = QuadScalar(Rational(v));
    } else {
        s.fp_ = FpScalar::from_int(p, v);
    }
    return s;
}

Scalar Scalar::from_rational(std::uint32_t p, const Rational& r) {
    Scalar s;
    s.p_ = p;
    if (p == 0) {
        s.quad_ = QuadScalar(r);
    } else {
        s.fp_ = FpScalar::from_rational(p, r);
    }
    return s;
}

Scalar Scalar::quad(QuadScalar q) {
    Scalar s;
    s.p_ = 0;
    s.quad_ = std::move(q);
    return s;
}

Scalar Scalar::fp(FpScalar f) {
    Scalar s;
    s.p_ = f.p();
    s.fp_ = std::move(f);
    return s;
}

Scalar Scalar::sqrt_rational(std::uint32_t p, const Rational& r) {
    if (p == 0) return quad(QuadScalar::sqrt_rational(r));
    FpScalar v = FpScalar::from_rational(p, r);
    if (v.b() != 0) throw ScalarError("sqrt input not in the prime field");
    return fp(FpScalar::sqrt_prime_field(p, v.a()));
}

bool Scalar::is_one() const { return *this == one(p_); }

const QuadScalar& Scalar::quad_value() const {
    if (p_ != 0) throw ScalarError("not a characteristic-0 scalar");
    return quad_;
}

const FpScalar& Scalar::fp_value() const {
    if (p_ == 0) throw ScalarError("not a positive-characteristic scalar");
    return fp_;
}

void Scalar::check_char(const Scalar& o) const {
    if (p_ != o.p_) throw ScalarError("mixed characteristics in Scalar arithmetic");
}

Scalar Scalar::operator-() const {
    return p_ == 0 ? quad(-quad_) : fp(-fp_);
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_char(o);
    return p_ == 0 ? quad(quad_ + o.quad_) : fp(fp_ + o.fp_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_char(o);
    return p_ == 0 ? quad(quad_ - o.quad_) : fp(fp_ - o.fp_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_char(o);
    return p_ == 0 ? quad(quad_ * o.quad_) : fp(fp_ * o.fp_);
}

Scalar Scalar::inverse() const {
    return p_ == 0 ? quad(quad_.inverse()) : fp(fp_.inverse());
}

bool Scalar::operator==(const Scalar& o) const {
    if (p_ != o.p_) return false;
    return p_ == 0 ? quad_ == o.quad_ : fp_ == o.fp_;
}

bool Scalar::operator<(const Scalar& o) const {
    if (p_ != o.p_) return p_ < o.p_;
    return p_ == 0 ? quad_ < o.quad_ : fp_ < o.fp_;
}

std::string Scalar::str() const { return p_ == 0 ? quad_.str() : fp_.str(); }

Scalar scalar_sqrt(const Scalar& s) {
    if (s.characteristic() == 0) {
        if (!s.quad_value().is_rational())
            throw ScalarError("sqrt input not rational: " + s.str());
        return Scalar::quad(QuadScalar::sqrt_rational(s.quad_value().rational_part()));
    }
    const FpScalar& v = s.fp_value();
    if (v.b() != 0) throw ScalarError("sqrt input not in the prime field");
    return Scalar::fp(FpScalar::sqrt_prime_field(v.p(), v.a()));
}

}  // namespace hc
