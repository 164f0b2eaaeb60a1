#include "hc/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace hc {

namespace {

constexpr long long kMax = 0x7fffffffffffffffLL;

__int128 iabs(__int128 v) { return v < 0 ? -v : v; }

__int128 igcd(__int128 a, __int128 b) {
    a = iabs(a);
    b = iabs(b);
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class to_mpz(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
    mpz_class hi(static_cast<unsigned long>(u >> 64));
    mpz_class z = (hi << 64) + static_cast<unsigned long>(u);
    return neg ? mpz_class(-z) : z;
}

}  // namespace

Rational::Rational(long long n, long long d) : n_(0), d_(1) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    *this = from_i128(n, d);
}

Rational::Rational(const mpq_class& q) : n_(0), d_(1) {
    mpq_class c = q;
    c.canonicalize();
    if (c.get_num().fits_slong_p() && c.get_den().fits_slong_p()) {
        n_ = c.get_num().get_si();
        d_ = c.get_den().get_si();
    } else {
        big_ = std::make_shared<const mpq_class>(std::move(c));
    }
}

Rational Rational::from_i128(__int128 n, __int128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = igcd(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    Rational r;
    if (iabs(n) <= kMax && d <= kMax) {
        r.n_ = static_cast<long long>(n);
        r.d_ = static_cast<long long>(d);
        return r;
    }
    mpq_class q(to_mpz(n), to_mpz(d));
    q.canonicalize();
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
    return r;
}

Rational Rational::from_mpq(mpq_class q) {
    q.canonicalize();
    return Rational(q);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    mpq_class q(mpz_class(static_cast<long>(n_)), mpz_class(static_cast<long>(d_)));
    q.canonicalize();
    return q;
}

mpz_class Rational::numerator() const {
    return big_ ? big_->get_num() : mpz_class(static_cast<long>(n_));
}

mpz_class Rational::denominator() const {
    return big_ ? big_->get_den() : mpz_class(static_cast<long>(d_));
}

Rational Rational::operator-() const {
    if (!big_) {
        Rational r;
        r.n_ = -n_;
        r.d_ = d_;
        return r;
    }
    return from_mpq(mpq_class(-*big_));
}

Rational Rational::operator+(const Rational& o) const {
    if (!big_ && !o.big_) {
        if (d_ == 1 && o.d_ == 1) {
            __int128 n = static_cast<__int128>(n_) + o.n_;
            if (iabs(n) <= kMax) {
                Rational r;
                r.n_ = static_cast<long long>(n);
                return r;
            }
        }
        __int128 n = static_cast<__int128>(n_) * o.d_ +
                     static_cast<__int128>(o.n_) * d_;
        __int128 d = static_cast<__int128>(d_) * o.d_;
        return from_i128(n, d);
    }
    return from_mpq(to_mpq() + o.to_mpq());
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    if (!big_ && !o.big_) {
        if (d_ == 1 && o.d_ == 1) {
            __int128 n = static_cast<__int128>(n_) * o.n_;
            if (iabs(n) <= kMax) {
                Rational r;
                r.n_ = static_cast<long long>(n);
                return r;
            }
        }
        // Cross-reduce first so the fast path survives larger operands.
        long long g1 = std::gcd(n_ < 0 ? -n_ : n_, o.d_);
        long long g2 = std::gcd(o.n_ < 0 ? -o.n_ : o.n_, d_);
        __int128 n = static_cast<__int128>(n_ / g1) * (o.n_ / g2);
        __int128 d = static_cast<__int128>(d_ / g2) * (o.d_ / g1);
        return from_i128(n, d);
    }
    return from_mpq(to_mpq() * o.to_mpq());
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw std::invalid_argument("division by zero");
    if (!o.big_) {
        Rational inv;
        if (o.n_ < 0) {
            inv.n_ = -o.d_;
            inv.d_ = -o.n_;
        } else {
            inv.n_ = o.d_;
            inv.d_ = o.n_;
        }
        return *this * inv;
    }
    return from_mpq(to_mpq() / o.to_mpq());
}

bool Rational::operator==(const Rational& o) const {
    if (!big_ && !o.big_) return n_ == o.n_ && d_ == o.d_;
    return to_mpq() == o.to_mpq();
}

bool Rational::operator<(const Rational& o) const {
    if (!big_ && !o.big_)
        return static_cast<__int128>(n_) * o.d_ < static_cast<__int128>(o.n_) * d_;
    return to_mpq() < o.to_mpq();
}

std::string Rational::str() const {
    if (big_) return big_->get_str();
    std::string s = std::to_string(n_);
    if (d_ != 1) s += "/" + std::to_string(d_);
    return s;
}

Rational make_rational(long long num, long long den) { return Rational(num, den); }

}  // namespace hc
