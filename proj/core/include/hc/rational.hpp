#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace hc {

/// Exact rational, always reduced with positive denominator.  Values stay in
/// a machine-word fast path and promote transparently to GMP when a result
/// would overflow; arithmetic is exact either way.
class Rational {
public:
    Rational() : n_(0), d_(1) {}
    Rational(long long n, long long d);
    Rational(long long n) : n_(n), d_(1) {}
    explicit Rational(const mpq_class& q);

    bool is_zero() const { return big_ ? *big_ == 0 : n_ == 0; }
    bool is_small() const { return !big_; }

    mpz_class numerator() const;
    mpz_class denominator() const;
    /// Small accessors; only valid when is_small().
    long long small_num() const { return n_; }
    long long small_den() const { return d_; }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;

    Rational& operator+=(const Rational& o) { return *this = *this + o; }

    bool operator==(const Rational& o) const;
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;
    bool operator==(long long v) const { return *this == Rational(v); }
    bool operator!=(long long v) const { return !(*this == v); }
    bool operator<(long long v) const { return *this < Rational(v); }

    std::string str() const;

private:
    static Rational from_i128(__int128 n, __int128 d);
    static Rational from_mpq(mpq_class q);
    mpq_class to_mpq() const;

    long long n_, d_;
    std::shared_ptr<const mpq_class> big_;
};

Rational make_rational(long long num, long long den = 1);

}  // namespace hc
