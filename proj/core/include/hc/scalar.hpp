#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

#include "hc/rational.hpp"

namespace hc {

struct ScalarError : std::runtime_error {
    explicit ScalarError(const std::string& what) : std::runtime_error(what) {}
};

/// Element of a multiquadratic extension of Q, stored as a finite sum
/// sum_d coeff_d * sqrt(d) over squarefree radicands d >= 1 (d = 1 is the
/// rational part).  Terms are kept sorted by radicand with no zero
/// coefficients; the lists stay short, so a flat vector beats a tree.
class QuadScalar {
public:
    using Terms = boost::container::small_vector<std::pair<long, Rational>, 2>;

    QuadScalar() = default;
    explicit QuadScalar(const Rational& r);
    static QuadScalar root_term(const Rational& coeff, long radicand);

    /// Canonical square root of a nonnegative rational: the positive root,
    /// normalized so the radicand is squarefree.
    static QuadScalar sqrt_rational(const Rational& r);

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    /// Rational part (coefficient of radicand 1).
    Rational rational_part() const;
    bool single_term() const { return terms_.size() == 1; }

    const Terms& terms() const { return terms_; }

    QuadScalar operator-() const;
    QuadScalar operator+(const QuadScalar& o) const;
    QuadScalar operator-(const QuadScalar& o) const;
    QuadScalar operator*(const QuadScalar& o) const;

    /// Inverse of a single-term value r*sqrt(d): 1/(r*d) * sqrt(d).
    /// Multi-term inputs are rejected; nothing in scope divides by one.
    QuadScalar inverse() const;

    bool operator==(const QuadScalar& o) const { return terms_ == o.terms_; }
    bool operator<(const QuadScalar& o) const { return terms_ < o.terms_; }

    std::string str() const;

private:
    void insert_term(long d, const Rational& coeff);
    Terms terms_;
};

/// Element a + b*delta of F_{p^2}, where delta^2 is the least quadratic
/// nonresidue mod p.  Every element of F_p has a square root here.
class FpScalar {
public:
    FpScalar() : p_(3), a_(0), b_(0) {}
    FpScalar(std::uint32_t p, std::uint32_t a, std::uint32_t b);

    static FpScalar from_int(std::uint32_t p, long v);
    static FpScalar from_rational(std::uint32_t p, const Rational& r);
    /// Canonical square root of a prime-field element (b = 0 input);
    /// ties broken by the lexicographically smaller (a, b) pair.
    static FpScalar sqrt_prime_field(std::uint32_t p, std::uint32_t r);

    /// Least quadratic nonresidue mod p (the fixed delta^2 for this p).
    static std::uint32_t nonresidue(std::uint32_t p);

    std::uint32_t p() const { return p_; }
    std::uint32_t a() const { return a_; }
    std::uint32_t b() const { return b_; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    FpScalar operator-() const;
    FpScalar operator+(const FpScalar& o) const;
    FpScalar operator-(const FpScalar& o) const;
    FpScalar operator*(const FpScalar& o) const;
    FpScalar inverse() const;

    bool operator==(const FpScalar& o) const {
        return p_ == o.p_ && a_ == o.a_ && b_ == o.b_;
    }
    bool operator<(const FpScalar& o) const {
        return std::tie(p_, a_, b_) < std::tie(o.p_, o.a_, o.b_);
    }

    std::string str() const;

private:
    void check_same_field(const FpScalar& o) const;
    std::uint32_t p_, a_, b_;
};

/// Ground-field element: characteristic 0 (QuadScalar) or p >= 3 (FpScalar).
/// All scalars in one computation share a characteristic; mixing throws.
class Scalar {
public:
    Scalar() : p_(0) {}

    static Scalar zero(std::uint32_t p);
    static Scalar one(std::uint32_t p);
    static Scalar from_int(std::uint32_t p, long v);
    static Scalar from_rational(std::uint32_t p, const Rational& r);
    static Scalar quad(QuadScalar q);
    static Scalar fp(FpScalar f);

    /// Canonical square root of a rational (char 0: nonnegative) or of a
    /// prime-field element (char p).
    static Scalar sqrt_rational(std::uint32_t p, const Rational& r);

    std::uint32_t characteristic() const { return p_; }
    bool is_zero() const { return p_ == 0 ? quad_.is_zero() : fp_.is_zero(); }
    bool is_one() const;

    const QuadScalar& quad_value() const;
    const FpScalar& fp_value() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const;

    std::string str() const;

private:
    void check_char(const Scalar& o) const;
    std::uint32_t p_;
    QuadScalar quad_;
    FpScalar fp_;
};

/// Squarefree decomposition n = square * radicand (n > 0).
void squarefree_split(const mpz_class& n, mpz_class& square_root, mpz_class& radicand);

bool is_odd_prime(std::uint32_t p);

/// Canonical square root of a scalar that lies in the rationals (char 0,
/// nonnegative) or in the prime subfield (char p).
Scalar scalar_sqrt(const Scalar& s);

}  // namespace hc
