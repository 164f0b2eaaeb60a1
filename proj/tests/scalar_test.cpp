#include <doctest.h>

#include <random>

#include "hc/scalar.hpp"

using namespace hc;

namespace {

Scalar q0(long num, long den = 1) {
    return Scalar::from_rational(0, make_rational(num, den));
}

Scalar root0(long r) { return Scalar::sqrt_rational(0, make_rational(r)); }

}  // namespace

TEST_CASE("radicand reduction in products") {
    CHECK(root0(2) * root0(3) == root0(6));
    CHECK(root0(8) == q0(2) * root0(2));           // sqrt(8) = 2 sqrt(2)
    CHECK(root0(8) + root0(2) == q0(3) * root0(2));  // 3 sqrt(2)
    CHECK(root0(2) * root0(2) == q0(2));
}

TEST_CASE("characteristic p arithmetic") {
    // In F_5 the fixed nonresidue is 2: (1+d)(1-d) = 1 - 2 = 4.
    CHECK(FpScalar::nonresidue(5) == 2);
    Scalar a = Scalar::fp(FpScalar(5, 1, 1));
    Scalar b = Scalar::fp(FpScalar(5, 1, 4));
    CHECK(a * b == Scalar::from_int(5, 4));
    CHECK(Scalar::from_int(5, 3).inverse() == Scalar::from_int(5, 2));
}

TEST_CASE("inverses") {
    Scalar v = q0(2) * root0(2);  // 2 sqrt(2)
    CHECK(v.inverse() == q0(1, 4) * root0(2));
    CHECK(q0(-6).inverse() == q0(-1, 6));
    CHECK_THROWS(Scalar::zero(0).inverse());
    CHECK_THROWS((q0(1) + root0(2)).inverse());  // multi-term rejected
}

TEST_CASE("canonical square roots") {
    CHECK(Scalar::sqrt_rational(0, make_rational(2, 3)) == q0(1, 3) * root0(6));
    CHECK(Scalar::sqrt_rational(0, make_rational(0)) == Scalar::zero(0));
    CHECK_THROWS(Scalar::sqrt_rational(0, make_rational(-1)));

    // In F_5 with d^2 = 2: sqrt(2) = d, verified by squaring.
    Scalar s = Scalar::sqrt_rational(5, make_rational(2));
    CHECK(s * s == Scalar::from_int(5, 2));
    CHECK(s == Scalar::fp(FpScalar(5, 0, 1)));
}

TEST_CASE("square roots square back, exhaustively for small p") {
    for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
        for (std::uint32_t r = 0; r < p; ++r) {
            Scalar s = Scalar::sqrt_rational(p, make_rational(r));
            CHECK(s * s == Scalar::from_int(p, r));
        }
    }
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(0, 500), den(1, 60);
    for (int i = 0; i < 200; ++i) {
        Rational r = make_rational(num(rng), den(rng));
        Scalar s = Scalar::sqrt_rational(0, r);
        CHECK(s * s == Scalar::from_rational(0, r));
    }
}

TEST_CASE("field axioms on random samples") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> coeff(-6, 6), rad(1, 10);
    auto sample = [&](std::uint32_t p) {
        if (p == 0) {
            Scalar s = Scalar::zero(0);
            for (int t = 0; t < 2; ++t) {
                mpz_class sq, r;
                squarefree_split(mpz_class(rad(rng)), sq, r);
                s = s + Scalar::quad(QuadScalar::root_term(make_rational(coeff(rng)),
                                                           r.get_si()));
            }
            return s;
        }
        return Scalar::fp(FpScalar(p, coeff(rng) + 6, coeff(rng) + 6));
    };
    for (std::uint32_t p : {0u, 5u, 7u}) {
        for (int i = 0; i < 100; ++i) {
            Scalar a = sample(p), b = sample(p), c = sample(p);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
        }
        for (int i = 0; i < 50; ++i) {
            Scalar a = sample(p);
            if (a.is_zero()) continue;
            if (p == 0 && !a.quad_value().single_term()) continue;
            CHECK(a * a.inverse() == Scalar::one(p));
        }
    }
}

TEST_CASE("normalization is idempotent") {
    // Rebuilding a value from its stored terms changes nothing.
    Scalar v = root0(12) + q0(5, 3) + root0(27);
    Scalar rebuilt = Scalar::zero(0);
    for (const auto& [d, c] : v.quad_value().terms())
        rebuilt = rebuilt + Scalar::quad(QuadScalar::root_term(c, d));
    CHECK(rebuilt == v);
    for (const auto& [d, c] : v.quad_value().terms()) {
        mpz_class sq, r;
        squarefree_split(mpz_class(d), sq, r);
        CHECK(sq == 1);  // stored radicands are squarefree
        CHECK(c != 0);
    }
}

TEST_CASE("characteristic mismatch is rejected") {
    CHECK_THROWS(Scalar::one(0) + Scalar::one(5));
    CHECK_THROWS(Scalar::one(3) * Scalar::one(5));
}
