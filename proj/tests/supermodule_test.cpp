#include <doctest.h>

#include <set>

#include "hc/supermodule.hpp"
#include "hc/verify.hpp"

using namespace hc;
using K = Generator::Kind;

namespace {

WeightVector wv(std::vector<int> entries, std::uint32_t p = 0) {
    WeightVector w;
    w.p = p;
    w.entries = std::move(entries);
    return w;
}

bool relations_hold(const SuperModule& m) { return verify_module(m).all_pass(); }

}  // namespace

TEST_CASE("rank-1 modules") {
    SuperModule l0 = build_L(0, 0);
    CHECK(l0.gen(K::X, 1).is_zero());
    CHECK(l0.gen(K::C, 1).get(1, 0) == Scalar::one(0));
    EndoReport e0 = end_dimension(l0);
    CHECK(e0.even_dim == 1);
    CHECK(e0.odd_dim == 1);

    SuperModule l1 = build_L(1, 0);
    Scalar rt2 = Scalar::sqrt_rational(0, make_rational(2));
    CHECK(l1.gen(K::X, 1).get(0, 0) == rt2);
    CHECK(l1.gen(K::X, 1).get(1, 1) == -rt2);
    EndoReport e1 = end_dimension(l1);
    CHECK(e1.even_dim == 1);
    CHECK(e1.odd_dim == 0);

    // q(2) = 6 = 1 mod 5, whose canonical root is 1.
    SuperModule l2 = build_L(2, 5);
    Scalar s = l2.gen(K::X, 1).get(0, 0);
    CHECK(s * s == Scalar::from_int(5, 6));
}

TEST_CASE("tensor model of a weight") {
    SuperModule m = build_weight_module(wv({1, 2}));
    CHECK(m.dim() == 4);
    CHECK(relations_hold(m));
    SuperModule t = tensor(build_L(1, 0), build_L(2, 0));
    for (const auto& [name, mat] : m.action) CHECK(t.action.at(name) == mat);

    EndoReport e = end_dimension(m);
    CHECK(e.even_dim == 1);
    CHECK(e.odd_dim == 0);

    CHECK(end_dimension(build_weight_module(wv({0}))).total() == 2);
    CHECK(end_dimension(build_weight_module(wv({0, 0}))).total() == 4);
}

TEST_CASE("coupling scalar") {
    // 1 - 2(q(0)+q(2))/(q(0)-q(2))^2 = 2/3, with canonical root sqrt(6)/3.
    Scalar om = omega_scalar(0, 2, 0);
    Scalar expected =
        Scalar::from_rational(0, make_rational(1, 3)) *
        Scalar::sqrt_rational(0, make_rational(6));
    CHECK(om == expected);
}

TEST_CASE("seminormal modules at small rank") {
    SuperModule d = build_D(wv({0, 1}));
    CHECK(d.dim() == 4);
    CHECK(relations_hold(d));

    SuperModule d2 = build_D(wv({0, 2}));
    CHECK(d2.dim() == 8);
    CHECK(relations_hold(d2));
    auto wd = weight_decomposition(d2);
    CHECK(wd.size() == 2);
    CHECK(wd.at(wv({0, 2})) == 4);
    CHECK(wd.at(wv({2, 0})) == 4);
    EndoReport e = end_dimension(d2);
    CHECK(e.even_dim == 1);
    CHECK(e.odd_dim == 1);

    SuperModule d3 = build_D(wv({0, 1, 0}));
    CHECK(d3.dim() == 8);
    CHECK(relations_hold(d3));
    CHECK(is_x_semisimple(d3));

    EndoReport e3 = end_dimension(build_D(wv({1, 2})));
    CHECK(e3.even_dim == 1);
    CHECK(e3.odd_dim == 0);
}

TEST_CASE("x squares act by the weight eigenvalues") {
    SuperModule d = build_D(wv({0, 2, 1}));
    for (int v = 0; v < d.dim(); ++v) {
        const WeightVector& w = d.weights[v];
        for (int k = 1; k <= 3; ++k) {
            Scalar e = d.gen(K::X, k).get(v, v);
            CHECK(e * e == q_of(w.entries[k - 1], 0));
        }
    }
}

TEST_CASE("every small affine weight gives a splittable module") {
    for (std::uint32_t p : {0u, 5u}) {
        int cap = p == 0 ? 4 : index_set_max(p);
        for (int n = 1; n <= 3; ++n) {
            for (const auto& w : enumerate_weights(n, p, cap)) {
                if (!in_affine_weight_set(w)) continue;
                SuperModule d = build_D(w);
                CHECK(relations_hold(d));
                CHECK(is_x_semisimple(d));
                CHECK(end_dimension(d).total() == (1 << gamma0(w)));
            }
        }
    }
}

TEST_CASE("rank-2 modules") {
    SuperModule v01 = build_V2(0, 1, 0);
    CHECK(v01.dim() == 4);
    CHECK(relations_hold(v01));
    CHECK(is_x_semisimple(v01));

    SuperModule v00 = build_V2(0, 0, 0);
    CHECK(v00.dim() == 8);
    CHECK(relations_hold(v00));
    CHECK(v00.gen(K::X, 1).pow(2).is_zero());
    CHECK(v00.gen(K::X, 2).pow(2).is_zero());
    // x_1 is a nonzero nilpotent here (x_1 s_1 = s_1 x_2 - (1 - c_1 c_2)
    // keeps it away from zero), so only the squares act semisimply.
    CHECK_FALSE(v00.gen(K::X, 1).is_zero());
    CHECK_FALSE(is_x_semisimple(v00));
    CHECK(is_x_squared_semisimple(v00));

    SuperModule v11 = build_V2(1, 1, 0);
    CHECK(relations_hold(v11));
    CHECK_FALSE(is_x_semisimple(v11));
    CHECK_FALSE(is_x_squared_semisimple(v11));
    auto wd = weight_decomposition(v11);
    REQUIRE(wd.size() == 1);
    CHECK(wd.begin()->first == wv({1, 1}));
}

TEST_CASE("induced modules") {
    SuperModule kato = build_kato(3, 0);
    CHECK(kato.dim() == 48);
    CHECK(relations_hold(kato));
    SMat x1 = kato.gen(K::X, 1);
    CHECK((x1 * x1 * x1).is_zero());
    CHECK_FALSE((x1 * x1).is_zero());

    SuperModule base = tensor(build_V2(0, 0, 0), build_L(2, 0));
    SuperModule ind = build_induced(base, {2, 1});
    CHECK(ind.dim() == 48);
    CHECK(relations_hold(ind));
    Scalar q2 = q_of(2, 0);
    for (int k = 1; k <= 3; ++k) {
        SMat sq = ind.gen(K::X, k).pow(2);
        CHECK((sq * (sq - SMat::identity(48, 0).scale(q2))).is_zero());
    }
    CHECK(is_x_squared_semisimple(ind));
}

TEST_CASE("rank-3 degenerate extensions") {
    for (std::uint32_t p : {0u, 5u}) {
        SuperModule a = build_V001(p);
        CHECK(relations_hold(a));
        SMat x3 = a.gen(K::X, 3);
        CHECK(x3 * x3 ==
              SMat::identity(a.dim(), p).scale(Scalar::from_int(p, 2)));
        CHECK(is_x_squared_semisimple(a));

        SuperModule b = build_V100(p);
        CHECK(relations_hold(b));
        CHECK(is_x_squared_semisimple(b));
    }
}

TEST_CASE("basic spin module") {
    SuperModule spin2 = build_basic_spin(2, 0);
    CHECK(spin2.dim() == 4);
    CHECK(relations_hold(spin2));
    SMat l2 = element_matrix(spin2, jucys_murphy(2, 2, 0));
    CHECK(l2 * l2 == SMat::identity(4, 0).scale(Scalar::from_int(0, 2)));

    SuperModule spin1 = build_basic_spin(1, 0);
    CHECK(spin1.dim() == 2);

    SuperModule spin3 = build_basic_spin(3, 0);
    CHECK(relations_hold(spin3));
    for (int k = 2; k <= 3; ++k) {
        SMat lk = element_matrix(spin3, jucys_murphy(k, 3, 0));
        CHECK((lk * lk).is_diagonal());  // simultaneous eigenbasis
    }
}

TEST_CASE("twisted transposition sums on finite-weight modules") {
    SuperModule d = build_D(wv({0, 1, 0}));
    CHECK(d.gen(K::X, 1).is_zero());
    for (int k = 2; k <= 3; ++k)
        CHECK(element_matrix(d, jucys_murphy(k, 3, 0)) == d.gen(K::X, k));
}

TEST_CASE("weight space bijections") {
    SuperModule d = build_D(wv({0, 2}));
    auto fwd = apply_phi_hat(d, wv({0, 2}), 1);
    auto bwd = apply_phi_hat(d, wv({2, 0}), 1);
    CHECK(fwd.matrix.rows() == 4);
    SMat round = bwd.matrix * fwd.matrix;
    CHECK(round.is_identity());

    // Intertwining with x and c across the swap.
    auto sub = [&](const SMat& big, const std::vector<int>& rows,
                   const std::vector<int>& cols) {
        SMat out(static_cast<int>(rows.size()), static_cast<int>(cols.size()), d.p);
        for (size_t r = 0; r < rows.size(); ++r)
            for (size_t c = 0; c < cols.size(); ++c)
                out.set(static_cast<int>(r), static_cast<int>(c),
                        big.get(rows[r], cols[c]));
        return out;
    };
    SMat x1_src = sub(d.gen(K::X, 1), fwd.source, fwd.source);
    SMat x2_dst = sub(d.gen(K::X, 2), fwd.target, fwd.target);
    CHECK(fwd.matrix * x1_src == x2_dst * fwd.matrix);
    SMat c1_src = sub(d.gen(K::C, 1), fwd.source, fwd.source);
    SMat c2_dst = sub(d.gen(K::C, 2), fwd.target, fwd.target);
    CHECK(fwd.matrix * c1_src == c2_dst * fwd.matrix);
}

TEST_CASE("grading flip") {
    SuperModule d = build_D(wv({0, 2}));
    SuperModule flipped = parity_shift(d);
    CHECK(relations_hold(flipped));
    for (int v = 0; v < d.dim(); ++v) CHECK(flipped.parity[v] == 1 - d.parity[v]);
    EndoReport a = end_dimension(d), b = end_dimension(flipped);
    CHECK(a.even_dim == b.even_dim);
    CHECK(a.odd_dim == b.odd_dim);
    CHECK(parity_shift(flipped).action.at("c1") == d.action.at("c1"));
}

TEST_CASE("weight space bijection error paths") {
    SuperModule d = build_D(wv({0, 1}));
    CHECK_THROWS(apply_phi_hat(d, wv({0, 1}), 1));  // inadmissible swap
    SuperModule d2 = build_D(wv({0, 2}));
    CHECK_THROWS(apply_phi_hat(d2, wv({1, 3}), 1));  // empty weight space
}

TEST_CASE("phi-hat involution across small modules") {
    std::set<std::vector<int>> done;
    for (int n = 2; n <= 4; ++n) {
        for (const auto& w : enumerate_weights(n, 0, 3)) {
            if (!in_affine_weight_set(w)) continue;
            auto cls = enumerate_class(w);
            std::vector<int> key = cls.members[0].entries;
            for (const auto& mem : cls.members) key = std::min(key, mem.entries);
            if (!done.insert(key).second) continue;
            SuperModule d = build_D(w);
            for (const auto& mem : cls.members)
                for (int k = 1; k < w.size(); ++k) {
                    if (!is_admissible(mem, k)) continue;
                    auto fwd = apply_phi_hat(d, mem, k);
                    auto bwd = apply_phi_hat(d, apply_transposition(mem, k), k);
                    CHECK((bwd.matrix * fwd.matrix).is_identity());
                }
        }
    }
}
