#include <doctest.h>

#include "hc/weights.hpp"

using namespace hc;

namespace {

WeightVector wv(std::vector<int> entries, std::uint32_t p = 0) {
    WeightVector w;
    w.p = p;
    w.entries = std::move(entries);
    return w;
}

}  // namespace

TEST_CASE("eigenvalue labels") {
    CHECK(q_of(0, 0) == Scalar::zero(0));
    CHECK(q_of(2, 0) == Scalar::from_int(0, 6));
    CHECK(q_of(3, 7) == Scalar::from_int(7, 5));  // 12 mod 7
    CHECK_THROWS(q_of(4, 7));                     // outside the index set
}

TEST_CASE("admissible transpositions") {
    CHECK(is_admissible(wv({0, 2}), 1));
    CHECK_FALSE(is_admissible(wv({0, 1}), 1));
    CHECK(is_admissible(wv({1, 2, 0, 1, 0}), 2));
    CHECK_THROWS(is_admissible(wv({0, 2}), 2));
}

TEST_CASE("affine weight set membership") {
    CHECK(in_affine_weight_set(wv({0, 1, 0})));
    CHECK_FALSE(in_affine_weight_set(wv({0, 0})));
    CHECK(affine_weight_rejection(wv({0, 0})) == WeightRejection::AdjacentEqual);
    CHECK(in_affine_weight_set(wv({1, 2, 0, 3, 2, 1, 0}, 7)));
    CHECK_FALSE(in_affine_weight_set(wv({1, 2, 0, 3, 2, 1, 0})));  // p = 0
    // (p-1)/2 twice is never allowed.
    CHECK_FALSE(in_affine_weight_set(wv({2, 0, 2}, 5)));
    // repeated zero needs a one in between
    CHECK_FALSE(in_affine_weight_set(wv({0, 2, 0})));
    CHECK(affine_weight_rejection(wv({0, 2, 0})) ==
          WeightRejection::RepeatZeroWithoutOne);
}

TEST_CASE("finite weight set membership") {
    CHECK(in_finite_weight_set(wv({0, 1, 0})));
    CHECK_FALSE(in_finite_weight_set(wv({1, 0})));
    CHECK_FALSE(in_finite_weight_set(wv({0, 2})));
}

TEST_CASE("class enumeration") {
    auto c1 = enumerate_class(wv({0, 1, 0}));
    CHECK(c1.size() == 1);
    auto c2 = enumerate_class(wv({0, 2}));
    CHECK(c2.size() == 2);
    CHECK(c2.members[1].entries == std::vector<int>{2, 0});
    auto c3 = enumerate_class(wv({0, 1, 2}));
    CHECK(c3.size() == 1);

    // tau consistency: member = tau . representative
    auto c4 = enumerate_class(wv({0, 2, 4}));
    CHECK(c4.size() == 6);
    for (int i = 0; i < c4.size(); ++i) {
        const Perm& tau = c4.taus[i];
        Perm inv = tau.inverse();
        for (int k = 0; k < 3; ++k)
            CHECK(c4.members[i].entries[k] == c4.representative.entries[inv(k)]);
    }
}

TEST_CASE("admissible closure of the affine weight set") {
    for (std::uint32_t p : {0u, 5u}) {
        int cap = p == 0 ? 4 : index_set_max(p);
        for (int n = 2; n <= 5; ++n) {
            for (const auto& w : enumerate_weights(n, p, cap)) {
                if (!in_affine_weight_set(w)) continue;
                for (int k = 1; k < n; ++k)
                    if (is_admissible(w, k))
                        CHECK(in_affine_weight_set(apply_transposition(w, k)));
            }
        }
    }
}

TEST_CASE("nested ascent reduction") {
    auto data = w2_reduce(wv({1, 2, 0, 3, 2, 1, 0}, 7));
    CHECK(data.u == 2);
    CHECK(data.reduced.entries == std::vector<int>{1, 2, 0, 1, 0});
    CHECK(data.positions == std::vector<int>{2, 4, 5});

    auto d2 = w2_reduce(wv({1, 2, 1}, 5));
    CHECK(d2.u == 1);
    CHECK(d2.reduced.entries == std::vector<int>{1});

    CHECK_FALSE(in_w2(wv({0, 1, 0}, 7)));
    CHECK_THROWS(w2_reduce(wv({0, 1, 0}, 7)));
}

TEST_CASE("reduced vector is splittable with a unique maximal entry") {
    for (std::uint32_t p : {5u, 7u}) {
        for (int n = 2; n <= 7; ++n) {
            for (const auto& w : enumerate_weights(n, p, index_set_max(p))) {
                if (!in_affine_weight_set(w) || !in_w2(w)) continue;
                auto data = w2_reduce(w);
                CHECK(splittable(data.reduced));
                int maxima = 0;
                for (int v : data.reduced.entries) {
                    CHECK(v <= data.u);
                    maxima += v == data.u;
                }
                CHECK(maxima == 1);
                // Reduction is compatible with admissible transpositions.
                for (int k = 1; k < n; ++k) {
                    if (!is_admissible(w, k)) continue;
                    auto other = w2_reduce(apply_transposition(w, k));
                    CHECK(other.u == data.u);
                    bool related = false;
                    auto cls = enumerate_class(data.reduced);
                    for (const auto& mem : cls.members)
                        related = related || mem.entries == other.reduced.entries;
                    CHECK(related);
                }
            }
        }
    }
}
