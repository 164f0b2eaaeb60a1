#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hc/perm.hpp"
#include "hc/scalar.hpp"

namespace hc {

/// Index set of eigenvalue labels: all of Z+ in characteristic 0, the range
/// {0, ..., (p-1)/2} in characteristic p >= 3.
int index_set_max(std::uint32_t p);  // -1 means unbounded

/// q(i) = i(i+1), the eigenvalue of x_k^2 attached to the label i.
Scalar q_of(int i, std::uint32_t p);

/// Tuple (i_1, ..., i_n) of eigenvalue labels with a fixed characteristic.
struct WeightVector {
    std::uint32_t p = 0;
    std::vector<int> entries;

    int size() const { return static_cast<int>(entries.size()); }
    bool operator==(const WeightVector& o) const {
        return p == o.p && entries == o.entries;
    }
    bool operator<(const WeightVector& o) const {
        return entries < o.entries;
    }
    std::string str() const;
};

WeightVector parse_weight(const std::string& csv, std::uint32_t p);

/// Entries lie in the index set for the characteristic.
bool weight_in_range(const WeightVector& w);

/// Number of zero entries; drives the dimension and type of the attached
/// module.
int gamma0(const WeightVector& w);

/// The transposition of positions k, k+1 (1-based k) is admissible for w iff
/// i_k != i_{k+1} +- 1.
bool is_admissible(const WeightVector& w, int k);

WeightVector apply_transposition(const WeightVector& w, int k);

/// Splittable vectors over Z+: every repeated value u has (u = 0) a 1, or
/// (u >= 1) both u-1 and u+1, strictly between each pair of occurrences.
bool splittable(const WeightVector& w);

enum class WeightRejection {
    None,
    OutOfRange,
    AdjacentEqual,         // i_k == i_{k+1}
    RepeatZeroWithoutOne,  // repeated 0 with no 1 between
    RepeatWithoutNeighbors // repeated u >= 1 with no legal pattern between
};

std::string rejection_text(WeightRejection r);

/// Membership in the affine weight set: every repeated value is separated by
/// the required neighbor values, with the characteristic-p alternative that
/// allows a nested ascent to (p-1)/2 in place of a u-1 occurrence.
bool in_affine_weight_set(const WeightVector& w);
WeightRejection affine_weight_rejection(const WeightVector& w);

/// Membership in the finite (Clifford-twisted symmetric group) weight set:
/// affine membership plus i_1 = 0 and, for each k >= 2, i_k +- 1 already seen.
bool in_finite_weight_set(const WeightVector& w);

/// Orbit of a weight under admissible transpositions.
struct EquivalenceClass {
    WeightVector representative;
    /// Breadth-first order; members[0] is the representative.
    std::vector<WeightVector> members;
    /// members[i] = taus[i] . representative (position action).
    std::vector<Perm> taus;
    /// Shortest transposition words: members[i] = s_{w_t} ... s_{w_1} . rep,
    /// stored 1-based in application order w_1, ..., w_t.
    std::vector<std::vector<int>> words;

    int size() const { return static_cast<int>(members.size()); }
    /// Index of a member weight, or -1.
    int index_of(const WeightVector& w) const;
};

EquivalenceClass enumerate_class(const WeightVector& w);

/// Data of the characteristic-p reduction that removes one nested ascent to
/// (p-1)/2: the pivot value u, the removed/kept positions, and the reduced
/// vector which keeps a single u as its unique maximal entry.
struct W2Data {
    int u = 0;
    /// r_0 < r_1 < ... < r_K < q < t_K < ... < t_1 < t_0 (1-based positions,
    /// K = (p-3)/2 - u).
    std::vector<int> positions;
    /// positions minus r_0: the entries removed by the reduction.
    std::vector<int> removed;
    WeightVector reduced;
};

/// The weight lies in the nested-ascent branch: some repeated value
/// 1 <= u <= (p-3)/2 has no u-1 between a pair of its occurrences.
bool in_w2(const WeightVector& w);

/// Reduction data; throws if the weight is not in the nested-ascent branch.
W2Data w2_reduce(const WeightVector& w);

/// All weight vectors of length n with entries in the index set capped at
/// max_entry (ignored when p >= 3 fixes the range), in lexicographic order.
std::vector<WeightVector> enumerate_weights(int n, std::uint32_t p, int max_entry);

}  // namespace hc
