#include "hc/weights.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace hc {

int index_set_max(std::uint32_t p) {
    if (p == 0) return -1;
    return static_cast<int>((p - 1) / 2);
}

Scalar q_of(int i, std::uint32_t p) {
    if (i < 0) throw ScalarError("negative eigenvalue label");
    int mx = index_set_max(p);
    if (mx >= 0 && i > mx) throw ScalarError("label outside the index set");
    return Scalar::from_int(p, static_cast<long>(i) * (i + 1));
}

std::string WeightVector::str() const {
    std::ostringstream os;
    os << "(";
    for (int k = 0; k < size(); ++k) {
        if (k) os << ",";
        os << entries[k];
    }
    os << ")";
    return os.str();
}

WeightVector parse_weight(const std::string& csv, std::uint32_t p) {
    WeightVector w;
    w.p = p;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        w.entries.push_back(std::stoi(tok));
    }
    if (w.entries.empty()) throw ScalarError("empty weight");
    return w;
}

bool weight_in_range(const WeightVector& w) {
    int mx = index_set_max(w.p);
    for (int v : w.entries) {
        if (v < 0) return false;
        if (mx >= 0 && v > mx) return false;
    }
    return true;
}

int gamma0(const WeightVector& w) {
    return static_cast<int>(std::count(w.entries.begin(), w.entries.end(), 0));
}

bool is_admissible(const WeightVector& w, int k) {
    if (k < 1 || k >= w.size()) throw ScalarError("transposition index out of range");
    int a = w.entries[k - 1], b = w.entries[k];
    return a != b + 1 && a != b - 1;
}

WeightVector apply_transposition(const WeightVector& w, int k) {
    WeightVector v = w;
    std::swap(v.entries[k - 1], v.entries[k]);
    return v;
}

namespace {

bool value_between(const WeightVector& w, int lo, int hi, int value) {
    for (int m = lo + 1; m < hi; ++m)
        if (w.entries[m] == value) return true;
    return false;
}

// Nested ascent to (p-1)/2 inside positions [lo, hi] (0-based, inclusive):
// pairs r_j < t_j with value u+j, no u+j strictly between them, nested for
// j = 0..K, and a position of value (p-1)/2 inside the innermost pair.
bool nested_peak(const WeightVector& w, int lo, int hi, int level, int u) {
    int p = static_cast<int>(w.p);
    int top = (p - 3) / 2;
    if (u + level > top) return false;
    int value = u + level;
    for (int r = lo; r <= hi; ++r) {
        if (w.entries[r] != value) continue;
        for (int t = r + 1; t <= hi; ++t) {
            if (w.entries[t] != value) continue;
            if (value_between(w, r, t, value)) continue;
            bool inner_ok;
            if (u + level == top) {
                inner_ok = value_between(w, r, t, (p - 1) / 2);
            } else {
                inner_ok = nested_peak(w, r + 1, t - 1, level + 1, u);
            }
            if (inner_ok) return true;
        }
    }
    return false;
}

}  // namespace

bool splittable(const WeightVector& w) {
    int n = w.size();
    for (int k = 0; k < n; ++k) {
        if (w.entries[k] < 0) return false;
        for (int l = k + 1; l < n; ++l) {
            if (w.entries[k] != w.entries[l]) continue;
            int u = w.entries[k];
            if (u == 0) {
                if (!value_between(w, k, l, 1)) return false;
            } else {
                if (!value_between(w, k, l, u - 1) || !value_between(w, k, l, u + 1))
                    return false;
            }
        }
    }
    return true;
}

WeightRejection affine_weight_rejection(const WeightVector& w) {
    if (!weight_in_range(w)) return WeightRejection::OutOfRange;
    int n = w.size();
    for (int k = 0; k + 1 < n; ++k)
        if (w.entries[k] == w.entries[k + 1]) return WeightRejection::AdjacentEqual;
    for (int k = 0; k < n; ++k) {
        for (int l = k + 1; l < n; ++l) {
            if (w.entries[k] != w.entries[l]) continue;
            int u = w.entries[k];
            if (u == 0) {
                if (!value_between(w, k, l, 1))
                    return WeightRejection::RepeatZeroWithoutOne;
                continue;
            }
            bool both = value_between(w, k, l, u - 1) && value_between(w, k, l, u + 1);
            if (both) continue;
            if (w.p >= 3 && nested_peak(w, k, l, 0, u)) continue;
            return WeightRejection::RepeatWithoutNeighbors;
        }
    }
    return WeightRejection::None;
}

std::string rejection_text(WeightRejection r) {
    switch (r) {
        case WeightRejection::None:
            return "accepted";
        case WeightRejection::OutOfRange:
            return "entry outside the index set";
        case WeightRejection::AdjacentEqual:
            return "equal adjacent entries";
        case WeightRejection::RepeatZeroWithoutOne:
            return "repeated 0 with no 1 between the occurrences";
        case WeightRejection::RepeatWithoutNeighbors:
            return "repeated value u with neither {u-1, u+1} between the "
                   "occurrences nor a nested ascent to (p-1)/2";
    }
    return "unknown";
}

bool in_affine_weight_set(const WeightVector& w) {
    return affine_weight_rejection(w) == WeightRejection::None;
}

bool in_finite_weight_set(const WeightVector& w) {
    if (!in_affine_weight_set(w)) return false;
    if (w.entries.empty() || w.entries[0] != 0) return false;
    for (int k = 1; k < w.size(); ++k) {
        bool seen = false;
        for (int m = 0; m < k && !seen; ++m)
            seen = w.entries[m] == w.entries[k] - 1 || w.entries[m] == w.entries[k] + 1;
        if (!seen) return false;
    }
    return true;
}

int EquivalenceClass::index_of(const WeightVector& w) const {
    for (int i = 0; i < size(); ++i)
        if (members[i].entries == w.entries) return i;
    return -1;
}

EquivalenceClass enumerate_class(const WeightVector& w) {
    if (!in_affine_weight_set(w))
        throw ScalarError("class enumeration requires an affine weight: " + w.str());
    EquivalenceClass cls;
    cls.representative = w;
    std::map<std::vector<int>, int> seen;
    std::deque<int> queue;
    cls.members.push_back(w);
    cls.taus.emplace_back(Perm(w.size()));
    cls.words.emplace_back();
    seen.emplace(w.entries, 0);
    queue.push_back(0);
    while (!queue.empty()) {
        int at = queue.front();
        queue.pop_front();
        WeightVector cur = cls.members[at];
        for (int k = 1; k < w.size(); ++k) {
            if (!is_admissible(cur, k)) continue;
            WeightVector nxt = apply_transposition(cur, k);
            if (seen.count(nxt.entries)) continue;
            seen.emplace(nxt.entries, cls.size());
            cls.members.push_back(nxt);
            cls.taus.push_back(cls.taus[at].swap_values(k - 1));
            auto word = cls.words[at];
            word.push_back(k);
            cls.words.push_back(std::move(word));
            queue.push_back(cls.size() - 1);
        }
    }
    return cls;
}

bool in_w2(const WeightVector& w) {
    if (w.p < 3) return false;
    if (!in_affine_weight_set(w)) return false;
    int top = (static_cast<int>(w.p) - 3) / 2;
    for (int k = 0; k < w.size(); ++k) {
        int u = w.entries[k];
        if (u < 1 || u > top) continue;
        for (int l = k + 1; l < w.size(); ++l) {
            if (w.entries[l] != u) continue;
            if (!value_between(w, k, l, u - 1)) return true;
        }
    }
    return false;
}

W2Data w2_reduce(const WeightVector& w) {
    int p = static_cast<int>(w.p);
    if (p < 3) throw ScalarError("reduction needs characteristic p >= 3");
    if (!in_w2(w)) throw ScalarError("weight has no nested ascent: " + w.str());
    int top = (p - 3) / 2;
    int u = 0;
    for (int cand = 1; cand <= top && u == 0; ++cand) {
        for (int k = 0; k < w.size() && u == 0; ++k) {
            if (w.entries[k] != cand) continue;
            for (int l = k + 1; l < w.size(); ++l) {
                if (w.entries[l] != cand) continue;
                if (!value_between(w, k, l, cand - 1)) {
                    u = cand;
                    break;
                }
            }
        }
    }

    // Positions of every value >= u are pinned: two per value in [u, top]
    // nested around the single (p-1)/2.
    std::vector<std::vector<int>> at(top + 2);
    for (int k = 0; k < w.size(); ++k) {
        int v = w.entries[k];
        if (v >= u) at[v].push_back(k);
    }
    for (int v = u; v <= top; ++v)
        if (at[v].size() != 2)
            throw ScalarError("malformed nested ascent: value count mismatch");
    if (at[top + 1].size() != 1)
        throw ScalarError("malformed nested ascent: (p-1)/2 count mismatch");

    W2Data data;
    data.u = u;
    int K = top - u;
    std::vector<int> seq;
    for (int j = 0; j <= K; ++j) seq.push_back(at[u + j][0]);  // r_0 .. r_K
    seq.push_back(at[top + 1][0]);                             // q
    for (int j = K; j >= 0; --j) seq.push_back(at[u + j][1]);  // t_K .. t_0
    for (size_t i = 0; i + 1 < seq.size(); ++i)
        if (seq[i] >= seq[i + 1])
            throw ScalarError("malformed nested ascent: positions not nested");
    int r0 = seq.front(), t0 = seq.back();
    for (int m = r0; m <= t0; ++m)
        if (w.entries[m] == u - 1)
            throw ScalarError("malformed nested ascent: u-1 inside the ascent");

    for (int pos : seq) data.positions.push_back(pos + 1);
    std::vector<bool> drop(w.size(), false);
    for (size_t i = 1; i < seq.size(); ++i) drop[seq[i]] = true;  // keep r_0
    for (int k = 0; k < w.size(); ++k)
        if (drop[k]) data.removed.push_back(k + 1);
    data.reduced.p = w.p;
    for (int k = 0; k < w.size(); ++k)
        if (!drop[k]) data.reduced.entries.push_back(w.entries[k]);
    return data;
}

std::vector<WeightVector> enumerate_weights(int n, std::uint32_t p, int max_entry) {
    int mx = index_set_max(p);
    if (mx < 0) mx = max_entry;
    if (mx < 0) throw ScalarError("characteristic 0 enumeration needs a cap");
    std::vector<WeightVector> out;
    WeightVector w;
    w.p = p;
    w.entries.assign(n, 0);
    while (true) {
        out.push_back(w);
        int k = n - 1;
        while (k >= 0 && w.entries[k] == mx) w.entries[k--] = 0;
        if (k < 0) break;
        ++w.entries[k];
    }
    return out;
}

}  // namespace hc
