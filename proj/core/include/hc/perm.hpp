#pragma once

#include <numeric>
#include <vector>

namespace hc {

/// Permutation of {0,...,n-1} in one-line notation: img[i] is the image of i.
class Perm {
public:
    Perm() = default;
    explicit Perm(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 0); }
    explicit Perm(std::vector<int> img) : img_(std::move(img)) {}

    int size() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }
    const std::vector<int>& one_line() const { return img_; }

    bool is_identity() const {
        for (int i = 0; i < size(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    Perm inverse() const {
        std::vector<int> inv(img_.size());
        for (int i = 0; i < size(); ++i) inv[img_[i]] = i;
        return Perm(inv);
    }

    /// Composition (this after o): (this*o)(i) = this(o(i)).
    Perm operator*(const Perm& o) const {
        std::vector<int> r(img_.size());
        for (int i = 0; i < size(); ++i) r[i] = img_[o.img_[i]];
        return Perm(r);
    }

    /// Left-multiply by the adjacent transposition of values k, k+1 (0-based k).
    Perm swap_values(int k) const {
        std::vector<int> r = img_;
        for (auto& v : r)
            if (v == k)
                v = k + 1;
            else if (v == k + 1)
                v = k;
        return Perm(r);
    }

    /// Transposition (a b) on {0..n-1}.
    static Perm transposition(int n, int a, int b) {
        Perm p(n);
        std::swap(p.img_[a], p.img_[b]);
        return p;
    }

    /// A reduced word in adjacent transpositions: this = s_{w[0]} o s_{w[1]}
    /// o ... o s_{w[m-1]} as functions, with s_k the swap of k, k+1
    /// (0-based).  Length equals the inversion number.
    std::vector<int> reduced_word() const {
        std::vector<int> word;
        std::vector<int> v = img_;
        // Bubble-sort v to the identity by right multiplication; each swap of
        // an adjacent out-of-order pair removes exactly one inversion.
        bool moved = true;
        while (moved) {
            moved = false;
            for (int i = 0; i + 1 < size(); ++i) {
                if (v[i] > v[i + 1]) {
                    std::swap(v[i], v[i + 1]);
                    word.push_back(i);
                    moved = true;
                }
            }
        }
        // this o s_{word[0]} o ... o s_{word[m-1]} = id, hence
        // this = s_{word[m-1]} o ... o s_{word[0]} reversed.
        std::reverse(word.begin(), word.end());
        return word;
    }

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

private:
    std::vector<int> img_;
};

}  // namespace hc
