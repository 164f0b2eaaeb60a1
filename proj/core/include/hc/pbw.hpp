#pragma once

#include <map>
#include <string>
#include <vector>

#include "hc/perm.hpp"
#include "hc/scalar.hpp"

namespace hc {

/// Abstract algebra generator: transposition s_k (1 <= k < n), polynomial
/// x_k, or Clifford c_k (1 <= k <= n).
struct Generator {
    enum class Kind { S, X, C };
    Kind kind;
    int index;  // 1-based

    static Generator s(int k) { return {Kind::S, k}; }
    static Generator x(int k) { return {Kind::X, k}; }
    static Generator c(int k) { return {Kind::C, k}; }
};

/// Basis monomial x^alpha c^beta w, stored with x-powers first, then the
/// ordered Clifford factors, then the permutation.
struct PBWMonomial {
    std::vector<int> alpha;
    std::vector<char> beta;
    Perm w;

    static PBWMonomial unit(int n) {
        return {std::vector<int>(n, 0), std::vector<char>(n, 0), Perm(n)};
    }
    bool operator<(const PBWMonomial& o) const {
        if (alpha != o.alpha) return alpha < o.alpha;
        if (beta != o.beta) return beta < o.beta;
        return w.one_line() < o.w.one_line();
    }
    bool operator==(const PBWMonomial& o) const {
        return alpha == o.alpha && beta == o.beta && w == o.w;
    }
    std::string str() const;
};

/// Finite linear combination of basis monomials over the ground field.
class PBWElement {
public:
    PBWElement() = default;
    PBWElement(int n, std::uint32_t p) : n_(n), p_(p) {}

    static PBWElement zero(int n, std::uint32_t p) { return PBWElement(n, p); }
    static PBWElement unit(int n, std::uint32_t p);
    static PBWElement monomial(const PBWMonomial& m, const Scalar& coeff,
                               std::uint32_t p);

    int rank() const { return n_; }
    std::uint32_t characteristic() const { return p_; }
    const std::map<PBWMonomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const PBWMonomial& m, const Scalar& coeff);

    PBWElement operator+(const PBWElement& o) const;
    PBWElement operator-(const PBWElement& o) const;
    PBWElement operator*(const PBWElement& o) const;
    PBWElement scale(const Scalar& s) const;
    bool operator==(const PBWElement& o) const;
    bool operator!=(const PBWElement& o) const { return !(*this == o); }

    /// Left multiplication by a generator, in normal form.
    PBWElement mul_gen_left(const Generator& g) const;

    /// Parity (total Clifford degree mod 2) of a homogeneous element;
    /// throws if terms disagree.
    int parity() const;

    /// True when no term involves a polynomial generator.
    bool x_free() const;

    std::string str() const;

private:
    PBWElement s_left(int k, const PBWMonomial& m, const Scalar& coeff) const;
    int n_ = 0;
    std::uint32_t p_ = 0;
    std::map<PBWMonomial, Scalar> terms_;
};

/// Normal form of a product of generators.
PBWElement normal_form(const std::vector<Generator>& word, int n, std::uint32_t p);

/// Intertwining element s_k(x_k^2 - x_{k+1}^2) + (x_k + x_{k+1})
///                      + c_k c_{k+1}(x_k - x_{k+1}).
PBWElement intertwiner(int k, int n, std::uint32_t p);

/// Jucys-Murphy element sum_{j<k} (1 + c_j c_k)(j k); zero for k = 1.
PBWElement jucys_murphy(int k, int n, std::uint32_t p);

/// One verified identity of the intertwiner family.
struct IdentityCheck {
    std::string name;
    bool pass;
};

/// Exact identity checks: the square evaluation, the x- and c-intertwining
/// laws, commutation at distance, and the braid law.
std::vector<IdentityCheck> check_intertwiner_identities(int n, std::uint32_t p);

}  // namespace hc
