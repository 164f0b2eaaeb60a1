#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hc/matrix.hpp"
#include "hc/pbw.hpp"
#include "hc/weights.hpp"

namespace hc {

/// Graded module given by explicit generator matrices over the exact ground
/// field.  Even generators (s, x) preserve the parity grading, odd ones (c)
/// swap it.  Some constructions only carry a subset of the generators: weight
/// modules have no s-action, spin modules no x-action.
struct SuperModule {
    int n = 0;
    std::uint32_t p = 0;
    std::vector<std::string> basis;
    std::vector<int> parity;
    std::map<std::string, SMat> action;
    /// Optional per-basis-vector weight (set when x acts diagonally by
    /// construction).
    std::vector<WeightVector> weights;

    int dim() const { return static_cast<int>(basis.size()); }
    static std::string gen_name(Generator::Kind kind, int k);
    bool has_gen(Generator::Kind kind, int k) const;
    const SMat& gen(Generator::Kind kind, int k) const;
    void set_gen(Generator::Kind kind, int k, SMat m);
};

/// Dimensions of the (super)commutant, split by parity of the endomorphism.
struct EndoReport {
    int even_dim = 0;
    int odd_dim = 0;
    int total() const { return even_dim + odd_dim; }
};

/// Two-dimensional module with x_1 = diag(sqrt(q(i)), -sqrt(q(i))) and c_1
/// the parity swap.
SuperModule build_L(int i, std::uint32_t p);

/// Outer tensor product with the graded sign rule: odd generators of the
/// right factor pick up the parity of the left factor.
SuperModule tensor(const SuperModule& a, const SuperModule& b);

/// Full tensor model of L(i_1) (x) ... (x) L(i_n): basis indexed by bit
/// vectors, x_k diagonal, c_k a bit flip with a prefix sign.
SuperModule build_weight_module(const WeightVector& w);

/// The matrix -(X_k + X_{k+1} + C_k C_{k+1} (X_k - X_{k+1})) / denom, the
/// diagonal piece of the seminormal transposition action on a subspace where
/// x_k^2 - x_{k+1}^2 acts as the scalar denom.
SMat xi_matrix(const SMat& xk, const SMat& xk1, const SMat& ck, const SMat& ck1,
               const Scalar& denom);

/// The coupling coefficient sqrt(1 - 2(q(a)+q(b)) / (q(a)-q(b))^2).
Scalar omega_scalar(int a, int b, std::uint32_t p);

/// Seminormal module attached to an affine weight: one full tensor component
/// per class member, transpositions acting by the diagonal piece plus the
/// coupling into the swapped component when the swap is admissible.
SuperModule build_D(const WeightVector& w);

/// Rank-2 module: the 4-dimensional tensor model with s_1 diagonal when
/// i = j +- 1, the induced 8-dimensional module otherwise.
SuperModule build_V2(int i, int j, std::uint32_t p);

/// Induction along a composition: basis w (x) m over minimal-length coset
/// representatives w; transpositions act by coset combinatorics, x by
/// pushing through a reduced word with Clifford correction terms.
SuperModule build_induced(const SuperModule& base, const std::vector<int>& mu);

/// Rank-3 modules built from V(0,0) and L(1) with the extra transposition
/// acting by the diagonal seminormal piece.
SuperModule build_V001(std::uint32_t p);
SuperModule build_V100(std::uint32_t p);

/// Kato module: induction of the full tensor model of L(0)^n along (1^n).
SuperModule build_kato(int n, std::uint32_t p);

/// Basic spin module: basis of Clifford monomials, transpositions permuting
/// indices with a sign, c_k by left multiplication.  No x-action.
SuperModule build_basic_spin(int n, std::uint32_t p);

/// Copy with the grading flipped; odd generators change sign, so the
/// identity map is an isomorphism onto the result and every structural
/// invariant is unchanged.
SuperModule parity_shift(const SuperModule& m);

/// Matrix of an x-free-or-not element through the module's generator
/// matrices.
SMat element_matrix(const SuperModule& m, const PBWElement& e);

/// Simultaneous generalized eigenspace dimensions of x_1^2, ..., x_n^2.
/// Candidate labels default to the weight metadata plus a small range; a
/// completeness check enforces that the dimensions add up.
std::map<WeightVector, int> weight_decomposition(
    const SuperModule& m, const std::vector<int>& candidate_labels = {});

/// Semisimplicity of all x_k (or all x_k^2): the product of (A - lambda)
/// over the known exact spectrum vanishes.
bool is_x_semisimple(const SuperModule& m);
bool is_x_squared_semisimple(const SuperModule& m);

/// Commutant dimensions, exploiting the block structure forced by diagonal
/// x-matrices when available.
EndoReport end_dimension(const SuperModule& m);

/// Weight-space bijection (s_k - Xi_k) / omega restricted to the w-space,
/// mapping into the (s_k . w)-space.  Returns the restricted matrix and the
/// two index sets.
struct PhiHatResult {
    SMat matrix;
    std::vector<int> source;
    std::vector<int> target;
};
PhiHatResult apply_phi_hat(const SuperModule& m, const WeightVector& w, int k);

}  // namespace hc
