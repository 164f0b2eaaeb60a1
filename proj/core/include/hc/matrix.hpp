#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hc/scalar.hpp"

namespace hc {

/// Sparse matrix over the ground field, row-major.  Rows are kept as short
/// column-sorted vectors with no stored zeros.
class SMat {
public:
    using Row = std::vector<std::pair<int, Scalar>>;

    SMat() = default;
    SMat(int rows, int cols, std::uint32_t p)
        : rows_(rows), cols_(cols), p_(p), data_(rows) {}

    static SMat identity(int n, std::uint32_t p);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::uint32_t characteristic() const { return p_; }

    const Row& row(int r) const { return data_[r]; }
    Scalar get(int r, int c) const;
    void set(int r, int c, const Scalar& v);
    void add_at(int r, int c, const Scalar& v);

    SMat operator+(const SMat& o) const;
    SMat operator-(const SMat& o) const;
    SMat operator*(const SMat& o) const;
    SMat scale(const Scalar& s) const;
    SMat pow(int e) const;

    bool operator==(const SMat& o) const;
    bool operator!=(const SMat& o) const { return !(*this == o); }
    bool is_zero() const;
    bool is_identity() const;
    bool is_diagonal() const;
    long nnz() const;

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

    /// True when every column of parity `from` maps into rows of parity `to`.
    bool parity_map(const std::vector<int>& parity, int from, int to) const;

private:
    int rows_ = 0, cols_ = 0;
    std::uint32_t p_ = 0;
    std::vector<Row> data_;
};

/// Inversion restricted to what the field code supports: any nonzero element
/// in characteristic p, single-term values in characteristic 0.
std::optional<Scalar> try_invert(const Scalar& s);

using SparseRow = std::map<int, Scalar>;

/// Rank by sparse row elimination; division-free (cross-multiplication), so
/// multi-term pivots never need an inverse.
int rank_of_rows(std::vector<SparseRow> rows, std::uint32_t p);

int rank(const SMat& m);
int kernel_dim(const SMat& m);

/// Basis of the right kernel, as dense columns (not normalized).
std::vector<std::vector<Scalar>> kernel_basis(const SMat& m);

/// Kernel of m^e for e growing until the rank stabilizes.
int stable_kernel_dim(const SMat& m);
SMat stable_power(const SMat& m);

/// Dimension of the joint kernel of a list of matrices (stacked system).
int joint_kernel_dim(const std::vector<SMat>& ms);

/// One summand coeff * M1 * M2 * ... of a matrix expression; an empty factor
/// list is the identity.
struct MatTerm {
    Scalar coeff;
    std::vector<const SMat*> factors;
};

/// Row-wise equality of two matrix expressions, evaluated without
/// materializing any product.  On mismatch fills `witness` with the first
/// differing entry when non-null.
bool terms_equal(const std::vector<MatTerm>& lhs, const std::vector<MatTerm>& rhs,
                 int dim, std::string* witness);

}  // namespace hc
