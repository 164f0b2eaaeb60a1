#include "hc/matrix.hpp"

#include <algorithm>

namespace hc {

namespace {

SMat::Row::const_iterator find_col(const SMat::Row& row, int c) {
    auto it = std::lower_bound(
        row.begin(), row.end(), c,
        [](const std::pair<int, Scalar>& e, int key) { return e.first < key; });
    return it != row.end() && it->first == c ? it : row.end();
}

}  // namespace

SMat SMat::identity(int n, std::uint32_t p) {
    SMat m(n, n, p);
    Scalar one = Scalar::one(p);
    for (int i = 0; i < n; ++i) m.data_[i].emplace_back(i, one);
    return m;
}

Scalar SMat::get(int r, int c) const {
    auto it = find_col(data_[r], c);
    return it == data_[r].end() ? Scalar::zero(p_) : it->second;
}

void SMat::set(int r, int c, const Scalar& v) {
    Row& row = data_[r];
    auto it = std::lower_bound(
        row.begin(), row.end(), c,
        [](const std::pair<int, Scalar>& e, int key) { return e.first < key; });
    if (it != row.end() && it->first == c) {
        if (v.is_zero())
            row.erase(it);
        else
            it->second = v;
    } else if (!v.is_zero()) {
        row.emplace(it, c, v);
    }
}

void SMat::add_at(int r, int c, const Scalar& v) {
    if (v.is_zero()) return;
    Row& row = data_[r];
    auto it = std::lower_bound(
        row.begin(), row.end(), c,
        [](const std::pair<int, Scalar>& e, int key) { return e.first < key; });
    if (it != row.end() && it->first == c) {
        it->second = it->second + v;
        if (it->second.is_zero()) row.erase(it);
    } else {
        row.emplace(it, c, v);
    }
}

namespace {

// Merge two sorted rows with a sign on the second.
void merge_rows(const SMat::Row& a, const SMat::Row& b, bool subtract,
                SMat::Row& out) {
    out.clear();
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j >= b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i >= a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first,
                             subtract ? -b[j].second : b[j].second);
            ++j;
        } else {
            Scalar v = subtract ? a[i].second - b[j].second
                                : a[i].second + b[j].second;
            if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
}

}  // namespace

SMat SMat::operator+(const SMat& o) const {
    SMat m(rows_, cols_, p_);
    for (int r = 0; r < rows_; ++r) merge_rows(data_[r], o.data_[r], false, m.data_[r]);
    return m;
}

SMat SMat::operator-(const SMat& o) const {
    SMat m(rows_, cols_, p_);
    for (int r = 0; r < rows_; ++r) merge_rows(data_[r], o.data_[r], true, m.data_[r]);
    return m;
}

SMat SMat::operator*(const SMat& o) const {
    if (cols_ != o.rows_) throw ScalarError("matrix shape mismatch");
    SMat m(rows_, o.cols_, p_);
    std::vector<std::pair<int, Scalar>> buffer;
    for (int r = 0; r < rows_; ++r) {
        buffer.clear();
        for (const auto& [k, a] : data_[r])
            for (const auto& [c, b] : o.data_[k]) buffer.emplace_back(c, a * b);
        if (buffer.empty()) continue;
        std::sort(buffer.begin(), buffer.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        Row& out = m.data_[r];
        out.reserve(buffer.size());
        for (auto& [c, v] : buffer) {
            if (!out.empty() && out.back().first == c) {
                out.back().second = out.back().second + v;
                if (out.back().second.is_zero()) out.pop_back();
            } else if (!v.is_zero()) {
                out.emplace_back(c, std::move(v));
            }
        }
    }
    return m;
}

SMat SMat::scale(const Scalar& s) const {
    SMat m(rows_, cols_, p_);
    if (s.is_zero()) return m;
    for (int r = 0; r < rows_; ++r) {
        m.data_[r].reserve(data_[r].size());
        for (const auto& [c, v] : data_[r]) m.data_[r].emplace_back(c, v * s);
    }
    return m;
}

SMat SMat::pow(int e) const {
    SMat acc = identity(rows_, p_);
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

bool SMat::operator==(const SMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool SMat::is_zero() const {
    for (const auto& row : data_)
        if (!row.empty()) return false;
    return true;
}

bool SMat::is_identity() const { return *this == identity(rows_, p_); }

bool SMat::is_diagonal() const {
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r])
            if (c != r) return false;
    return true;
}

long SMat::nnz() const {
    long s = 0;
    for (const auto& row : data_) s += static_cast<long>(row.size());
    return s;
}

std::vector<Scalar> SMat::apply(const std::vector<Scalar>& v) const {
    std::vector<Scalar> out(rows_, Scalar::zero(p_));
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, a] : data_[r]) out[r] = out[r] + a * v[c];
    return out;
}

bool SMat::parity_map(const std::vector<int>& parity, int from, int to) const {
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r])
            if (parity[c] == from && parity[r] != to) return false;
    return true;
}

std::optional<Scalar> try_invert(const Scalar& s) {
    if (s.is_zero()) return std::nullopt;
    if (s.characteristic() != 0) return s.inverse();
    if (s.quad_value().single_term()) return s.inverse();
    return std::nullopt;
}

namespace {

// Reduce `row` against the echelon rows, pivoting without division:
// row <- pivot_coeff * row - row_coeff * pivot_row.  When the pivot has an
// accessible inverse the echelon row is stored normalized, which keeps most
// reductions to a single subtraction.
void reduce_row(SparseRow& row, const std::map<int, SparseRow>& echelon) {
    while (!row.empty()) {
        int col = row.begin()->first;
        auto it = echelon.find(col);
        if (it == echelon.end()) return;
        const SparseRow& pivot_row = it->second;
        Scalar rc = row.begin()->second;
        Scalar pc = pivot_row.begin()->second;
        SparseRow next;
        if (pc.is_one()) {
            next = std::move(row);
        } else {
            for (const auto& [c, v] : row) next[c] = v * pc;
        }
        for (const auto& [c, v] : pivot_row) {
            auto jt = next.find(c);
            Scalar delta = v * rc;
            if (jt == next.end()) {
                next.emplace(c, -delta);
            } else {
                jt->second = jt->second - delta;
                if (jt->second.is_zero()) next.erase(jt);
            }
        }
        row = std::move(next);
    }
}

void insert_echelon(SparseRow row, std::map<int, SparseRow>& echelon) {
    reduce_row(row, echelon);
    if (row.empty()) return;
    if (auto inv = try_invert(row.begin()->second)) {
        SparseRow scaled;
        for (const auto& [c, v] : row) scaled[c] = v * *inv;
        row = std::move(scaled);
    }
    int col = row.begin()->first;
    echelon.emplace(col, std::move(row));
}

SparseRow to_sparse_row(const SMat::Row& row) {
    return SparseRow(row.begin(), row.end());
}

}  // namespace

int rank_of_rows(std::vector<SparseRow> rows, std::uint32_t) {
    std::map<int, SparseRow> echelon;
    for (auto& r : rows) insert_echelon(std::move(r), echelon);
    return static_cast<int>(echelon.size());
}

int rank(const SMat& m) {
    std::vector<SparseRow> rows;
    rows.reserve(m.rows());
    for (int r = 0; r < m.rows(); ++r) rows.push_back(to_sparse_row(m.row(r)));
    return rank_of_rows(std::move(rows), m.characteristic());
}

int kernel_dim(const SMat& m) { return m.cols() - rank(m); }

std::vector<std::vector<Scalar>> kernel_basis(const SMat& m) {
    std::uint32_t p = m.characteristic();
    std::map<int, SparseRow> echelon;
    for (int r = 0; r < m.rows(); ++r)
        insert_echelon(to_sparse_row(m.row(r)), echelon);

    std::vector<std::vector<Scalar>> basis;
    std::vector<bool> is_pivot(m.cols(), false);
    for (const auto& [c, row] : echelon) is_pivot[c] = true;

    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(m.cols(), Scalar::zero(p));
        v[free] = Scalar::one(p);
        // Back-substitute highest pivot first; scale the whole vector by the
        // pivot coefficient instead of dividing.
        for (auto it = echelon.rbegin(); it != echelon.rend(); ++it) {
            const auto& [col, row] = *it;
            Scalar s = Scalar::zero(p);
            for (const auto& [c, a] : row)
                if (c != col) s = s + a * v[c];
            if (s.is_zero()) continue;
            Scalar pc = row.begin()->second;
            if (!pc.is_one())
                for (auto& x : v) x = x * pc;
            v[col] = -s;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

SMat stable_power(const SMat& m) {
    SMat acc = m;
    int r = rank(acc);
    while (true) {
        SMat next = acc * m;
        int rn = rank(next);
        if (rn == r) return acc;
        acc = std::move(next);
        r = rn;
    }
}

int stable_kernel_dim(const SMat& m) { return m.cols() - rank(stable_power(m)); }

int joint_kernel_dim(const std::vector<SMat>& ms) {
    if (ms.empty()) throw ScalarError("joint kernel of nothing");
    std::vector<SparseRow> rows;
    for (const auto& m : ms)
        for (int r = 0; r < m.rows(); ++r)
            if (!m.row(r).empty()) rows.push_back(to_sparse_row(m.row(r)));
    return ms[0].cols() - rank_of_rows(std::move(rows), ms[0].characteristic());
}

namespace {

// Row r of sum of products, accumulated into `acc` (sorted, zero-free).
// scratch/next are reused across calls to avoid allocation.
void expr_row(const std::vector<MatTerm>& terms, int r, SMat::Row& acc,
              SMat::Row& scratch, SMat::Row& next) {
    acc.clear();
    for (const auto& term : terms) {
        scratch.clear();
        scratch.emplace_back(r, term.coeff);
        for (const SMat* m : term.factors) {
            next.clear();
            for (const auto& [c, v] : scratch)
                for (const auto& [c2, w] : m->row(c)) next.emplace_back(c2, v * w);
            std::swap(scratch, next);
            if (scratch.empty()) break;
        }
        for (auto& e : scratch) acc.push_back(std::move(e));
    }
    std::sort(acc.begin(), acc.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    size_t out = 0;
    for (size_t i = 0; i < acc.size();) {
        int col = acc[i].first;
        Scalar v = std::move(acc[i].second);
        for (++i; i < acc.size() && acc[i].first == col; ++i) v = v + acc[i].second;
        if (!v.is_zero()) acc[out++] = {col, std::move(v)};
    }
    acc.resize(out);
}

}  // namespace

bool terms_equal(const std::vector<MatTerm>& lhs, const std::vector<MatTerm>& rhs,
                 int dim, std::string* witness) {
    SMat::Row a, b, scratch, next;
    for (int r = 0; r < dim; ++r) {
        expr_row(lhs, r, a, scratch, next);
        expr_row(rhs, r, b, scratch, next);
        if (a != b) {
            if (witness) {
                // First differing column in this row.
                size_t i = 0, j = 0;
                int col = -1;
                std::string lv = "0", rv = "0";
                while (i < a.size() || j < b.size()) {
                    int ca = i < a.size() ? a[i].first : dim;
                    int cb = j < b.size() ? b[j].first : dim;
                    if (ca < cb) {
                        col = ca;
                        lv = a[i].second.str();
                        rv = "0";
                        break;
                    }
                    if (cb < ca) {
                        col = cb;
                        lv = "0";
                        rv = b[j].second.str();
                        break;
                    }
                    if (!(a[i].second == b[j].second)) {
                        col = ca;
                        lv = a[i].second.str();
                        rv = b[j].second.str();
                        break;
                    }
                    ++i;
                    ++j;
                }
                *witness = "entry (" + std::to_string(r) + "," +
                           std::to_string(col) + "): " + lv + " vs " + rv;
            }
            return false;
        }
    }
    return true;
}

}  // namespace hc
