#include "hc/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace hc {

namespace {

struct TableauError : ScalarError {
    using ScalarError::ScalarError;
};

}  // namespace

// ---------------------------------------------------------------------------
// StrictPartition

int StrictPartition::size() const {
    int s = 0;
    for (int v : parts) s += v;
    return s;
}

bool StrictPartition::valid() const {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) return false;
        if (i && parts[i] >= parts[i - 1]) return false;
    }
    return true;
}

std::string StrictPartition::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ",";
        os << parts[i];
    }
    os << ")";
    return os.str();
}

std::vector<StrictPartition> strict_partitions(int n) {
    std::vector<StrictPartition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.push_back(StrictPartition{cur});
            return;
        }
        for (int part = std::min(rest, maxpart); part >= 1; --part) {
            cur.push_back(part);
            rec(rest - part, part - 1);
            cur.pop_back();
        }
    };
    rec(n, n);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// PlacedDiagram

PlacedDiagram PlacedDiagram::from_partitions(const StrictPartition& outer,
                                             const StrictPartition& inner) {
    if (!outer.valid() || !inner.valid())
        throw TableauError("shapes must be strict partitions");
    if (inner.parts.size() > outer.parts.size())
        throw TableauError("inner shape not contained in outer");
    PlacedDiagram d;
    for (size_t r = 0; r < outer.parts.size(); ++r) {
        int lo = r < inner.parts.size() ? inner.parts[r] : 0;
        int hi = outer.parts[r] - 1;
        if (lo > hi + 1) throw TableauError("inner shape not contained in outer");
        if (lo <= hi) d.rows.emplace_back(lo, hi);
    }
    if (!d.valid())
        throw TableauError("shape pair does not give a placed diagram");
    return d;
}

bool PlacedDiagram::valid() const {
    if (rows.empty()) return false;
    for (size_t r = 0; r < rows.size(); ++r) {
        auto [lo, hi] = rows[r];
        if (lo < 0 || hi < lo) return false;
        if (r) {
            auto [plo, phi] = rows[r - 1];
            if (hi >= phi) return false;
            if (lo > plo) return false;
            if (lo == plo && lo != 0) return false;
        }
    }
    return true;
}

int PlacedDiagram::box_count() const {
    int s = 0;
    for (auto [lo, hi] : rows) s += hi - lo + 1;
    return s;
}

int PlacedDiagram::gamma0() const {
    int s = 0;
    for (auto [lo, hi] : rows)
        if (lo == 0) ++s;
    return s;
}

int PlacedDiagram::max_content() const {
    int m = 0;
    for (auto [lo, hi] : rows) m = std::max(m, hi);
    return m;
}

bool PlacedDiagram::has_content(int t) const {
    for (auto [lo, hi] : rows)
        if (lo <= t && t <= hi) return true;
    return false;
}

StrictPartition PlacedDiagram::outer() const {
    StrictPartition p;
    for (auto [lo, hi] : rows) p.parts.push_back(hi + 1);
    return p;
}

StrictPartition PlacedDiagram::inner() const {
    StrictPartition p;
    for (auto [lo, hi] : rows) p.parts.push_back(lo);
    while (!p.parts.empty() && p.parts.back() == 0) p.parts.pop_back();
    return p;
}

std::vector<std::vector<int>> PlacedDiagram::components() const {
    std::vector<std::vector<int>> comps;
    for (int r = 0; r < row_count(); ++r) {
        bool attached = r > 0 && rows[r - 1].first <= rows[r].second + 1;
        if (!attached) comps.emplace_back();
        comps.back().push_back(r);
    }
    return comps;
}

std::string PlacedDiagram::str() const {
    std::ostringstream os;
    for (size_t r = 0; r < rows.size(); ++r) {
        if (r) os << " ";
        os << "[" << rows[r].first << ".." << rows[r].second << "]";
    }
    return os.str();
}

std::string PlacedDiagram::box_layout() const {
    int mincol = rows[0].first;
    for (int r = 0; r < row_count(); ++r)
        mincol = std::min(mincol, rows[r].first + r);
    std::ostringstream os;
    for (int r = 0; r < row_count(); ++r) {
        auto [lo, hi] = rows[r];
        for (int c = mincol; c < lo + r; ++c) os << " .";
        for (int t = lo; t <= hi; ++t) os << " " << t % 10;
        os << "\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Tableaux

namespace {

// Shared backtracking enumerator over an explicit row layout.  `sizes` gives
// the number of boxes per row and `above` maps (row, index) to the index of
// the box directly above in the previous row, or -1.
void fill_tableaux(const std::vector<int>& sizes,
                   const std::function<int(int, int)>& above, int total,
                   const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
    std::vector<std::vector<int>> labels(sizes.size());
    std::vector<int> filled(sizes.size(), 0);
    std::function<void(int)> rec = [&](int next) {
        if (next > total) {
            emit(labels);
            return;
        }
        for (size_t r = 0; r < sizes.size(); ++r) {
            int i = filled[r];
            if (i >= sizes[r]) continue;
            int up = above(static_cast<int>(r), i);
            if (up >= 0 && up >= filled[r - 1]) continue;
            labels[r].push_back(next);
            ++filled[r];
            rec(next + 1);
            labels[r].pop_back();
            --filled[r];
        }
    };
    rec(1);
}

int above_in_diagram(const PlacedDiagram& d, int r, int i) {
    if (r == 0) return -1;
    int t = d.rows[r].first + i;
    int up = t + 1 - d.rows[r - 1].first;
    if (up < 0 || up > d.rows[r - 1].second - d.rows[r - 1].first) return -1;
    return up;
}

}  // namespace

bool is_standard(const PlacedDiagram& d, const StandardTableau& t) {
    if (t.labels.size() != d.rows.size()) return false;
    int n = d.box_count();
    std::vector<bool> used(n + 1, false);
    for (int r = 0; r < d.row_count(); ++r) {
        int len = d.rows[r].second - d.rows[r].first + 1;
        if (static_cast<int>(t.labels[r].size()) != len) return false;
        for (int i = 0; i < len; ++i) {
            int v = t.labels[r][i];
            if (v < 1 || v > n || used[v]) return false;
            used[v] = true;
            if (i && t.labels[r][i - 1] >= v) return false;
            int up = above_in_diagram(d, r, i);
            if (up >= 0 && t.labels[r - 1][up] >= v) return false;
        }
    }
    return true;
}

std::vector<StandardTableau> enumerate_tableaux(const PlacedDiagram& d) {
    std::vector<int> sizes;
    for (auto [lo, hi] : d.rows) sizes.push_back(hi - lo + 1);
    std::vector<StandardTableau> out;
    fill_tableaux(
        sizes, [&](int r, int i) { return above_in_diagram(d, r, i); }, d.box_count(),
        [&](const std::vector<std::vector<int>>& labels) {
            out.push_back(StandardTableau{labels});
        });
    std::sort(out.begin(), out.end());
    return out;
}

long count_tableaux(const PlacedDiagram& d) {
    long c = 0;
    std::vector<int> sizes;
    for (auto [lo, hi] : d.rows) sizes.push_back(hi - lo + 1);
    fill_tableaux(
        sizes, [&](int r, int i) { return above_in_diagram(d, r, i); }, d.box_count(),
        [&](const std::vector<std::vector<int>>&) { ++c; });
    return c;
}

StandardTableau reading_tableau(const PlacedDiagram& d) {
    StandardTableau t;
    int next = 1;
    for (auto [lo, hi] : d.rows) {
        t.labels.emplace_back();
        for (int i = lo; i <= hi; ++i) t.labels.back().push_back(next++);
    }
    return t;
}

std::string PlacedTableau::str() const {
    std::ostringstream os;
    os << diagram.str() << " labels:";
    for (const auto& row : tableau.labels) {
        os << " [";
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) os << ",";
            os << row[i];
        }
        os << "]";
    }
    return os.str();
}

WeightVector map_F(const PlacedTableau& pt, std::uint32_t p) {
    WeightVector w;
    w.p = p;
    w.entries.assign(pt.diagram.box_count(), -1);
    for (int r = 0; r < pt.diagram.row_count(); ++r) {
        auto [lo, hi] = pt.diagram.rows[r];
        for (int t = lo; t <= hi; ++t) {
            int label = pt.tableau.labels[r][t - lo];
            w.entries[label - 1] = t;
        }
    }
    return w;
}

PlacedTableau map_G(const WeightVector& w) {
    if (!splittable(w)) throw TableauError("construction requires a splittable weight");
    PlacedDiagram d;
    StandardTableau tab;

    auto last_row_with = [&](int t) {
        int found = -1;
        for (int r = 0; r < d.row_count(); ++r)
            if (d.rows[r].first <= t && t <= d.rows[r].second) found = r;
        return found;
    };
    auto insert_row = [&](int at, int u, int label) {
        d.rows.insert(d.rows.begin() + at, {u, u});
        tab.labels.insert(tab.labels.begin() + at, {label});
    };

    for (int m = 1; m <= w.size(); ++m) {
        int u = w.entries[m - 1];
        bool below = u >= 1 && d.has_content(u - 1);
        bool above = d.has_content(u + 1);
        if (!below && !above) {
            int at = 0;
            while (at < d.row_count() && d.rows[at].second > u) ++at;
            insert_row(at, u, m);
        } else if (below && !above) {
            int r = -1;
            for (int i = 0; i < d.row_count(); ++i)
                if (d.rows[i].second == u - 1) r = i;
            if (r < 0) throw TableauError("no free box of content u-1");
            d.rows[r].second = u;
            tab.labels[r].push_back(m);
        } else if (!below && above) {
            int r = last_row_with(u + 1);
            insert_row(r + 1, u, m);
        } else {
            int rc = last_row_with(u + 1);
            int rd = last_row_with(u - 1);
            if (rd != rc + 1 || d.rows[rd].second != u - 1)
                throw TableauError("corner boxes not in the expected position");
            d.rows[rd].second = u;
            tab.labels[rd].push_back(m);
        }
        if (!d.valid()) throw TableauError("construction produced an invalid diagram");
    }
    return PlacedTableau{d, tab};
}

// ---------------------------------------------------------------------------
// Enumeration

std::vector<PlacedDiagram> enumerate_placed_diagrams(int n, int max_content) {
    std::vector<PlacedDiagram> out;
    PlacedDiagram cur;
    std::function<void(int)> rec = [&](int rest) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        int prev_lo = cur.rows.empty() ? max_content + 1 : cur.rows.back().first;
        int prev_hi = cur.rows.empty() ? max_content + 1 : cur.rows.back().second;
        for (int hi = std::min(prev_hi - 1, max_content); hi >= 0; --hi) {
            for (int lo = std::min(hi, prev_lo); lo >= 0; --lo) {
                if (lo == prev_lo && lo != 0) continue;
                int boxes = hi - lo + 1;
                if (boxes > rest) continue;
                cur.rows.emplace_back(lo, hi);
                rec(rest - boxes);
                cur.rows.pop_back();
            }
        }
    };
    rec(n);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PlacedDiagram> enumerate_star_diagrams(int m, int u) {
    std::vector<PlacedDiagram> out;
    if (m < 1) return out;
    for (const auto& d : enumerate_placed_diagrams(m, u))
        if (d.rows[0].second == u) out.push_back(d);
    return out;
}

// ---------------------------------------------------------------------------
// Extended tableaux (characteristic-p strip branch)

namespace {

std::vector<int> extended_sizes(const PlacedDiagram& core, int ext) {
    std::vector<int> sizes;
    for (auto [lo, hi] : core.rows) sizes.push_back(hi - lo + 1);
    sizes[0] += ext;
    return sizes;
}

}  // namespace

bool is_p_standard(const ExtendedTableau& t) {
    const auto& core = t.core;
    if (core.rows.empty() || core.rows[0].second != t.u) return false;
    auto sizes = extended_sizes(core, t.ext);
    if (t.tableau.labels.size() != sizes.size()) return false;
    int n = core.box_count() + t.ext;
    std::vector<bool> used(n + 1, false);
    for (size_t r = 0; r < sizes.size(); ++r) {
        if (static_cast<int>(t.tableau.labels[r].size()) != sizes[r]) return false;
        for (int i = 0; i < sizes[r]; ++i) {
            int v = t.tableau.labels[r][i];
            if (v < 1 || v > n || used[v]) return false;
            used[v] = true;
            if (i && t.tableau.labels[r][i - 1] >= v) return false;
            // Strip boxes (row 0 past the core) have nothing above them.
            if (r > 0) {
                int up = above_in_diagram(core, static_cast<int>(r), i);
                if (up >= 0 && t.tableau.labels[r - 1][up] >= v) return false;
            }
        }
    }
    // The box below the anchor, when present, is labeled after the whole
    // first row including the strip.
    if (core.row_count() > 1) {
        auto [lo1, hi1] = core.rows[1];
        if (hi1 == t.u - 1) {
            int below = t.tableau.labels[1][hi1 - lo1];
            if (below < t.tableau.labels[0].back()) return false;
        }
    }
    return true;
}

std::vector<ExtendedTableau> enumerate_p_standard(const PlacedDiagram& core, int u,
                                                  int ext) {
    std::vector<ExtendedTableau> out;
    auto sizes = extended_sizes(core, ext);
    int total = core.box_count() + ext;
    fill_tableaux(
        sizes,
        [&](int r, int i) {
            if (r == 0) return -1;
            return above_in_diagram(core, r, i);
        },
        total,
        [&](const std::vector<std::vector<int>>& labels) {
            ExtendedTableau t{core, u, ext, StandardTableau{labels}};
            if (is_p_standard(t)) out.push_back(std::move(t));
        });
    std::sort(out.begin(), out.end(),
              [](const ExtendedTableau& a, const ExtendedTableau& b) {
                  return a.tableau < b.tableau;
              });
    return out;
}

long count_p_standard(const PlacedDiagram& core, int u, int ext) {
    return static_cast<long>(enumerate_p_standard(core, u, ext).size());
}

ExtendedTableau reading_extended_tableau(const PlacedDiagram& core, int u, int ext) {
    ExtendedTableau t{core, u, ext, {}};
    int next = 1;
    for (int r = 0; r < core.row_count(); ++r) {
        auto [lo, hi] = core.rows[r];
        int len = hi - lo + 1 + (r == 0 ? ext : 0);
        t.tableau.labels.emplace_back();
        for (int i = 0; i < len; ++i) t.tableau.labels.back().push_back(next++);
    }
    return t;
}

ExtendedTableau map_G2(const WeightVector& w) {
    W2Data data = w2_reduce(w);
    if (!splittable(data.reduced))
        throw TableauError("reduced weight is not splittable");
    PlacedTableau pt = map_G(data.reduced);

    std::vector<bool> removed(w.size() + 1, false);
    for (int pos : data.removed) removed[pos] = true;
    std::vector<int> surviving;
    for (int pos = 1; pos <= w.size(); ++pos)
        if (!removed[pos]) surviving.push_back(pos);

    ExtendedTableau t;
    t.core = pt.diagram;
    t.u = data.u;
    t.ext = static_cast<int>(data.removed.size());
    t.tableau = pt.tableau;
    for (auto& row : t.tableau.labels)
        for (auto& v : row) v = surviving[v - 1];
    for (size_t i = 1; i < data.positions.size(); ++i)
        t.tableau.labels[0].push_back(data.positions[i]);
    if (t.core.rows[0].second != t.u)
        throw TableauError("reduced diagram has no anchor box of content u");
    return t;
}

WeightVector map_F2(const ExtendedTableau& t, std::uint32_t p) {
    int K = (static_cast<int>(p) - 3) / 2 - t.u;
    if (K < 0 || t.ext != 2 * K + 2)
        throw TableauError("strip length does not match the characteristic");
    int n = t.core.box_count() + t.ext;
    WeightVector w;
    w.p = p;
    w.entries.assign(n, -1);
    for (int r = 0; r < t.core.row_count(); ++r) {
        auto [lo, hi] = t.core.rows[r];
        for (int c = lo; c <= hi; ++c)
            w.entries[t.tableau.labels[r][c - lo] - 1] = c;
    }
    int row0_core = t.core.rows[0].second - t.core.rows[0].first + 1;
    for (int j = 0; j < t.ext; ++j) {
        int label = t.tableau.labels[0][row0_core + j];
        int content;
        if (j < K)
            content = t.u + 1 + j;
        else if (j == K)
            content = t.u + K + 1;  // (p-1)/2
        else
            content = t.u + (2 * K + 1 - j);
        w.entries[label - 1] = content;
    }
    return w;
}

// ---------------------------------------------------------------------------
// Classification labels

int default_max_content(int n) { return n + 1; }

namespace {

long pow2(int e) { return 1L << e; }

ClassLabel make_affine_label(const PlacedDiagram& d, int star_u, int n, long f) {
    ClassLabel lab;
    lab.finite = false;
    lab.diagram = d;
    lab.star_u = star_u;
    lab.n = n;
    lab.g0 = d.gamma0();
    lab.f = f;
    lab.dim_thick = pow2(n) * f;
    lab.dim_simple = pow2(n - lab.g0 / 2) * f;
    lab.type = lab.g0 % 2 == 0 ? 'M' : 'Q';
    return lab;
}

PlacedDiagram shifted_diagram(const StrictPartition& lambda) {
    PlacedDiagram d;
    for (int part : lambda.parts) d.rows.emplace_back(0, part - 1);
    return d;
}

}  // namespace

std::string ClassLabel::str() const {
    std::ostringstream os;
    if (finite) {
        os << "partition " << partition.str();
    } else {
        os << "diagram " << diagram.str();
        if (star_u > 0) os << " strip(u=" << star_u << ")";
    }
    os << " n=" << n << " f=" << f << " dim=" << dim_simple << " type=" << type;
    return os.str();
}

std::vector<ClassLabel> classify(int n, std::uint32_t p, bool finite, int max_content) {
    std::vector<ClassLabel> out;
    if (n < 1) return out;
    if (!finite) {
        if (p == 0) {
            int cap = max_content < 0 ? default_max_content(n) : max_content;
            for (const auto& d : enumerate_placed_diagrams(n, cap))
                out.push_back(make_affine_label(d, 0, n, count_tableaux(d)));
        } else {
            int top = index_set_max(p);
            for (const auto& d : enumerate_placed_diagrams(n, top))
                out.push_back(make_affine_label(d, 0, n, count_tableaux(d)));
            for (int u = 1; u <= (static_cast<int>(p) - 3) / 2; ++u) {
                int m = n - static_cast<int>(p) + 2 * u + 1;
                if (m < 1) continue;
                int ext = static_cast<int>(p) - 2 * u - 1;
                for (const auto& d : enumerate_star_diagrams(m, u))
                    out.push_back(
                        make_affine_label(d, u, n, count_p_standard(d, u, ext)));
            }
        }
        return out;
    }

    for (const auto& lambda : strict_partitions(n)) {
        bool keep = false;
        int star_u = 0;
        if (p == 0) {
            keep = true;
        } else {
            int lam1 = lambda.parts[0];
            int lam2 = lambda.length() > 1 ? lambda.parts[1] : 0;
            if (lam1 <= (static_cast<int>(p) + 1) / 2) {
                keep = true;
            } else {
                int u = static_cast<int>(p) - lam1;
                if (u >= 1 && u <= (static_cast<int>(p) - 3) / 2 && lam2 <= u) {
                    keep = true;
                    star_u = u;
                }
            }
        }
        if (!keep) continue;
        ClassLabel lab;
        lab.finite = true;
        lab.partition = lambda;
        lab.star_u = star_u;
        lab.n = n;
        lab.g0 = lambda.length();
        if (star_u == 0) {
            lab.diagram = shifted_diagram(lambda);
            lab.f = count_tableaux(lab.diagram);
        } else {
            StrictPartition core = lambda;
            int ext = static_cast<int>(p) - 2 * star_u - 1;
            core.parts[0] -= ext;  // anchor row keeps contents 0..u
            lab.diagram = shifted_diagram(core);
            lab.f = count_p_standard(lab.diagram, star_u, ext);
        }
        lab.dim_thick = pow2(n) * lab.f;
        lab.dim_simple = pow2(n - lab.g0 / 2) * lab.f;
        lab.type = lab.g0 % 2 == 0 ? 'M' : 'Q';
        out.push_back(std::move(lab));
    }
    return out;
}

WeightVector label_weight(const ClassLabel& label, std::uint32_t p) {
    if (label.star_u == 0)
        return map_F(PlacedTableau{label.diagram, reading_tableau(label.diagram)}, p);
    int ext = static_cast<int>(p) - 2 * label.star_u - 1;
    return map_F2(reading_extended_tableau(label.diagram, label.star_u, ext), p);
}

}  // namespace hc
