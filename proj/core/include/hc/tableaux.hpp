#pragma once

#include <string>
#include <vector>

#include "hc/weights.hpp"

namespace hc {

/// Partition with strictly decreasing positive parts.
struct StrictPartition {
    std::vector<int> parts;

    int size() const;  // number of boxes
    int length() const { return static_cast<int>(parts.size()); }
    bool valid() const;
    bool operator==(const StrictPartition& o) const { return parts == o.parts; }
    bool operator<(const StrictPartition& o) const { return parts < o.parts; }
    std::string str() const;
};

std::vector<StrictPartition> strict_partitions(int n);

/// Placed skew shifted diagram in canonical position.  Row r (top to bottom)
/// carries boxes of consecutive contents [lo_r, hi_r]; a box is addressed as
/// (row, content).  Canonical position realizes the shape as outer/inner
/// strict partitions with outer_r = hi_r + 1, inner_r = lo_r, so the content
/// of a box equals column - row.  Validity:
///   hi strictly decreases down rows; lo is non-increasing and repeats only
///   at 0 (the pinned corner); all contents are >= 0.
/// Components are maximal runs of rows with lo_r <= hi_{r+1} + 1; distinct
/// components are separated by content gaps >= 2 and are listed northeast
/// to southwest, which makes equality of the row lists the diagram identity.
struct PlacedDiagram {
    std::vector<std::pair<int, int>> rows;  // (lo, hi) per row

    static PlacedDiagram from_partitions(const StrictPartition& outer,
                                         const StrictPartition& inner);

    bool valid() const;
    int box_count() const;
    int row_count() const { return static_cast<int>(rows.size()); }
    int gamma0() const;  // boxes of content 0
    int max_content() const;
    bool has_content(int t) const;

    StrictPartition outer() const;
    StrictPartition inner() const;

    /// Rows grouped into connected components (indices into rows).
    std::vector<std::vector<int>> components() const;

    bool operator==(const PlacedDiagram& o) const { return rows == o.rows; }
    bool operator<(const PlacedDiagram& o) const { return rows < o.rows; }
    std::string str() const;         // one-line row-interval form
    std::string box_layout() const;  // aligned box drawing of the contents
};

/// Filling of a diagram; labels[r][i] is the label of the box of content
/// lo_r + i in row r.
struct StandardTableau {
    std::vector<std::vector<int>> labels;

    bool operator==(const StandardTableau& o) const { return labels == o.labels; }
    bool operator<(const StandardTableau& o) const { return labels < o.labels; }
};

struct PlacedTableau {
    PlacedDiagram diagram;
    StandardTableau tableau;

    bool operator==(const PlacedTableau& o) const {
        return diagram == o.diagram && tableau == o.tableau;
    }
    std::string str() const;
};

/// Labels strictly increase along rows and down columns (box (r, t) sits
/// above box (r+1, t-1)).
bool is_standard(const PlacedDiagram& d, const StandardTableau& t);

std::vector<StandardTableau> enumerate_tableaux(const PlacedDiagram& d);
long count_tableaux(const PlacedDiagram& d);

/// Row-major filling 1..n; always standard.
StandardTableau reading_tableau(const PlacedDiagram& d);

/// Reads contents in label order.  The image of a standard filling of a
/// placed diagram is splittable.
WeightVector map_F(const PlacedTableau& pt, std::uint32_t p);

/// Inverse construction: grows the diagram one box per entry (new component /
/// extend right / new row below / corner fill).  Requires a splittable input.
PlacedTableau map_G(const WeightVector& w);

/// All placed diagrams with n boxes and contents <= max_content.
std::vector<PlacedDiagram> enumerate_placed_diagrams(int n, int max_content);

/// Placed diagrams with m boxes, contents <= u, and exactly one box of
/// content u (the top-right box that anchors the appended strip).
std::vector<PlacedDiagram> enumerate_star_diagrams(int m, int u);

/// Tableau on the extension of a starred diagram: row 0 gains `ext` boxes to
/// the right of the unique content-u box.  labels[0] has ext extra entries.
struct ExtendedTableau {
    PlacedDiagram core;
    int u = 0;    // content of the anchor box
    int ext = 0;  // number of appended boxes (p - 2u - 1)
    StandardTableau tableau;

    bool operator==(const ExtendedTableau& o) const {
        return core == o.core && u == o.u && ext == o.ext && tableau == o.tableau;
    }
};

/// Standard on the extended shape, and when a box sits below the anchor its
/// label exceeds the label of the last appended box.
bool is_p_standard(const ExtendedTableau& t);

std::vector<ExtendedTableau> enumerate_p_standard(const PlacedDiagram& core, int u,
                                                  int ext);
long count_p_standard(const PlacedDiagram& core, int u, int ext);

/// Row-major filling of the extended shape; always p-standard.
ExtendedTableau reading_extended_tableau(const PlacedDiagram& core, int u, int ext);

/// Characteristic-p branch of the correspondence: reduce the weight, map the
/// reduction through the diagram construction, relabel by the surviving
/// positions, and append the strip.
ExtendedTableau map_G2(const WeightVector& w);

/// Inverse: assign the peak contents u+1, ..., (p-1)/2, ..., u+1, u to the
/// appended strip and read contents in label order.
WeightVector map_F2(const ExtendedTableau& t, std::uint32_t p);

/// A classification label: a placed diagram (affine) or a strict partition
/// (finite) together with its dimension and type data.
struct ClassLabel {
    bool finite = false;
    PlacedDiagram diagram;      // affine labels; for finite the shifted shape
    StrictPartition partition;  // finite labels
    int star_u = 0;             // > 0 on the appended-strip branch
    int n = 0;
    int g0 = 0;           // content-0 boxes (= length for finite labels)
    long f = 0;           // standard (or strip-constrained) tableau count
    long dim_simple = 0;  // 2^(n - floor(g0/2)) * f
    long dim_thick = 0;   // 2^n * f
    char type = 'M';      // M if g0 even, Q if g0 odd
    std::string str() const;
};

/// Classification labels for rank n in characteristic p.  max_content bounds
/// the characteristic-0 affine enumeration (contents are otherwise
/// unbounded); pass -1 for the default n + 2.
std::vector<ClassLabel> classify(int n, std::uint32_t p, bool finite,
                                 int max_content = -1);

/// Canonical weight whose class realizes the label.
WeightVector label_weight(const ClassLabel& label, std::uint32_t p);

int default_max_content(int n);

}  // namespace hc
