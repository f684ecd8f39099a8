#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "arcalg/diagram.hpp"

namespace arcalg {

/// The two states of a circle in the rank-2 Frobenius algebra:
/// One <-> anticlockwise (the leftmost point of the circle is labelled Vee),
/// X   <-> clockwise.
enum class Frob : std::uint8_t { One = 0, X = 1 };

/// Merge rule (1x1 -> 1, 1xX / Xx1 -> X, XxX -> 0), returned as a formal sum.
std::vector<std::pair<Frob, long long>> merge_rule(Frob u, Frob v);

/// Split rule (1 -> 1xX + Xx1, X -> XxX).
std::vector<std::pair<std::pair<Frob, Frob>, long long>> split_rule(Frob u);

// ---------------------------------------------------------------------------
// Stacked diagrams.
//
// A closed stacked diagram lives on a grid of rows x cols points.  Arcs are
// cups (hanging below both endpoints, which lie in one row), caps (above both
// endpoints), or verticals joining a point to the matching point one row up.
// Every grid point that appears is crossed by exactly one strand, entering on
// one side of its row and leaving on the other, so the whole picture is a
// disjoint union of embedded circles.
// ---------------------------------------------------------------------------

enum class ArcKind : std::uint8_t { Cup, Cap, Vert };

struct StackArc {
    int a = 0, b = 0;   // node ids; for Vert, a is the lower node
    ArcKind kind = ArcKind::Cup;

    auto operator<=>(const StackArc&) const = default;
};

class StackDiagram {
public:
    StackDiagram(int rows, int cols) : rows_(rows), cols_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int node(int row, int col1) const { return row * cols_ + (col1 - 1); } // col is 1-based
    int col_of(int node) const { return node % cols_ + 1; }
    int row_of(int node) const { return node / cols_; }

    void add_cup(int row, int i, int j) { arcs_.push_back({node(row, i), node(row, j), ArcKind::Cup}); }
    void add_cap(int row, int i, int j) { arcs_.push_back({node(row, i), node(row, j), ArcKind::Cap}); }
    void add_vert(int lower_row, int col) {
        arcs_.push_back({node(lower_row, col), node(lower_row + 1, col), ArcKind::Vert});
    }

    const std::vector<StackArc>& arcs() const { return arcs_; }

    /// Replace two arcs by two others (a single surgery); arcs are matched by value.
    void replace(const StackArc& r1, const StackArc& r2, const StackArc& a1, const StackArc& a2);

private:
    int rows_, cols_;
    std::vector<StackArc> arcs_;
};

/// Connected components of a stacked diagram, with the canonical labelling:
/// one_label_vee[x] is true iff point x is labelled Vee when its component is
/// oriented anticlockwise (value One); the clockwise labels are the flips.
struct StackComponents {
    int count = 0;
    std::vector<int> comp;                  // node -> component id, or -1 if absent
    std::vector<std::uint8_t> one_label_vee; // node -> canonical label

    Sym label(int node, Frob value) const {
        bool vee = (one_label_vee[static_cast<size_t>(node)] != 0) == (value == Frob::One);
        return vee ? Sym::Vee : Sym::Wedge;
    }
};

StackComponents analyze(const StackDiagram& d);

/// One surgery: remove a cap/cup (or vertical) pair, insert the transposed pair.
struct SurgeryMove {
    StackArc rem1, rem2, add1, add2;
};

/// A cap above row r and a cup below row r+1 spanning (i,j) are replaced by
/// two verticals; this is the move multiplication iterates over.
SurgeryMove surgery_at(const StackDiagram& d, int lower_row, int i, int j);

using Valuation = std::vector<std::uint8_t>; // per component id: 0 = One, 1 = X
using StateSum = std::map<Valuation, long long>;

/// Runs a fixed sequence of surgeries on a stacked diagram.  The component
/// evolution is state-independent and precomputed; states only carry circle
/// valuations, which evolve by the Frobenius rules (merge when the two arcs
/// lie in distinct components, split otherwise).
class SurgerySequence {
public:
    SurgerySequence(StackDiagram initial, std::vector<SurgeryMove> moves);

    const StackComponents& initial_components() const { return analyses_.front(); }
    const StackComponents& final_components() const { return analyses_.back(); }
    const StackDiagram& final_diagram() const { return diagrams_.back(); }

    StateSum run(const StateSum& initial) const;

private:
    struct Step {
        bool is_merge = false;
        int c1 = -1, c2 = -1;      // merged source components (old ids)
        int split_src = -1;        // split source component (old id)
        int merge_dst = -1;        // new id of the merged component
        int split_dst1 = -1, split_dst2 = -1;
        std::vector<int> carry;    // old comp id -> new comp id (-1 for consumed)
        int new_count = 0;
    };

    std::vector<StackDiagram> diagrams_;
    std::vector<StackComponents> analyses_;
    std::vector<Step> steps_;
};

// ---------------------------------------------------------------------------
// Flat tangles.
// ---------------------------------------------------------------------------

/// A crossingless matching between a bottom row and a top row of points,
/// together with the number of closed circles removed while composing.
class FlatTangle {
public:
    FlatTangle() = default;
    FlatTangle(int bottom, int top, std::vector<std::pair<int, int>> arcs, int removed = 0);

    /// Identity tangle on n strands.
    static FlatTangle identity(int n);
    /// The cup-cap tangle joining bottom (i,i+1) and top (i,i+1), other
    /// strands through.
    static FlatTangle u_tangle(int n, int i);

    int bottom_points() const { return bottom_; }
    int top_points() const { return top_; }
    int removed_circles() const { return removed_; }

    // Point encoding: bottom points are 1..bottom, top points bottom+1..bottom+top.
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    int partner(int point) const;

    bool operator==(const FlatTangle& o) const {
        return bottom_ == o.bottom_ && top_ == o.top_ && arcs_ == o.arcs_ && removed_ == o.removed_;
    }

private:
    int bottom_ = 0, top_ = 0, removed_ = 0;
    std::vector<std::pair<int, int>> arcs_;
};

/// Glue s below t (s's top onto t's bottom); closed loops created by the
/// gluing are deleted and counted in removed_circles.
FlatTangle compose_tangles(const FlatTangle& s, const FlatTangle& t);

/// Number of circles of the Markov trace closure (top i joined to bottom i),
/// including previously removed ones.
int closure_circles(const FlatTangle& t);

} // namespace arcalg
