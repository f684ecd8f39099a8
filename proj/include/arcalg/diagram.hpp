#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "arcalg/weight.hpp"

namespace arcalg {

enum class Side : std::uint8_t { Cup, Cap };

/// A cup or cap diagram on m points: the planar matching made of the good-point
/// cups of a weight, plus a ray at every uncovered point.  Cups are stored as
/// pairs (i,j), i<j, sorted by left endpoint; a cap diagram is the mirror image
/// and carries the same combinatorial data.
struct ArcDiagram {
    int m = 0;
    Side side = Side::Cup;
    std::vector<std::pair<int, int>> cups; // non-crossing, sorted
    std::vector<int> rays;                 // sorted

    bool covers_all_points_once() const;
    bool is_planar() const;
};

ArcDiagram cup_diagram(const Weight& lambda);
ArcDiagram cap_diagram(const Weight& lambda);

/// Orientation rules for a cup-only or cap-only diagram against a weight:
/// every arc has oppositely labelled endpoints, and along the ray positions,
/// read left to right, every Wedge precedes every Vee.
bool is_oriented_cup(const Weight& b, const Weight& lambda);
bool is_oriented_cap(const Weight& lambda, const Weight& a);
bool is_oriented(const Weight& b, const Weight& lambda, const Weight& a);

/// Number of clockwise arcs (left endpoint labelled Wedge) of the cup part,
/// the cap part, and their sum.  Degree is additive across the two halves.
int cup_degree(const Weight& b, const Weight& lambda);
int cap_degree(const Weight& lambda, const Weight& a);

/// An oriented circle diagram (b, lambda, a): cup diagram of b below, a row of
/// m points labelled by lambda, cap diagram of a above.  The canonical basis
/// element of the arc algebras; keyed and ordered by its weight triple.
struct OrientedCircleDiagram {
    Weight cup;
    Weight mid;
    Weight cap;

    int degree() const { return cup_degree(cup, mid) + cap_degree(mid, cap); }
    std::string str() const { return cup.str() + ":" + mid.str() + ":" + cap.str(); }

    auto operator<=>(const OrientedCircleDiagram&) const = default;
};

/// Checked constructor; throws invalid_parameters on size mismatch or a
/// non-oriented triple.
OrientedCircleDiagram make_diagram(const Weight& b, const Weight& lambda, const Weight& a);

/// Parse "cup:mid:cap" (see str()).
OrientedCircleDiagram parse_diagram(std::string_view text);

/// The closed 1-manifold underlying cup_diagram(b) glued to cap_diagram(a):
/// components are circles (alternating cup/cap arcs) or lines (paths ending
/// in rays), listed by smallest point; every point lies in exactly one.
struct CircleDecomposition {
    struct Component {
        bool is_circle = false;
        std::vector<int> points; // sorted
    };
    std::vector<Component> components;

    int circles() const;
    int lines() const { return static_cast<int>(components.size()) - circles(); }
};

CircleDecomposition circle_decomposition(const Weight& b, const Weight& a);

/// All weights lambda with is_oriented(b, lambda, a), sorted by
/// (degree, lexicographic).
std::vector<Weight> orientations_of(const Weight& b, const Weight& a);

/// Reflection along the horizontal axis: (b, lambda, a) -> (a, lambda, b).
/// Degree-preserving involution.
OrientedCircleDiagram reflect(const OrientedCircleDiagram& d);

/// Rotation by pi: cup and cap parts swap and reverse; degree-preserving.
OrientedCircleDiagram rotate_pd(const OrientedCircleDiagram& d);

/// Closure padding applied to all three weights.
OrientedCircleDiagram cl_diagram(const OrientedCircleDiagram& d);

} // namespace arcalg
