#include "arcalg/diagram.hpp"

#include <algorithm>
#include <map>

namespace arcalg {

bool ArcDiagram::covers_all_points_once() const {
    std::vector<int> hits(static_cast<size_t>(m + 1), 0);
    for (auto [i, j] : cups) {
        if (i < 1 || j > m || i >= j) return false;
        ++hits[static_cast<size_t>(i)];
        ++hits[static_cast<size_t>(j)];
    }
    for (int r : rays) {
        if (r < 1 || r > m) return false;
        ++hits[static_cast<size_t>(r)];
    }
    for (int p = 1; p <= m; ++p)
        if (hits[static_cast<size_t>(p)] != 1) return false;
    return true;
}

bool ArcDiagram::is_planar() const {
    for (size_t x = 0; x < cups.size(); ++x)
        for (size_t y = x + 1; y < cups.size(); ++y) {
            auto [i, j] = cups[x];
            auto [k, l] = cups[y];
            if (k < i) { std::swap(i, k); std::swap(j, l); }
            if (i < k && k < j && j < l) return false;
        }
    return true;
}

ArcDiagram cup_diagram(const Weight& lambda) {
    ArcDiagram d;
    d.m = lambda.m();
    d.side = Side::Cup;
    d.cups = good_points(lambda);
    std::vector<bool> covered(static_cast<size_t>(d.m + 1), false);
    for (auto [i, j] : d.cups)
        covered[static_cast<size_t>(i)] = covered[static_cast<size_t>(j)] = true;
    for (int p = 1; p <= d.m; ++p)
        if (!covered[static_cast<size_t>(p)]) d.rays.push_back(p);
    return d;
}

ArcDiagram cap_diagram(const Weight& lambda) {
    ArcDiagram d = cup_diagram(lambda);
    d.side = Side::Cap;
    return d;
}

namespace {

bool arcs_oriented(const ArcDiagram& d, const Weight& lambda) {
    for (auto [i, j] : d.cups)
        if (lambda.at(i) == lambda.at(j)) return false;
    // Along the rays, all Wedge labels must precede all Vee labels.
    bool seen_vee = false;
    for (int r : d.rays) {
        if (lambda.at(r) == Sym::Vee)
            seen_vee = true;
        else if (seen_vee)
            return false;
    }
    return true;
}

int clockwise_arcs(const ArcDiagram& d, const Weight& lambda) {
    int count = 0;
    for (auto [i, j] : d.cups) {
        (void)j;
        if (lambda.at(i) == Sym::Wedge) ++count;
    }
    return count;
}

void check_same_type(const Weight& a, const Weight& b, const char* who) {
    if (a.m() != b.m() || a.n() != b.n())
        throw invalid_parameters(std::string(who) + ": weights must have the same type (n,m)");
}

} // namespace

bool is_oriented_cup(const Weight& b, const Weight& lambda) {
    check_same_type(b, lambda, "is_oriented_cup");
    return arcs_oriented(cup_diagram(b), lambda);
}

bool is_oriented_cap(const Weight& lambda, const Weight& a) {
    check_same_type(lambda, a, "is_oriented_cap");
    return arcs_oriented(cap_diagram(a), lambda);
}

bool is_oriented(const Weight& b, const Weight& lambda, const Weight& a) {
    return is_oriented_cup(b, lambda) && is_oriented_cap(lambda, a);
}

int cup_degree(const Weight& b, const Weight& lambda) {
    return clockwise_arcs(cup_diagram(b), lambda);
}

int cap_degree(const Weight& lambda, const Weight& a) {
    return clockwise_arcs(cap_diagram(a), lambda);
}

OrientedCircleDiagram make_diagram(const Weight& b, const Weight& lambda, const Weight& a) {
    if (!is_oriented(b, lambda, a))
        throw invalid_parameters("make_diagram: (" + b.str() + ":" + lambda.str() + ":" +
                                 a.str() + ") is not an oriented circle diagram");
    return OrientedCircleDiagram{b, lambda, a};
}

OrientedCircleDiagram parse_diagram(std::string_view text) {
    size_t p1 = text.find(':');
    size_t p2 = (p1 == std::string_view::npos) ? p1 : text.find(':', p1 + 1);
    if (p1 == std::string_view::npos || p2 == std::string_view::npos)
        throw invalid_parameters("diagram format is cup:mid:cap");
    return make_diagram(Weight::parse(text.substr(0, p1)),
                        Weight::parse(text.substr(p1 + 1, p2 - p1 - 1)),
                        Weight::parse(text.substr(p2 + 1)));
}

int CircleDecomposition::circles() const {
    int c = 0;
    for (const auto& comp : components) c += comp.is_circle ? 1 : 0;
    return c;
}

CircleDecomposition circle_decomposition(const Weight& b, const Weight& a) {
    if (b.m() != a.m())
        throw invalid_parameters("circle_decomposition: point counts differ");
    const int m = b.m();
    ArcDiagram bottom = cup_diagram(b);
    ArcDiagram top = cap_diagram(a);

    // Union-find over points; a point with a ray on either side ends a path.
    std::vector<int> parent(static_cast<size_t>(m + 1));
    for (int p = 0; p <= m; ++p) parent[static_cast<size_t>(p)] = p;
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int x, int y) { parent[static_cast<size_t>(find(x))] = find(y); };
    for (auto [i, j] : bottom.cups) unite(i, j);
    for (auto [i, j] : top.cups) unite(i, j);

    std::vector<int> degree(static_cast<size_t>(m + 1), 0);
    for (auto [i, j] : bottom.cups) {
        ++degree[static_cast<size_t>(i)];
        ++degree[static_cast<size_t>(j)];
    }
    for (auto [i, j] : top.cups) {
        ++degree[static_cast<size_t>(i)];
        ++degree[static_cast<size_t>(j)];
    }

    std::map<int, CircleDecomposition::Component> by_root;
    for (int p = 1; p <= m; ++p)
        by_root[find(p)].points.push_back(p);
    CircleDecomposition out;
    for (auto& [root, comp] : by_root) {
        (void)root;
        comp.is_circle = std::all_of(comp.points.begin(), comp.points.end(), [&](int p) {
            return degree[static_cast<size_t>(p)] == 2;
        });
        out.components.push_back(std::move(comp));
    }
    return out;
}

std::vector<Weight> orientations_of(const Weight& b, const Weight& a) {
    check_same_type(b, a, "orientations_of");
    std::vector<Weight> out;
    for (const Weight& lambda : enumerate_weights(b.n(), b.m()))
        if (is_oriented(b, lambda, a)) out.push_back(lambda);
    std::stable_sort(out.begin(), out.end(), [&](const Weight& x, const Weight& y) {
        int dx = cup_degree(b, x) + cap_degree(x, a);
        int dy = cup_degree(b, y) + cap_degree(y, a);
        return dx != dy ? dx < dy : x < y;
    });
    return out;
}

OrientedCircleDiagram reflect(const OrientedCircleDiagram& d) {
    return OrientedCircleDiagram{d.cap, d.mid, d.cup};
}

OrientedCircleDiagram rotate_pd(const OrientedCircleDiagram& d) {
    return OrientedCircleDiagram{rotate_pd(d.cap), rotate_pd(d.mid), rotate_pd(d.cup)};
}

OrientedCircleDiagram cl_diagram(const OrientedCircleDiagram& d) {
    return OrientedCircleDiagram{cl_weight(d.cup), cl_weight(d.mid), cl_weight(d.cap)};
}

} // namespace arcalg
