#include "arcalg/tqft.hpp"

#include <algorithm>

#include "arcalg/errors.hpp"

namespace arcalg {

std::vector<std::pair<Frob, long long>> merge_rule(Frob u, Frob v) {
    if (u == Frob::One && v == Frob::One) return {{Frob::One, 1}};
    if (u == Frob::X && v == Frob::X) return {};
    return {{Frob::X, 1}};
}

std::vector<std::pair<std::pair<Frob, Frob>, long long>> split_rule(Frob u) {
    if (u == Frob::One)
        return {{{Frob::One, Frob::X}, 1}, {{Frob::X, Frob::One}, 1}};
    return {{{Frob::X, Frob::X}, 1}};
}

void StackDiagram::replace(const StackArc& r1, const StackArc& r2, const StackArc& a1,
                           const StackArc& a2) {
    auto erase_one = [&](const StackArc& arc) {
        auto it = std::find(arcs_.begin(), arcs_.end(), arc);
        if (it == arcs_.end()) throw structural_error("StackDiagram::replace: arc not present");
        arcs_.erase(it);
    };
    erase_one(r1);
    erase_one(r2);
    arcs_.push_back(a1);
    arcs_.push_back(a2);
}

namespace {

enum class Slot : std::uint8_t { Below, Above };

// Side at which an arc attaches to one of its endpoints.
Slot slot_at(const StackArc& arc, int node) {
    switch (arc.kind) {
        case ArcKind::Cup: return Slot::Below;
        case ArcKind::Cap: return Slot::Above;
        case ArcKind::Vert: return node == arc.a ? Slot::Above : Slot::Below;
    }
    return Slot::Below;
}

} // namespace

StackComponents analyze(const StackDiagram& d) {
    const int n_nodes = d.rows() * d.cols();
    std::vector<int> below(static_cast<size_t>(n_nodes), -1), above(static_cast<size_t>(n_nodes), -1);
    std::vector<bool> used(static_cast<size_t>(n_nodes), false);
    const auto& arcs = d.arcs();
    for (size_t k = 0; k < arcs.size(); ++k) {
        for (int node : {arcs[k].a, arcs[k].b}) {
            used[static_cast<size_t>(node)] = true;
            auto& slot = slot_at(arcs[k], node) == Slot::Below ? below : above;
            if (slot[static_cast<size_t>(node)] != -1)
                throw structural_error("stacked diagram: two arcs attach to one point from the same side");
            slot[static_cast<size_t>(node)] = static_cast<int>(k);
        }
    }

    StackComponents out;
    out.comp.assign(static_cast<size_t>(n_nodes), -1);
    out.one_label_vee.assign(static_cast<size_t>(n_nodes), 0);

    std::vector<int> nodes_of_comp;
    for (int start = 0; start < n_nodes; ++start) {
        if (!used[static_cast<size_t>(start)] || out.comp[static_cast<size_t>(start)] != -1) continue;
        if (below[static_cast<size_t>(start)] == -1 || above[static_cast<size_t>(start)] == -1)
            throw structural_error("stacked diagram is not closed");
        const int id = out.count++;
        nodes_of_comp.clear();
        // Walk the circle; entering a point from below means the strand is
        // moving upward there, i.e. the label is Wedge for this orientation.
        int node = start;
        Slot entered = Slot::Below;
        std::vector<std::uint8_t> walk_label(static_cast<size_t>(n_nodes), 0);
        do {
            out.comp[static_cast<size_t>(node)] = id;
            nodes_of_comp.push_back(node);
            walk_label[static_cast<size_t>(node)] = (entered == Slot::Above) ? 1 : 0; // 1 = Vee
            int arc_idx = (entered == Slot::Below) ? above[static_cast<size_t>(node)]
                                                   : below[static_cast<size_t>(node)];
            const StackArc& arc = arcs[static_cast<size_t>(arc_idx)];
            int next = arc.a == node ? arc.b : arc.a;
            entered = slot_at(arc, next);
            node = next;
        } while (node != start);

        // Anchor: at the leftmost column of a circle the anticlockwise
        // orientation moves downward (label Vee).
        int anchor = nodes_of_comp.front();
        for (int x : nodes_of_comp)
            if (d.col_of(x) < d.col_of(anchor)) anchor = x;
        bool flip_all = walk_label[static_cast<size_t>(anchor)] == 0;
        for (int x : nodes_of_comp)
            out.one_label_vee[static_cast<size_t>(x)] =
                static_cast<std::uint8_t>(walk_label[static_cast<size_t>(x)] ^ (flip_all ? 1 : 0));
    }
    return out;
}

SurgeryMove surgery_at(const StackDiagram& d, int lower_row, int i, int j) {
    SurgeryMove mv;
    mv.rem1 = {d.node(lower_row, i), d.node(lower_row, j), ArcKind::Cap};
    mv.rem2 = {d.node(lower_row + 1, i), d.node(lower_row + 1, j), ArcKind::Cup};
    mv.add1 = {d.node(lower_row, i), d.node(lower_row + 1, i), ArcKind::Vert};
    mv.add2 = {d.node(lower_row, j), d.node(lower_row + 1, j), ArcKind::Vert};
    return mv;
}

SurgerySequence::SurgerySequence(StackDiagram initial, std::vector<SurgeryMove> moves) {
    diagrams_.push_back(std::move(initial));
    analyses_.push_back(analyze(diagrams_.back()));
    for (const SurgeryMove& mv : moves) {
        const StackComponents& before = analyses_.back();
        Step step;
        int comp_r1 = before.comp[static_cast<size_t>(mv.rem1.a)];
        int comp_r2 = before.comp[static_cast<size_t>(mv.rem2.a)];

        StackDiagram next = diagrams_.back();
        next.replace(mv.rem1, mv.rem2, mv.add1, mv.add2);
        StackComponents after = analyze(next);
        step.new_count = after.count;

        // Old component -> new component, via any surviving node.
        step.carry.assign(static_cast<size_t>(before.count), -1);
        for (size_t x = 0; x < before.comp.size(); ++x) {
            int oc = before.comp[x];
            if (oc >= 0 && step.carry[static_cast<size_t>(oc)] == -1)
                step.carry[static_cast<size_t>(oc)] = after.comp[x];
        }

        if (comp_r1 != comp_r2) {
            step.is_merge = true;
            step.c1 = comp_r1;
            step.c2 = comp_r2;
            step.merge_dst = after.comp[static_cast<size_t>(mv.rem1.a)];
            if (step.merge_dst != after.comp[static_cast<size_t>(mv.rem2.a)])
                throw structural_error("surgery on distinct components did not merge them");
        } else {
            step.split_src = comp_r1;
            step.split_dst1 = after.comp[static_cast<size_t>(mv.add1.a)];
            step.split_dst2 = after.comp[static_cast<size_t>(mv.add2.a)];
            if (step.split_dst1 == step.split_dst2)
                throw structural_error("surgery on one component did not split it");
        }
        steps_.push_back(std::move(step));
        diagrams_.push_back(std::move(next));
        analyses_.push_back(std::move(after));
    }
}

StateSum SurgerySequence::run(const StateSum& initial) const {
    StateSum cur = initial;
    for (const Step& step : steps_) {
        StateSum next;
        for (const auto& [vals, coeff] : cur) {
            Valuation base(static_cast<size_t>(step.new_count), 0);
            for (size_t oc = 0; oc < step.carry.size(); ++oc) {
                int nc = step.carry[oc];
                if (nc >= 0 && static_cast<int>(oc) != step.c1 && static_cast<int>(oc) != step.c2 &&
                    static_cast<int>(oc) != step.split_src)
                    base[static_cast<size_t>(nc)] = vals[oc];
            }
            if (step.is_merge) {
                auto u = static_cast<Frob>(vals[static_cast<size_t>(step.c1)]);
                auto v = static_cast<Frob>(vals[static_cast<size_t>(step.c2)]);
                for (auto [w, c] : merge_rule(u, v)) {
                    base[static_cast<size_t>(step.merge_dst)] = static_cast<std::uint8_t>(w);
                    next[base] += coeff * c;
                }
            } else {
                auto u = static_cast<Frob>(vals[static_cast<size_t>(step.split_src)]);
                for (auto [pair, c] : split_rule(u)) {
                    base[static_cast<size_t>(step.split_dst1)] = static_cast<std::uint8_t>(pair.first);
                    base[static_cast<size_t>(step.split_dst2)] = static_cast<std::uint8_t>(pair.second);
                    next[base] += coeff * c;
                }
            }
        }
        for (auto it = next.begin(); it != next.end();)
            it = it->second == 0 ? next.erase(it) : std::next(it);
        cur = std::move(next);
    }
    return cur;
}

// ---------------------------------------------------------------------------

FlatTangle::FlatTangle(int bottom, int top, std::vector<std::pair<int, int>> arcs, int removed)
    : bottom_(bottom), top_(top), removed_(removed), arcs_(std::move(arcs)) {
    if ((bottom_ + top_) % 2 != 0)
        throw invalid_parameters("flat tangle: bottom + top point count must be even");
    std::vector<int> hits(static_cast<size_t>(bottom_ + top_ + 1), 0);
    for (auto& [x, y] : arcs_) {
        if (x > y) std::swap(x, y);
        ++hits[static_cast<size_t>(x)];
        ++hits[static_cast<size_t>(y)];
    }
    for (int p = 1; p <= bottom_ + top_; ++p)
        if (hits[static_cast<size_t>(p)] != 1)
            throw invalid_parameters("flat tangle: arcs must match every point exactly once");
    std::sort(arcs_.begin(), arcs_.end());
}

FlatTangle FlatTangle::identity(int n) {
    std::vector<std::pair<int, int>> arcs;
    for (int i = 1; i <= n; ++i) arcs.emplace_back(i, n + i);
    return FlatTangle(n, n, std::move(arcs));
}

FlatTangle FlatTangle::u_tangle(int n, int i) {
    if (i < 1 || i + 1 > n) throw invalid_parameters("u_tangle: index out of range");
    std::vector<std::pair<int, int>> arcs;
    arcs.emplace_back(i, i + 1);             // bottom cap
    arcs.emplace_back(n + i, n + i + 1);     // top cup
    for (int k = 1; k <= n; ++k)
        if (k != i && k != i + 1) arcs.emplace_back(k, n + k);
    return FlatTangle(n, n, std::move(arcs));
}

int FlatTangle::partner(int point) const {
    for (auto [x, y] : arcs_) {
        if (x == point) return y;
        if (y == point) return x;
    }
    throw invalid_parameters("FlatTangle::partner: point out of range");
}

FlatTangle compose_tangles(const FlatTangle& s, const FlatTangle& t) {
    if (s.top_points() != t.bottom_points())
        throw invalid_parameters("compose_tangles: size mismatch");
    const int b = s.bottom_points(), mid = s.top_points(), top = t.top_points();

    // Uniform point ids: s-bottom 1..b, middle b+1..b+mid, t-top b+mid+1..b+mid+top.
    std::vector<int> link_s(static_cast<size_t>(b + mid + top + 1), 0);
    std::vector<int> link_t(static_cast<size_t>(b + mid + top + 1), 0);
    for (auto [x, y] : s.arcs()) {
        link_s[static_cast<size_t>(x)] = y;
        link_s[static_cast<size_t>(y)] = x;
    }
    for (auto [x, y] : t.arcs()) {
        link_t[static_cast<size_t>(b + x)] = b + y;
        link_t[static_cast<size_t>(b + y)] = b + x;
    }

    auto is_external = [&](int p) { return p <= b || p > b + mid; };

    std::vector<bool> seen(static_cast<size_t>(b + mid + top + 1), false);
    std::vector<std::pair<int, int>> arcs;
    for (int start = 1; start <= b + mid + top; ++start) {
        if (!is_external(start) || seen[static_cast<size_t>(start)]) continue;
        seen[static_cast<size_t>(start)] = true;
        // Follow the strand through the middle row; s-arcs and t-arcs alternate.
        int cur = start;
        bool in_s = start <= b;
        while (true) {
            int nxt = in_s ? link_s[static_cast<size_t>(cur)] : link_t[static_cast<size_t>(cur)];
            seen[static_cast<size_t>(nxt)] = true;
            if (is_external(nxt)) {
                int a = start <= b ? start : start - mid;
                int z = nxt <= b ? nxt : nxt - mid;
                arcs.emplace_back(a, z);
                break;
            }
            in_s = !in_s;
            cur = nxt;
        }
    }
    int removed = s.removed_circles() + t.removed_circles();
    for (int p = b + 1; p <= b + mid; ++p) {
        if (seen[static_cast<size_t>(p)]) continue;
        ++removed; // a closed loop trapped in the middle
        int cur = p;
        bool in_s = true;
        do {
            seen[static_cast<size_t>(cur)] = true;
            int nxt = in_s ? link_s[static_cast<size_t>(cur)] : link_t[static_cast<size_t>(cur)];
            seen[static_cast<size_t>(nxt)] = true;
            in_s = !in_s;
            cur = nxt;
        } while (cur != p);
    }
    return FlatTangle(b, top, std::move(arcs), removed);
}

int closure_circles(const FlatTangle& t) {
    if (t.bottom_points() != t.top_points())
        throw invalid_parameters("closure_circles: tangle must have equal boundary sizes");
    const int n = t.bottom_points();
    std::vector<int> parent(static_cast<size_t>(2 * n + 1));
    for (int p = 0; p <= 2 * n; ++p) parent[static_cast<size_t>(p)] = p;
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)] =
            parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        return x;
    };
    auto unite = [&](int x, int y) { parent[static_cast<size_t>(find(x))] = find(y); };
    for (auto [x, y] : t.arcs()) unite(x, y);
    for (int i = 1; i <= n; ++i) unite(i, n + i); // trace closure
    std::vector<bool> root_seen(static_cast<size_t>(2 * n + 1), false);
    int circles = t.removed_circles();
    for (int p = 1; p <= 2 * n; ++p) {
        int r = find(p);
        if (!root_seen[static_cast<size_t>(r)]) {
            root_seen[static_cast<size_t>(r)] = true;
            ++circles;
        }
    }
    return circles;
}

} // namespace arcalg
