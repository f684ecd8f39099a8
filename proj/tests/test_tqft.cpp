#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arcalg/tqft.hpp"

using namespace arcalg;

namespace {
Weight W(const char* s) { return Weight::parse(s); }
}

TEST_CASE("frobenius rules") {
    using P = std::pair<Frob, long long>;
    CHECK(merge_rule(Frob::One, Frob::One) == std::vector<P>{{Frob::One, 1}});
    CHECK(merge_rule(Frob::One, Frob::X) == std::vector<P>{{Frob::X, 1}});
    CHECK(merge_rule(Frob::X, Frob::One) == std::vector<P>{{Frob::X, 1}});
    CHECK(merge_rule(Frob::X, Frob::X).empty());

    auto s1 = split_rule(Frob::One);
    REQUIRE(s1.size() == 2);
    CHECK(s1[0].first == std::pair{Frob::One, Frob::X});
    CHECK(s1[1].first == std::pair{Frob::X, Frob::One});
    auto sx = split_rule(Frob::X);
    REQUIRE(sx.size() == 1);
    CHECK(sx[0].first == std::pair{Frob::X, Frob::X});
}

TEST_CASE("split then merge sends One to 2 X") {
    // Composing the comultiplication with the multiplication on one circle:
    // 1 -> 1xX + Xx1 -> X + X.
    long long total = 0;
    for (auto [pair, c] : split_rule(Frob::One))
        for (auto [w, c2] : merge_rule(pair.first, pair.second)) {
            CHECK(w == Frob::X);
            total += c * c2;
        }
    CHECK(total == 2);
}

TEST_CASE("single saddle moves on a two-circle stack") {
    // Two stacked circles joined by one surgery: a merge.
    StackDiagram d(2, 2);
    d.add_cup(0, 1, 2);
    d.add_cap(0, 1, 2);
    d.add_cup(1, 1, 2);
    d.add_cap(1, 1, 2);
    std::vector<SurgeryMove> moves{surgery_at(d, 0, 1, 2)};
    SurgerySequence seq(d, moves);
    CHECK(seq.initial_components().count == 2);
    CHECK(seq.final_components().count == 1);

    // merge(1,1) = 1
    StateSum out = seq.run({{Valuation{0, 0}, 1}});
    REQUIRE(out.size() == 1);
    CHECK(out.begin()->first == Valuation{0});
    CHECK(out.begin()->second == 1);

    // merge(x,x) = 0
    CHECK(seq.run({{Valuation{1, 1}, 1}}).empty());

    // merge(1,x) = x
    out = seq.run({{Valuation{0, 1}, 1}});
    REQUIRE(out.size() == 1);
    CHECK(out.begin()->first == Valuation{1});
}

TEST_CASE("a split produces two states from One") {
    // A single circle spanning both rows; replacing its two verticals by a
    // cap/cup pair splits it.
    StackDiagram s(2, 2);
    s.add_cup(0, 1, 2);
    s.add_cap(1, 1, 2);
    s.add_vert(0, 1);
    s.add_vert(0, 2);
    // Reverse surgery: replace the two verticals by a cap/cup pair.
    SurgeryMove mv;
    mv.rem1 = {s.node(0, 1), s.node(1, 1), ArcKind::Vert};
    mv.rem2 = {s.node(0, 2), s.node(1, 2), ArcKind::Vert};
    mv.add1 = {s.node(0, 1), s.node(0, 2), ArcKind::Cap};
    mv.add2 = {s.node(1, 1), s.node(1, 2), ArcKind::Cup};
    SurgerySequence seq(s, {mv});
    CHECK(seq.initial_components().count == 1);
    CHECK(seq.final_components().count == 2);

    StateSum out = seq.run({{Valuation{0}, 1}});
    CHECK(out.size() == 2); // 1 -> 1xX + Xx1
    long long coeff_sum = 0;
    for (const auto& [v, c] : out) {
        CHECK(v.size() == 2);
        CHECK(v[0] + v[1] == 1);
        coeff_sum += c;
    }
    CHECK(coeff_sum == 2);

    out = seq.run({{Valuation{1}, 1}});
    REQUIRE(out.size() == 1);
    CHECK(out.begin()->first == Valuation{1, 1}); // x -> xx
}

TEST_CASE("flat tangle composition") {
    FlatTangle id2 = FlatTangle::identity(2);
    FlatTangle u1 = FlatTangle::u_tangle(2, 1);
    CHECK(compose_tangles(id2, u1) == u1);
    CHECK(compose_tangles(u1, id2) == u1);

    FlatTangle uu = compose_tangles(u1, u1);
    CHECK(uu.removed_circles() == 1);
    CHECK(uu.arcs() == u1.arcs());

    FlatTangle z = compose_tangles(FlatTangle::u_tangle(3, 1), FlatTangle::u_tangle(3, 2));
    CHECK(z.removed_circles() == 0);
    CHECK(z.arcs() == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}, {5, 6}});

    // Associativity on a sample.
    FlatTangle a = FlatTangle::u_tangle(3, 1), b = FlatTangle::u_tangle(3, 2),
               c = FlatTangle::u_tangle(3, 1);
    CHECK(compose_tangles(compose_tangles(a, b), c) == compose_tangles(a, compose_tangles(b, c)));

    CHECK_THROWS_AS(compose_tangles(FlatTangle::identity(2), FlatTangle::identity(3)),
                    invalid_parameters);
}

TEST_CASE("closure circle counts") {
    CHECK(closure_circles(FlatTangle::identity(2)) == 2);
    CHECK(closure_circles(FlatTangle::u_tangle(2, 1)) == 1);
    CHECK(closure_circles(compose_tangles(FlatTangle::u_tangle(2, 1), FlatTangle::u_tangle(2, 1))) == 2);
    CHECK(closure_circles(compose_tangles(FlatTangle::u_tangle(3, 1), FlatTangle::u_tangle(3, 2))) == 1);
}

TEST_CASE("stack component labels match circle orientation conventions") {
    // A single circle on one row: cup (1,2) + cap (1,2).  Anticlockwise means
    // Vee at the leftmost point.
    StackDiagram d(1, 2);
    d.add_cup(0, 1, 2);
    d.add_cap(0, 1, 2);
    StackComponents c = analyze(d);
    REQUIRE(c.count == 1);
    CHECK(c.label(d.node(0, 1), Frob::One) == Sym::Vee);
    CHECK(c.label(d.node(0, 2), Frob::One) == Sym::Wedge);
    CHECK(c.label(d.node(0, 1), Frob::X) == Sym::Wedge);

    // Nested circles: labels still alternate around each circle.
    StackDiagram n(1, 4);
    n.add_cup(0, 1, 4);
    n.add_cap(0, 1, 4);
    n.add_cup(0, 2, 3);
    n.add_cap(0, 2, 3);
    StackComponents cn = analyze(n);
    CHECK(cn.count == 2);
    CHECK(cn.label(n.node(0, 1), Frob::One) == Sym::Vee);
    CHECK(cn.label(n.node(0, 4), Frob::One) == Sym::Wedge);
    CHECK(cn.label(n.node(0, 2), Frob::One) == Sym::Vee);
}

TEST_CASE("weights read off a surgered stack stay consistent across rows") {
    Weight b = W("v^v^");
    StackDiagram d(2, 4);
    for (auto [i, j] : cup_diagram(b).cups) {
        d.add_cup(0, i, j);
        d.add_cap(0, i, j);
        d.add_cup(1, i, j);
        d.add_cap(1, i, j);
    }
    std::vector<SurgeryMove> moves;
    for (auto [i, j] : cup_diagram(b).cups) moves.push_back(surgery_at(d, 0, i, j));
    SurgerySequence seq(d, moves);
    const auto& fin = seq.final_components();
    const auto& fd = seq.final_diagram();
    for (int p = 1; p <= 4; ++p) {
        int lo = fd.node(0, p), hi = fd.node(1, p);
        CHECK(fin.comp[static_cast<size_t>(lo)] == fin.comp[static_cast<size_t>(hi)]);
        CHECK(fin.label(lo, Frob::One) == fin.label(hi, Frob::One));
    }
}
