#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arcalg/weight.hpp"

using namespace arcalg;

namespace {

Weight W(const char* s) { return Weight::parse(s); }

// Literal restatement of the balancing condition: a Vee position c is good iff
// some Wedge position c' > c has equally many Vee's and Wedge's strictly
// between, and the partner is the smallest such c'.
std::vector<std::pair<int, int>> good_points_oracle(const Weight& w) {
    std::vector<std::pair<int, int>> out;
    for (int c : w.vee_positions()) {
        for (int cp = c + 1; cp <= w.m(); ++cp) {
            if (w.is_vee(cp)) continue;
            int vees = 0, wedges = 0;
            for (int x = c + 1; x < cp; ++x) (w.is_vee(x) ? vees : wedges)++;
            if (vees == wedges) {
                out.emplace_back(c, cp);
                break;
            }
        }
    }
    return out;
}

} // namespace

TEST_CASE("weight parsing and counting") {
    Weight w = W("v^v^");
    CHECK(w.m() == 4);
    CHECK(w.n() == 2);
    CHECK(w.str() == "v^v^");
    CHECK(w.vee_positions() == std::vector<int>{1, 3});
    CHECK_THROWS_AS(W("vx"), invalid_parameters);
}

TEST_CASE("enumerate_weights") {
    auto l12 = enumerate_weights(1, 2);
    REQUIRE(l12.size() == 2);
    CHECK(l12[0] == W("v^"));
    CHECK(l12[1] == W("^v"));

    auto l03 = enumerate_weights(0, 3);
    REQUIRE(l03.size() == 1);
    CHECK(l03[0] == W("^^^"));

    CHECK(enumerate_weights(2, 4).size() == 6);
    CHECK_THROWS_AS(enumerate_weights(3, 2), invalid_parameters);
    CHECK_THROWS_AS(enumerate_weights(-1, 2), invalid_parameters);

    // Lexicographic with Vee < Wedge, no duplicates.
    auto l25 = enumerate_weights(2, 5);
    CHECK(l25.size() == 10);
    CHECK(std::is_sorted(l25.begin(), l25.end()));
    CHECK(std::adjacent_find(l25.begin(), l25.end()) == l25.end());
}

TEST_CASE("good points: stated examples") {
    CHECK(good_points(W("v^")) == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(good_points(W("^v")).empty());
    CHECK(good_points(W("^^vv^v")) == std::vector<std::pair<int, int>>{{4, 5}});
    CHECK(bad_points(W("^^vv^v")) == std::vector<int>{3, 6});
}

TEST_CASE("good points agree with the balancing oracle") {
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= m; ++n)
            for (const Weight& w : enumerate_weights(n, m)) {
                auto oracle = good_points_oracle(w);
                std::sort(oracle.begin(), oracle.end());
                CHECK(good_points(w) == oracle);
            }
}

TEST_CASE("bruhat order is a partial order") {
    for (auto [n, m] : {std::pair{2, 4}, {2, 5}}) {
        auto weights = enumerate_weights(n, m);
        for (const Weight& a : weights) {
            CHECK(bruhat_leq(a, a));
            for (const Weight& b : weights) {
                if (bruhat_leq(a, b) && bruhat_leq(b, a)) CHECK(a == b);
                for (const Weight& c : weights)
                    if (bruhat_leq(a, b) && bruhat_leq(b, c)) CHECK(bruhat_leq(a, c));
            }
        }
    }
    CHECK_THROWS_AS(bruhat_leq(W("v^"), W("v^^")), invalid_parameters);
}

TEST_CASE("bruhat: vees move right going up") {
    CHECK(bruhat_leq(W("v^"), W("^v")));
    CHECK_FALSE(bruhat_leq(W("^v"), W("v^")));
    CHECK(bruhat_leq(W("vv^^"), W("^^vv")));
}

TEST_CASE("padding maps") {
    CHECK(cl_weight(W("v^")) == W("vv^^"));
    CHECK(e_weight(W("^v")) == W("^v^"));
    CHECK(c_weight(W("v^^")) == W("vv^^"));
    CHECK_THROWS_AS(c_weight(W("vv^")), invalid_parameters);

    // cl and e land in compact weights; all three are injective.
    for (auto [n, m] : {std::pair{1, 3}, {2, 4}, {2, 5}}) {
        std::vector<Weight> cls, es, cs;
        for (const Weight& w : enumerate_weights(n, m)) {
            Weight c = cl_weight(w);
            CHECK(c.m() == 2 * m);
            CHECK(c.n() == m);
            CHECK(is_compact(c));
            cls.push_back(c);
            Weight e = e_weight(w);
            CHECK(e.m() == m + n);
            CHECK(is_compact(e));
            es.push_back(e);
            if (2 * n <= m) cs.push_back(c_weight(w));
        }
        for (auto* v : {&cls, &es, &cs}) {
            std::sort(v->begin(), v->end());
            CHECK(std::adjacent_find(v->begin(), v->end()) == v->end());
        }
    }
}

TEST_CASE("rotate_pd on weights") {
    CHECK(rotate_pd(W("v^")) == W("v^"));
    CHECK(rotate_pd(W("v^^")) == W("vv^"));
    for (const Weight& w : enumerate_weights(2, 4)) {
        CHECK(rotate_pd(w).n() == 2);
        CHECK(rotate_pd(rotate_pd(w)) == w);
    }
}

TEST_CASE("max_weight: stated examples") {
    CHECK(max_weight(W("v^")) == W("^v"));
    CHECK(max_weight(W("^v")) == W("^v"));
    // The maximal weight of Lambda_{n,m} is its own maximum.
    CHECK(max_weight(W("^^vv")) == W("^^vv"));
    CHECK(max_weight(W("^^^vv")) == W("^^^vv"));
}
