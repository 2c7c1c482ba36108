#include <doctest.h>

#include <cmath>
#include <map>

#include "dlab/coloring.hpp"
#include "dlab/hosts.hpp"

using namespace dlab;

namespace {

Coloring make(const std::vector<int>& vals) {
    Coloring c;
    c.color.assign(1, 0);
    c.color.insert(c.color.end(), vals.begin(), vals.end());
    return c;
}

// literal 3^n filter, the meta-oracle for enumerate_all
long count_all_naive(const PlaneGraph& g) {
    int n = g.vertex_count();
    long total = std::lround(std::pow(3.0, n));
    long count = 0;
    for (long code = 0; code < total; ++code) {
        Coloring c = Coloring::blank(n);
        long x = code;
        for (int v = 1; v <= n; ++v) {
            c.color[v] = static_cast<int>(x % 3) + 1;
            x /= 3;
        }
        if (coloring_valid(g, c)) ++count;
    }
    return count;
}

} // namespace

TEST_CASE("verify_coloring on K3") {
    PlaneGraph g = make_k3();
    CHECK(verify_coloring(g, make({1, 1, 2})).empty());
    CHECK(verify_coloring(g, make({1, 1, 1})).size() == 2);
    auto v = verify_coloring(g, make({2, 2, 3}));
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == Violation::MonochromaticEdge);
    CHECK(v[0].color == 2);
}

TEST_CASE("enumeration counts: vertex, edge, triangle") {
    PlaneGraph v1 = PlaneGraph::build_from_rotation(1, {{}}, {1});
    // a single isolated vertex has no faces to trace; build a tiny special case
    // via the path graph instead
    (void)v1;
    PlaneGraph e = make_path2();
    CHECK(enumerate_all(e).size() == 7);
    PlaneGraph k3 = make_k3();
    CHECK(enumerate_all(k3).size() == 12);
    CHECK(count_all_naive(k3) == 12);
}

TEST_CASE("enumerate_all equals the naive filter on small graphs") {
    for (const PlaneGraph& g : {make_k4(), make_cycle(5), make_cycle(7), make_wheel5()})
        CHECK(static_cast<long>(enumerate_all(g).size()) == count_all_naive(g));
}

TEST_CASE("enumerate_all respects its size bound") {
    CHECK_THROWS_AS(enumerate_all(make_cycle(9), 5), Error);
}

TEST_CASE("solve agrees with enumeration and produces valid colorings") {
    for (const PlaneGraph& g :
         {make_k3(), make_k4(), make_cycle(5), make_wheel5(), make_claw_host()}) {
        auto sol = solve(g);
        auto all = enumerate_all(g);
        CHECK(sol.has_value() == !all.empty());
        if (sol) CHECK(coloring_valid(g, *sol));
        for (const auto& c : all) CHECK(coloring_valid(g, c));
    }
}

TEST_CASE("swapping classes 2 and 3 preserves validity") {
    PlaneGraph g = make_wheel5();
    for (const auto& c : enumerate_all(g)) {
        Coloring s = c;
        for (int v = 1; v <= g.vertex_count(); ++v)
            if (s.color[v] >= 2) s.color[v] = 5 - s.color[v];
        CHECK(coloring_valid(g, s));
    }
}

TEST_CASE("super_extend: plain cycle boundary extends to itself") {
    PlaneGraph c9 = make_cycle(9);
    int ok = 0;
    for (const auto& pre : enumerate_induced_colorings(c9, c9.outer_walk())) {
        Precoloring p;
        p.assignment = pre;
        auto wit = super_extend(c9, p);
        REQUIRE(wit.has_value());
        for (auto [v, k] : pre) CHECK(wit->coloring.color[v] == k);
        ++ok;
    }
    CHECK(ok > 0);
}

TEST_CASE("super_extend with one interior vertex always succeeds") {
    // C9 plus an interior vertex joined to two boundary vertices at distance 3
    Disk d(9);
    d.add_path(1, 4, 1);
    PlaneGraph g = d.graph();
    REQUIRE(validate_class_G(g).verdict);
    long count = 0;
    for (const auto& pre : enumerate_induced_colorings(g, g.outer_walk())) {
        Precoloring p;
        p.assignment = pre;
        auto wit = super_extend(g, p);
        REQUIRE(wit.has_value());
        CHECK(coloring_valid(g, wit->coloring));
        // the cross-boundary discipline
        int iv = 10;
        for (int u : g.rotation(iv)) CHECK(wit->coloring.color[iv] != wit->coloring.color[u]);
        ++count;
    }
    CHECK(count > 0);
}

TEST_CASE("super_extend can fail on a bad boundary") {
    PlaneGraph g = make_claw_host(); // D is a bad 9-cycle
    long failures = 0, total = 0;
    for (const auto& pre : enumerate_induced_colorings(g, g.outer_walk())) {
        Precoloring p;
        p.assignment = pre;
        ++total;
        if (!super_extend(g, p)) ++failures;
    }
    CHECK(total > 0);
    // the claw host leaves no free color at the center when the three
    // attachment vertices are pairwise distinct and class 1 is blocked
    CHECK(failures > 0);
}

TEST_CASE("precoloring validation errors") {
    PlaneGraph c5 = make_cycle(5);
    Precoloring p;
    p.assignment = {{1, 2}, {2, 2}, {3, 1}, {4, 1}, {5, 3}};
    CHECK_THROWS_AS(super_extend(c5, p), Error); // 2-2 edge
    Precoloring q;
    q.assignment = {{1, 1}, {2, 2}};
    CHECK_THROWS_AS(super_extend(c5, q), Error); // not all of V(D)
}
