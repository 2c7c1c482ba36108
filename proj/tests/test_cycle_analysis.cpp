#include <doctest.h>

#include <set>

#include "dlab/cycle_analysis.hpp"
#include "dlab/hosts.hpp"

using namespace dlab;

TEST_CASE("claw host cycles: one 9-cycle, three 5s, three 8s") {
    PlaneGraph g = make_claw_host();
    auto cycles = enumerate_cycles(g, 11);
    std::multiset<int> lens;
    for (const auto& c : cycles) lens.insert(c.length);
    CHECK(lens == std::multiset<int>{5, 5, 5, 8, 8, 8, 9});
    for (const auto& c : cycles) {
        if (c.length == 9) {
            CHECK(c.interior == std::vector<int>{10});
            CHECK(c.exterior.empty());
            CHECK_FALSE(c.is_separating);
        } else {
            CHECK(c.interior.empty());
        }
    }
}

TEST_CASE("C5 has exactly one cycle and below-bound search is empty") {
    PlaneGraph c5 = make_cycle(5);
    auto cycles = enumerate_cycles(c5, 11);
    REQUIRE(cycles.size() == 1);
    CHECK_FALSE(cycles[0].is_separating);
    CHECK(enumerate_cycles(make_cycle(4), 3).empty());
}

TEST_CASE("sides_of_cycle rejects non-cycles and handles K3") {
    PlaneGraph g = make_k3();
    auto s = sides_of_cycle(g, {1, 2, 3});
    CHECK(s.interior.empty());
    CHECK(s.exterior.empty());
    CHECK_THROWS_AS(sides_of_cycle(g, {1, 2}), Error);
    CHECK_THROWS_AS(sides_of_cycle(make_cycle(5), {1, 2, 4}), Error);
}

TEST_CASE("bad-partition templates are found on their hosts") {
    for (const auto& host : build_bad_cycle_hosts()) {
        CAPTURE(host.kind);
        const PlaneGraph& g = host.graph;
        REQUIRE(validate_class_G(g).verdict);
        auto cyc = g.outer_walk();
        auto bp = find_bad_partition(g, cyc);
        REQUIRE(bp.has_value());
        CHECK(std::string(bad_kind_name(bp->kind)) == host.kind);
        for (const auto& [walk, len] : bp->cells) {
            CHECK(len != 4);
            CHECK(len != 6);
        }
        auto cls = classify_cycle(g, cyc);
        CHECK_FALSE(cls.good);
    }
}

TEST_CASE("plain cycles are good; short cycles are always good") {
    PlaneGraph c9 = make_cycle(9);
    CHECK(classify_cycle(c9, c9.outer_walk()).good);
    PlaneGraph g = make_claw_host();
    for (const auto& rec : enumerate_cycles(g, 8))
        CHECK(classify_cycle(g, rec.vertices).good);
}

TEST_CASE("long cycles classify only on opt-in") {
    PlaneGraph c12 = make_cycle(12);
    CHECK_THROWS_AS(classify_cycle(c12, c12.outer_walk()), Error);
    CHECK(classify_cycle(c12, c12.outer_walk(), true).good);
}

TEST_CASE("remark 1 passes on the claw host") {
    PlaneGraph g = make_claw_host();
    auto bp = find_bad_partition(g, g.outer_walk());
    REQUIRE(bp);
    auto rep = check_remark1(g, g.outer_walk(), *bp);
    CHECK(rep.all_ok());
}

TEST_CASE("remark 1 equality case tracks the (3,7,3,8)-edge-claw chord") {
    for (const auto& host : build_bad_cycle_hosts()) {
        auto bp = find_bad_partition(host.graph, host.graph.outer_walk());
        REQUIRE(bp);
        auto rep = check_remark1(host.graph, host.graph.outer_walk(), *bp);
        CAPTURE(host.name);
        CHECK(rep.incident_edges_ok);
        CHECK(rep.cells_facial_ok); // the chorded 8-cell falls under the exception
        if (host.name == "edge_claw_3738_chorded") {
            // chord endpoint carries two inside edges; the equality biconditional holds
            CHECK(rep.incident_equality_matches);
            CHECK(rep.all_ok());
        } else if (host.name == "edge_claw_3738") {
            // without the chord no vertex reaches two inside edges: reported,
            // since the minimal-counterexample reading expects the equality
            CHECK_FALSE(rep.incident_equality_matches);
        } else {
            CHECK(rep.all_ok());
        }
    }
}

TEST_CASE("splitting paths of the claw host") {
    PlaneGraph g = make_claw_host();
    auto paths = splitting_paths(g, g.outer_walk(), 5);
    // three splitting 2-paths through the center
    REQUIRE(paths.size() == 3);
    std::set<std::set<int>> endpoints;
    for (const auto& p : paths) {
        CHECK(p.size() == 3);
        CHECK(p[1] == 10);
        endpoints.insert({p.front(), p.back()});
    }
    CHECK(endpoints == std::set<std::set<int>>{{1, 4}, {4, 7}, {1, 7}});
    CHECK(splitting_paths(make_cycle(9), make_cycle(9).outer_walk(), 5).empty());
}

TEST_CASE("lemma-7 table evaluation") {
    PlaneGraph g = make_claw_host();
    auto rep = verify_lemma7_consequence(g, {1, 10, 4}, g.outer_walk());
    CHECK(rep.path_len == 2);
    CHECK(rep.d1_len + rep.d2_len == 9 + 4);
    // 9 = 5 + 6 - 2 split: neither part is a triangle
    CHECK_FALSE(rep.pass);
    CHECK_THROWS_AS(verify_lemma7_consequence(g, {1, 2, 3}, g.outer_walk()), Error);
}

TEST_CASE("moving the outer face swaps interior and exterior") {
    // claw host with the outer face redeclared as one of the 5-cells
    PlaneGraph g = make_claw_host();
    std::vector<int> cell;
    for (int f = 0; f < g.face_count(); ++f)
        if (f != g.outer_face_id() && g.face(f).degree() == 5) {
            cell = g.face(f).walk;
            break;
        }
    std::vector<std::vector<int>> rot;
    for (int v = 1; v <= g.vertex_count(); ++v) rot.push_back(g.rotation(v));
    PlaneGraph h = PlaneGraph::build_from_rotation(g.vertex_count(), rot, cell);
    auto sg = sides_of_cycle(g, {1, 2, 3, 4, 5, 6, 7, 8, 9});
    auto sh = sides_of_cycle(h, {1, 2, 3, 4, 5, 6, 7, 8, 9});
    CHECK(sg.interior == sh.exterior);
    CHECK(sg.exterior == sh.interior);
}
