#include <doctest.h>

#include <algorithm>
#include <set>

#include "dlab/hosts.hpp"
#include "dlab/plane_graph.hpp"
#include "dlab/plg_io.hpp"

using namespace dlab;

TEST_CASE("K3 traces two triangular faces and matches the declared outer walk") {
    PlaneGraph g = make_k3();
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.face_count() == 2);
    CHECK(g.face(g.outer_face_id()).degree() == 3);
    CHECK(cyclic_equal(g.face(g.outer_face_id()).walk, {1, 2, 3}));
    for (int v = 1; v <= 3; ++v) {
        auto c = classify_vertex(g, v);
        CHECK(c.is_external);
        CHECK(c.degree == 2);
        CHECK_FALSE(c.is_light);
    }
}

TEST_CASE("single edge is accepted with one face of length 2") {
    PlaneGraph g = make_path2();
    CHECK(g.face_count() == 1);
    CHECK(g.face(0).degree() == 2);
    CHECK(g.outer_face_id() == 0);
}

TEST_CASE("dart conservation holds on assorted graphs") {
    for (const PlaneGraph& g : {make_k3(), make_k4(), make_wheel5(), make_claw_host()}) {
        long total = 0;
        for (int f = 0; f < g.face_count(); ++f) total += g.face(f).degree();
        CHECK(total == 2L * g.edge_count());
        CHECK(g.vertex_count() - g.edge_count() + g.face_count() == 2);
    }
}

TEST_CASE("a K5 rotation system violates Euler") {
    std::vector<std::vector<int>> rot(5);
    for (int v = 1; v <= 5; ++v)
        for (int u = 1; u <= 5; ++u)
            if (u != v) rot[v - 1].push_back(u);
    CHECK_THROWS_AS(PlaneGraph::build_from_rotation(5, rot, {1, 2, 3, 4, 5}),
                    Error);
    try {
        PlaneGraph::build_from_rotation(5, rot, {1, 2, 3, 4, 5});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EulerViolation);
    }
}

TEST_CASE("asymmetric adjacency and bad outer walks are rejected") {
    CHECK_THROWS_AS(PlaneGraph::build_from_rotation(2, {{2}, {}}, {1, 2}), Error);
    // triangle with a wrong declared outer walk
    CHECK_THROWS_AS(PlaneGraph::build_from_rotation(
                        3, {{3, 2}, {1, 3}, {2, 1}}, {1, 3, 2, 1}),
                    Error);
}

TEST_CASE("claw host: faces are three 5-cells plus the 9-walk") {
    PlaneGraph g = make_claw_host();
    CHECK(g.vertex_count() == 10);
    std::multiset<int> lens;
    for (int f = 0; f < g.face_count(); ++f) lens.insert(g.face(f).degree());
    CHECK(lens == std::multiset<int>{5, 5, 5, 9});
    auto c = classify_vertex(g, 10);
    CHECK_FALSE(c.is_external);
    CHECK(c.degree == 3);
    CHECK(c.is_light);
    CHECK(classify_vertex(g, 1).is_external);
    CHECK_FALSE(classify_vertex(g, 1).is_light);
}

TEST_CASE("validate_class_G flags 4- and 6-cycles") {
    CHECK_FALSE(validate_class_G(make_cycle(4)).verdict);
    CHECK(validate_class_G(make_cycle(5)).verdict);
    CHECK_FALSE(validate_class_G(make_cycle(6)).verdict);
    auto rep = validate_class_G(make_k4());
    CHECK_FALSE(rep.verdict);
    bool has4 = false;
    for (const auto& [len, verts] : rep.forbidden_cycles)
        if (len == 4) has4 = true;
    CHECK(has4);
    CHECK(validate_class_G(make_claw_host()).verdict);
}

namespace {

// independent oracle: a k-subset hosts a forbidden cycle iff some circular
// ordering of it is a cycle of the graph
int count_cycles_brute(const PlaneGraph& g, int k) {
    std::vector<int> vs(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) vs[i] = i + 1;
    std::vector<int> pick;
    int count = 0;
    auto is_cycle_on = [&](std::vector<int> perm) {
        for (size_t i = 0; i < perm.size(); ++i)
            if (!g.adjacent(perm[i], perm[(i + 1) % perm.size()])) return false;
        return true;
    };
    std::function<void(size_t)> rec = [&](size_t start) {
        if (static_cast<int>(pick.size()) == k) {
            // anchor the smallest vertex, halve by direction
            std::vector<int> rest(pick.begin() + 1, pick.end());
            std::sort(rest.begin(), rest.end());
            do {
                if (rest.size() >= 2 && rest.front() > rest.back()) continue;
                std::vector<int> perm{pick.front()};
                perm.insert(perm.end(), rest.begin(), rest.end());
                if (is_cycle_on(perm)) ++count;
            } while (std::next_permutation(rest.begin(), rest.end()));
            return;
        }
        for (size_t i = start; i < vs.size(); ++i) {
            pick.push_back(vs[i]);
            rec(i + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return count;
}

} // namespace

TEST_CASE("forbidden-cycle search agrees with subset enumeration") {
    for (const PlaneGraph& g : {make_k4(), make_wheel5(), make_cycle(6), make_claw_host()}) {
        auto rep = validate_class_G(g);
        int found4 = 0, found6 = 0;
        for (const auto& [len, verts] : rep.forbidden_cycles) (len == 4 ? found4 : found6)++;
        CHECK(found4 == count_cycles_brute(g, 4));
        CHECK(found6 == count_cycles_brute(g, 6));
    }
}

TEST_CASE("plg format round-trips byte-exactly") {
    for (const PlaneGraph& g : {make_k3(), make_claw_host(), make_wheel5()}) {
        std::string text = write_plg(g);
        PlaneGraph h = parse_plg(text);
        CHECK(write_plg(h) == text);
    }
    CHECK_THROWS_AS(parse_plg("plg 2\nn 1\n"), Error);
    CHECK_THROWS_AS(parse_plg("# only a comment\n"), Error);
    // comments and blank lines are tolerated
    PlaneGraph g = parse_plg("# triangle\nplg 1\n\nn 3\nouter 3 1 2 3\nrot 1: 3 2\nrot 2: 1 3\nrot 3: 2 1\n");
    CHECK(g.vertex_count() == 3);
}
