#pragma once

#include <string>
#include <vector>

#include "dlab/plane_graph.hpp"

namespace dlab {

// Incremental disk construction: start from an outer cycle, repeatedly split
// an inner face with a path. Keeps the rotation system consistent, so every
// built graph is a valid embedding by construction.
class Disk {
public:
    explicit Disk(int outer_len);

    // Adds a path u - w1 - ... - wk - v with k new interior vertices, drawn
    // inside the unique non-outer face containing u, v and every vertex of
    // `witness` and none of `avoid`. k = 0 inserts a chord; u == v hangs a
    // closed fan (pendant cycle) at u. Returns the new vertex ids.
    std::vector<int> add_path(int u, int v, int inner, const std::vector<int>& witness = {},
                              const std::vector<int>& avoid = {});

    // Adds a pendant vertex adjacent only to u, placed inside the face
    // containing u and the witness set.
    int add_leaf(int u, const std::vector<int>& witness = {}, const std::vector<int>& avoid = {});

    int size() const { return n_; }
    PlaneGraph graph() const;

private:
    int locate_face(const std::vector<int>& need, const std::vector<int>& avoid = {}) const;

    int n_;
    int outer_len_;
    std::vector<std::vector<int>> rot_; // rot_[0] unused
};

// A reducible-configuration host: a class-G plane graph exhibiting exactly
// the intended configuration, small enough for exhaustive certification.
struct HostSpec {
    std::string name;
    std::string kind;        // ConfigKind name
    std::string case_tag;
    int enumeration_bound;   // size bound for the surgery result enumeration
    PlaneGraph graph;
};

std::vector<HostSpec> build_all_hosts();

// Bad-partition exemplars keyed by kind name (Claw_555 etc.); the cycle to
// classify is always the outer walk.
struct BadCycleHost {
    std::string kind;
    std::string name;
    PlaneGraph graph;
};

std::vector<BadCycleHost> build_bad_cycle_hosts();

// Small named graphs used across tests and the corpus.
PlaneGraph make_cycle(int n);
PlaneGraph make_path2();
PlaneGraph make_k3();
PlaneGraph make_k4();
PlaneGraph make_wheel5(); // hub + C5
PlaneGraph make_claw_host(); // C9 + center on d1,d4,d7

} // namespace dlab
