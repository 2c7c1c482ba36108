#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dlab/plane_graph.hpp"

namespace dlab {

enum class BadKind {
    Claw_555,
    Claw_377,
    Claw_557,
    EdgeClaw_3737,
    EdgeClaw_5555,
    EdgeClaw_3738,
    PathClaw_55555,
    PentagonClaw_55555,
};

const char* bad_kind_name(BadKind k);

struct BadPartition {
    BadKind kind;
    std::vector<int> core;                               // H0, sorted
    std::vector<std::pair<std::vector<int>, int>> cells; // (cell walk, length)
};

struct CycleSides {
    std::vector<int> interior;
    std::vector<int> exterior;
    std::vector<char> face_inside; // per face id: 1 if the face lies inside the cycle
};

struct CycleRecord {
    std::vector<int> vertices; // canonical cyclic sequence
    int length = 0;
    std::vector<std::pair<int, int>> chords;
    std::vector<int> interior;
    std::vector<int> exterior;
    bool is_separating = false;
};

struct Classification {
    bool good = true;
    std::optional<BadPartition> partition;
};

// Interior/exterior of a cycle, from the embedding: flood fill over the dual
// graph restricted to edges not on the cycle; the region containing the outer
// face is the exterior.
CycleSides sides_of_cycle(const PlaneGraph& g, const std::vector<int>& cycle);

std::vector<std::pair<int, int>> cycle_chords(const PlaneGraph& g, const std::vector<int>& cycle);

CycleRecord make_cycle_record(const PlaneGraph& g, const std::vector<int>& cycle);

std::vector<CycleRecord> enumerate_cycles(const PlaneGraph& g, int max_len);

// Search for an interior claw / edge-claw / path-claw / pentagon-claw whose
// cells have one of the eight prescribed length patterns. First witness in a
// fixed deterministic order. nullopt means the cycle is good.
std::optional<BadPartition> find_bad_partition(const PlaneGraph& g, const std::vector<int>& cycle);

// allow_long: classify cycles longer than 11 as good-by-length instead of
// rejecting them (callers opt in; the notion is defined only up to length 11).
Classification classify_cycle(const PlaneGraph& g, const std::vector<int>& cycle, bool allow_long = false);

struct Remark1Report {
    bool cells_facial_ok = true;          // (1) incl. the (3,7)-chorded 8-cell exception
    bool interior_degrees_ok = true;      // (2) interior vertices have degree 3
    bool neighbor_bound_ok = true;        // (3) <=1 interior neighbor per cycle vertex
    bool incident_edges_ok = true;        // (4) <=2 interior edges per cycle vertex,
    bool incident_equality_matches = true; //     equality iff the partition is a (3,7,3,8)-edge-claw
    bool four_consecutive_ok = true;      // (5) <=2 interior edges per 4 consecutive vertices
    std::vector<std::string> violations;
    bool all_ok() const {
        return cells_facial_ok && interior_degrees_ok && neighbor_bound_ok &&
               incident_edges_ok && incident_equality_matches && four_consecutive_ok;
    }
};

Remark1Report check_remark1(const PlaneGraph& g, const std::vector<int>& cycle, const BadPartition& bp);

// All splitting paths of the cycle D: both ends on D, interior vertices
// strictly inside, length 2..max_len. Paths are reported once, endpoints
// ordered with the smaller id first.
std::vector<std::vector<int>> splitting_paths(const PlaneGraph& g, const std::vector<int>& D, int max_len);

struct Lemma7Report {
    int path_len = 0;
    int d1_len = 0; // |D'|
    int d2_len = 0; // |D''|
    std::vector<int> allowed;
    bool pass = false; // min(|D'|,|D''|) lies in the allowed set
};

Lemma7Report verify_lemma7_consequence(const PlaneGraph& g, const std::vector<int>& path,
                                       const std::vector<int>& D);

} // namespace dlab
