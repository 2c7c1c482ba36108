#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dlab/error.hpp"

namespace dlab {

// A face is a closed boundary walk. walk[i] -> walk[(i+1) % size] are its darts.
struct Face {
    std::vector<int> walk;
    int degree() const { return static_cast<int>(walk.size()); }
};

// Combinatorial embedding: one clockwise rotation list per vertex, faces derived
// by dart tracing, a declared outer face. Vertex ids are 1-based. Immutable
// after construction; all operations on it are pure.
//
// Tracing convention (fixed): the successor of dart (u -> v) is (v -> w) where
// w immediately precedes u in the clockwise rotation at v. Every dart then lies
// on exactly one face walk, and a genus-0 rotation system satisfies
// |V| - |E| + |F| = 2.
class PlaneGraph {
public:
    // rotation[i] is the clockwise neighbor list of vertex i+1.
    // outer_walk is the declared boundary walk of the unbounded face; it must
    // coincide with a traced face walk up to cyclic rotation.
    static PlaneGraph build_from_rotation(int vertex_count,
                                          std::vector<std::vector<int>> rotation,
                                          std::vector<int> outer_walk);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    int face_count() const { return static_cast<int>(faces_.size()); }

    const std::vector<int>& rotation(int v) const { return rot_[v]; }
    int degree(int v) const { return static_cast<int>(rot_[v].size()); }
    bool adjacent(int u, int v) const;

    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(int f) const { return faces_[f]; }
    int outer_face_id() const { return outer_face_; }
    const std::vector<int>& outer_walk() const { return outer_walk_; }

    // Face id containing dart u->v.
    int face_of_dart(int u, int v) const;
    // Distinct ids of faces whose walk contains v.
    const std::vector<int>& faces_at(int v) const { return faces_at_[v]; }

    bool is_external(int v) const { return external_[v]; }
    bool is_internal(int v) const { return !external_[v]; }
    // Light: internal and of degree exactly 3.
    bool is_light(int v) const { return !external_[v] && degree(v) == 3; }

    bool is_connected() const;

    // Unordered edge list, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    PlaneGraph() = default; // empty; assign from build_from_rotation

private:
    void derive_faces();

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> rot_;       // rot_[0] unused
    std::vector<Face> faces_;
    std::vector<std::vector<int>> faces_at_;  // per vertex, distinct face ids
    std::vector<std::vector<int>> dart_face_; // dart_face_[v][k]: face of (v -> rot_[v][k])
    std::vector<char> external_;
    int outer_face_ = -1;
    std::vector<int> outer_walk_;
};

struct VertexClass {
    bool is_external = false;
    int degree = 0;
    bool is_light = false;
};

VertexClass classify_vertex(const PlaneGraph& g, int v);

struct ClassGReport {
    bool is_connected = false;
    bool is_simple = false;
    // (length, vertices) for every 4- and 6-cycle, canonical form, sorted.
    std::vector<std::pair<int, std::vector<int>>> forbidden_cycles;
    bool verdict = false;
};

ClassGReport validate_class_G(const PlaneGraph& g);

// All cycles of length 3..max_len as canonical vertex sequences (smallest
// vertex first, lexicographically smaller direction), sorted. Bounded DFS from
// each start vertex; every cycle reported once.
std::vector<std::vector<int>> find_short_cycles(const PlaneGraph& g, int max_len);

// Cyclic sequence comparison helpers (rotation only / rotation + reflection).
bool cyclic_equal(const std::vector<int>& a, const std::vector<int>& b);
bool cyclic_equal_reflective(const std::vector<int>& a, const std::vector<int>& b);

} // namespace dlab
