#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dlab/plane_graph.hpp"

namespace dlab {

// Total assignment vertex -> {1,2,3}. Class 1 may induce a matching (max
// degree 1); classes 2 and 3 must be independent.
struct Coloring {
    std::vector<int> color; // 1-based; color[0] unused

    int at(int v) const { return color[v]; }
    static Coloring blank(int n) {
        Coloring c;
        c.color.assign(n + 1, 0);
        return c;
    }
};

struct Violation {
    enum Kind { OneDegreeExcess, MonochromaticEdge } kind;
    int u, v;  // offending edge
    int color; // class involved
    std::string describe() const;
};

std::vector<Violation> verify_coloring(const PlaneGraph& g, const Coloring& c);
bool coloring_valid(const PlaneGraph& g, const Coloring& c);

// Complete backtracking search. Variable order: minimum remaining values,
// ties by (degree desc, id asc); colors tried ascending. Color-1 defect is
// tracked per vertex so over-saturated assignments are pruned immediately.
std::optional<Coloring> solve(const PlaneGraph& g);

// Partial map defined exactly on the vertices of the outer boundary D.
struct Precoloring {
    std::map<int, int> assignment;
};

struct ExtensionWitness {
    Coloring coloring;
    bool respects_boundary = false;
};

// Theorem-2 contract: extend a valid precoloring of D = outer boundary cycle
// to all of G such that additionally no boundary-to-interior edge is
// monochromatic. Complete search over interior assignments.
std::optional<ExtensionWitness> super_extend(const PlaneGraph& g, const Precoloring& pre);

// Exactly the valid colorings (the result of filtering all 3^|V|
// assignments); the filter is applied prefix-incrementally, which discards
// the same assignments a full scan would. Guarded by a size bound.
std::vector<Coloring> enumerate_all(const PlaneGraph& g, int size_bound = 14);

// Valid (1,0,0)-colorings of the induced subgraph G[S], as partial maps.
std::vector<std::map<int, int>> enumerate_induced_colorings(const PlaneGraph& g,
                                                            const std::vector<int>& S);

} // namespace dlab
