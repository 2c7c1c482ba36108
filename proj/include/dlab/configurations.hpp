#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dlab/coloring.hpp"
#include "dlab/cycle_analysis.hpp"
#include "dlab/plane_graph.hpp"

namespace dlab {

enum class ConfigKind {
    MinDegree,
    SeparatingGoodCycle,
    CutVertex,
    LightCluster,
    LightTriangle334,
    TwoPendent,
    IncidentPlusPendent,
    TwoIncident344,
    FiveVertexTwoIncident,
    FiveVertexPendent333,
    SixVertexTwoWeak336,
    Wheel,
    AntiwheelAllLight,
    FiveFaceAllLight,
    SmallFiveFaceWith4Vertex,
    AdjacentFiveFaces,
};

const char* config_kind_name(ConfigKind k);
std::optional<ConfigKind> config_kind_from_name(const std::string& s);

// A detected reducible configuration: the named vertices of the lemma bound
// injectively to graph vertices, plus the proof case the binding falls into.
struct ConfigMatch {
    ConfigKind kind;
    std::string case_tag; // "" when the lemma has a single case
    std::vector<std::pair<std::string, int>> binding;

    int at(const std::string& role) const;
    bool has(const std::string& role) const;
    std::string describe() const;
};

std::vector<ConfigMatch> detect_all(const PlaneGraph& g);

// Structural wheel/antiwheel scan (shared with the discharging rules, which
// need every antiwheel, not only the all-light ones).
struct WheelLike {
    bool anti = false;
    int u, v, w;
    int u1, u2, v1, v2, w1, w2;
};
std::vector<WheelLike> find_wheels(const PlaneGraph& g);
std::vector<WheelLike> find_antiwheels(const PlaneGraph& g);

struct Surgery {
    std::vector<int> deletions;
    std::vector<std::pair<int, int>> identifications;
    std::vector<std::pair<int, int>> insertions; // endpoints in old ids
    PlaneGraph result;
    std::vector<int> vertex_map; // old id -> new id; 0 for deleted
    int old_size = 0;            // |V|+|E| before
    int new_size = 0;            // |V|+|E| after
};

Surgery apply_surgery(const PlaneGraph& g, const ConfigMatch& m);

struct SurgeryValidity {
    bool touches_D = false;                 // D-pair identified or D-D edge inserted
    std::vector<int> created_cycle_lengths; // sorted, lengths <= 7
    bool creates_triangular7 = false;
    bool D_still_good = false;
    bool verdict_general = false; // Lemma-8 terms (i)-(iii)
    bool verdict_strong = false;  // Lemma-9 terms (a),(b)
};

struct ValidityOptions {
    // "triangular 7-cycle" reading: a created 7-cycle with a chord joining
    // vertices at cycle-distance 2. With chord_inside_only the chord must be
    // drawn inside the 7-cycle.
    bool triangular7_chord_inside_only = false;
};

SurgeryValidity validate_surgery(const PlaneGraph& g, const Surgery& s,
                                 const ValidityOptions& opts = {});

// Carries the failing state when a proof recipe's "we can color" claim does
// not hold on an instance. Surfaced, never patched over.
struct RecipeStuckInfo {
    ConfigKind kind;
    std::string case_tag;
    std::string detail;
};

// Replays the lemma's coloring-extension recipe: restores the deleted
// vertices of G, following the proof's case analysis (choices inside a step
// are backtracked). Throws Error(RecipeStuck) when no branch completes.
Coloring extend_back(const PlaneGraph& g, const ConfigMatch& m, const Coloring& result_coloring);

struct ReducibilityHostReport {
    std::string host;
    ConfigKind kind;
    std::string case_tag;
    long colorings_tried = 0;
    long replays_ok = 0;
    std::vector<std::string> stuck; // RecipeStuck details
    std::vector<std::string> branch_tags_hit;
    bool ok() const { return stuck.empty() && replays_ok == colorings_tried; }
};

// Exhaustive per-host certification: every valid coloring of the surgery
// result must extend back to a valid coloring of the host. enumeration_bound
// guards the result size (two large hosts need 15/16, noted in the corpus).
ReducibilityHostReport verify_reducibility_host(const PlaneGraph& host, const ConfigMatch& m,
                                                const std::string& host_name = "",
                                                int enumeration_bound = 14);

} // namespace dlab
