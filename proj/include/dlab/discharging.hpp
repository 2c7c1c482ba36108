#pragma once

#include <map>
#include <string>
#include <vector>

#include "dlab/plane_graph.hpp"
#include "dlab/rational.hpp"

namespace dlab {

// Vertex or face element of the charge ledger. Vertices order before faces.
struct Element {
    enum Kind { Vertex, Face } kind;
    int id; // vertex id (1-based) or face id (0-based)

    bool operator<(const Element& o) const {
        if (kind != o.kind) return kind < o.kind;
        return id < o.id;
    }
    bool operator==(const Element& o) const { return kind == o.kind && id == o.id; }
    std::string str() const { return (kind == Vertex ? "v" : "f") + std::to_string(id); }
};

struct Transfer {
    int rule; // 1..12
    Element from, to;
    Rational amount;
};

struct ChargeLedger {
    std::map<Element, Rational> initial;
    std::vector<Transfer> transfers;
    std::vector<std::string> findings; // rule ambiguities surfaced, never fixed up

    std::map<Element, Rational> final_charges() const;
    Rational total_initial() const;
    Rational total_final() const;
};

enum class CeilingClass { NotOnD, Sticking, Ceiling, Irregular };

struct FaceProfile {
    int face = -1;
    int degree = 0;
    std::vector<int> corner_degrees; // sorted
    bool all_internal = false;
    bool is_weak = false;   // 3-face with a light outer neighbor
    bool is_strong = false; // 3-face, not weak
    bool is_small = false;  // 5-face with precisely four light vertices
    CeilingClass ceiling = CeilingClass::NotOnD;
    int ceiling_len = 0;                          // path length when Ceiling
    std::vector<std::pair<int, int>> pendencies;  // (owner vertex, pendent vertex)
};

struct VertexRole {
    bool on_444 = false;
    bool is_abnormal = false; // on a (4,4,4)-face and incident with a (3,4,4)-face
    std::vector<int> wheel_memberships; // indices into find_wheels + find_antiwheels
};

std::map<int, FaceProfile> profile_faces(const PlaneGraph& g);
std::map<int, VertexRole> vertex_roles(const PlaneGraph& g);

struct DischargeOptions {
    bool r12_split = false;     // R6-style split for R12 pendent charges
    bool r3_ten_thirds = false; // extra strong-(3,5,5) clause at 10/3
};

ChargeLedger initial_charges(const PlaneGraph& g);

// All twelve rules as one simultaneous pass; every amount is a function of
// the structure only. rule_order reorders emission (the final ledger must not
// depend on it).
ChargeLedger apply_rules(const PlaneGraph& g, ChargeLedger ledger,
                         const DischargeOptions& opts = {});
ChargeLedger apply_rules_in_order(const PlaneGraph& g, ChargeLedger ledger,
                                  const std::vector<int>& rule_order,
                                  const DischargeOptions& opts = {});

struct VertexCounters {
    int n3 = 0, n5 = 0, m3 = 0;
    Rational zeta, eta;
};

struct AuditReport {
    bool conserved = false;
    Rational total_initial, total_final;
    Rational expected_total; // 10 - d(f0), the derived identity
    bool matches_identity = false;
    // the paper states the total is 0; report the measured value instead
    std::string sum_note;

    struct NegativeElement {
        Element element;
        Rational final_charge;
        std::string claim_case;
        std::vector<std::string> config_matches;
    };
    std::vector<NegativeElement> negatives;

    std::map<int, VertexCounters> counters; // internal and external vertices
    std::vector<std::string> eq1_violations;
    std::vector<std::string> eq2_violations;

    Rational f0_final;
    Rational claim1_bound; // 24 - 2 d(f0)
    bool claim1_ok = false;

    std::vector<std::string> findings;
    bool eq_ok() const { return eq1_violations.empty() && eq2_violations.empty(); }
};

AuditReport audit(const PlaneGraph& g, const ChargeLedger& ledger,
                  const DischargeOptions& opts = {});

} // namespace dlab
