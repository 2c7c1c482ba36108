#include "dlab/json_report.hpp"

#include "dlab/plg_io.hpp"

namespace dlab {

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json class_g_json(const ClassGReport& rep) {
    Json j;
    j["is_connected"] = rep.is_connected;
    j["is_simple"] = rep.is_simple;
    Json cycles = Json::array();
    for (const auto& [len, verts] : rep.forbidden_cycles) {
        Json c;
        c["length"] = len;
        c["vertices"] = verts;
        cycles.push_back(c);
    }
    j["forbidden_cycles"] = cycles;
    j["verdict"] = rep.verdict;
    return j;
}

Json faces_json(const PlaneGraph& g) {
    Json j;
    j["vertex_count"] = g.vertex_count();
    j["edge_count"] = g.edge_count();
    j["face_count"] = g.face_count();
    j["outer_face"] = g.outer_face_id();
    Json faces = Json::array();
    for (int f = 0; f < g.face_count(); ++f) {
        Json fj;
        fj["id"] = f;
        fj["degree"] = g.face(f).degree();
        fj["walk"] = g.face(f).walk;
        faces.push_back(fj);
    }
    j["faces"] = faces;
    return j;
}

Json cycle_json(const PlaneGraph& g, const CycleRecord& rec, bool classify) {
    Json j;
    j["vertices"] = rec.vertices;
    j["length"] = rec.length;
    Json chords = Json::array();
    for (auto [a, b] : rec.chords) chords.push_back(Json::array({a, b}));
    j["chords"] = chords;
    j["interior"] = rec.interior;
    j["exterior"] = rec.exterior;
    j["is_separating"] = rec.is_separating;
    if (classify && rec.length <= 11) {
        auto cls = classify_cycle(g, rec.vertices);
        j["verdict"] = cls.good ? "good" : "bad";
        if (cls.partition) {
            j["kind"] = bad_kind_name(cls.partition->kind);
            j["core"] = cls.partition->core;
            Json cells = Json::array();
            for (const auto& [walk, len] : cls.partition->cells) {
                Json c;
                c["vertices"] = walk;
                c["length"] = len;
                cells.push_back(c);
            }
            j["cells"] = cells;
        } else {
            j["kind"] = nullptr;
            j["cells"] = Json::array();
        }
    }
    return j;
}

Json remark1_json(const Remark1Report& rep) {
    Json j;
    j["cells_facial_ok"] = rep.cells_facial_ok;
    j["interior_degrees_ok"] = rep.interior_degrees_ok;
    j["neighbor_bound_ok"] = rep.neighbor_bound_ok;
    j["incident_edges_ok"] = rep.incident_edges_ok;
    j["incident_equality_matches"] = rep.incident_equality_matches;
    j["four_consecutive_ok"] = rep.four_consecutive_ok;
    j["violations"] = rep.violations;
    j["all_ok"] = rep.all_ok();
    return j;
}

Json match_json(const ConfigMatch& m) {
    Json j;
    j["kind"] = config_kind_name(m.kind);
    j["case"] = m.case_tag;
    Json b = Json::object();
    for (const auto& [role, v] : m.binding) b[role] = v;
    j["binding"] = b;
    return j;
}

Json surgery_json(const PlaneGraph& g, const Surgery& s, const SurgeryValidity& v) {
    (void)g;
    Json j;
    j["deletions"] = s.deletions;
    Json ids = Json::array();
    for (auto [a, b] : s.identifications) ids.push_back(Json::array({a, b}));
    j["identifications"] = ids;
    Json ins = Json::array();
    for (auto [a, b] : s.insertions) ins.push_back(Json::array({a, b}));
    j["insertions"] = ins;
    j["size_before"] = s.old_size;
    j["size_after"] = s.new_size;
    Json vm = Json::object();
    for (size_t i = 1; i < s.vertex_map.size(); ++i)
        if (s.vertex_map[i]) vm[std::to_string(i)] = s.vertex_map[i];
    j["vertex_map"] = vm;
    Json validity;
    validity["touches_D"] = v.touches_D;
    validity["created_cycle_lengths"] = v.created_cycle_lengths;
    validity["creates_triangular7"] = v.creates_triangular7;
    validity["D_still_good"] = v.D_still_good;
    validity["verdict_general"] = v.verdict_general;
    validity["verdict_strong"] = v.verdict_strong;
    j["validity"] = validity;
    j["result_plg"] = write_plg(s.result);
    return j;
}

Json ledger_json(const ChargeLedger& led) {
    Json j;
    auto finals = led.final_charges();
    j["total_initial"] = led.total_initial().str();
    j["total_final"] = led.total_final().str();
    Json elems = Json::array();
    for (const auto& [e, q] : led.initial) {
        Json ej;
        ej["element"] = e.str();
        ej["initial"] = q.str();
        ej["final"] = finals.at(e).str();
        Json ts = Json::array();
        for (const auto& t : led.transfers) {
            if (!(t.from == e)) continue;
            Json tj;
            tj["rule"] = "R" + std::to_string(t.rule);
            tj["from"] = t.from.str();
            tj["to"] = t.to.str();
            tj["amount"] = t.amount.str();
            ts.push_back(tj);
        }
        ej["transfers"] = ts;
        elems.push_back(ej);
    }
    j["elements"] = elems;
    j["findings"] = led.findings;
    return j;
}

Json audit_json(const AuditReport& rep) {
    Json j;
    j["conserved"] = rep.conserved;
    j["total_initial"] = rep.total_initial.str();
    j["total_final"] = rep.total_final.str();
    j["expected_total"] = rep.expected_total.str();
    j["matches_identity"] = rep.matches_identity;
    j["sum_note"] = rep.sum_note;
    Json negs = Json::array();
    for (const auto& n : rep.negatives) {
        Json nj;
        nj["element"] = n.element.str();
        nj["final"] = n.final_charge.str();
        nj["claim_case"] = n.claim_case;
        nj["config_matches"] = n.config_matches;
        negs.push_back(nj);
    }
    j["negative_elements"] = negs;
    Json counters = Json::object();
    for (const auto& [v, c] : rep.counters) {
        Json cj;
        cj["n3"] = c.n3;
        cj["n5"] = c.n5;
        cj["m3"] = c.m3;
        cj["zeta"] = c.zeta.str();
        cj["eta"] = c.eta.str();
        counters["v" + std::to_string(v)] = cj;
    }
    j["counters"] = counters;
    j["eq1_violations"] = rep.eq1_violations;
    j["eq2_violations"] = rep.eq2_violations;
    j["f0_final"] = rep.f0_final.str();
    j["claim1_bound"] = rep.claim1_bound.str();
    j["claim1_ok"] = rep.claim1_ok;
    j["findings"] = rep.findings;
    return j;
}

Json reducibility_json(const ReducibilityHostReport& rep) {
    Json j;
    j["host"] = rep.host;
    j["kind"] = config_kind_name(rep.kind);
    j["case"] = rep.case_tag;
    j["colorings_tried"] = rep.colorings_tried;
    j["replays_ok"] = rep.replays_ok;
    j["stuck"] = rep.stuck;
    j["branches_hit"] = rep.branch_tags_hit;
    j["ok"] = rep.ok();
    return j;
}

} // namespace dlab
