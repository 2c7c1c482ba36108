#include "dlab/discharging.hpp"

#include <algorithm>
#include <set>

#include "dlab/configurations.hpp"

namespace dlab {

Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "bad rational '" + s + "'");
    }
}

std::map<Element, Rational> ChargeLedger::final_charges() const {
    auto out = initial;
    for (const auto& t : transfers) {
        out[t.from] -= t.amount;
        out[t.to] += t.amount;
    }
    return out;
}

Rational ChargeLedger::total_initial() const {
    Rational s;
    for (const auto& [e, q] : initial) s += q;
    return s;
}

Rational ChargeLedger::total_final() const {
    Rational s;
    for (const auto& [e, q] : final_charges()) s += q;
    return s;
}

namespace {

int outer_neighbor_of(const PlaneGraph& g, int u, const std::set<int>& fverts) {
    for (int x : g.rotation(u))
        if (!fverts.count(x)) return x;
    return 0;
}

} // namespace

std::map<int, FaceProfile> profile_faces(const PlaneGraph& g) {
    std::map<int, FaceProfile> out;
    std::set<int> dset(g.outer_walk().begin(), g.outer_walk().end());
    std::set<std::pair<int, int>> dedges;
    const auto& ow = g.outer_walk();
    for (size_t i = 0; i < ow.size(); ++i) {
        int a = ow[i], b = ow[(i + 1) % ow.size()];
        dedges.insert({std::min(a, b), std::max(a, b)});
    }

    for (int f = 0; f < g.face_count(); ++f) {
        if (f == g.outer_face_id()) continue;
        FaceProfile p;
        p.face = f;
        const auto& walk = g.face(f).walk;
        p.degree = static_cast<int>(walk.size());
        p.all_internal = true;
        for (int v : walk) {
            p.corner_degrees.push_back(g.degree(v));
            if (g.is_external(v)) p.all_internal = false;
        }
        std::sort(p.corner_degrees.begin(), p.corner_degrees.end());

        if (p.degree == 3) {
            std::set<int> fv(walk.begin(), walk.end());
            for (int u : walk) {
                if (!g.is_light(u)) continue;
                int x = outer_neighbor_of(g, u, fv);
                if (x && g.is_light(x)) p.is_weak = true;
            }
            p.is_strong = !p.is_weak;
        }
        if (p.degree == 5) {
            int lights = 0;
            for (int v : walk)
                if (g.is_light(v)) ++lights;
            p.is_small = lights == 4;
        }

        // common part with D
        std::vector<int> shared_verts;
        for (int v : std::set<int>(walk.begin(), walk.end()))
            if (dset.count(v)) shared_verts.push_back(v);
        int shared_edges = 0;
        std::map<int, int> edge_deg;
        for (size_t i = 0; i < walk.size(); ++i) {
            int a = walk[i], b = walk[(i + 1) % walk.size()];
            if (dedges.count({std::min(a, b), std::max(a, b)})) {
                ++shared_edges;
                ++edge_deg[a];
                ++edge_deg[b];
            }
        }
        if (shared_verts.empty()) {
            p.ceiling = CeilingClass::NotOnD;
        } else if (shared_edges == 0) {
            p.ceiling = shared_verts.size() == 1 ? CeilingClass::Sticking : CeilingClass::Irregular;
        } else {
            // shared edges must form one simple path covering all shared vertices
            bool path = static_cast<int>(shared_verts.size()) == shared_edges + 1;
            for (const auto& [v, d] : edge_deg)
                if (d > 2) path = false;
            int ends = 0;
            for (const auto& [v, d] : edge_deg)
                if (d == 1) ++ends;
            if (path && ends == 2) {
                p.ceiling = CeilingClass::Ceiling;
                p.ceiling_len = shared_edges;
            } else {
                p.ceiling = CeilingClass::Irregular;
            }
        }
        out[f] = std::move(p);
    }

    // pendencies
    for (int f = 0; f < g.face_count(); ++f) {
        if (f == g.outer_face_id()) continue;
        const auto& walk = g.face(f).walk;
        if (walk.size() != 3) continue;
        std::set<int> fv(walk.begin(), walk.end());
        for (int u : walk) {
            if (!g.is_light(u)) continue;
            int v = outer_neighbor_of(g, u, fv);
            if (v) out[f].pendencies.emplace_back(v, u);
        }
        std::sort(out[f].pendencies.begin(), out[f].pendencies.end());
    }
    return out;
}

std::map<int, VertexRole> vertex_roles(const PlaneGraph& g) {
    std::map<int, VertexRole> out;
    for (int v = 1; v <= g.vertex_count(); ++v) out[v] = {};

    std::vector<int> f444, f344;
    for (int f = 0; f < g.face_count(); ++f) {
        if (f == g.outer_face_id()) continue;
        const auto& w = g.face(f).walk;
        if (w.size() != 3) continue;
        std::vector<int> ds;
        bool internal = true;
        for (int v : w) {
            ds.push_back(g.degree(v));
            if (g.is_external(v)) internal = false;
        }
        std::sort(ds.begin(), ds.end());
        if (!internal) continue;
        if (ds == std::vector<int>{4, 4, 4}) f444.push_back(f);
        if (ds == std::vector<int>{3, 4, 4}) f344.push_back(f);
    }
    std::set<int> on344;
    for (int f : f344)
        for (int v : g.face(f).walk) on344.insert(v);
    for (int f : f444)
        for (int v : g.face(f).walk) {
            out[v].on_444 = true;
            if (on344.count(v)) out[v].is_abnormal = true;
        }

    auto wheels = find_wheels(g);
    auto antis = find_antiwheels(g);
    int idx = 0;
    for (const auto& w : wheels) {
        for (int v : {w.u, w.v, w.w, w.u1, w.u2, w.v1, w.v2, w.w1, w.w2})
            out[v].wheel_memberships.push_back(idx);
        ++idx;
    }
    for (const auto& w : antis) {
        for (int v : {w.u, w.v, w.w, w.u1, w.u2, w.v1, w.v2, w.w1, w.w2})
            out[v].wheel_memberships.push_back(idx);
        ++idx;
    }
    return out;
}

ChargeLedger initial_charges(const PlaneGraph& g) {
    ChargeLedger led;
    for (int v = 1; v <= g.vertex_count(); ++v)
        led.initial[{Element::Vertex, v}] = Rational(5 * g.degree(v) - 14);
    for (int f = 0; f < g.face_count(); ++f) {
        int d = g.face(f).degree();
        led.initial[{Element::Face, f}] =
            f == g.outer_face_id() ? Rational(d + 24) : Rational(2 * d - 14);
    }
    return led;
}

namespace {

struct RuleContext {
    const PlaneGraph& g;
    const std::map<int, FaceProfile>& prof;
    const std::map<int, VertexRole>& roles;
    const DischargeOptions& opts;
    std::vector<std::string>* findings;

    bool face_is(int f, std::vector<int> want) const {
        const auto& p = prof.at(f);
        std::sort(want.begin(), want.end());
        return p.all_internal && p.corner_degrees == want;
    }
};

using Emit = std::function<void(int rule, Element from, Element to, Rational amount)>;

void rule_R1(const RuleContext& c, const Emit& emit) {
    for (int v = 1; v <= c.g.vertex_count(); ++v) {
        if (!c.g.is_internal(v) || c.g.degree(v) != 3) continue;
        for (int f : c.g.faces_at(v))
            emit(1, {Element::Vertex, v}, {Element::Face, f},
                 c.g.face(f).degree() == 3 ? Rational(1) : Rational(1, 3));
    }
}

void rule_R2(const RuleContext& c, const Emit& emit) {
    for (int v = 1; v <= c.g.vertex_count(); ++v) {
        if (!c.g.is_internal(v) || c.g.degree(v) != 4) continue;
        for (int f : c.g.faces_at(v)) {
            if (c.g.face(f).degree() != 3) continue;
            Rational amt(5, 2);
            if (c.face_is(f, {3, 4, 4})) amt = Rational(7, 2);
            else if (c.face_is(f, {3, 3, 4})) amt = Rational(3);
            else if (c.face_is(f, {4, 4, 4})) amt = Rational(8, 3);
            emit(2, {Element::Vertex, v}, {Element::Face, f}, amt);
        }
    }
}

void rule_R3(const RuleContext& c, const Emit& emit) {
    for (int v = 1; v <= c.g.vertex_count(); ++v) {
        if (!c.g.is_internal(v) || c.g.degree(v) != 5) continue;
        for (int f : c.g.faces_at(v)) {
            if (c.g.face(f).degree() != 3) continue;
            const auto& p = c.prof.at(f);
            Rational amt(3);
            if (c.face_is(f, {3, 3, 5}) && p.is_weak) amt = Rational(6);
            else if (c.face_is(f, {3, 4, 5})) amt = Rational(9, 2);
            else if ((c.face_is(f, {3, 5, 5}) && p.is_weak) ||
                     (c.face_is(f, {3, 3, 5}) && p.is_strong))
                amt = Rational(7, 2);
            else if (c.opts.r3_ten_thirds && c.face_is(f, {3, 5, 5}) && p.is_strong)
                amt = Rational(10, 3);
            emit(3, {Element::Vertex, v}, {Element::Face, f}, amt);
        }
    }
}

void rule_R4(const RuleContext& c, const Emit& emit) {
    for (int v = 1; v <= c.g.vertex_count(); ++v) {
        if (!c.g.is_internal(v) || c.g.degree(v) != 6) continue;
        for (int f : c.g.faces_at(v)) {
            if (c.g.face(f).degree() != 3) continue;
            const auto& p = c.prof.at(f);
            Rational amt(4);
            if (c.face_is(f, {3, 3, 6}) && p.is_weak) amt = Rational(6);
            else if (c.face_is(f, {3, 4, 6})) amt = Rational(5);
            emit(4, {Element::Vertex, v}, {Element::Face, f}, amt);
        }
    }
}

void rule_R5(const RuleContext& c, const Emit& emit) {
    for (int v = 1; v <= c.g.vertex_count(); ++v) {
        if (!c.g.is_internal(v) || c.g.degree(v) < 7) continue;
        for (int f : c.g.faces_at(v))
            if (c.g.face(f).degree() == 3) emit(5, {Element::Vertex, v}, {Element::Face, f}, Rational(6));
    }
}

void rule_R6(const RuleContext& c, const Emit& emit) {
    for (const auto& [f, p] : c.prof) {
        if (p.degree != 3) continue;
        for (const auto& [owner, pendent] : p.pendencies) {
            if (!c.g.is_internal(owner) || c.g.degree(owner) < 4) continue;
            Rational amt(5, 4);
            if (c.face_is(f, {3, 3, 3})) amt = Rational(5, 3);
            else if (c.face_is(f, {3, 3, 4})) amt = Rational(3, 2);
            emit(6, {Element::Vertex, owner}, {Element::Face, f}, amt);
        }
    }
}

void rule_R7(const RuleContext& c, const Emit& emit) {
    for (int v = 1; v <= c.g.vertex_count(); ++v) {
        if (!c.g.is_internal(v) || c.g.degree(v) < 4) continue;
        for (int f : c.g.faces_at(v)) {
            if (c.g.face(f).degree() != 5) continue;
            bool big = c.g.degree(v) >= 5 && c.prof.at(f).is_small;
            emit(7, {Element::Vertex, v}, {Element::Face, f},
                 big ? Rational(8, 3) : Rational(3, 2));
        }
    }
}

void rule_R8(const RuleContext& c, const Emit& emit) {
    for (const auto& [f, p] : c.prof) {
        if (!(p.degree == 3 && p.all_internal && p.corner_degrees == std::vector<int>{4, 4, 4}))
            continue;
        const auto& w = c.g.face(f).walk;
        std::vector<int> cw(w.begin(), w.end());
        std::sort(cw.begin(), cw.end());
        for (int x : cw) {
            if (c.roles.at(x).is_abnormal) continue;
            for (int y : cw)
                if (c.roles.at(y).is_abnormal)
                    emit(8, {Element::Vertex, x}, {Element::Vertex, y}, Rational(1, 6));
        }
    }
}

void rule_R9(const RuleContext& c, const Emit& emit) {
    auto antis = find_antiwheels(c.g);
    for (const auto& aw : antis) {
        // the three attached (3,4,4)-faces, strong ones pay the hub corners
        std::vector<std::array<int, 3>> attached{{aw.u, aw.u1, aw.u2},
                                                 {aw.v, aw.v1, aw.v2},
                                                 {aw.w, aw.w1, aw.w2}};
        for (const auto& tri : attached) {
            int fid = -1;
            for (int f : c.g.faces_at(tri[0])) {
                const auto& w = c.g.face(f).walk;
                if (w.size() == 3 &&
                    std::set<int>(w.begin(), w.end()) == std::set<int>{tri[0], tri[1], tri[2]})
                    fid = f;
            }
            if (fid < 0) continue;
            const auto& p = c.prof.at(fid);
            if (!p.is_strong || !c.face_is(fid, {3, 4, 4})) continue;
            for (int corner : {aw.u, aw.v, aw.w})
                emit(9, {Element::Face, fid}, {Element::Vertex, corner}, Rational(1, 6));
        }
    }
}

void rule_R10(const RuleContext& c, const Emit& emit) {
    int f0 = c.g.outer_face_id();
    std::set<int> seen;
    for (int v : c.g.face(f0).walk)
        if (seen.insert(v).second) emit(10, {Element::Face, f0}, {Element::Vertex, v}, Rational(3));
}

void rule_R11(const RuleContext& c, const Emit& emit) {
    for (int v = 1; v <= c.g.vertex_count(); ++v) {
        if (c.g.degree(v) != 2) continue;
        std::set<int> fs;
        for (int f : c.g.faces_at(v))
            if (f != c.g.outer_face_id()) fs.insert(f);
        if (fs.size() != 1 && c.findings)
            c.findings->push_back("AmbiguousRule: 2-vertex " + std::to_string(v) + " has " +
                                  std::to_string(fs.size()) + " non-outer incident faces");
        for (int f : fs) emit(11, {Element::Face, f}, {Element::Vertex, v}, Rational(1));
    }
}

void rule_R12(const RuleContext& c, const Emit& emit) {
    std::set<int> dset(c.g.outer_walk().begin(), c.g.outer_walk().end());
    for (int v = 1; v <= c.g.vertex_count(); ++v) {
        if (!c.g.is_external(v) || c.g.degree(v) < 3) continue;
        for (int f : c.g.faces_at(v)) {
            if (f == c.g.outer_face_id()) continue;
            const auto& p = c.prof.at(f);
            if (p.ceiling == CeilingClass::Sticking) {
                // the sticking vertex is the unique shared vertex
                bool at_v = false;
                for (int x : c.g.face(f).walk)
                    if (x == v && dset.count(v)) at_v = true;
                // v must be that shared vertex
                int shared = 0;
                for (int x : std::set<int>(c.g.face(f).walk.begin(), c.g.face(f).walk.end()))
                    if (dset.count(x)) shared = x;
                if (!at_v || shared != v) continue;
                if (p.degree == 3) emit(12, {Element::Vertex, v}, {Element::Face, f}, Rational(6));
                else if (p.degree == 5)
                    emit(12, {Element::Vertex, v}, {Element::Face, f}, Rational(8, 3));
            } else if (p.ceiling == CeilingClass::Ceiling) {
                // v must be an end of the shared path
                std::map<int, int> edeg;
                const auto& w = c.g.face(f).walk;
                std::set<std::pair<int, int>> dedges;
                const auto& ow = c.g.outer_walk();
                for (size_t i = 0; i < ow.size(); ++i) {
                    int a = ow[i], b = ow[(i + 1) % ow.size()];
                    dedges.insert({std::min(a, b), std::max(a, b)});
                }
                for (size_t i = 0; i < w.size(); ++i) {
                    int a = w[i], b = w[(i + 1) % w.size()];
                    if (dedges.count({std::min(a, b), std::max(a, b)})) { ++edeg[a]; ++edeg[b]; }
                }
                if (edeg.count(v) == 0 || edeg[v] != 1) continue;
                int i = p.ceiling_len, d = p.degree;
                Rational amt(0);
                if (d == 3 && i == 1) amt = Rational(7, 2);
                else if (d == 3 && i >= 2) {
                    amt = Rational(7, 2);
                    if (c.findings)
                        c.findings->push_back("AmbiguousRule: 2-ceiling 3-face f" +
                                              std::to_string(f));
                } else if (d == 5 && i == 2) amt = Rational(13, 6);
                else if (d == 5 && i == 1) amt = Rational(3, 2);
                else if (d == 7 && i == 3) amt = Rational(1);
                else if (d == 7 && i == 2) amt = Rational(1, 2);
                if (amt != Rational(0)) emit(12, {Element::Vertex, v}, {Element::Face, f}, amt);
            } else if (p.ceiling == CeilingClass::Irregular && c.findings) {
                c.findings->push_back("AmbiguousRule: face f" + std::to_string(f) +
                                      " meets D in a disconnected set");
            }
        }
        // pendent 3-faces owned by v
        for (const auto& [f, p] : c.prof) {
            if (p.degree != 3) continue;
            for (const auto& [owner, pendent] : p.pendencies) {
                if (owner != v) continue;
                Rational amt(5, 3);
                if (c.opts.r12_split) {
                    amt = Rational(5, 4);
                    if (c.face_is(f, {3, 3, 3})) amt = Rational(5, 3);
                    else if (c.face_is(f, {3, 3, 4})) amt = Rational(3, 2);
                }
                emit(12, {Element::Vertex, v}, {Element::Face, f}, amt);
            }
        }
    }
}

} // namespace

ChargeLedger apply_rules_in_order(const PlaneGraph& g, ChargeLedger ledger,
                                  const std::vector<int>& rule_order,
                                  const DischargeOptions& opts) {
    auto prof = profile_faces(g);
    auto roles = vertex_roles(g);
    RuleContext ctx{g, prof, roles, opts, &ledger.findings};
    Emit emit = [&](int rule, Element from, Element to, Rational amount) {
        ledger.transfers.push_back({rule, from, to, amount});
    };
    for (int r : rule_order) {
        switch (r) {
        case 1: rule_R1(ctx, emit); break;
        case 2: rule_R2(ctx, emit); break;
        case 3: rule_R3(ctx, emit); break;
        case 4: rule_R4(ctx, emit); break;
        case 5: rule_R5(ctx, emit); break;
        case 6: rule_R6(ctx, emit); break;
        case 7: rule_R7(ctx, emit); break;
        case 8: rule_R8(ctx, emit); break;
        case 9: rule_R9(ctx, emit); break;
        case 10: rule_R10(ctx, emit); break;
        case 11: rule_R11(ctx, emit); break;
        case 12: rule_R12(ctx, emit); break;
        default: throw Error(ErrorKind::BadArgument, "rule id out of range");
        }
    }
    // canonical transfer order regardless of application order
    std::sort(ledger.transfers.begin(), ledger.transfers.end(),
              [](const Transfer& a, const Transfer& b) {
                  if (a.rule != b.rule) return a.rule < b.rule;
                  if (!(a.from == b.from)) return a.from < b.from;
                  if (!(a.to == b.to)) return a.to < b.to;
                  return a.amount < b.amount;
              });
    std::sort(ledger.findings.begin(), ledger.findings.end());
    ledger.findings.erase(std::unique(ledger.findings.begin(), ledger.findings.end()),
                          ledger.findings.end());
    return ledger;
}

ChargeLedger apply_rules(const PlaneGraph& g, ChargeLedger ledger, const DischargeOptions& opts) {
    return apply_rules_in_order(g, std::move(ledger), {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12},
                                opts);
}

namespace {

std::string vertex_claim_case(const PlaneGraph& g, int v, int n3) {
    if (g.is_external(v)) {
        if (g.degree(v) == 2) return "Claim2 Case 1 (2-vertex)";
        if (g.degree(v) == 3) return "Claim2 Case 1.1";
        return "Claim2 Case 1.2";
    }
    switch (g.degree(v)) {
    case 3: return "Claim2 Case 2.1";
    case 4: return n3 == 0 ? "Claim2 Case 2.2.1" : n3 == 1 ? "Claim2 Case 2.2.2" : "Claim2 Case 2.2.3";
    case 5: return n3 == 2 ? "Claim2 Case 2.3.1" : n3 == 1 ? "Claim2 Case 2.3.2" : "Claim2 Case 2.3.3";
    case 6: return "Claim2 Case 2.4";
    default: return "Claim2 Case 2.5";
    }
}

std::string face_claim_case(const PlaneGraph& g, int f) {
    std::set<int> dset(g.outer_walk().begin(), g.outer_walk().end());
    bool on_d = false;
    for (int v : g.face(f).walk)
        if (dset.count(v)) on_d = true;
    int d = g.face(f).degree();
    if (on_d) {
        if (d == 3) return "Claim3 Case 1.1";
        if (d == 5) return "Claim3 Case 1.2";
        if (d == 7) return "Claim3 Case 1.3";
        return "Claim3 Case 1.4";
    }
    if (d >= 7) return "Claim3 Case 2.1";
    if (d == 5) return "Claim3 Case 2.2";
    return "Claim3 Case 2.3";
}

} // namespace

AuditReport audit(const PlaneGraph& g, const ChargeLedger& ledger, const DischargeOptions&) {
    AuditReport rep;
    rep.total_initial = ledger.total_initial();
    rep.total_final = ledger.total_final();
    rep.conserved = rep.total_initial == rep.total_final;
    rep.expected_total = Rational(10 - g.face(g.outer_face_id()).degree());
    rep.matches_identity = rep.total_initial == rep.expected_total;
    rep.sum_note = "measured total " + rep.total_initial.str() +
                   "; the text's zero-sum claim does not hold for d(f0)=" +
                   std::to_string(g.face(g.outer_face_id()).degree()) +
                   " (derived identity: 10 - d(f0))";
    rep.findings = ledger.findings;

    auto prof = profile_faces(g);

    // counters
    for (int v = 1; v <= g.vertex_count(); ++v) {
        VertexCounters c;
        for (int f : g.faces_at(v)) {
            if (f == g.outer_face_id()) continue;
            if (g.face(f).degree() == 3) ++c.n3;
            if (g.face(f).degree() == 5) ++c.n5;
        }
        for (const auto& [f, p] : prof)
            for (const auto& [owner, pendent] : p.pendencies)
                if (owner == v) ++c.m3;
        c.zeta = Rational(2 * c.n3 + c.n5 + c.m3);
        c.eta = Rational(6) * Rational(c.n3) + Rational(8, 3) * Rational(c.n5) +
                Rational(5, 3) * Rational(c.m3);
        rep.counters[v] = c;
    }

    for (int v = 1; v <= g.vertex_count(); ++v) {
        if (!g.is_internal(v)) continue;
        const auto& c = rep.counters[v];
        int d = g.degree(v);
        if (2 * c.n3 + c.n5 + c.m3 > d)
            rep.eq1_violations.push_back("vertex " + std::to_string(v) + ": 2n3+n5+m3=" +
                                         std::to_string(2 * c.n3 + c.n5 + c.m3) + " > d=" +
                                         std::to_string(d));
        if (c.n5 != 0 && c.n5 != d && 2 * c.n3 + c.n5 + c.m3 > d - 1)
            rep.eq2_violations.push_back("vertex " + std::to_string(v) +
                                         ": strict variant fails (n5=" + std::to_string(c.n5) + ")");
    }

    auto finals = ledger.final_charges();
    auto matches = detect_all(g);
    for (const auto& [e, q] : finals) {
        if (q >= Rational(0)) continue;
        if (e.kind == Element::Face && e.id == g.outer_face_id()) continue;
        AuditReport::NegativeElement ne;
        ne.element = e;
        ne.final_charge = q;
        if (e.kind == Element::Vertex) {
            ne.claim_case = vertex_claim_case(g, e.id, rep.counters[e.id].n3);
            for (const auto& m : matches)
                for (const auto& [r, x] : m.binding)
                    if (x == e.id) {
                        ne.config_matches.push_back(m.describe());
                        break;
                    }
        } else {
            ne.claim_case = face_claim_case(g, e.id);
            std::set<int> fv(g.face(e.id).walk.begin(), g.face(e.id).walk.end());
            for (const auto& m : matches)
                for (const auto& [r, x] : m.binding)
                    if (fv.count(x)) {
                        ne.config_matches.push_back(m.describe());
                        break;
                    }
        }
        std::sort(ne.config_matches.begin(), ne.config_matches.end());
        ne.config_matches.erase(std::unique(ne.config_matches.begin(), ne.config_matches.end()),
                                ne.config_matches.end());
        rep.negatives.push_back(std::move(ne));
    }

    rep.f0_final = finals[{Element::Face, g.outer_face_id()}];
    rep.claim1_bound = Rational(24 - 2 * g.face(g.outer_face_id()).degree());
    rep.claim1_ok = rep.f0_final >= rep.claim1_bound;
    return rep;
}

} // namespace dlab
