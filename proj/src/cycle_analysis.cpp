#include "dlab/cycle_analysis.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dlab {

const char* bad_kind_name(BadKind k) {
    switch (k) {
    case BadKind::Claw_555: return "Claw_555";
    case BadKind::Claw_377: return "Claw_377";
    case BadKind::Claw_557: return "Claw_557";
    case BadKind::EdgeClaw_3737: return "EdgeClaw_3737";
    case BadKind::EdgeClaw_5555: return "EdgeClaw_5555";
    case BadKind::EdgeClaw_3738: return "EdgeClaw_3738";
    case BadKind::PathClaw_55555: return "PathClaw_55555";
    case BadKind::PentagonClaw_55555: return "PentagonClaw_55555";
    }
    return "?";
}

namespace {

void require_cycle(const PlaneGraph& g, const std::vector<int>& cycle) {
    if (cycle.size() < 3) throw Error(ErrorKind::NotACycle, "fewer than 3 vertices");
    std::set<int> s(cycle.begin(), cycle.end());
    if (s.size() != cycle.size()) throw Error(ErrorKind::NotACycle, "repeated vertex");
    for (size_t i = 0; i < cycle.size(); ++i) {
        int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
        if (u < 1 || u > g.vertex_count() || !g.adjacent(u, v))
            throw Error(ErrorKind::NotACycle,
                        "missing edge " + std::to_string(u) + "-" + std::to_string(v));
    }
}

} // namespace

CycleSides sides_of_cycle(const PlaneGraph& g, const std::vector<int>& cycle) {
    require_cycle(g, cycle);
    std::set<std::pair<int, int>> cyc_edges;
    for (size_t i = 0; i < cycle.size(); ++i) {
        int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
        cyc_edges.insert({std::min(u, v), std::max(u, v)});
    }

    // Flood over faces, crossing only edges not on the cycle. The component
    // holding the outer face is the exterior region.
    int nf = g.face_count();
    std::vector<char> outside(nf, 0);
    std::vector<int> stack{g.outer_face_id()};
    outside[g.outer_face_id()] = 1;
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        const auto& w = g.face(f).walk;
        for (size_t i = 0; i < w.size(); ++i) {
            int u = w[i], v = w[(i + 1) % w.size()];
            if (cyc_edges.count({std::min(u, v), std::max(u, v)})) continue;
            int f2 = g.face_of_dart(v, u);
            if (!outside[f2]) { outside[f2] = 1; stack.push_back(f2); }
        }
    }

    CycleSides s;
    s.face_inside.assign(nf, 0);
    for (int f = 0; f < nf; ++f) s.face_inside[f] = !outside[f];
    std::set<int> on_cycle(cycle.begin(), cycle.end());
    std::vector<char> seen_in(g.vertex_count() + 1, 0), seen_out(g.vertex_count() + 1, 0);
    for (int f = 0; f < nf; ++f)
        for (int v : g.face(f).walk) {
            if (on_cycle.count(v)) continue;
            (outside[f] ? seen_out : seen_in)[v] = 1;
        }
    for (int v = 1; v <= g.vertex_count(); ++v) {
        if (seen_in[v]) s.interior.push_back(v);
        if (seen_out[v]) s.exterior.push_back(v);
    }
    return s;
}

std::vector<std::pair<int, int>> cycle_chords(const PlaneGraph& g, const std::vector<int>& cycle) {
    std::vector<std::pair<int, int>> chords;
    size_t k = cycle.size();
    std::map<int, size_t> pos;
    for (size_t i = 0; i < k; ++i) pos[cycle[i]] = i;
    for (size_t i = 0; i < k; ++i)
        for (int u : g.rotation(cycle[i])) {
            auto it = pos.find(u);
            if (it == pos.end()) continue;
            size_t j = it->second;
            if (j <= i) continue;
            size_t d = j - i;
            if (d == 1 || d == k - 1) continue;
            chords.emplace_back(cycle[i], u);
        }
    std::sort(chords.begin(), chords.end());
    return chords;
}

CycleRecord make_cycle_record(const PlaneGraph& g, const std::vector<int>& cycle) {
    CycleRecord r;
    r.vertices = cycle;
    r.length = static_cast<int>(cycle.size());
    r.chords = cycle_chords(g, cycle);
    CycleSides s = sides_of_cycle(g, cycle);
    r.interior = s.interior;
    r.exterior = s.exterior;
    r.is_separating = !r.interior.empty() && !r.exterior.empty();
    return r;
}

std::vector<CycleRecord> enumerate_cycles(const PlaneGraph& g, int max_len) {
    if (max_len < 3) return {};
    std::vector<CycleRecord> out;
    for (const auto& cyc : find_short_cycles(g, max_len)) out.push_back(make_cycle_record(g, cyc));
    return out;
}

namespace {

// Face walks of the subgraph H, traced with rotations induced from g.
std::vector<std::vector<int>> trace_subgraph_faces(const PlaneGraph& g,
                                                   const std::set<std::pair<int, int>>& h_edges) {
    std::map<int, std::vector<int>> rot;
    for (const auto& [u, v] : h_edges) {
        (void)u; (void)v;
    }
    std::set<int> verts;
    for (const auto& e : h_edges) { verts.insert(e.first); verts.insert(e.second); }
    for (int v : verts) {
        std::vector<int> r;
        for (int u : g.rotation(v))
            if (h_edges.count({std::min(u, v), std::max(u, v)})) r.push_back(u);
        rot[v] = std::move(r);
    }

    std::map<std::pair<int, int>, char> used;
    std::vector<std::vector<int>> walks;
    for (const auto& [v, r] : rot) {
        for (int u0 : r) {
            if (used.count({v, u0})) continue;
            std::vector<int> walk;
            int cu = v, cv = u0;
            do {
                used[{cu, cv}] = 1;
                walk.push_back(cu);
                const auto& rv = rot[cv];
                int j = -1;
                for (size_t i = 0; i < rv.size(); ++i)
                    if (rv[i] == cu) { j = static_cast<int>(i); break; }
                int deg = static_cast<int>(rv.size());
                int w = rv[(j - 1 + deg) % deg];
                cu = cv;
                cv = w;
            } while (!(cu == v && cv == u0));
            walks.push_back(std::move(walk));
        }
    }
    return walks;
}

struct CellSet {
    std::vector<std::pair<std::vector<int>, int>> cells; // walk, length
};

// Trace H = C + claw edges and split off the face that is C itself. Returns
// nullopt if some traced walk repeats a vertex (degenerate drawing).
std::optional<CellSet> cells_of(const PlaneGraph& g, const std::vector<int>& cycle,
                                const std::set<std::pair<int, int>>& extra_edges) {
    std::set<std::pair<int, int>> h_edges = extra_edges;
    for (size_t i = 0; i < cycle.size(); ++i) {
        int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
        h_edges.insert({std::min(u, v), std::max(u, v)});
    }
    auto walks = trace_subgraph_faces(g, h_edges);
    CellSet cs;
    bool c_face_seen = false;
    std::set<int> cset(cycle.begin(), cycle.end());
    for (auto& w : walks) {
        std::set<int> ws(w.begin(), w.end());
        if (ws.size() != w.size()) return std::nullopt;
        if (!c_face_seen && w.size() == cycle.size() && ws == cset) {
            c_face_seen = true; // the outside of C within H
            continue;
        }
        cs.cells.emplace_back(w, static_cast<int>(w.size()));
    }
    if (!c_face_seen) return std::nullopt;
    return cs;
}

std::multiset<int> cell_lengths(const CellSet& cs) {
    std::multiset<int> m;
    for (const auto& c : cs.cells) m.insert(c.second);
    return m;
}

bool cell_contains_edge(const std::vector<int>& walk, int a, int b) {
    size_t k = walk.size();
    for (size_t i = 0; i < k; ++i) {
        int u = walk[i], v = walk[(i + 1) % k];
        if ((u == a && v == b) || (u == b && v == a)) return true;
    }
    return false;
}

std::vector<int> sorted_c_neighbors(const PlaneGraph& g, int v, const std::set<int>& cset) {
    std::vector<int> out;
    for (int u : g.rotation(v))
        if (cset.count(u)) out.push_back(u);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::optional<BadPartition> find_bad_partition(const PlaneGraph& g, const std::vector<int>& cycle) {
    require_cycle(g, cycle);
    int len = static_cast<int>(cycle.size());
    if (len > 11) return std::nullopt;
    CycleSides sides = sides_of_cycle(g, cycle);
    const std::vector<int>& interior = sides.interior;
    if (interior.empty()) return std::nullopt;
    std::set<int> cset(cycle.begin(), cycle.end());
    std::set<int> iset(interior.begin(), interior.end());

    auto make = [&](BadKind kind, std::vector<int> core, const CellSet& cs) {
        BadPartition bp;
        bp.kind = kind;
        std::sort(core.begin(), core.end());
        bp.core = std::move(core);
        bp.cells = cs.cells;
        return bp;
    };

    // Claws first (Lemma 4 order), then edge-claws, then path- and
    // pentagon-claws; first witness wins.
    for (int v : interior) {
        auto nbr = sorted_c_neighbors(g, v, cset);
        int d = static_cast<int>(nbr.size());
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j)
                for (int k = j + 1; k < d; ++k) {
                    std::set<std::pair<int, int>> extra;
                    for (int u : {nbr[i], nbr[j], nbr[k]})
                        extra.insert({std::min(u, v), std::max(u, v)});
                    auto cs = cells_of(g, cycle, extra);
                    if (!cs) continue;
                    auto lens = cell_lengths(*cs);
                    if (cs->cells.size() != 3) continue;
                    if (len == 9 && lens == std::multiset<int>{5, 5, 5})
                        return make(BadKind::Claw_555, {v}, *cs);
                    if (len == 11 && lens == std::multiset<int>{3, 7, 7})
                        return make(BadKind::Claw_377, {v}, *cs);
                    if (len == 11 && lens == std::multiset<int>{5, 5, 7})
                        return make(BadKind::Claw_557, {v}, *cs);
                }
    }

    for (int a : interior)
        for (int b : g.rotation(a)) {
            if (b <= a || !iset.count(b)) continue;
            auto na = sorted_c_neighbors(g, a, cset);
            auto nb = sorted_c_neighbors(g, b, cset);
            for (size_t i = 0; i < na.size(); ++i)
                for (size_t j = i + 1; j < na.size(); ++j)
                    for (size_t p = 0; p < nb.size(); ++p)
                        for (size_t q = p + 1; q < nb.size(); ++q) {
                            std::set<std::pair<int, int>> extra{{a, b}};
                            extra.insert({std::min(a, na[i]), std::max(a, na[i])});
                            extra.insert({std::min(a, na[j]), std::max(a, na[j])});
                            extra.insert({std::min(b, nb[p]), std::max(b, nb[p])});
                            extra.insert({std::min(b, nb[q]), std::max(b, nb[q])});
                            if (extra.size() != 5) continue;
                            auto cs = cells_of(g, cycle, extra);
                            if (!cs || cs->cells.size() != 4) continue;
                            std::multiset<int> mids, lobes;
                            for (const auto& c : cs->cells)
                                (cell_contains_edge(c.first, a, b) ? mids : lobes).insert(c.second);
                            if (mids.size() != 2 || lobes.size() != 2) continue;
                            if (len == 10 && lobes == std::multiset<int>{3, 3} && mids == std::multiset<int>{7, 7})
                                return make(BadKind::EdgeClaw_3737, {a, b}, *cs);
                            if (len == 10 && lobes == std::multiset<int>{5, 5} && mids == std::multiset<int>{5, 5})
                                return make(BadKind::EdgeClaw_5555, {a, b}, *cs);
                            if (len == 11 && lobes == std::multiset<int>{3, 3} && mids == std::multiset<int>{7, 8})
                                return make(BadKind::EdgeClaw_3738, {a, b}, *cs);
                        }
        }

    if (len == 11) {
        for (int b : interior) {
            std::vector<int> inbr;
            for (int u : g.rotation(b))
                if (iset.count(u)) inbr.push_back(u);
            std::sort(inbr.begin(), inbr.end());
            for (size_t x = 0; x < inbr.size(); ++x)
                for (size_t y = x + 1; y < inbr.size(); ++y) {
                    int a = inbr[x], c = inbr[y];
                    auto na = sorted_c_neighbors(g, a, cset);
                    auto nb = sorted_c_neighbors(g, b, cset);
                    auto nc = sorted_c_neighbors(g, c, cset);
                    for (size_t i = 0; i < na.size(); ++i)
                        for (size_t j = i + 1; j < na.size(); ++j)
                            for (int mid : nb)
                                for (size_t p = 0; p < nc.size(); ++p)
                                    for (size_t q = p + 1; q < nc.size(); ++q) {
                                        std::set<std::pair<int, int>> extra;
                                        extra.insert({std::min(a, b), std::max(a, b)});
                                        extra.insert({std::min(b, c), std::max(b, c)});
                                        for (auto [w, z] : std::initializer_list<std::pair<int, int>>{
                                                 {a, na[i]}, {a, na[j]}, {b, mid}, {c, nc[p]}, {c, nc[q]}})
                                            extra.insert({std::min(w, z), std::max(w, z)});
                                        if (extra.size() != 7) continue;
                                        auto cs = cells_of(g, cycle, extra);
                                        if (!cs || cs->cells.size() != 5) continue;
                                        if (cell_lengths(*cs) == std::multiset<int>{5, 5, 5, 5, 5})
                                            return make(BadKind::PathClaw_55555, {a, b, c}, *cs);
                                    }
                }
        }
    }

    if (len == 10) {
        // pentagons with all vertices inside C, one leg per vertex
        for (const auto& pent : find_short_cycles(g, 5)) {
            if (pent.size() != 5) continue;
            bool inside = true;
            for (int v : pent)
                if (!iset.count(v)) inside = false;
            if (!inside) continue;
            std::vector<std::vector<int>> legs;
            for (int v : pent) legs.push_back(sorted_c_neighbors(g, v, cset));
            std::vector<size_t> pick(5, 0);
            bool any_empty = false;
            for (auto& l : legs)
                if (l.empty()) any_empty = true;
            if (any_empty) continue;
            // iterate over leg choices
            while (true) {
                std::set<std::pair<int, int>> extra;
                for (size_t i = 0; i < 5; ++i) {
                    int u = pent[i], v = pent[(i + 1) % 5];
                    extra.insert({std::min(u, v), std::max(u, v)});
                    int leg = legs[i][pick[i]];
                    extra.insert({std::min(pent[i], leg), std::max(pent[i], leg)});
                }
                if (extra.size() == 10) {
                    auto cs = cells_of(g, cycle, extra);
                    if (cs && cs->cells.size() == 6 &&
                        cell_lengths(*cs) == std::multiset<int>{5, 5, 5, 5, 5, 5})
                        return make(BadKind::PentagonClaw_55555,
                                    std::vector<int>(pent.begin(), pent.end()), *cs);
                }
                size_t i = 0;
                while (i < 5 && ++pick[i] == legs[i].size()) pick[i++] = 0;
                if (i == 5) break;
            }
        }
    }

    return std::nullopt;
}

Classification classify_cycle(const PlaneGraph& g, const std::vector<int>& cycle, bool allow_long) {
    if (static_cast<int>(cycle.size()) > 11) {
        if (!allow_long)
            throw Error(ErrorKind::BadArgument,
                        "good/bad is defined only for cycles of length at most 11");
        return {true, std::nullopt}; // good by length, caller opted in
    }
    Classification c;
    c.partition = find_bad_partition(g, cycle);
    c.good = !c.partition.has_value();
    return c;
}

Remark1Report check_remark1(const PlaneGraph& g, const std::vector<int>& cycle,
                            const BadPartition& bp) {
    Remark1Report rep;
    CycleSides sides = sides_of_cycle(g, cycle);
    std::set<int> iset(sides.interior.begin(), sides.interior.end());
    std::set<int> cset(cycle.begin(), cycle.end());
    size_t k = cycle.size();

    auto note = [&](const std::string& s) { rep.violations.push_back(s); };

    // (1) cells facial, up to the (3,7)-chorded 8-cell
    for (const auto& [walk, len] : bp.cells) {
        bool facial = false;
        for (const auto& f : g.faces())
            if (static_cast<int>(f.walk.size()) == len && cyclic_equal_reflective(f.walk, walk)) {
                facial = true;
                break;
            }
        if (facial) continue;
        bool excused = false;
        if (len == 8) {
            auto chords = cycle_chords(g, walk);
            CycleSides cell_sides = sides_of_cycle(g, walk);
            // the side of the cell away from the rest of C must hold nothing
            std::vector<int> rest;
            std::set<int> wset(walk.begin(), walk.end());
            for (int v : cycle)
                if (!wset.count(v)) rest.push_back(v);
            bool rest_inside = !rest.empty() &&
                std::find(cell_sides.interior.begin(), cell_sides.interior.end(), rest.front()) !=
                    cell_sides.interior.end();
            const auto& far_side = rest_inside ? cell_sides.exterior : cell_sides.interior;
            if (far_side.empty() && chords.size() == 1) {
                auto [x, y] = chords.front();
                size_t px = 0, py = 0;
                for (size_t i = 0; i < walk.size(); ++i) {
                    if (walk[i] == x) px = i;
                    if (walk[i] == y) py = i;
                }
                size_t d = px < py ? py - px : px - py;
                d = std::min(d, walk.size() - d);
                if (cset.count(x) && cset.count(y) && d == 2) excused = true;
            }
        }
        if (!excused) {
            rep.cells_facial_ok = false;
            note("cell of length " + std::to_string(len) + " is not facial");
        }
    }

    // (2) interior degrees
    for (int v : sides.interior)
        if (g.degree(v) != 3) {
            rep.interior_degrees_ok = false;
            note("interior vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
        }

    // (3) interior neighbors per cycle vertex
    for (int w : cycle) {
        int cnt = 0;
        for (int u : g.rotation(w))
            if (iset.count(u)) ++cnt;
        if (cnt > 1) {
            rep.neighbor_bound_ok = false;
            note("cycle vertex " + std::to_string(w) + " has " + std::to_string(cnt) + " interior neighbors");
        }
    }

    // (4) interior-incident edge count, equality iff (3,7,3,8)-edge-claw
    auto edge_inside = [&](int u, int v) {
        if (iset.count(u) || iset.count(v)) return iset.count(u) || iset.count(v);
        int f1 = g.face_of_dart(u, v), f2 = g.face_of_dart(v, u);
        return static_cast<bool>(sides.face_inside[f1] && sides.face_inside[f2]);
    };
    bool any_equality = false;
    for (int w : cycle) {
        int cnt = 0;
        for (int u : g.rotation(w)) {
            if (cset.count(u)) {
                // skip cycle edges; chords count when drawn inside
                size_t pw = 0, pu = 0;
                for (size_t i = 0; i < k; ++i) {
                    if (cycle[i] == w) pw = i;
                    if (cycle[i] == u) pu = i;
                }
                size_t d = pw < pu ? pu - pw : pw - pu;
                if (d == 1 || d == k - 1) continue;
                if (edge_inside(w, u)) ++cnt;
            } else if (iset.count(u)) {
                ++cnt;
            }
        }
        if (cnt > 2) {
            rep.incident_edges_ok = false;
            note("cycle vertex " + std::to_string(w) + " has " + std::to_string(cnt) + " inside edges");
        }
        if (cnt == 2) any_equality = true;
    }
    if (any_equality != (bp.kind == BadKind::EdgeClaw_3738)) {
        rep.incident_equality_matches = false;
        note(any_equality ? "two inside edges at a cycle vertex without a (3,7,3,8)-edge-claw"
                          : "(3,7,3,8)-edge-claw without the two-inside-edges vertex");
    }

    // (5) four consecutive cycle vertices see at most two interior edges
    for (size_t i = 0; i < k; ++i) {
        int cnt = 0;
        for (size_t t = 0; t < 4; ++t) {
            int w = cycle[(i + t) % k];
            for (int u : g.rotation(w))
                if (iset.count(u)) ++cnt;
        }
        if (cnt > 2) {
            rep.four_consecutive_ok = false;
            note("four consecutive vertices starting at " + std::to_string(cycle[i]) + " have " +
                 std::to_string(cnt) + " interior edges");
            break;
        }
    }
    return rep;
}

std::vector<std::vector<int>> splitting_paths(const PlaneGraph& g, const std::vector<int>& D,
                                              int max_len) {
    require_cycle(g, D);
    CycleSides sides = sides_of_cycle(g, D);
    std::set<int> dset(D.begin(), D.end());
    std::set<int> iset(sides.interior.begin(), sides.interior.end());

    std::set<std::vector<int>> out;
    std::vector<int> path;
    std::vector<char> used(g.vertex_count() + 1, 0);
    auto dfs = [&](auto&& self, int v) -> void {
        for (int u : g.rotation(v)) {
            if (dset.count(u)) {
                if (path.size() >= 2 && u != path.front()) {
                    std::vector<int> p = path;
                    p.push_back(u);
                    if (p.back() < p.front()) std::reverse(p.begin(), p.end());
                    out.insert(p);
                }
                continue;
            }
            if (!iset.count(u) || used[u]) continue;
            if (static_cast<int>(path.size()) >= max_len) continue;
            path.push_back(u);
            used[u] = 1;
            self(self, u);
            used[u] = 0;
            path.pop_back();
        }
    };
    for (int s : D) {
        path.assign(1, s);
        std::fill(used.begin(), used.end(), 0);
        used[s] = 1;
        dfs(dfs, s);
    }
    return {out.begin(), out.end()};
}

Lemma7Report verify_lemma7_consequence(const PlaneGraph& g, const std::vector<int>& path,
                                       const std::vector<int>& D) {
    require_cycle(g, D);
    if (path.size() < 3) throw Error(ErrorKind::PathDoesNotSplit, "path too short");
    std::set<int> dset(D.begin(), D.end());
    if (!dset.count(path.front()) || !dset.count(path.back()))
        throw Error(ErrorKind::PathDoesNotSplit, "path ends must lie on D");
    CycleSides sides = sides_of_cycle(g, D);
    std::set<int> iset(sides.interior.begin(), sides.interior.end());
    for (size_t i = 1; i + 1 < path.size(); ++i)
        if (!iset.count(path[i]))
            throw Error(ErrorKind::PathDoesNotSplit,
                        "internal path vertex " + std::to_string(path[i]) + " not inside D");
    for (size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.adjacent(path[i], path[i + 1]))
            throw Error(ErrorKind::PathDoesNotSplit, "not a path of the graph");

    size_t k = D.size();
    size_t pa = 0, pb = 0;
    for (size_t i = 0; i < k; ++i) {
        if (D[i] == path.front()) pa = i;
        if (D[i] == path.back()) pb = i;
    }
    size_t arc = pa < pb ? pb - pa : pa - pb;
    int plen = static_cast<int>(path.size()) - 1;
    Lemma7Report rep;
    rep.path_len = plen;
    rep.d1_len = static_cast<int>(arc) + plen;
    rep.d2_len = static_cast<int>(k - arc) + plen;
    switch (plen) {
    case 2: rep.allowed = {3}; break;
    case 3: rep.allowed = {5}; break;
    case 4: rep.allowed = {5, 7}; break;
    case 5: rep.allowed = {7, 8, 9}; break;
    default:
        throw Error(ErrorKind::BadArgument, "lemma table covers path lengths 2..5");
    }
    int mn = std::min(rep.d1_len, rep.d2_len);
    rep.pass = std::find(rep.allowed.begin(), rep.allowed.end(), mn) != rep.allowed.end();
    return rep;
}

} // namespace dlab
