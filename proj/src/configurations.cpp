#include "dlab/configurations.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dlab {

const char* config_kind_name(ConfigKind k) {
    switch (k) {
    case ConfigKind::MinDegree: return "MinDegree";
    case ConfigKind::SeparatingGoodCycle: return "SeparatingGoodCycle";
    case ConfigKind::CutVertex: return "CutVertex";
    case ConfigKind::LightCluster: return "LightCluster";
    case ConfigKind::LightTriangle334: return "LightTriangle334";
    case ConfigKind::TwoPendent: return "TwoPendent";
    case ConfigKind::IncidentPlusPendent: return "IncidentPlusPendent";
    case ConfigKind::TwoIncident344: return "TwoIncident344";
    case ConfigKind::FiveVertexTwoIncident: return "FiveVertexTwoIncident";
    case ConfigKind::FiveVertexPendent333: return "FiveVertexPendent333";
    case ConfigKind::SixVertexTwoWeak336: return "SixVertexTwoWeak336";
    case ConfigKind::Wheel: return "Wheel";
    case ConfigKind::AntiwheelAllLight: return "AntiwheelAllLight";
    case ConfigKind::FiveFaceAllLight: return "FiveFaceAllLight";
    case ConfigKind::SmallFiveFaceWith4Vertex: return "SmallFiveFaceWith4Vertex";
    case ConfigKind::AdjacentFiveFaces: return "AdjacentFiveFaces";
    }
    return "?";
}

std::optional<ConfigKind> config_kind_from_name(const std::string& s) {
    for (int i = 0; i <= static_cast<int>(ConfigKind::AdjacentFiveFaces); ++i) {
        auto k = static_cast<ConfigKind>(i);
        if (s == config_kind_name(k)) return k;
    }
    return std::nullopt;
}

int ConfigMatch::at(const std::string& role) const {
    for (const auto& [r, v] : binding)
        if (r == role) return v;
    throw Error(ErrorKind::BadArgument, std::string("no role '") + role + "' in match");
}

bool ConfigMatch::has(const std::string& role) const {
    for (const auto& [r, v] : binding)
        if (r == role) return true;
    return false;
}

std::string ConfigMatch::describe() const {
    std::string s = config_kind_name(kind);
    if (!case_tag.empty()) s += " case " + case_tag;
    s += " {";
    for (size_t i = 0; i < binding.size(); ++i) {
        if (i) s += ", ";
        s += binding[i].first + "=" + std::to_string(binding[i].second);
    }
    return s + "}";
}

namespace {

int rot_index(const PlaneGraph& g, int v, int u) {
    const auto& r = g.rotation(v);
    for (size_t i = 0; i < r.size(); ++i)
        if (r[i] == u) return static_cast<int>(i);
    return -1;
}

int rot_next(const PlaneGraph& g, int v, int u) {
    const auto& r = g.rotation(v);
    int i = rot_index(g, v, u);
    return r[(i + 1) % r.size()];
}

// 3-face on exactly the vertex set {a,b,c}?
bool is_face3(const PlaneGraph& g, int a, int b, int c) {
    for (int f : g.faces_at(a)) {
        const auto& w = g.face(f).walk;
        if (w.size() != 3) continue;
        std::set<int> s(w.begin(), w.end());
        if (s == std::set<int>{a, b, c}) return true;
    }
    return false;
}

// Inner faces trace counterclockwise under the dart convention, so the
// clockwise boundary order of a face as drawn is the reversed walk.
std::vector<int> face_cw_order(const PlaneGraph& g, int f) {
    std::vector<int> w = g.face(f).walk;
    std::reverse(w.begin(), w.end());
    return w;
}

// all face corners internal and sorted degree vector equal to want
bool internal_face_degrees(const PlaneGraph& g, const std::vector<int>& walk, std::vector<int> want) {
    if (walk.size() != want.size()) return false;
    std::vector<int> ds;
    for (int v : walk) {
        if (g.is_external(v)) return false;
        ds.push_back(g.degree(v));
    }
    std::sort(ds.begin(), ds.end());
    std::sort(want.begin(), want.end());
    return ds == want;
}

// outer neighbor of internal 3-vertex u on 3-face f (the one neighbor off f)
int outer_neighbor(const PlaneGraph& g, int u, const std::set<int>& fverts) {
    for (int x : g.rotation(u))
        if (!fverts.count(x)) return x;
    return 0;
}

struct PendentRec {
    int owner;   // v: the vertex the face is pendent to
    int pendent; // u: internal 3-vertex of the face adjacent to v
    int face;
};

std::vector<PendentRec> pendent_faces(const PlaneGraph& g) {
    std::vector<PendentRec> out;
    for (int f = 0; f < g.face_count(); ++f) {
        const auto& w = g.face(f).walk;
        if (w.size() != 3 || f == g.outer_face_id()) continue;
        std::set<int> fv(w.begin(), w.end());
        for (int u : w) {
            if (!g.is_light(u)) continue;
            int v = outer_neighbor(g, u, fv);
            if (v) out.push_back({v, u, f});
        }
    }
    return out;
}

bool face_is_weak(const PlaneGraph& g, int f) {
    const auto& w = g.face(f).walk;
    if (w.size() != 3) return false;
    std::set<int> fv(w.begin(), w.end());
    for (int u : w) {
        if (!g.is_light(u)) continue;
        int v = outer_neighbor(g, u, fv);
        if (v && g.is_light(v)) return true;
    }
    return false;
}

std::vector<int> light_outer_neighbors_at(const PlaneGraph& g, int f, int u) {
    std::vector<int> out;
    const auto& w = g.face(f).walk;
    std::set<int> fv(w.begin(), w.end());
    if (!g.is_light(u)) return out;
    int v = outer_neighbor(g, u, fv);
    if (v && g.is_light(v)) out.push_back(v);
    return out;
}

using Binding = std::vector<std::pair<std::string, int>>;

bool injective(const Binding& b) {
    std::set<int> s;
    for (const auto& [r, v] : b)
        if (!s.insert(v).second) return false;
    return true;
}

} // namespace

std::vector<WheelLike> find_wheels_impl(const PlaneGraph& g, bool anti) {
    std::vector<WheelLike> out;
    for (int f = 0; f < g.face_count(); ++f) {
        if (f == g.outer_face_id()) continue;
        const auto& walk = g.face(f).walk;
        if (walk.size() != 3) continue;
        bool all44 = true;
        for (int v : walk)
            if (g.is_external(v) || g.degree(v) != 4) all44 = false;
        if (!all44) continue;
        std::vector<int> cw = face_cw_order(g, f);
        std::vector<WheelLike> local;
        for (int r = 0; r < 3; ++r) {
            int u = cw[r % 3], v = cw[(r + 1) % 3], w = cw[(r + 2) % 3];
            // clockwise rotations: (u1,u2,v,w) at u, (v1,v2,w,u) at v, (w1,w2,u,v) at w
            if (rot_next(g, u, v) != w) continue;
            if (rot_next(g, v, w) != u) continue;
            if (rot_next(g, w, u) != v) continue;
            WheelLike wl;
            wl.anti = anti;
            wl.u = u; wl.v = v; wl.w = w;
            wl.u1 = rot_next(g, u, w); wl.u2 = rot_next(g, u, wl.u1);
            wl.v1 = rot_next(g, v, u); wl.v2 = rot_next(g, v, wl.v1);
            wl.w1 = rot_next(g, w, v); wl.w2 = rot_next(g, w, wl.w1);
            auto deg_ok = [&](int x, int want) { return !g.is_external(x) && g.degree(x) == want; };
            bool degrees;
            if (!anti)
                degrees = deg_ok(wl.u1, 3) && deg_ok(wl.u2, 4) && deg_ok(wl.v1, 3) &&
                          deg_ok(wl.v2, 4) && deg_ok(wl.w1, 3) && deg_ok(wl.w2, 4);
            else
                degrees = deg_ok(wl.u1, 3) && deg_ok(wl.u2, 4) && deg_ok(wl.v1, 3) &&
                          deg_ok(wl.v2, 4) && deg_ok(wl.w1, 4) && deg_ok(wl.w2, 3);
            if (!degrees) continue;
            if (!is_face3(g, u, wl.u1, wl.u2) || !is_face3(g, v, wl.v1, wl.v2) ||
                !is_face3(g, w, wl.w1, wl.w2))
                continue;
            std::set<int> all{u, v, w, wl.u1, wl.u2, wl.v1, wl.v2, wl.w1, wl.w2};
            if (all.size() != 9) continue;
            local.push_back(wl);
        }
        if (local.empty()) continue;
        if (!anti) {
            // a wheel matches under all three rotations; keep the one rooted
            // at the smallest corner
            std::sort(local.begin(), local.end(),
                      [](const WheelLike& a, const WheelLike& b) { return a.u < b.u; });
            out.push_back(local.front());
        } else {
            for (auto& wl : local) out.push_back(wl);
        }
    }
    return out;
}

std::vector<WheelLike> find_wheels(const PlaneGraph& g) { return find_wheels_impl(g, false); }
std::vector<WheelLike> find_antiwheels(const PlaneGraph& g) { return find_wheels_impl(g, true); }

namespace {

int third_neighbor(const PlaneGraph& g, int v, int a, int b) {
    for (int x : g.rotation(v))
        if (x != a && x != b) return x;
    return 0;
}

void detect_min_degree(const PlaneGraph& g, std::vector<ConfigMatch>& out) {
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (g.is_internal(v) && g.degree(v) <= 2)
            out.push_back({ConfigKind::MinDegree, "", {{"v", v}}});
}

void detect_separating_good_cycle(const PlaneGraph& g, std::vector<ConfigMatch>& out) {
    for (const auto& cyc : find_short_cycles(g, 11)) {
        CycleSides s = sides_of_cycle(g, cyc);
        if (s.interior.empty() || s.exterior.empty()) continue;
        if (find_bad_partition(g, cyc)) continue;
        Binding b;
        for (size_t i = 0; i < cyc.size(); ++i) b.emplace_back("c" + std::to_string(i + 1), cyc[i]);
        out.push_back({ConfigKind::SeparatingGoodCycle, "", std::move(b)});
    }
}

void detect_cut_vertex(const PlaneGraph& g, std::vector<ConfigMatch>& out) {
    // biconnected components by lowpoint DFS
    int n = g.vertex_count();
    std::vector<int> disc(n + 1, 0), low(n + 1, 0), parent(n + 1, 0);
    std::vector<std::vector<std::pair<int, int>>> comp_edges;
    std::vector<std::pair<int, int>> stack;
    int timer = 0;
    auto dfs = [&](auto&& self, int v) -> void {
        disc[v] = low[v] = ++timer;
        for (int u : g.rotation(v)) {
            if (!disc[u]) {
                parent[u] = v;
                stack.push_back({v, u});
                self(self, u);
                low[v] = std::min(low[v], low[u]);
                if (low[u] >= disc[v]) {
                    comp_edges.emplace_back();
                    while (true) {
                        auto e = stack.back();
                        stack.pop_back();
                        comp_edges.back().push_back(e);
                        if (e == std::make_pair(v, u)) break;
                    }
                }
            } else if (u != parent[v] && disc[u] < disc[v]) {
                stack.push_back({v, u});
                low[v] = std::min(low[v], disc[u]);
            }
        }
    };
    dfs(dfs, 1);

    // vertex sets per block; cut vertices = vertices in >= 2 blocks
    std::vector<std::set<int>> blocks;
    for (auto& es : comp_edges) {
        std::set<int> vs;
        for (auto& [a, b] : es) { vs.insert(a); vs.insert(b); }
        blocks.push_back(std::move(vs));
    }
    std::map<int, int> block_count;
    for (const auto& b : blocks)
        for (int v : b) block_count[v]++;

    std::set<int> dset(g.outer_walk().begin(), g.outer_walk().end());
    for (const auto& blk : blocks) {
        std::vector<int> cuts;
        for (int v : blk)
            if (block_count[v] > 1) cuts.push_back(v);
        if (cuts.size() != 1) continue; // pendant blocks only
        int v = cuts.front();
        bool clean = true;
        for (int x : blk)
            if (x != v && dset.count(x)) clean = false;
        if (!clean) continue;
        Binding b{{"v", v}};
        int i = 0;
        std::vector<int> rest(blk.begin(), blk.end());
        std::sort(rest.begin(), rest.end());
        for (int x : rest)
            if (x != v) b.emplace_back("b" + std::to_string(++i), x);
        if (b.size() >= 2) out.push_back({ConfigKind::CutVertex, "", std::move(b)});
    }
}

void detect_light_cluster(const PlaneGraph& g, std::vector<ConfigMatch>& out) {
    for (int v = 1; v <= g.vertex_count(); ++v) {
        if (!g.is_light(v)) continue;
        const auto& nb = g.rotation(v);
        if (!std::all_of(nb.begin(), nb.end(), [&](int u) { return g.is_light(u); })) continue;
        std::vector<int> ns(nb.begin(), nb.end());
        std::sort(ns.begin(), ns.end());
        out.push_back({ConfigKind::LightCluster,
                       "",
                       {{"v", v}, {"u1", ns[0]}, {"u2", ns[1]}, {"u3", ns[2]}}});
    }
}

void detect_light_triangle(const PlaneGraph& g, std::vector<ConfigMatch>& out) {
    for (int f = 0; f < g.face_count(); ++f) {
        if (f == g.outer_face_id()) continue;
        const auto& walk = g.face(f).walk;
        if (walk.size() != 3 || !internal_face_degrees(g, walk, {3, 3, 4})) continue;
        std::set<int> fv(walk.begin(), walk.end());
        int w = 0;
        for (int t : walk)
            if (g.degree(t) == 4) w = t;
        std::vector<int> threes;
        for (int t : walk)
            if (g.degree(t) == 3) threes.push_back(t);
        std::sort(threes.begin(), threes.end());
        for (int u : threes) {
            int x = outer_neighbor(g, u, fv);
            if (!x || !g.is_light(x)) continue;
            int v = threes[0] == u ? threes[1] : threes[0];
            Binding b{{"u", u}, {"v", v}, {"w", w}, {"x", x}};
            if (injective(b)) out.push_back({ConfigKind::LightTriangle334, "", std::move(b)});
        }
    }
}

void detect_two_pendent(const PlaneGraph& g, std::vector<ConfigMatch>& out) {
    auto pend = pendent_faces(g);
    for (int x = 1; x <= g.vertex_count(); ++x) {
        if (g.is_external(x) || g.degree(x) != 4) continue;
        std::vector<PendentRec> mine;
        for (const auto& p : pend)
            if (p.owner == x) mine.push_back(p);
        for (const auto& p333 : mine) {
            if (!internal_face_degrees(g, g.face(p333.face).walk, {3, 3, 3})) continue;
            for (const auto& p334 : mine) {
                if (p334.face == p333.face) continue;
                const auto& w2 = g.face(p334.face).walk;
                bool ok334 = internal_face_degrees(g, w2, {3, 3, 3}) ||
                             internal_face_degrees(g, w2, {3, 3, 4});
                if (!ok334) continue;
                int u1 = p333.pendent, v1 = p334.pendent;

                // triangle corners
                std::vector<int> uw = g.face(p333.face).walk;
                std::vector<int> vwk = w2;
                std::vector<int> vrest;
                for (int t : vwk)
                    if (t != v1) vrest.push_back(t);
                // v3 is the 4^- vertex; on a (3,3,3) face take the larger id
                int v3, v2;
                if (g.degree(vrest[0]) != g.degree(vrest[1]))
                    v3 = g.degree(vrest[0]) > g.degree(vrest[1]) ? vrest[0] : vrest[1];
                else
                    v3 = std::max(vrest[0], vrest[1]);
                v2 = vrest[0] == v3 ? vrest[1] : vrest[0];

                // remaining neighbors of x
                std::vector<int> others;
                for (int t : g.rotation(x))
                    if (t != u1 && t != v1) others.push_back(t);
                if (others.size() != 2) continue;

                // rotation at x decides the case: consecutive x1,x2 is case 2
                int after_u1 = rot_next(g, x, u1);
                bool case1 = (after_u1 == v1) ||
                             (rot_next(g, x, others[0]) == v1 && rot_next(g, x, v1) == others[1]) ||
                             (rot_next(g, x, others[1]) == v1 && rot_next(g, x, v1) == others[0]);
                // precise: case 1 iff u1 and v1 are not rotation-adjacent twice,
                // i.e. pattern (u1, a, v1, b)
                {
                    int nu = rot_next(g, x, u1);
                    int nnu = rot_next(g, x, nu);
                    case1 = (nu != v1) && (nnu == v1);
                }

                if (case1) {
                    int x1 = rot_next(g, x, u1);
                    int x2 = rot_next(g, x, v1);
                    // triangle orientation is irrelevant in case 1
                    std::vector<int> urest;
                    for (int t : uw)
                        if (t != u1) urest.push_back(t);
                    std::sort(urest.begin(), urest.end());
                    Binding b{{"x", x},   {"u1", u1},        {"u2", urest[0]}, {"u3", urest[1]},
                              {"v1", v1}, {"v2", v2},        {"v3", v3},       {"x1", x1},
                              {"x2", x2}};
                    if (injective(b)) out.push_back({ConfigKind::TwoPendent, "1", std::move(b)});
                } else {
                    // case 2: clockwise around x reads u1,x1,x2,v1 (or the
                    // mirror v1,x1,x2,u1, handled by flipping the triangle)
                    int a = rot_next(g, x, u1);
                    int b2 = rot_next(g, x, a);
                    int c = rot_next(g, x, b2);
                    bool forward = (c == v1);
                    int x1, x2, u2, u3;
                    // clockwise order of the pendent triangle
                    int tf = p333.face;
                    std::vector<int> cw = face_cw_order(g, tf);
                    int iu = static_cast<int>(std::find(cw.begin(), cw.end(), u1) - cw.begin());
                    int cw_next = cw[(iu + 1) % 3], cw_prev = cw[(iu + 2) % 3];
                    if (forward) {
                        x1 = a; x2 = b2;
                        u2 = cw_next; u3 = cw_prev;
                    } else {
                        // mirror: clockwise reads v1,?,?,u1
                        int a2 = rot_next(g, x, v1);
                        int b3 = rot_next(g, x, a2);
                        if (rot_next(g, x, b3) != u1) continue;
                        x1 = b3; x2 = a2; // reversed so that x2 flanks u1-side's mirror
                        u2 = cw_prev; u3 = cw_next;
                    }
                    int y = third_neighbor(g, u2, u1, u3);
                    if (!y) continue;
                    Binding b{{"x", x},   {"u1", u1}, {"u2", u2}, {"u3", u3}, {"v1", v1},
                              {"v2", v2}, {"v3", v3}, {"x1", x1}, {"x2", x2}, {"y", y}};
                    if (injective(b)) out.push_back({ConfigKind::TwoPendent, "2", std::move(b)});
                }
            }
        }
    }
}

void detect_incident_plus_pendent(const PlaneGraph& g, std::vector<ConfigMatch>& out) {
    auto pend = pendent_faces(g);
    for (int u = 1; u <= g.vertex_count(); ++u) {
        if (g.is_external(u) || g.degree(u) != 4) continue;
        for (int f : g.faces_at(u)) {
            const auto& walk = g.face(f).walk;
            if (walk.size() != 3 || f == g.outer_face_id()) continue;
            std::vector<int> rest;
            for (int t : walk)
                if (t != u) rest.push_back(t);
            // face must read (3,4^-,4) with u as a 4-vertex
            bool internal = !g.is_external(rest[0]) && !g.is_external(rest[1]);
            int dmin = std::min(g.degree(rest[0]), g.degree(rest[1]));
            int dmax = std::max(g.degree(rest[0]), g.degree(rest[1]));
            if (!internal || dmin != 3 || dmax > 4) continue;
            for (const auto& p : pend) {
                if (p.owner != u) continue;
                const auto& pw = g.face(p.face).walk;
                if (p.face == f) continue;
                bool ok334 = internal_face_degrees(g, pw, {3, 3, 3}) ||
                             internal_face_degrees(g, pw, {3, 3, 4});
                if (!ok334) continue;
                int u3 = p.pendent;
                // rotation (u1,u2,u3,u4): {u1,u2} the face pair, u3 the pendent
                const auto& rot = g.rotation(u);
                for (int dir = 0; dir < 2; ++dir) {
                    std::vector<int> r(rot.begin(), rot.end());
                    if (dir) std::reverse(r.begin(), r.end());
                    for (int s = 0; s < 4; ++s) {
                        int a = r[s % 4], b = r[(s + 1) % 4], c = r[(s + 2) % 4], d = r[(s + 3) % 4];
                        if (c != u3) continue;
                        if (!((a == rest[0] && b == rest[1]) || (a == rest[1] && b == rest[0])))
                            continue;
                        std::vector<int> prest;
                        for (int t : pw)
                            if (t != u3) prest.push_back(t);
                        std::sort(prest.begin(), prest.end());
                        Binding bind{{"u", u},         {"u1", a},        {"u2", b},
                                     {"u3", u3},       {"u4", d},        {"u3p", prest[0]},
                                     {"u3pp", prest[1]}};
                        if (injective(bind)) {
                            out.push_back({ConfigKind::IncidentPlusPendent, "", std::move(bind)});
                            dir = 2; // one labeling per (u, f, pendent) triple
                            break;
                        }
                    }
                }
            }
        }
    }
}

void detect_two_incident(const PlaneGraph& g, std::vector<ConfigMatch>& out) {
    for (int v = 1; v <= g.vertex_count(); ++v) {
        if (g.is_external(v) || g.degree(v) != 4) continue;
        const auto& rot = g.rotation(v);
        // face sectors (r0,r1) and (r2,r3) in the clockwise rotation
        for (int s = 0; s < 2; ++s) {
            int a = rot[s], b = rot[(s + 1) % 4], c = rot[(s + 2) % 4], d = rot[(s + 3) % 4];
            if (!is_face3(g, v, a, b) || !is_face3(g, v, c, d)) continue;
            auto face_ok = [&](int p, int q) {
                if (g.is_external(p) || g.is_external(q)) return false;
                int dmin = std::min(g.degree(p), g.degree(q));
                int dmax = std::max(g.degree(p), g.degree(q));
                return dmin == 3 && dmax <= 4;
            };
            if (!face_ok(a, b) || !face_ok(c, d)) continue;

            auto deg = [&](int t) { return g.degree(t); };
            bool t1_33 = deg(a) == 3 && deg(b) == 3;
            bool t2_33 = deg(c) == 3 && deg(d) == 3;

            // the two labelings compatible with the clockwise rotation:
            // (v1,v2,v3,v4) = (a,b,c,d) or (c,d,a,b); mirror = (d,c,b,a) or (b,a,d,c)
            std::vector<std::array<int, 4>> labelings = {
                {a, b, c, d}, {c, d, a, b}, {d, c, b, a}, {b, a, d, c}};

            if (t1_33 || t2_33) {
                // case 1: label the (3,3,4) face T1
                std::array<int, 4> L = t1_33 ? std::array<int, 4>{a, b, c, d}
                                             : std::array<int, 4>{c, d, a, b};
                int v1 = L[0], v2 = L[1], v3 = L[2], v4 = L[3];
                int v1p = third_neighbor(g, v1, v, v2);
                int v2p = third_neighbor(g, v2, v, v1);
                Binding bind{{"v", v},   {"v1", v1},   {"v2", v2},  {"v3", v3},
                             {"v4", v4}, {"v1p", v1p}, {"v2p", v2p}};
                if (injective(bind)) out.push_back({ConfigKind::TwoIncident344, "1", std::move(bind)});
                continue;
            }

            // both faces (3,4,4): place a 4-vertex at v1
            for (const auto& L : labelings) {
                int v1 = L[0], v2 = L[1], v3 = L[2], v4 = L[3];
                if (deg(v1) != 4) continue;
                if (deg(v3) == 4) {
                    // case 2.1: 3-vertices are v2 and v4
                    int v2p = third_neighbor(g, v2, v, v1);
                    int v4p = third_neighbor(g, v4, v, v3);
                    Binding bind{{"v", v},   {"v1", v1},   {"v2", v2}, {"v3", v3},
                                 {"v4", v4}, {"v2p", v2p}, {"v4p", v4p}};
                    if (injective(bind))
                        out.push_back({ConfigKind::TwoIncident344, "2.1", std::move(bind)});
                } else if (deg(v4) == 4) {
                    // case 2.2: 3-vertices are v2 and v3
                    auto two_after_corner = [&](int vi, int other) -> std::pair<int, int> {
                        const auto& r = g.rotation(vi);
                        int k = static_cast<int>(r.size());
                        for (int i = 0; i < k; ++i) {
                            int p = r[i], q = r[(i + 1) % k];
                            if ((p == v && q == other) || (p == other && q == v))
                                return {r[(i + 2) % k], r[(i + 3) % k]};
                        }
                        return {0, 0};
                    };
                    auto [v1p, v1pp] = two_after_corner(v1, v2);
                    auto [v4p, v4pp] = two_after_corner(v4, v3);
                    int v2p = third_neighbor(g, v2, v, v1);
                    int v3p = third_neighbor(g, v3, v, v4);
                    Binding bind{{"v", v},     {"v1", v1},   {"v2", v2},   {"v3", v3},
                                 {"v4", v4},   {"v1p", v1p}, {"v1pp", v1pp}, {"v2p", v2p},
                                 {"v3p", v3p}, {"v4p", v4p}, {"v4pp", v4pp}};
                    if (injective(bind))
                        out.push_back({ConfigKind::TwoIncident344, "2.2", std::move(bind)});
                }
                break; // one labeling with d(v1)=4 suffices
            }
        }
    }
}

void detect_five_vertex_two_incident(const PlaneGraph& g, std::vector<ConfigMatch>& out) {
    for (int v = 1; v <= g.vertex_count(); ++v) {
        if (g.is_external(v) || g.degree(v) != 5) continue;
        const auto& rot = g.rotation(v);
        // labelings (v1..v5) by rotation shift and mirror with face sectors (1,2),(3,4)
        for (int dir = 0; dir < 2; ++dir) {
            std::vector<int> r(rot.begin(), rot.end());
            if (dir) std::reverse(r.begin(), r.end());
            for (int s = 0; s < 5; ++s) {
                int v1 = r[s % 5], v2 = r[(s + 1) % 5], v3 = r[(s + 2) % 5], v4 = r[(s + 3) % 5],
                    v5 = r[(s + 4) % 5];
                if (!is_face3(g, v, v1, v2) || !is_face3(g, v, v3, v4)) continue;
                // T1 weak (3,3,5)
                std::vector<int> t1{v, v1, v2};
                if (!internal_face_degrees(g, t1, {3, 3, 5})) continue;
                // T2 (3,4^-,5)
                if (g.is_external(v3) || g.is_external(v4)) continue;
                int d3 = g.degree(v3), d4 = g.degree(v4);
                if (!((d3 == 3 && d4 <= 4) || (d4 == 3 && d3 <= 4))) continue;

                std::set<int> t1set{v, v1, v2};
                for (int x : {v1, v2}) {
                    int xp = outer_neighbor(g, x, t1set);
                    if (!xp || !g.is_light(xp)) continue;
                    int y = x == v1 ? v2 : v1;
                    if (d4 == 3) {
                        Binding bind{{"v", v},   {"v1", v1}, {"v2", v2}, {"v3", v3},
                                     {"v4", v4}, {"v5", v5}, {"x", x},   {"y", y},
                                     {"xp", xp}};
                        if (injective(bind))
                            out.push_back({ConfigKind::FiveVertexTwoIncident, "1", std::move(bind)});
                    } else if (d4 == 4 && d3 == 3) {
                        int v3p = third_neighbor(g, v3, v, v4);
                        Binding bind{{"v", v},   {"v1", v1}, {"v2", v2},   {"v3", v3},
                                     {"v4", v4}, {"v5", v5}, {"x", x},     {"y", y},
                                     {"xp", xp}, {"v3p", v3p}};
                        if (injective(bind))
                            out.push_back({ConfigKind::FiveVertexTwoIncident, "2", std::move(bind)});
                    }
                }
            }
        }
    }
}

void detect_five_vertex_pendent(const PlaneGraph& g, std::vector<ConfigMatch>& out) {
    auto pend = pendent_faces(g);
    for (int v = 1; v <= g.vertex_count(); ++v) {
        if (g.is_external(v) || g.degree(v) != 5) continue;
        for (const auto& p : pend) {
            if (p.owner != v || !internal_face_degrees(g, g.face(p.face).walk, {3, 3, 3})) continue;
            int v1 = p.pendent;
            // two incident 3-faces not containing v1
            for (int f1 : g.faces_at(v)) {
                const auto& w1 = g.face(f1).walk;
                if (w1.size() != 3 || !internal_face_degrees(g, w1, {3, 3, 5})) continue;
                if (!face_is_weak(g, f1)) continue;
                for (int f2 : g.faces_at(v)) {
                    if (f2 == f1) continue;
                    const auto& w2 = g.face(f2).walk;
                    if (w2.size() != 3) continue;
                    // weak (3,5,5+)
                    std::vector<int> rest;
                    for (int t : w2)
                        if (t != v) rest.push_back(t);
                    if (g.is_external(rest[0]) || g.is_external(rest[1])) continue;
                    int three = 0, big = 0;
                    for (int t : rest)
                        (g.degree(t) == 3 ? three : big) = t;
                    if (!three || !big || g.degree(big) < 5) continue;

                    std::set<int> f2set(w2.begin(), w2.end());
                    auto v4ps = light_outer_neighbors_at(g, f2, three);
                    if (v4ps.empty()) continue;

                    std::set<int> f1set(w1.begin(), w1.end());
                    std::vector<int> ones;
                    for (int t : w1)
                        if (t != v) ones.push_back(t);
                    for (int v3 : ones) {
                        auto v3ps = light_outer_neighbors_at(g, f1, v3);
                        if (v3ps.empty()) continue;
                        int v2 = ones[0] == v3 ? ones[1] : ones[0];
                        std::vector<int> ws;
                        for (int t : g.face(p.face).walk)
                            if (t != v1) ws.push_back(t);
                        std::sort(ws.begin(), ws.end());
                        Binding bind{{"v", v},       {"v1", v1},        {"v2", v2},
                                     {"v3", v3},     {"v4", three},     {"v5", big},
                                     {"w1", ws[0]},  {"w2", ws[1]},     {"v3p", v3ps[0]},
                                     {"v4p", v4ps[0]}};
                        if (injective(bind))
                            out.push_back({ConfigKind::FiveVertexPendent333, "", std::move(bind)});
                    }
                }
            }
        }
    }
}

void detect_six_vertex(const PlaneGraph& g, std::vector<ConfigMatch>& out) {
    for (int v = 1; v <= g.vertex_count(); ++v) {
        if (g.is_external(v) || g.degree(v) != 6) continue;
        const auto& rot = g.rotation(v);
        for (int dir = 0; dir < 2; ++dir) {
            std::vector<int> r(rot.begin(), rot.end());
            if (dir) std::reverse(r.begin(), r.end());
            for (int s = 0; s < 6; ++s) {
                int v1 = r[s % 6], v2 = r[(s + 1) % 6], v3 = r[(s + 2) % 6], v4 = r[(s + 3) % 6],
                    v5 = r[(s + 4) % 6], v6 = r[(s + 5) % 6];
                if (!is_face3(g, v, v1, v2) || !is_face3(g, v, v3, v4) || !is_face3(g, v, v5, v6))
                    continue;
                // [vv3v4], [vv5v6] weak (3,3,6); [vv1v2] a (3,4^-,6) with d(v2)=3
                std::vector<int> t34{v, v3, v4}, t56{v, v5, v6};
                if (!internal_face_degrees(g, t34, {3, 3, 6}) ||
                    !internal_face_degrees(g, t56, {3, 3, 6}))
                    continue;
                if (g.is_external(v1) || g.is_external(v2)) continue;
                if (g.degree(v2) != 3 || g.degree(v1) > 4) continue;

                int f34 = -1, f56 = -1;
                for (int f : g.faces_at(v)) {
                    const auto& w = g.face(f).walk;
                    if (w.size() != 3) continue;
                    std::set<int> sset(w.begin(), w.end());
                    if (sset == std::set<int>{v, v3, v4}) f34 = f;
                    if (sset == std::set<int>{v, v5, v6}) f56 = f;
                }
                if (f34 < 0 || f56 < 0 || !face_is_weak(g, f34) || !face_is_weak(g, f56)) continue;

                int v2p = third_neighbor(g, v2, v, v1);
                int v5p = third_neighbor(g, v5, v, v6);
                for (int x : {v3, v4}) {
                    auto xps = light_outer_neighbors_at(g, f34, x);
                    if (xps.empty()) continue;
                    int y = x == v3 ? v4 : v3;
                    for (int zp : {v5, v6}) {
                        auto zs = light_outer_neighbors_at(g, f56, zp);
                        if (zs.empty()) continue;
                        int zq = zp == v5 ? v6 : v5;
                        Binding bind{{"v", v},     {"v1", v1},   {"v2", v2}, {"v3", v3},
                                     {"v4", v4},   {"v5", v5},   {"v6", v6}, {"x", x},
                                     {"y", y},     {"xp", xps[0]}, {"z", zs[0]}, {"zatt", zp},
                                     {"zoth", zq}, {"v2p", v2p}, {"v5p", v5p}};
                        if (injective(bind))
                            out.push_back({ConfigKind::SixVertexTwoWeak336, "", std::move(bind)});
                    }
                }
            }
        }
    }
}

void detect_wheel_cfg(const PlaneGraph& g, std::vector<ConfigMatch>& out) {
    for (const auto& w : find_wheels(g)) {
        int u1p = third_neighbor(g, w.u1, w.u, w.u2);
        int v1p = third_neighbor(g, w.v1, w.v, w.v2);
        int w1p = third_neighbor(g, w.w1, w.w, w.w2);
        Binding b{{"u", w.u},    {"v", w.v},    {"w", w.w},    {"u1", w.u1}, {"u2", w.u2},
                  {"v1", w.v1},  {"v2", w.v2},  {"w1", w.w1},  {"w2", w.w2}, {"u1p", u1p},
                  {"v1p", v1p},  {"w1p", w1p}};
        if (injective(b)) out.push_back({ConfigKind::Wheel, "", std::move(b)});
    }
}

void detect_antiwheel_cfg(const PlaneGraph& g, std::vector<ConfigMatch>& out) {
    for (const auto& w : find_antiwheels(g)) {
        int u1p = third_neighbor(g, w.u1, w.u, w.u2);
        int v1p = third_neighbor(g, w.v1, w.v, w.v2);
        int w2p = third_neighbor(g, w.w2, w.w, w.w1);
        if (!g.is_light(u1p) || !g.is_light(v1p) || !g.is_light(w2p)) continue;
        Binding b{{"u", w.u},   {"v", w.v},   {"w", w.w},   {"u1", w.u1}, {"u2", w.u2},
                  {"v1", w.v1}, {"v2", w.v2}, {"w1", w.w1}, {"w2", w.w2}, {"u1p", u1p},
                  {"v1p", v1p}, {"w2p", w2p}};
        if (injective(b)) out.push_back({ConfigKind::AntiwheelAllLight, "", std::move(b)});
    }
}

void detect_five_faces(const PlaneGraph& g, std::vector<ConfigMatch>& out) {
    for (int f = 0; f < g.face_count(); ++f) {
        if (f == g.outer_face_id()) continue;
        const auto& walk = g.face(f).walk;
        if (walk.size() != 5) continue;
        std::set<int> fv(walk.begin(), walk.end());
        if (fv.size() != 5) continue;

        int lights = 0, four = 0, fours = 0;
        bool internal = true;
        for (int t : walk) {
            if (g.is_external(t)) internal = false;
            if (g.is_light(t)) ++lights;
            if (g.is_internal(t) && g.degree(t) == 4) { four = t; ++fours; }
        }
        if (!internal) continue;

        auto prime = [&](int ui) {
            for (int t : g.rotation(ui))
                if (!fv.count(t)) return t;
            return 0;
        };

        if (lights == 5) {
            // all-light: need three consecutive primes internal (u5',u1',u2')
            std::vector<int> cw = face_cw_order(g, f);
            for (int dir = 0; dir < 2 && true; ++dir) {
                std::vector<int> c = cw;
                if (dir) std::reverse(c.begin(), c.end());
                bool done = false;
                for (int s = 0; s < 5 && !done; ++s) {
                    std::vector<int> u(5);
                    for (int i = 0; i < 5; ++i) u[i] = c[(s + i) % 5];
                    int p5 = prime(u[4]), p1 = prime(u[0]), p2 = prime(u[1]);
                    if (!p5 || !p1 || !p2) continue;
                    if (!g.is_internal(p5) || !g.is_internal(p1) || !g.is_internal(p2)) continue;
                    Binding b{{"u1", u[0]}, {"u2", u[1]}, {"u3", u[2]}, {"u4", u[3]},
                              {"u5", u[4]}, {"u1p", p1},  {"u2p", p2},  {"u5p", p5}};
                    for (int i = 2; i < 5; ++i) {
                        int pi = prime(u[i]);
                        b.emplace_back("u" + std::to_string(i + 1) + "p_aux", pi);
                    }
                    b.resize(8); // auxiliary primes only needed for u2/u5
                    if (injective(b)) {
                        out.push_back({ConfigKind::FiveFaceAllLight, "", std::move(b)});
                        done = true;
                    }
                }
                if (done) break;
            }
        } else if (lights == 4 && fours == 1) {
            // u1 = the internal 4-vertex
            std::vector<int> cw = face_cw_order(g, f);
            int i1 = static_cast<int>(std::find(cw.begin(), cw.end(), four) - cw.begin());
            std::vector<int> u(5);
            for (int i = 0; i < 5; ++i) u[i] = cw[(i1 + i) % 5];
            int p2 = prime(u[1]), p5 = prime(u[4]);
            if (!p2 || !p5) continue;
            Binding b{{"u1", u[0]}, {"u2", u[1]}, {"u3", u[2]}, {"u4", u[3]},
                      {"u5", u[4]}, {"u2p", p2},  {"u5p", p5}};
            if (injective(b))
                out.push_back({ConfigKind::SmallFiveFaceWith4Vertex, "", std::move(b)});
        }
    }
}

void detect_adjacent_five_faces(const PlaneGraph& g, std::vector<ConfigMatch>& out) {
    for (int f = 0; f < g.face_count(); ++f) {
        for (int h = f + 1; h < g.face_count(); ++h) {
            if (f == g.outer_face_id() || h == g.outer_face_id()) continue;
            const auto& wf = g.face(f).walk;
            const auto& wh = g.face(h).walk;
            if (wf.size() != 5 || wh.size() != 5) continue;
            std::set<int> sf(wf.begin(), wf.end()), sh(wh.begin(), wh.end());
            std::vector<int> common;
            std::set_intersection(sf.begin(), sf.end(), sh.begin(), sh.end(),
                                  std::back_inserter(common));
            if (common.size() != 2) continue;
            int a = common[0], b = common[1];
            if (!g.adjacent(a, b)) continue;
            for (int u : {a, b}) {
                int vv = u == a ? b : a;
                if (g.is_external(u) || g.degree(u) != 5) continue;
                bool rest_light = g.is_light(vv);
                for (int t : wf)
                    if (t != u && t != vv && !g.is_light(t)) rest_light = false;
                for (int t : wh)
                    if (t != u && t != vv && !g.is_light(t)) rest_light = false;
                if (!rest_light) continue;

                // boundary orders from u away from v
                auto ordered = [&](const std::vector<int>& w) {
                    size_t k = w.size();
                    size_t iu = std::find(w.begin(), w.end(), u) - w.begin();
                    std::vector<int> fwd;
                    if (w[(iu + 1) % k] != vv)
                        for (size_t i = 1; i < k - 1; ++i) fwd.push_back(w[(iu + i) % k]);
                    else
                        for (size_t i = 1; i < k - 1; ++i) fwd.push_back(w[(iu + k - i) % k]);
                    return fwd; // three vertices between u and v
                };
                auto fa = ordered(wf), fb = ordered(wh);
                Binding bind{{"u", u},      {"v", vv},     {"a1", fa[0]}, {"a2", fa[1]},
                             {"a3", fa[2]}, {"b1", fb[0]}, {"b2", fb[1]}, {"b3", fb[2]}};
                if (injective(bind))
                    out.push_back({ConfigKind::AdjacentFiveFaces, "", std::move(bind)});
            }
        }
    }
}

} // namespace

std::vector<ConfigMatch> detect_all(const PlaneGraph& g) {
    std::vector<ConfigMatch> out;
    detect_min_degree(g, out);
    detect_separating_good_cycle(g, out);
    detect_cut_vertex(g, out);
    detect_light_cluster(g, out);
    detect_light_triangle(g, out);
    detect_two_pendent(g, out);
    detect_incident_plus_pendent(g, out);
    detect_two_incident(g, out);
    detect_five_vertex_two_incident(g, out);
    detect_five_vertex_pendent(g, out);
    detect_six_vertex(g, out);
    detect_wheel_cfg(g, out);
    detect_antiwheel_cfg(g, out);
    detect_five_faces(g, out);
    detect_adjacent_five_faces(g, out);
    return out;
}

} // namespace dlab
