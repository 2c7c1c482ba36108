#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "dlab/configurations.hpp"
#include "dlab/plg_io.hpp"

namespace dlab {

namespace {

// ---------------------------------------------------------------------------
// Surgery assembly
// ---------------------------------------------------------------------------

struct Pruned {
    std::vector<int> rot; // surviving neighbors, clockwise, starting after the gap
    bool had_gap = false;
};

// Remove deleted neighbors from v's rotation. The deleted neighbors must form
// one contiguous run in the cyclic order (they bound the excised region); the
// returned list starts just after that run, so the gap sits at the end.
Pruned prune_rotation(const PlaneGraph& g, int v, const std::set<int>& deleted) {
    const auto& r = g.rotation(v);
    int k = static_cast<int>(r.size());
    std::vector<char> del(k, 0);
    int del_count = 0;
    for (int i = 0; i < k; ++i)
        if (deleted.count(r[i])) { del[i] = 1; ++del_count; }
    Pruned p;
    if (del_count == 0) {
        p.rot.assign(r.begin(), r.end());
        return p;
    }
    if (del_count == k) { p.had_gap = true; return p; }
    // runs of deleted entries in cyclic order must be exactly one
    int runs = 0;
    for (int i = 0; i < k; ++i)
        if (del[i] && !del[(i + k - 1) % k]) ++runs;
    if (runs != 1)
        throw Error(ErrorKind::RecipeInapplicable,
                    "deleted neighbors of " + std::to_string(v) + " are not contiguous in rotation");
    int start = 0;
    while (!(del[start] && !del[(start + 1) % k])) start = (start + 1) % k;
    // start is the last deleted slot; survivors begin right after
    for (int i = 1; i <= k; ++i) {
        int j = (start + i) % k;
        if (!del[j]) p.rot.push_back(r[j]);
    }
    p.had_gap = true;
    return p;
}

} // namespace

Surgery apply_surgery_plan(const PlaneGraph& g, std::vector<int> deletions,
                           std::vector<std::pair<int, int>> identifications,
                           std::vector<std::pair<int, int>> insertions) {
    std::set<int> del(deletions.begin(), deletions.end());
    for (const auto& [a, b] : identifications)
        if (del.count(a) || del.count(b))
            throw Error(ErrorKind::RecipeInapplicable, "identification endpoint deleted");
    for (const auto& [a, b] : insertions)
        if (del.count(a) || del.count(b))
            throw Error(ErrorKind::RecipeInapplicable, "insertion endpoint deleted");

    std::map<int, Pruned> pruned;
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (!del.count(v)) pruned[v] = prune_rotation(g, v, del);

    // insertions go into the gap (list end) of each endpoint
    for (const auto& [p, q] : insertions) {
        auto& rp = pruned.at(p);
        auto& rq = pruned.at(q);
        if (std::find(rp.rot.begin(), rp.rot.end(), q) != rp.rot.end())
            throw Error(ErrorKind::RecipeInapplicable, "inserted edge already present");
        if (!rp.had_gap || !rq.had_gap)
            throw Error(ErrorKind::RecipeInapplicable, "insertion endpoint lost no neighbors");
        rp.rot.push_back(q);
        rq.rot.push_back(p);
    }

    // identifications: splice b's fan into a's gap
    std::map<int, int> alias; // merged-away vertex -> kept vertex
    for (const auto& [a, b] : identifications) {
        auto& ra = pruned.at(a);
        auto& rb = pruned.at(b);
        if (!ra.had_gap || !rb.had_gap)
            throw Error(ErrorKind::RecipeInapplicable, "identification endpoint lost no neighbors");
        for (int x : rb.rot) {
            if (x == a || std::find(ra.rot.begin(), ra.rot.end(), x) != ra.rot.end())
                throw Error(ErrorKind::RecipeInapplicable,
                            "identification would create a 1- or 2-cycle");
            ra.rot.push_back(x);
        }
        alias[b] = a;
        pruned.erase(b);
    }
    // rewrite references to merged vertices
    for (auto& [v, pr] : pruned)
        for (auto& x : pr.rot) {
            auto it = alias.find(x);
            if (it != alias.end()) x = it->second;
        }

    // renumber survivors
    std::vector<int> vmap(g.vertex_count() + 1, 0);
    int next_id = 0;
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (pruned.count(v)) vmap[v] = ++next_id;
    for (const auto& [b, a] : alias) vmap[b] = vmap[a];

    std::vector<std::vector<int>> rot(next_id);
    for (const auto& [v, pr] : pruned) {
        std::vector<int> r;
        for (int x : pr.rot) r.push_back(vmap[x]);
        rot[vmap[v] - 1] = std::move(r);
    }
    std::vector<int> outer;
    for (int v : g.outer_walk()) {
        if (!vmap[v])
            throw Error(ErrorKind::RecipeInapplicable, "surgery deletes a boundary vertex");
        outer.push_back(vmap[v]);
    }

    Surgery s;
    s.deletions = std::move(deletions);
    std::sort(s.deletions.begin(), s.deletions.end());
    s.identifications = std::move(identifications);
    s.insertions = std::move(insertions);
    s.vertex_map = std::move(vmap);
    s.old_size = g.vertex_count() + g.edge_count();
    try {
        s.result = PlaneGraph::build_from_rotation(next_id, std::move(rot), std::move(outer));
    } catch (const Error& e) {
        throw Error(ErrorKind::RecipeInapplicable,
                    std::string("surgery result is not a plane graph: ") + e.what());
    }
    s.new_size = s.result.vertex_count() + s.result.edge_count();
    return s;
}

namespace {

std::vector<int> roles(const ConfigMatch& m, std::initializer_list<const char*> names) {
    std::vector<int> out;
    for (const char* n : names) out.push_back(m.at(n));
    return out;
}

} // namespace

Surgery apply_surgery(const PlaneGraph& g, const ConfigMatch& m) {
    switch (m.kind) {
    case ConfigKind::MinDegree:
        return apply_surgery_plan(g, {m.at("v")}, {}, {});
    case ConfigKind::SeparatingGoodCycle: {
        std::vector<int> cyc;
        for (const auto& [r, v] : m.binding) cyc.push_back(v);
        CycleSides s = sides_of_cycle(g, cyc);
        if (s.interior.empty())
            throw Error(ErrorKind::RecipeInapplicable, "cycle has empty interior");
        return apply_surgery_plan(g, s.interior, {}, {});
    }
    case ConfigKind::CutVertex: {
        std::vector<int> delv;
        for (const auto& [r, v] : m.binding)
            if (r != "v") delv.push_back(v);
        return apply_surgery_plan(g, delv, {}, {});
    }
    case ConfigKind::LightCluster:
        return apply_surgery_plan(g, roles(m, {"v", "u1", "u2", "u3"}), {}, {});
    case ConfigKind::LightTriangle334:
        return apply_surgery_plan(g, roles(m, {"u", "v", "w", "x"}), {}, {});
    case ConfigKind::TwoPendent:
        if (m.case_tag == "1")
            return apply_surgery_plan(g, roles(m, {"x", "u1", "u2", "u3", "v1", "v2", "v3"}),
                                      {{m.at("x1"), m.at("x2")}}, {});
        return apply_surgery_plan(g, roles(m, {"x", "u1", "u2", "u3", "v1", "v2", "v3"}),
                                  {{m.at("x2"), m.at("y")}}, {});
    case ConfigKind::IncidentPlusPendent:
        return apply_surgery_plan(g, roles(m, {"u1", "u", "u3", "u3p", "u3pp"}),
                                  {{m.at("u2"), m.at("u4")}}, {});
    case ConfigKind::TwoIncident344:
        if (m.case_tag == "1")
            return apply_surgery_plan(g, roles(m, {"v", "v1", "v2", "v3", "v4"}), {}, {});
        if (m.case_tag == "2.1")
            return apply_surgery_plan(g, roles(m, {"v", "v1", "v2", "v3", "v4"}),
                                      {{m.at("v2p"), m.at("v4p")}}, {});
        return apply_surgery_plan(g, roles(m, {"v", "v1", "v2", "v3", "v4"}),
                                  {{m.at("v1p"), m.at("v3p")}}, {});
    case ConfigKind::FiveVertexTwoIncident:
        if (m.case_tag == "1")
            return apply_surgery_plan(g, roles(m, {"v", "v1", "v2", "xp", "v4"}),
                                      {{m.at("v3"), m.at("v5")}}, {});
        return apply_surgery_plan(g, roles(m, {"v", "v1", "v2", "v3", "v4", "xp"}), {},
                                  {{m.at("v3p"), m.at("v5")}});
    case ConfigKind::FiveVertexPendent333:
        return apply_surgery_plan(
            g, roles(m, {"v", "v1", "v2", "v3", "v4", "w1", "w2", "v3p", "v4p"}), {}, {});
    case ConfigKind::SixVertexTwoWeak336:
        return apply_surgery_plan(g, roles(m, {"v", "v1", "v2", "v3", "v4", "v5", "v6", "xp"}),
                                  {{m.at("v2p"), m.at("v5p")}}, {});
    case ConfigKind::Wheel: {
        auto del = roles(m, {"u", "v", "w", "u1", "u2", "v1", "v2", "w1", "w2"});
        int a = m.at("u1p"), b = m.at("v1p"), c = m.at("w1p");
        // the inserted triangle's orientation inside the excised disk is not
        // fixed a priori; pick the direction that embeds
        for (auto tri : {std::vector<std::pair<int, int>>{{a, b}, {b, c}, {c, a}},
                         std::vector<std::pair<int, int>>{{a, c}, {c, b}, {b, a}}}) {
            try {
                Surgery s = apply_surgery_plan(g, del, {}, tri);
                // require [u1'v1'w1'] facial in the result
                std::set<int> want{s.vertex_map[a], s.vertex_map[b], s.vertex_map[c]};
                for (const auto& f : s.result.faces())
                    if (f.walk.size() == 3 &&
                        std::set<int>(f.walk.begin(), f.walk.end()) == want)
                        return s;
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::RecipeInapplicable) throw;
            }
        }
        throw Error(ErrorKind::RecipeInapplicable, "wheel triangle insertion does not embed");
    }
    case ConfigKind::AntiwheelAllLight:
        return apply_surgery_plan(g, roles(m, {"u", "v", "w", "u1", "u2", "v1", "w1", "w2"}),
                                  {{m.at("v2"), m.at("w2p")}}, {{m.at("u1p"), m.at("v1p")}});
    case ConfigKind::FiveFaceAllLight:
    case ConfigKind::SmallFiveFaceWith4Vertex:
        return apply_surgery_plan(g, roles(m, {"u1", "u2", "u3", "u4", "u5"}), {},
                                  {{m.at("u2p"), m.at("u5p")}});
    case ConfigKind::AdjacentFiveFaces:
        return apply_surgery_plan(g, roles(m, {"u", "v", "a1", "a2", "a3", "b1", "b2", "b3"}), {},
                                  {});
    }
    throw Error(ErrorKind::BadArgument, "unknown configuration kind");
}

SurgeryValidity validate_surgery(const PlaneGraph& g, const Surgery& s,
                                 const ValidityOptions& opts) {
    SurgeryValidity v;
    std::set<int> dset(g.outer_walk().begin(), g.outer_walk().end());
    for (const auto& [a, b] : s.identifications)
        if (dset.count(a) && dset.count(b)) v.touches_D = true;
    for (const auto& [a, b] : s.insertions)
        if (dset.count(a) && dset.count(b)) v.touches_D = true;
    for (int d : s.deletions)
        if (dset.count(d)) v.touches_D = true;

    // diff canonical cycle sets up to length 7
    std::set<std::vector<int>> old_mapped;
    for (const auto& cyc : find_short_cycles(g, 7)) {
        std::vector<int> mapped;
        std::set<int> seen;
        bool ok = true;
        for (int x : cyc) {
            int y = s.vertex_map[x];
            if (!y || !seen.insert(y).second) { ok = false; break; }
            mapped.push_back(y);
        }
        if (!ok) continue;
        // canonicalize
        size_t k = mapped.size(), mi = 0;
        for (size_t i = 1; i < k; ++i)
            if (mapped[i] < mapped[mi]) mi = i;
        std::vector<int> fwd(k), bwd(k);
        for (size_t i = 0; i < k; ++i) {
            fwd[i] = mapped[(mi + i) % k];
            bwd[i] = mapped[(mi + k - i) % k];
        }
        old_mapped.insert(std::min(fwd, bwd));
    }

    std::vector<std::vector<int>> created;
    for (const auto& cyc : find_short_cycles(s.result, 7))
        if (!old_mapped.count(cyc)) created.push_back(cyc);
    for (const auto& c : created) v.created_cycle_lengths.push_back(static_cast<int>(c.size()));
    std::sort(v.created_cycle_lengths.begin(), v.created_cycle_lengths.end());

    for (const auto& c : created) {
        if (c.size() != 7) continue;
        auto chords = cycle_chords(s.result, c);
        for (auto [x, y] : chords) {
            size_t px = std::find(c.begin(), c.end(), x) - c.begin();
            size_t py = std::find(c.begin(), c.end(), y) - c.begin();
            size_t d = px < py ? py - px : px - py;
            d = std::min(d, c.size() - d);
            if (d != 2) continue;
            if (opts.triangular7_chord_inside_only) {
                CycleSides cs = sides_of_cycle(s.result, c);
                int f1 = s.result.face_of_dart(x, y), f2 = s.result.face_of_dart(y, x);
                if (!(cs.face_inside[f1] && cs.face_inside[f2])) continue;
            }
            v.creates_triangular7 = true;
        }
    }

    // D in the result
    std::vector<int> d_new;
    for (int x : g.outer_walk()) d_new.push_back(s.vertex_map[x]);
    {
        std::set<int> distinct(d_new.begin(), d_new.end());
        if (distinct.size() == d_new.size() && d_new.size() >= 3) {
            try {
                v.D_still_good = classify_cycle(s.result, d_new, /*allow_long=*/true).good;
            } catch (const Error&) {
                v.D_still_good = false;
            }
        }
    }

    bool bad_general = false, bad_strong = false;
    for (int len : v.created_cycle_lengths) {
        if (len == 1 || len == 2 || len == 4 || len == 6) bad_general = true;
        if (len <= 6) bad_strong = true;
    }
    v.verdict_general = !v.touches_D && !bad_general && v.D_still_good;
    v.verdict_strong = !v.touches_D && !bad_strong && !v.creates_triangular7;
    return v;
}

// ---------------------------------------------------------------------------
// Recipe engine
// ---------------------------------------------------------------------------

namespace {

struct RState {
    const PlaneGraph& g;
    std::vector<int> color; // 0 = uncolored
    std::set<int> touched;
};

// cross-boundary discipline: an internal vertex never shares its color with
// an external neighbor (and vice versa), matching super-extension
bool color_ok(const RState& st, int v, int c) {
    int ones = 0, lone = 0;
    for (int u : st.g.rotation(v)) {
        int cu = st.color[u];
        if (!cu) continue;
        if (st.g.is_external(u) != st.g.is_external(v) && cu == c) return false;
        if (c >= 2 && cu == c) return false;
        if (c == 1 && cu == 1) { ++ones; lone = u; }
    }
    if (c == 1) {
        if (ones > 1) return false;
        if (ones == 1) {
            for (int w : st.g.rotation(lone))
                if (w != v && st.color[w] == 1) return false;
        }
    }
    return true;
}

bool free_color_ok(const RState& st, int v, int c) {
    for (int u : st.g.rotation(v))
        if (st.color[u] == c) return false;
    return true;
}

using Pred = std::function<bool(const RState&)>;
using ColorExpr = std::function<int(const RState&)>;

struct Mv {
    enum Op { TC, C100, ASSIGN, UNCOLOR, GUARD, SWAP } op;
    int v = 0, w = 0;
    ColorExpr expr;
    Pred pred;

    static Mv tc(int v) { return {TC, v, 0, {}, {}}; }
    static Mv c100(int v) { return {C100, v, 0, {}, {}}; }
    static Mv assign(int v, ColorExpr e) { return {ASSIGN, v, 0, std::move(e), {}}; }
    static Mv assign(int v, int c) {
        return {ASSIGN, v, 0, [c](const RState&) { return c; }, {}};
    }
    static Mv uncolor(int v) { return {UNCOLOR, v, 0, {}, {}}; }
    static Mv guard(Pred p) { return {GUARD, 0, 0, {}, std::move(p)}; }
    static Mv swap(int v, int w) { return {SWAP, v, w, {}, {}}; }
};

struct Alt {
    std::string tag;
    std::vector<Mv> seq;
};

bool run_seq(RState& st, const std::vector<Mv>& seq, size_t i) {
    if (i == seq.size()) return true;
    const Mv& m = seq[i];
    switch (m.op) {
    case Mv::GUARD:
        return m.pred(st) && run_seq(st, seq, i + 1);
    case Mv::UNCOLOR: {
        int old = st.color[m.v];
        st.color[m.v] = 0;
        st.touched.insert(m.v);
        if (run_seq(st, seq, i + 1)) return true;
        st.color[m.v] = old;
        return false;
    }
    case Mv::ASSIGN: {
        int c = m.expr(st);
        if (c < 1 || c > 3) return false;
        int old = st.color[m.v];
        st.color[m.v] = 0;
        if (!color_ok(st, m.v, c)) {
            st.color[m.v] = old;
            return false;
        }
        st.color[m.v] = c;
        st.touched.insert(m.v);
        if (run_seq(st, seq, i + 1)) return true;
        st.color[m.v] = old;
        return false;
    }
    case Mv::SWAP: {
        int cv = st.color[m.v], cw = st.color[m.w];
        st.color[m.v] = st.color[m.w] = 0;
        bool ok = color_ok(st, m.v, cw);
        if (ok) {
            st.color[m.v] = cw;
            ok = color_ok(st, m.w, cv);
        }
        if (ok) {
            st.color[m.w] = cv;
            st.touched.insert(m.v);
            st.touched.insert(m.w);
            if (run_seq(st, seq, i + 1)) return true;
        }
        st.color[m.v] = cv;
        st.color[m.w] = cw;
        return false;
    }
    case Mv::TC:
    case Mv::C100: {
        int old = st.color[m.v];
        for (int c = 1; c <= 3; ++c) {
            st.color[m.v] = 0;
            bool ok = m.op == Mv::TC ? (free_color_ok(st, m.v, c) && color_ok(st, m.v, c))
                                     : color_ok(st, m.v, c);
            if (!ok) continue;
            st.color[m.v] = c;
            st.touched.insert(m.v);
            if (run_seq(st, seq, i + 1)) return true;
        }
        st.color[m.v] = old;
        return false;
    }
    }
    return false;
}

ColorExpr color_of(int v) {
    return [v](const RState& st) { return st.color[v]; };
}

ColorExpr other_color(int v, int w) {
    // the color distinct from the colors of v and w
    return [v, w](const RState& st) {
        for (int c = 1; c <= 3; ++c)
            if (c != st.color[v] && c != st.color[w]) return c;
        return 0;
    };
}

Pred has_color(int v, int c) {
    return [v, c](const RState& st) { return st.color[v] == c; };
}

Pred not_color(int v, int c) {
    return [v, c](const RState& st) { return st.color[v] != c; };
}

Pred same_color(int v, int w) {
    return [v, w](const RState& st) { return st.color[v] == st.color[w]; };
}

Pred diff_color(int v, int w) {
    return [v, w](const RState& st) { return st.color[v] != st.color[w]; };
}

std::vector<Mv> operator+(std::vector<Mv> a, const std::vector<Mv>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::vector<Mv> tcs(std::initializer_list<int> vs) {
    std::vector<Mv> out;
    for (int v : vs) out.push_back(Mv::tc(v));
    return out;
}

} // namespace

namespace {

std::vector<Alt> build_recipe(const PlaneGraph& g, const ConfigMatch& m, const RState& st0);

struct ExtendResult {
    Coloring coloring;
    std::set<int> touched;
    std::string branch;
};

ExtendResult extend_back_impl(const PlaneGraph& g, const ConfigMatch& m,
                              const Coloring& result_coloring) {
    Surgery s = apply_surgery(g, m);
    if (static_cast<int>(result_coloring.color.size()) != s.result.vertex_count() + 1)
        throw Error(ErrorKind::BadArgument, "coloring does not fit the surgery result");

    RState st{g, std::vector<int>(g.vertex_count() + 1, 0), {}};
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (s.vertex_map[v]) st.color[v] = result_coloring.color[s.vertex_map[v]];

    // special recipes that run sub-solvers
    if (m.kind == ConfigKind::SeparatingGoodCycle) {
        std::vector<int> cyc;
        for (const auto& [r, v] : m.binding) cyc.push_back(v);
        CycleSides sides = sides_of_cycle(g, cyc);
        // induced plane subgraph on the cycle plus its interior, with the
        // cycle as boundary
        std::set<int> keep(cyc.begin(), cyc.end());
        for (int x : sides.interior) keep.insert(x);
        std::vector<int> remap(g.vertex_count() + 1, 0);
        std::vector<int> verts(keep.begin(), keep.end());
        std::sort(verts.begin(), verts.end());
        for (size_t i = 0; i < verts.size(); ++i) remap[verts[i]] = static_cast<int>(i) + 1;
        std::vector<std::vector<int>> rot(verts.size());
        for (int v : verts) {
            for (int u : g.rotation(v))
                if (keep.count(u)) rot[remap[v] - 1].push_back(remap[u]);
        }
        std::vector<int> outer;
        for (auto it = cyc.rbegin(); it != cyc.rend(); ++it) outer.push_back(remap[*it]);
        PlaneGraph inner = PlaneGraph::build_from_rotation(
            static_cast<int>(verts.size()), std::move(rot), std::move(outer));
        Precoloring pre;
        for (int v : cyc) pre.assignment[remap[v]] = st.color[v];
        auto wit = super_extend(inner, pre);
        if (!wit)
            throw Error(ErrorKind::RecipeStuck,
                        "good separating cycle admits no super-extension inward: " + m.describe());
        for (int v : verts)
            if (!st.color[v]) {
                st.color[v] = wit->coloring.color[remap[v]];
                st.touched.insert(v);
            }
        Coloring out;
        out.color = st.color;
        return {out, st.touched, "inner-super-extension"};
    }

    if (m.kind == ConfigKind::CutVertex) {
        // proper 3-coloring of the block with the cut vertex's color fixed
        std::vector<int> blk{m.at("v")};
        for (const auto& [r, v] : m.binding)
            if (r != "v") blk.push_back(v);
        std::sort(blk.begin(), blk.end());
        std::map<int, int> col;
        col[m.at("v")] = st.color[m.at("v")];
        auto rec = [&](auto&& self, size_t i) -> bool {
            if (i == blk.size()) return true;
            int v = blk[i];
            if (col.count(v)) return self(self, i + 1);
            for (int c = 1; c <= 3; ++c) {
                bool ok = true;
                for (int u : g.rotation(v)) {
                    auto it = col.find(u);
                    if (it != col.end() && it->second == c) ok = false;
                }
                if (!ok) continue;
                col[v] = c;
                if (self(self, i + 1)) return true;
                col.erase(v);
            }
            return false;
        };
        if (!rec(rec, 0))
            throw Error(ErrorKind::RecipeStuck,
                        "pendant block admits no proper 3-coloring with the cut vertex fixed: " +
                            m.describe());
        for (auto& [v, c] : col)
            if (!st.color[v]) {
                st.color[v] = c;
                st.touched.insert(v);
            }
        Coloring out;
        out.color = st.color;
        return {out, st.touched, "block-3-coloring"};
    }

    auto alts = build_recipe(g, m, st);
    for (const auto& alt : alts) {
        RState trial = st;
        if (run_seq(trial, alt.seq, 0)) {
            for (int v = 1; v <= g.vertex_count(); ++v)
                if (!trial.color[v])
                    throw Error(ErrorKind::RecipeStuck,
                                "recipe left vertex " + std::to_string(v) + " uncolored: " +
                                    m.describe());
            Coloring out;
            out.color = trial.color;
            return {out, trial.touched, alt.tag};
        }
    }
    throw Error(ErrorKind::RecipeStuck, "no recipe branch completes for " + m.describe());
}

} // namespace

Coloring extend_back(const PlaneGraph& g, const ConfigMatch& m, const Coloring& result_coloring) {
    return extend_back_impl(g, m, result_coloring).coloring;
}

// ---------------------------------------------------------------------------
// Per-lemma recipes
// ---------------------------------------------------------------------------

namespace {

std::vector<Alt> build_recipe(const PlaneGraph& g, const ConfigMatch& m, const RState& st0) {
    std::vector<Alt> alts;
    auto A = [&](std::string tag, std::vector<Mv> seq) {
        alts.push_back({std::move(tag), std::move(seq)});
    };

    switch (m.kind) {
    case ConfigKind::MinDegree:
        A("3color", {Mv::tc(m.at("v"))});
        break;

    case ConfigKind::LightCluster: {
        int v = m.at("v");
        A("greedy", tcs({m.at("u1"), m.at("u2"), m.at("u3")}) + std::vector<Mv>{Mv::c100(v)});
        break;
    }

    case ConfigKind::LightTriangle334:
        A("greedy", tcs({m.at("w"), m.at("v"), m.at("x")}) + std::vector<Mv>{Mv::c100(m.at("u"))});
        break;

    case ConfigKind::TwoPendent:
        if (m.case_tag == "1") {
            A("case1", tcs({m.at("v3"), m.at("v2"), m.at("v1"), m.at("x"), m.at("u2"), m.at("u3")}) +
                           std::vector<Mv>{Mv::c100(m.at("u1"))});
        } else {
            A("case2", tcs({m.at("x"), m.at("u3"), m.at("u1"), m.at("u2"), m.at("v3"), m.at("v2")}) +
                           std::vector<Mv>{Mv::c100(m.at("v1"))});
        }
        break;

    case ConfigKind::IncidentPlusPendent: {
        int u = m.at("u"), u1 = m.at("u1"), u2 = m.at("u2"), u3 = m.at("u3");
        int a = m.at("u3p"), b = m.at("u3pp");
        for (auto [p, q] : {std::pair{a, b}, std::pair{b, a}}) {
            A("direct", tcs({p, q, u1, u}) + std::vector<Mv>{Mv::c100(u3)});
            // u1 stuck: hand it u2's color, then recolor u2 properly
            A("shift", tcs({p, q}) +
                           std::vector<Mv>{Mv::assign(u1, color_of(u2)), Mv::uncolor(u2),
                                           Mv::tc(u2), Mv::tc(u), Mv::c100(u3)});
        }
        break;
    }

    case ConfigKind::TwoIncident344: {
        int v = m.at("v"), v1 = m.at("v1"), v2 = m.at("v2"), v3 = m.at("v3"), v4 = m.at("v4");
        if (m.case_tag == "1") {
            int v1p = m.at("v1p"), v2p = m.at("v2p");
            auto t2 = tcs({v3, v4, v});
            A("plain", t2 + tcs({v1, v2}));
            A("both1", t2 + std::vector<Mv>{Mv::guard([=](const RState& s) {
                                return s.color[v1p] == s.color[v2p] && s.color[v1p] != s.color[v] &&
                                       s.color[v1p] != 1 && s.color[v] != 1;
                            }),
                            Mv::assign(v1, 1), Mv::assign(v2, 1)});
            A("v-is-1", t2 + std::vector<Mv>{Mv::guard(has_color(v, 1)), Mv::assign(v1, 1), Mv::tc(v2)});
            A("recolor-v", t2 + std::vector<Mv>{Mv::guard([=](const RState& s) {
                                   return s.color[v1p] == 1;
                               }),
                               Mv::uncolor(v), Mv::assign(v, 1), Mv::tc(v1), Mv::tc(v2)});
        } else if (m.case_tag == "2.1") {
            int v2p = m.at("v2p");
            auto pre = tcs({v1, v3});
            A("give-alpha", pre + std::vector<Mv>{Mv::assign(v, color_of(v2p)), Mv::tc(v2), Mv::tc(v4)});
            A("v3-alpha", pre + std::vector<Mv>{Mv::guard(same_color(v3, v2p)), Mv::tc(v2),
                                                Mv::c100(v), Mv::tc(v4)});
            A("v1-alpha", pre + std::vector<Mv>{Mv::guard(same_color(v1, v2p)), Mv::tc(v4),
                                                Mv::c100(v), Mv::tc(v2)});
        } else {
            int v2p = m.at("v2p");
            auto pre = tcs({v4, v1, v3, v});
            A("plain", pre + std::vector<Mv>{Mv::c100(v2)});
            A("recolor-v", pre + std::vector<Mv>{Mv::guard([=](const RState& s) {
                                   return s.color[v2p] == 1 &&
                                          ((s.color[v] == 2 && s.color[v1] == 3) ||
                                           (s.color[v] == 3 && s.color[v1] == 2));
                               }),
                               Mv::uncolor(v), Mv::assign(v, 1), Mv::tc(v2)});
        }
        break;
    }

    case ConfigKind::FiveVertexTwoIncident: {
        int v = m.at("v"), x = m.at("x"), y = m.at("y"), xp = m.at("xp"), v4 = m.at("v4");
        if (m.case_tag == "1") {
            A("case1", tcs({v4, v, xp, y}) + std::vector<Mv>{Mv::c100(x)});
        } else {
            int v3 = m.at("v3"), v3p = m.at("v3p"), v5 = m.at("v5");
            A("case2-easy",
              std::vector<Mv>{Mv::tc(v4), Mv::guard([=](const RState& s) {
                                  return s.color[v3p] != s.color[v5] ||
                                         s.color[v3p] == s.color[v4];
                              }),
                              Mv::tc(v), Mv::tc(v3)} +
                  tcs({xp, y}) + std::vector<Mv>{Mv::c100(x)});
            A("case2-ones",
              std::vector<Mv>{Mv::tc(v4), Mv::guard([=](const RState& s) {
                                  return s.color[v3p] == s.color[v5] &&
                                         s.color[v3p] != s.color[v4];
                              }),
                              Mv::assign(v3, 1), Mv::tc(v)} +
                  tcs({xp, y}) + std::vector<Mv>{Mv::c100(x)});
        }
        break;
    }

    case ConfigKind::FiveVertexPendent333: {
        int v = m.at("v"), v1 = m.at("v1"), v2 = m.at("v2"), v3 = m.at("v3"), v4 = m.at("v4");
        int w1 = m.at("w1"), w2 = m.at("w2"), v3p = m.at("v3p"), v4p = m.at("v4p");
        for (auto [wa, wb] : {std::pair{w1, w2}, std::pair{w2, w1}}) {
            std::vector<Mv> tail = tcs({v3p, v2, wa, wb}) +
                                   std::vector<Mv>{Mv::c100(v3), Mv::c100(v1)};
            A("no-swap", tcs({v4p, v4, v}) + std::vector<Mv>{Mv::guard(not_color(v, 1))} + tail);
            A("swap", tcs({v4p, v4, v}) +
                          std::vector<Mv>{Mv::guard(has_color(v, 1)), Mv::swap(v, v4)} + tail);
        }
        break;
    }

    case ConfigKind::SixVertexTwoWeak336: {
        int v = m.at("v"), v1 = m.at("v1"), v2 = m.at("v2"), v5 = m.at("v5"), v6 = m.at("v6");
        int x = m.at("x"), y = m.at("y"), xp = m.at("xp");
        int z = m.at("z"), zatt = m.at("zatt"), zoth = m.at("zoth");
        int v2p = m.at("v2p");
        auto pre = tcs({v1, v2, v});
        A("v-alpha", pre + std::vector<Mv>{Mv::guard(same_color(v, v2p))} + tcs({v6, v5, xp, y}) +
                         std::vector<Mv>{Mv::c100(x)});
        for (bool do_swap : {false, true}) {
            std::vector<Mv> head = pre + std::vector<Mv>{Mv::guard(diff_color(v, v2p))};
            if (do_swap)
                head = head + std::vector<Mv>{Mv::guard(has_color(v, 1)), Mv::swap(v, v2)};
            else
                head = head + std::vector<Mv>{Mv::guard(not_color(v, 1))};
            A(do_swap ? "v-not-alpha-swap" : "v-not-alpha",
              head + tcs({xp, y}) + std::vector<Mv>{Mv::c100(x), Mv::uncolor(z), Mv::tc(z),
                                                    Mv::tc(zoth), Mv::c100(zatt)});
        }
        break;
    }

    case ConfigKind::Wheel: {
        // rotate roles so the distinguished corner sits at w (case 1: the
        // color-1 prime; case 2: the non-1 prime)
        struct Roles { int u, v, w, u1, u2, v1, v2, w1, w2, u1p, v1p, w1p; };
        Roles r0{m.at("u"),  m.at("v"),  m.at("w"),  m.at("u1"), m.at("u2"), m.at("v1"),
                 m.at("v2"), m.at("w1"), m.at("w2"), m.at("u1p"), m.at("v1p"), m.at("w1p")};
        auto rotate = [](const Roles& r) {
            return Roles{r.v, r.w, r.u, r.v1, r.v2, r.w1, r.w2, r.u1, r.u2, r.v1p, r.w1p, r.u1p};
        };
        int c_u = st0.color[r0.u1p], c_v = st0.color[r0.v1p], c_w = st0.color[r0.w1p];
        bool distinct = c_u != c_v && c_v != c_w && c_u != c_w;
        Roles r = r0;
        for (int i = 0; i < 3; ++i) {
            bool anchored = distinct ? st0.color[r.w1p] == 1 : st0.color[r.w1p] != 1;
            if (anchored) break;
            r = rotate(r);
        }
        if (distinct) {
            ColorExpr a = color_of(r.u1p), b = color_of(r.v1p);
            auto pre = tcs({r.u2, r.v2, r.w2});
            A("case1-direct", pre + std::vector<Mv>{Mv::guard([=](const RState& s) {
                                  return s.color[r.u2] != s.color[r.u1p] &&
                                         s.color[r.v2] != s.color[r.v1p];
                              }),
                              Mv::assign(r.u, a), Mv::assign(r.v, b), Mv::assign(r.w, 1),
                              Mv::tc(r.u1), Mv::tc(r.v1), Mv::tc(r.w1)});
            for (bool w2_is_1 : {true, false}) {
                std::vector<Mv> wpart =
                    w2_is_1 ? std::vector<Mv>{Mv::guard(has_color(r.w2, 1)), Mv::tc(r.w), Mv::tc(r.w1)}
                            : std::vector<Mv>{Mv::guard(not_color(r.w2, 1)), Mv::assign(r.w, 1),
                                              Mv::tc(r.w1)};
                A("case1-u-side", pre + std::vector<Mv>{Mv::guard(same_color(r.u2, r.u1p)),
                                                        Mv::assign(r.u1, b), Mv::assign(r.u, 1),
                                                        Mv::tc(r.v), Mv::tc(r.v1)} +
                                      wpart);
                A("case1-v-side", pre + std::vector<Mv>{Mv::guard(same_color(r.v2, r.v1p)),
                                                        Mv::assign(r.v1, a), Mv::assign(r.v, 1),
                                                        Mv::tc(r.u), Mv::tc(r.u1)} +
                                      wpart);
            }
        } else {
            // precisely two primes carry color 1; anchored so w1p is the odd one
            auto pre = tcs({r.u2, r.v2, r.w2, r.w1, r.w});
            for (bool do_swap : {false, true}) {
                std::vector<Mv> head =
                    do_swap ? pre + std::vector<Mv>{Mv::guard(has_color(r.w, 1)), Mv::swap(r.w, r.w1)}
                            : pre + std::vector<Mv>{Mv::guard(not_color(r.w, 1))};
                std::string t = do_swap ? "case2-swap" : "case2";
                A(t + "-plain", head + tcs({r.u, r.u1, r.v, r.v1}));
                A(t + "-u1", head + std::vector<Mv>{Mv::assign(r.u, 1)} + tcs({r.u1, r.v, r.v1}));
                A(t + "-v1", head + std::vector<Mv>{Mv::assign(r.v, 1)} + tcs({r.v1, r.u, r.u1}));
            }
        }
        break;
    }

    case ConfigKind::AntiwheelAllLight: {
        int u = m.at("u"), v = m.at("v"), w = m.at("w");
        int u1 = m.at("u1"), u2 = m.at("u2"), v1 = m.at("v1"), v2 = m.at("v2");
        int w1 = m.at("w1"), w2 = m.at("w2");
        int u1p = m.at("u1p"), v1p = m.at("v1p"), w2p = m.at("w2p");
        int alpha = st0.color[v2];
        int beta = st0.color[u1p];
        auto pre = tcs({u2, w1});

        // case 1: not both u2 and w1 take alpha
        Pred case1 = [=](const RState& s) {
            return !(s.color[u2] == alpha && s.color[w1] == alpha);
        };
        std::vector<Mv> base = pre + std::vector<Mv>{Mv::guard(case1)} + tcs({u, v, w}) +
                               std::vector<Mv>{Mv::uncolor(u1p), Mv::tc(u1p), Mv::uncolor(w2p),
                                               Mv::tc(w2p), Mv::c100(u1), Mv::c100(w2)};
        A("case1-recolor-v2",
          base + std::vector<Mv>{Mv::uncolor(v2), Mv::tc(v2), Mv::uncolor(v1p), Mv::tc(v1p),
                                 Mv::c100(v1)});
        A("case1-v1-direct", base + std::vector<Mv>{Mv::tc(v1)});
        // the recoloring dance: v2 keeps 1, v gets the other non-1 color
        {
            std::vector<Mv> dance = base;
            dance.push_back(Mv::guard(has_color(v2, 1)));
            dance.push_back(Mv::guard(not_color(v, 1)));
            // delta = color of v1p (must differ from beta), gamma = color of v
            dance.push_back(Mv::guard([=](const RState& s) {
                return s.color[v1p] != 1 && s.color[v1p] != s.color[v];
            }));
            dance.push_back(Mv::assign(v1, 1));
            // capture gamma/delta via expressions on the current state
            dance.push_back(Mv::uncolor(u1));
            dance.push_back(Mv::uncolor(w2));
            dance.push_back(Mv::uncolor(u));
            dance.push_back(Mv::uncolor(w));
            dance.push_back(Mv::assign(w2p, 1));
            dance.push_back(Mv::assign(u1p, beta));
            // reassign v2 with gamma (v's color) and v with delta (v1p's color)
            dance.push_back(Mv::assign(v2, color_of(v)));
            dance.push_back(Mv::assign(v, color_of(v1p)));
            dance = dance + tcs({u, u1});
            // w side: if w1 has delta, 3-color w then (1,0,0)-color w2;
            // otherwise give w2 delta and (1,0,0)-color w
            std::vector<Mv> w_a = dance;
            w_a.push_back(Mv::guard(same_color(w1, v)));
            w_a.push_back(Mv::tc(w));
            w_a.push_back(Mv::c100(w2));
            A("case1-dance-a", std::move(w_a));
            std::vector<Mv> w_b = dance;
            w_b.push_back(Mv::guard(diff_color(w1, v)));
            w_b.push_back(Mv::assign(w2, color_of(v)));
            w_b.push_back(Mv::c100(w));
            A("case1-dance-b", std::move(w_b));
        }

        // case 2: both u2 and w1 take alpha
        Pred case2 = [=](const RState& s) {
            return s.color[u2] == alpha && s.color[w1] == alpha;
        };
        if (alpha == 1) {
            A("case2-alpha1", pre + std::vector<Mv>{Mv::guard(case2), Mv::assign(u, 1)} +
                                  tcs({u1, v1, v, w, w2}));
        } else {
            int tau = alpha == 2 ? 3 : 2;
            if (beta != tau) {
                A("case2-beta", pre + std::vector<Mv>{Mv::guard(case2)} + tcs({v1, v, w, w2}) +
                                    std::vector<Mv>{Mv::assign(u, 1), Mv::tc(u1)});
            } else {
                A("case2-mass", pre + std::vector<Mv>{Mv::guard(case2), Mv::assign(u, tau),
                                                      Mv::assign(w2, tau), Mv::assign(v1, tau),
                                                      Mv::assign(u1, 1), Mv::assign(w, 1),
                                                      Mv::assign(v, 1)});
            }
        }
        break;
    }

    case ConfigKind::FiveFaceAllLight:
    case ConfigKind::SmallFiveFaceWith4Vertex: {
        int u1 = m.at("u1"), u2 = m.at("u2"), u3 = m.at("u3"), u4 = m.at("u4"), u5 = m.at("u5");
        A("forward", tcs({u1, u2, u3, u4}) + std::vector<Mv>{Mv::c100(u5)});
        A("mirror", tcs({u1, u5, u4, u3}) + std::vector<Mv>{Mv::c100(u2)});
        break;
    }

    case ConfigKind::AdjacentFiveFaces:
        A("walk", tcs({m.at("u"), m.at("a1"), m.at("a2"), m.at("a3"), m.at("b1"), m.at("b2"),
                       m.at("b3")}) +
                      std::vector<Mv>{Mv::c100(m.at("v"))});
        break;

    default:
        throw Error(ErrorKind::BadArgument, "no recipe for this configuration kind");
    }
    return alts;
}

} // namespace

namespace {

// streaming enumeration of valid colorings (prefix-incremental filter), so
// certification never materializes the full list
void for_each_valid_coloring(const PlaneGraph& g, const std::function<bool(const Coloring&)>& fn) {
    std::vector<int> color(g.vertex_count() + 1, 0);
    int n = g.vertex_count();
    Coloring c;
    auto ok_prefix = [&](int v) {
        int k = color[v];
        if (k >= 2) {
            for (int u : g.rotation(v))
                if (u <= v && color[u] == k) return false;
            return true;
        }
        int ones = 0;
        for (int u : g.rotation(v))
            if (u <= v && color[u] == 1) ++ones;
        if (ones > 1) return false;
        for (int u : g.rotation(v)) {
            if (u > v || color[u] != 1) continue;
            int uo = 0;
            for (int w : g.rotation(u))
                if (w <= v && color[w] == 1) ++uo;
            if (uo > 1) return false;
        }
        return true;
    };
    bool stop = false;
    auto rec = [&](auto&& self, int v) -> void {
        if (stop) return;
        if (v > n) {
            c.color = color;
            if (!fn(c)) stop = true;
            return;
        }
        for (int k = 1; k <= 3 && !stop; ++k) {
            color[v] = k;
            if (ok_prefix(v)) self(self, v + 1);
        }
        color[v] = 0;
    };
    rec(rec, 1);
}

} // namespace

ReducibilityHostReport verify_reducibility_host(const PlaneGraph& host, const ConfigMatch& m,
                                                const std::string& host_name,
                                                int enumeration_bound) {
    ReducibilityHostReport rep;
    rep.host = host_name;
    rep.kind = m.kind;
    rep.case_tag = m.case_tag;
    Surgery s = apply_surgery(host, m);
    if (s.result.vertex_count() > enumeration_bound)
        throw Error(ErrorKind::SizeBound,
                    "surgery result has " + std::to_string(s.result.vertex_count()) +
                        " vertices, bound is " + std::to_string(enumeration_bound));
    std::set<int> bound;
    for (const auto& [r, v] : m.binding) bound.insert(v);
    std::set<std::string> branches;
    for_each_valid_coloring(s.result, [&](const Coloring& rc) {
        ++rep.colorings_tried;
        try {
            ExtendResult res = extend_back_impl(host, m, rc);
            bool ok = coloring_valid(host, res.coloring);
            // survivors keep their colors unless the recipe names them
            for (int v = 1; v <= host.vertex_count() && ok; ++v) {
                if (!s.vertex_map[v]) continue;
                if (res.coloring.color[v] != rc.color[s.vertex_map[v]] && !bound.count(v)) ok = false;
            }
            if (ok) {
                ++rep.replays_ok;
                branches.insert(res.branch);
            } else {
                rep.stuck.push_back("extension invalid for a result coloring");
            }
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::RecipeStuck)
                rep.stuck.push_back(e.what());
            else
                throw;
        }
        return rep.stuck.size() <= 8; // stop early once failure is established
    });
    rep.branch_tags_hit.assign(branches.begin(), branches.end());
    return rep;
}

} // namespace dlab
