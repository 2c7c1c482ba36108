#include "dlab/coloring.hpp"

#include <algorithm>
#include <set>

namespace dlab {

std::string Violation::describe() const {
    if (kind == MonochromaticEdge)
        return "edge " + std::to_string(u) + "-" + std::to_string(v) + " monochromatic in class " +
               std::to_string(color);
    return "edge " + std::to_string(u) + "-" + std::to_string(v) + " exceeds the class-1 degree bound";
}

std::vector<Violation> verify_coloring(const PlaneGraph& g, const Coloring& c) {
    std::vector<Violation> out;
    if (static_cast<int>(c.color.size()) != g.vertex_count() + 1)
        throw Error(ErrorKind::BadArgument, "coloring size mismatch");
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (c.color[v] < 1 || c.color[v] > 3)
            throw Error(ErrorKind::BadArgument, "vertex " + std::to_string(v) + " lacks a color in {1,2,3}");

    for (int v = 1; v <= g.vertex_count(); ++v)
        for (int u : g.rotation(v)) {
            if (u < v) continue;
            int cv = c.color[v];
            if (cv >= 2 && c.color[u] == cv) out.push_back({Violation::MonochromaticEdge, v, u, cv});
        }

    // Class-1 excess: each 1-vertex tolerates one incident 1-edge; walking
    // vertices in ascending order, any further 1-edge is flagged once.
    std::set<std::pair<int, int>> flagged;
    for (int v = 1; v <= g.vertex_count(); ++v) {
        if (c.color[v] != 1) continue;
        int allowance = 1;
        std::vector<int> ones;
        for (int u : g.rotation(v))
            if (c.color[u] == 1) ones.push_back(u);
        std::sort(ones.begin(), ones.end());
        for (int u : ones) {
            std::pair<int, int> e{std::min(u, v), std::max(u, v)};
            if (flagged.count(e)) continue;
            if (allowance > 0) {
                --allowance;
            } else {
                flagged.insert(e);
                out.push_back({Violation::OneDegreeExcess, e.first, e.second, 1});
            }
        }
    }
    return out;
}

bool coloring_valid(const PlaneGraph& g, const Coloring& c) { return verify_coloring(g, c).empty(); }

namespace {

// Legality of assigning color k to v under the partial coloring (0 =
// uncolored). forbid[v] holds colors barred outright (used by super_extend
// for the cross-boundary inequality).
bool assign_ok(const PlaneGraph& g, const std::vector<int>& color, int v, int k,
               const std::vector<char>* forbid = nullptr) {
    if (forbid && forbid[0][static_cast<size_t>(v) * 4 + k]) return false;
    if (k >= 2) {
        for (int u : g.rotation(v))
            if (color[u] == k) return false;
        return true;
    }
    int ones = 0, lone = 0;
    for (int u : g.rotation(v))
        if (color[u] == 1) { ++ones; lone = u; }
    if (ones == 0) return true;
    if (ones > 1) return false;
    for (int w : g.rotation(lone))
        if (w != v && color[w] == 1) return false;
    return true;
}

struct Searcher {
    const PlaneGraph& g;
    std::vector<int> color;
    std::vector<char> fixed;
    std::vector<char> forbid; // (v*4 + k) -> barred
    bool (*emit)(void*, const std::vector<int>&);
    void* ctx;

    bool run() {
        int v = pick();
        if (v == 0) return emit(ctx, color);
        for (int k = 1; k <= 3; ++k) {
            if (!assign_ok(g, color, v, k, &forbid)) continue;
            color[v] = k;
            if (run()) return true;
            color[v] = 0;
        }
        return false;
    }

    // minimum remaining values; ties by degree desc, then id asc
    int pick() const {
        int best = 0, best_cnt = 4, best_deg = -1;
        for (int v = 1; v <= g.vertex_count(); ++v) {
            if (color[v] != 0) continue;
            int cnt = 0;
            for (int k = 1; k <= 3; ++k)
                if (assign_ok(g, color, v, k, &forbid)) ++cnt;
            int deg = g.degree(v);
            if (cnt < best_cnt || (cnt == best_cnt && deg > best_deg)) {
                best = v;
                best_cnt = cnt;
                best_deg = deg;
            }
        }
        return best;
    }
};

} // namespace

std::optional<Coloring> solve(const PlaneGraph& g) {
    Searcher s{g,
               std::vector<int>(g.vertex_count() + 1, 0),
               std::vector<char>(g.vertex_count() + 1, 0),
               std::vector<char>((g.vertex_count() + 1) * 4, 0),
               [](void*, const std::vector<int>&) { return true; },
               nullptr};
    std::optional<Coloring> found;
    s.ctx = &found;
    s.emit = [](void* ctx, const std::vector<int>& col) {
        auto* out = static_cast<std::optional<Coloring>*>(ctx);
        Coloring c;
        c.color = col;
        *out = std::move(c);
        return true;
    };
    s.run();
    return found;
}

std::optional<ExtensionWitness> super_extend(const PlaneGraph& g, const Precoloring& pre) {
    // D must be a cycle
    const auto& walk = g.face(g.outer_face_id()).walk;
    std::set<int> dset(walk.begin(), walk.end());
    if (dset.size() != walk.size() || walk.size() < 3)
        throw Error(ErrorKind::BoundaryNotCycle, "outer boundary walk is not a cycle");

    if (pre.assignment.size() != dset.size())
        throw Error(ErrorKind::InvalidPrecoloring, "precoloring must cover exactly V(D)");
    for (const auto& [v, c] : pre.assignment) {
        if (!dset.count(v))
            throw Error(ErrorKind::InvalidPrecoloring, "vertex " + std::to_string(v) + " not on D");
        if (c < 1 || c > 3)
            throw Error(ErrorKind::InvalidPrecoloring, "color out of range");
    }
    // validity of the precoloring on G[V(D)]
    for (const auto& [v, cv] : pre.assignment) {
        int ones = 0;
        for (int u : g.rotation(v)) {
            if (!dset.count(u)) continue;
            int cu = pre.assignment.at(u);
            if (cv >= 2 && cu == cv)
                throw Error(ErrorKind::InvalidPrecoloring, "monochromatic boundary edge in class " +
                                                                std::to_string(cv));
            if (cv == 1 && cu == 1) ++ones;
        }
        if (cv == 1 && ones > 1)
            throw Error(ErrorKind::InvalidPrecoloring, "class-1 degree bound broken on D");
    }

    Searcher s{g,
               std::vector<int>(g.vertex_count() + 1, 0),
               std::vector<char>(g.vertex_count() + 1, 0),
               std::vector<char>((g.vertex_count() + 1) * 4, 0),
               nullptr,
               nullptr};
    for (const auto& [v, c] : pre.assignment) {
        s.color[v] = c;
        s.fixed[v] = 1;
    }
    // cross-boundary inequality: interior neighbors of D may not reuse the
    // boundary color, independent of class
    for (const auto& [v, c] : pre.assignment)
        for (int u : g.rotation(v))
            if (!dset.count(u)) s.forbid[static_cast<size_t>(u) * 4 + c] = 1;

    std::optional<Coloring> found;
    s.ctx = &found;
    s.emit = [](void* ctx, const std::vector<int>& col) {
        auto* out = static_cast<std::optional<Coloring>*>(ctx);
        Coloring c;
        c.color = col;
        *out = std::move(c);
        return true;
    };
    s.run();
    if (!found) return std::nullopt;
    ExtensionWitness w;
    w.coloring = std::move(*found);
    w.respects_boundary = true;
    return w;
}

namespace {

bool prefix_ok(const PlaneGraph& g, const std::vector<int>& color, int v) {
    // consistency of the prefix 1..v once color[v] is set
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
}

} // namespace

std::vector<Coloring> enumerate_all(const PlaneGraph& g, int size_bound) {
    if (g.vertex_count() > size_bound)
        throw Error(ErrorKind::SizeBound, "enumeration bounded to " + std::to_string(size_bound) +
                                              " vertices, graph has " + std::to_string(g.vertex_count()));
    std::vector<Coloring> out;
    std::vector<int> color(g.vertex_count() + 1, 0);
    int n = g.vertex_count();
    auto rec = [&](auto&& self, int v) -> void {
        if (v > n) {
            Coloring c;
            c.color = color;
            out.push_back(std::move(c));
            return;
        }
        for (int k = 1; k <= 3; ++k) {
            color[v] = k;
            if (prefix_ok(g, color, v)) self(self, v + 1);
        }
        color[v] = 0;
    };
    rec(rec, 1);
    return out;
}

std::vector<std::map<int, int>> enumerate_induced_colorings(const PlaneGraph& g,
                                                            const std::vector<int>& S) {
    std::vector<int> verts = S;
    std::sort(verts.begin(), verts.end());
    std::vector<std::map<int, int>> out;
    std::map<int, int> cur;

    auto ok = [&](int v, int k) {
        if (k >= 2) {
            for (int u : g.rotation(v)) {
                auto it = cur.find(u);
                if (it != cur.end() && it->second == k) return false;
            }
            return true;
        }
        int ones = 0, lone = 0;
        for (int u : g.rotation(v)) {
            auto it = cur.find(u);
            if (it != cur.end() && it->second == 1) { ++ones; lone = u; }
        }
        if (ones == 0) return true;
        if (ones > 1) return false;
        for (int w : g.rotation(lone)) {
            if (w == v) continue;
            auto it = cur.find(w);
            if (it != cur.end() && it->second == 1) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == verts.size()) {
            out.push_back(cur);
            return;
        }
        for (int k = 1; k <= 3; ++k) {
            if (!ok(verts[i], k)) continue;
            cur[verts[i]] = k;
            self(self, i + 1);
            cur.erase(verts[i]);
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace dlab
