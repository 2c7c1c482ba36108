#include "dlab/plane_graph.hpp"

#include <algorithm>
#include <set>

namespace dlab {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
    case ErrorKind::AsymmetricAdjacency: return "AsymmetricAdjacency";
    case ErrorKind::OuterWalkNotAFace: return "OuterWalkNotAFace";
    case ErrorKind::EulerViolation: return "EulerViolation";
    case ErrorKind::NotACycle: return "NotACycle";
    case ErrorKind::PathDoesNotSplit: return "PathDoesNotSplit";
    case ErrorKind::BoundaryNotCycle: return "BoundaryNotCycle";
    case ErrorKind::InvalidPrecoloring: return "InvalidPrecoloring";
    case ErrorKind::SizeBound: return "SizeBound";
    case ErrorKind::RecipeInapplicable: return "RecipeInapplicable";
    case ErrorKind::RecipeStuck: return "RecipeStuck";
    case ErrorKind::AmbiguousRule: return "AmbiguousRule";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::BadArgument: return "BadArgument";
    }
    return "Error";
}

bool cyclic_equal(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size() || a.empty()) return a.size() == b.size();
    size_t k = a.size();
    for (size_t s = 0; s < k; ++s) {
        bool ok = true;
        for (size_t i = 0; i < k && ok; ++i)
            if (a[i] != b[(s + i) % k]) ok = false;
        if (ok) return true;
    }
    return false;
}

bool cyclic_equal_reflective(const std::vector<int>& a, const std::vector<int>& b) {
    if (cyclic_equal(a, b)) return true;
    std::vector<int> r(b.rbegin(), b.rend());
    return cyclic_equal(a, r);
}

PlaneGraph PlaneGraph::build_from_rotation(int vertex_count,
                                           std::vector<std::vector<int>> rotation,
                                           std::vector<int> outer_walk) {
    if (vertex_count <= 0)
        throw Error(ErrorKind::BadArgument, "vertex_count must be positive");
    if (static_cast<int>(rotation.size()) != vertex_count)
        throw Error(ErrorKind::BadArgument, "rotation list count != vertex count");

    PlaneGraph g;
    g.n_ = vertex_count;
    g.rot_.assign(vertex_count + 1, {});
    for (int v = 1; v <= vertex_count; ++v)
        g.rot_[v] = std::move(rotation[v - 1]);

    // Symmetric, simple, loop-free adjacency: u in rot(v) exactly once iff
    // v in rot(u) exactly once.
    long darts = 0;
    for (int v = 1; v <= vertex_count; ++v) {
        std::set<int> seen;
        for (int u : g.rot_[v]) {
            if (u < 1 || u > vertex_count)
                throw Error(ErrorKind::BadArgument,
                            "rotation of vertex " + std::to_string(v) + " references invalid id " + std::to_string(u));
            if (u == v)
                throw Error(ErrorKind::AsymmetricAdjacency, "loop at vertex " + std::to_string(v));
            if (!seen.insert(u).second)
                throw Error(ErrorKind::AsymmetricAdjacency,
                            "vertex " + std::to_string(u) + " repeated in rotation of " + std::to_string(v));
            ++darts;
        }
        for (int u : g.rot_[v]) {
            const auto& ru = g.rot_[u];
            if (std::count(ru.begin(), ru.end(), v) != 1)
                throw Error(ErrorKind::AsymmetricAdjacency,
                            "edge " + std::to_string(v) + "-" + std::to_string(u) + " not mirrored");
        }
    }
    g.m_ = static_cast<int>(darts / 2);

    g.derive_faces();

    // Euler check: rotation systems of higher genus are rejected. A
    // disconnected graph would also fail here for most inputs, but
    // connectedness is validated separately (validate_class_G); to keep the
    // two concerns apart we only apply Euler to connected graphs and reject
    // anything whose face count is off.
    if (g.is_connected()) {
        if (g.n_ - g.m_ + g.face_count() != 2)
            throw Error(ErrorKind::EulerViolation,
                        "V-E+F = " + std::to_string(g.n_ - g.m_ + g.face_count()) + ", expected 2");
    }

    // Bind the declared outer walk to a traced face (match up to rotation).
    if (outer_walk.empty())
        throw Error(ErrorKind::BadArgument, "empty outer walk");
    g.outer_face_ = -1;
    for (int f = 0; f < g.face_count(); ++f) {
        if (cyclic_equal(g.faces_[f].walk, outer_walk)) { g.outer_face_ = f; break; }
    }
    if (g.outer_face_ < 0)
        throw Error(ErrorKind::OuterWalkNotAFace, "declared outer walk is not a traced face");
    g.outer_walk_ = std::move(outer_walk);

    g.external_.assign(vertex_count + 1, 0);
    for (int v : g.faces_[g.outer_face_].walk) g.external_[v] = 1;
    return g;
}

void PlaneGraph::derive_faces() {
    faces_.clear();
    dart_face_.assign(n_ + 1, {});
    for (int v = 1; v <= n_; ++v) dart_face_[v].assign(rot_[v].size(), -1);

    auto index_in_rot = [&](int v, int u) -> int {
        const auto& r = rot_[v];
        for (size_t i = 0; i < r.size(); ++i)
            if (r[i] == u) return static_cast<int>(i);
        return -1;
    };

    for (int v = 1; v <= n_; ++v) {
        for (size_t k = 0; k < rot_[v].size(); ++k) {
            if (dart_face_[v][k] >= 0) continue;
            int fid = static_cast<int>(faces_.size());
            Face f;
            int cu = v;
            int ck = static_cast<int>(k);
            // follow successor darts until we return to the starting dart
            do {
                dart_face_[cu][ck] = fid;
                f.walk.push_back(cu);
                int cv = rot_[cu][ck];
                int j = index_in_rot(cv, cu);
                int deg = static_cast<int>(rot_[cv].size());
                int nk = (j - 1 + deg) % deg; // w precedes u clockwise at v
                cu = cv;
                ck = nk;
            } while (!(cu == v && ck == static_cast<int>(k)));
            faces_.push_back(std::move(f));
        }
    }

    faces_at_.assign(n_ + 1, {});
    for (int f = 0; f < face_count(); ++f) {
        for (int v : faces_[f].walk) {
            auto& fa = faces_at_[v];
            if (fa.empty() || std::find(fa.begin(), fa.end(), f) == fa.end()) fa.push_back(f);
        }
    }
}

bool PlaneGraph::adjacent(int u, int v) const {
    const auto& r = rot_[u];
    return std::find(r.begin(), r.end(), v) != r.end();
}

int PlaneGraph::face_of_dart(int u, int v) const {
    const auto& r = rot_[u];
    for (size_t i = 0; i < r.size(); ++i)
        if (r[i] == v) return dart_face_[u][i];
    throw Error(ErrorKind::BadArgument,
                "no dart " + std::to_string(u) + "->" + std::to_string(v));
}

bool PlaneGraph::is_connected() const {
    std::vector<char> vis(n_ + 1, 0);
    std::vector<int> stack{1};
    vis[1] = 1;
    int count = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++count;
        for (int u : rot_[v])
            if (!vis[u]) { vis[u] = 1; stack.push_back(u); }
    }
    return count == n_;
}

std::vector<std::pair<int, int>> PlaneGraph::edges() const {
    std::vector<std::pair<int, int>> es;
    for (int v = 1; v <= n_; ++v)
        for (int u : rot_[v])
            if (v < u) es.emplace_back(v, u);
    std::sort(es.begin(), es.end());
    return es;
}

VertexClass classify_vertex(const PlaneGraph& g, int v) {
    if (v < 1 || v > g.vertex_count())
        throw Error(ErrorKind::BadArgument, "vertex id out of range");
    VertexClass c;
    c.is_external = g.is_external(v);
    c.degree = g.degree(v);
    c.is_light = g.is_light(v);
    return c;
}

namespace {

// Canonical form of a cycle given as a closed vertex sequence: rotate so the
// smallest vertex leads, then pick the lexicographically smaller direction.
std::vector<int> canonical_cycle(std::vector<int> cyc) {
    size_t k = cyc.size();
    size_t mi = 0;
    for (size_t i = 1; i < k; ++i)
        if (cyc[i] < cyc[mi]) mi = i;
    std::vector<int> fwd(k), bwd(k);
    for (size_t i = 0; i < k; ++i) {
        fwd[i] = cyc[(mi + i) % k];
        bwd[i] = cyc[(mi + k - i) % k];
    }
    return fwd <= bwd ? fwd : bwd;
}

} // namespace

std::vector<std::vector<int>> find_short_cycles(const PlaneGraph& g, int max_len) {
    std::set<std::vector<int>> out;
    if (max_len < 3) return {};
    std::vector<int> path;
    std::vector<char> on_path(g.vertex_count() + 1, 0);

    // Start DFS at each vertex s; all other cycle vertices must exceed s, so
    // each cycle is found from its minimum vertex only.
    auto dfs = [&](auto&& self, int s, int v) -> void {
        for (int u : g.rotation(v)) {
            if (u == s && path.size() >= 3) out.insert(canonical_cycle(path));
            if (u <= s || on_path[u]) continue;
            if (static_cast<int>(path.size()) >= max_len) continue;
            path.push_back(u);
            on_path[u] = 1;
            self(self, s, u);
            on_path[u] = 0;
            path.pop_back();
        }
    };

    for (int s = 1; s <= g.vertex_count(); ++s) {
        path.assign(1, s);
        on_path.assign(g.vertex_count() + 1, 0);
        on_path[s] = 1;
        dfs(dfs, s, s);
    }
    return {out.begin(), out.end()};
}

ClassGReport validate_class_G(const PlaneGraph& g) {
    ClassGReport r;
    r.is_connected = g.is_connected();
    r.is_simple = true; // construction rejects loops and parallel edges
    for (const auto& cyc : find_short_cycles(g, 6)) {
        int len = static_cast<int>(cyc.size());
        if (len == 4 || len == 6) r.forbidden_cycles.emplace_back(len, cyc);
    }
    std::sort(r.forbidden_cycles.begin(), r.forbidden_cycles.end());
    r.verdict = r.is_connected && r.is_simple && r.forbidden_cycles.empty();
    return r;
}

} // namespace dlab
