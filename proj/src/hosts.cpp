#include "dlab/hosts.hpp"

#include <algorithm>
#include <set>

#include "dlab/configurations.hpp"

namespace dlab {

Disk::Disk(int outer_len) : n_(outer_len), outer_len_(outer_len) {
    if (outer_len < 3) throw Error(ErrorKind::BadArgument, "outer cycle too short");
    rot_.assign(n_ + 1, {});
    for (int i = 1; i <= outer_len; ++i) {
        int prev = i == 1 ? outer_len : i - 1;
        int next = i == outer_len ? 1 : i + 1;
        rot_[i] = {prev, next};
    }
}

PlaneGraph Disk::graph() const {
    std::vector<std::vector<int>> rot(rot_.begin() + 1, rot_.end());
    std::vector<int> outer(outer_len_);
    for (int i = 0; i < outer_len_; ++i) outer[i] = i + 1;
    return PlaneGraph::build_from_rotation(n_, std::move(rot), std::move(outer));
}

int Disk::locate_face(const std::vector<int>& need, const std::vector<int>& avoid) const {
    PlaneGraph g = graph();
    int found = -1;
    for (int f = 0; f < g.face_count(); ++f) {
        if (f == g.outer_face_id()) continue;
        std::set<int> fv(g.face(f).walk.begin(), g.face(f).walk.end());
        bool ok = true;
        for (int v : need)
            if (!fv.count(v)) ok = false;
        for (int v : avoid)
            if (fv.count(v)) ok = false;
        if (!ok) continue;
        if (found >= 0)
            throw Error(ErrorKind::BadArgument, "ambiguous face; extend the witness set");
        found = f;
    }
    if (found < 0) throw Error(ErrorKind::BadArgument, "no inner face contains the witness set");
    return found;
}

std::vector<int> Disk::add_path(int u, int v, int inner, const std::vector<int>& witness,
                                const std::vector<int>& avoid) {
    if (u == v && inner < 2)
        throw Error(ErrorKind::BadArgument, "closed fan needs at least two inner vertices");
    std::vector<int> need = witness;
    need.push_back(u);
    need.push_back(v);
    PlaneGraph g = graph();
    int f = locate_face(need, avoid);
    const auto& walk = g.face(f).walk;
    auto pos = [&](int x) {
        for (size_t i = 0; i < walk.size(); ++i)
            if (walk[i] == x) return static_cast<int>(i);
        return -1;
    };
    int iu = pos(u), iv = pos(v);
    if (iu < 0 || iv < 0) throw Error(ErrorKind::BadArgument, "endpoint not on face");
    // walk predecessors: the dart (a -> x) lies on f, so the new edge at x is
    // inserted immediately before a in x's rotation
    int au = walk[(iu + walk.size() - 1) % walk.size()];
    int av = walk[(iv + walk.size() - 1) % walk.size()];

    std::vector<int> fresh;
    for (int i = 0; i < inner; ++i) {
        rot_.push_back({});
        fresh.push_back(++n_);
    }
    int first = inner ? fresh.front() : v;
    int last = inner ? fresh.back() : u;

    auto insert_before = [&](int x, int anchor, int nb) {
        auto& r = rot_[x];
        auto it = std::find(r.begin(), r.end(), anchor);
        if (it == r.end()) throw Error(ErrorKind::BadArgument, "anchor missing in rotation");
        r.insert(it, nb);
    };
    insert_before(u, au, first);
    insert_before(v, av, last);
    for (int i = 0; i < inner; ++i) {
        int w = fresh[i];
        int prv = i == 0 ? u : fresh[i - 1];
        int nxt = i + 1 == inner ? v : fresh[i + 1];
        rot_[w] = {prv, nxt};
    }
    return fresh;
}

int Disk::add_leaf(int u, const std::vector<int>& witness, const std::vector<int>& avoid) {
    std::vector<int> need = witness;
    need.push_back(u);
    PlaneGraph g = graph();
    int f = locate_face(need, avoid);
    const auto& walk = g.face(f).walk;
    int au = -1;
    for (size_t i = 0; i < walk.size(); ++i)
        if (walk[i] == u) au = walk[(i + walk.size() - 1) % walk.size()];
    if (au < 0) throw Error(ErrorKind::BadArgument, "leaf anchor not on face");
    rot_.push_back({});
    int w = ++n_;
    auto& r = rot_[u];
    r.insert(std::find(r.begin(), r.end(), au), w);
    rot_[w] = {u};
    return w;
}

PlaneGraph make_cycle(int n) {
    Disk d(n);
    return d.graph();
}

PlaneGraph make_path2() {
    return PlaneGraph::build_from_rotation(2, {{2}, {1}}, {1, 2});
}

PlaneGraph make_k3() { return make_cycle(3); }

PlaneGraph make_k4() {
    Disk d(3);
    int c = d.add_path(1, 2, 1)[0];
    d.add_path(c, 3, 0);
    return d.graph();
}

PlaneGraph make_wheel5() {
    Disk d(5);
    int h = d.add_path(1, 3, 1)[0];
    d.add_path(h, 2, 0, {1, 3});
    d.add_path(h, 4, 0, {4});
    d.add_path(h, 5, 0, {5});
    return d.graph();
}

PlaneGraph make_claw_host() {
    Disk d(9);
    int c = d.add_path(1, 4, 1)[0];
    d.add_path(c, 7, 0, {5, 6});
    return d.graph();
}

namespace {

void check_host(const PlaneGraph& g, const std::string& kind, const std::string& case_tag,
                const std::string& name) {
    ClassGReport rep = validate_class_G(g);
    if (!rep.verdict)
        throw Error(ErrorKind::BadArgument, "host " + name + " is not class-G (" +
                                                (rep.is_connected ? "" : "disconnected; ") +
                                                std::to_string(rep.forbidden_cycles.size()) +
                                                " forbidden cycles)");
    auto kindval = config_kind_from_name(kind);
    bool found = false;
    for (const auto& m : detect_all(g))
        if (m.kind == *kindval && (case_tag.empty() || m.case_tag == case_tag)) found = true;
    if (!found)
        throw Error(ErrorKind::BadArgument,
                    "host " + name + " does not exhibit " + kind +
                        (case_tag.empty() ? "" : " case " + case_tag));
}

HostSpec finish(Disk& d, const std::string& name, const std::string& kind,
                const std::string& case_tag, int bound = 14) {
    PlaneGraph g = d.graph();
    check_host(g, kind, case_tag, name);
    return {name, kind, case_tag, bound, g};
}

// L1: C7 with one internal 2-vertex
HostSpec host_min_degree() {
    Disk d(7);
    d.add_path(1, 2, 1);
    return finish(d, "min_degree", "MinDegree", "");
}

} // namespace

std::vector<HostSpec> build_all_hosts() {
    std::vector<HostSpec> out;
    out.push_back(host_min_degree());
    return out;
}

std::vector<BadCycleHost> build_bad_cycle_hosts() {
    std::vector<BadCycleHost> out;
    {
        // (5,5,5)-claw on C9
        out.push_back({"Claw_555", "claw_555", make_claw_host()});
    }
    {
        // (3,7,7)-claw on C11: legs at d1,d2,d7
        Disk d(11);
        int c = d.add_path(1, 2, 1)[0];
        d.add_path(c, 7, 0, {4, 5});
        out.push_back({"Claw_377", "claw_377", d.graph()});
    }
    {
        // (5,5,7)-claw on C11: legs at d1,d4,d7
        Disk d(11);
        int c = d.add_path(1, 4, 1)[0];
        d.add_path(c, 7, 0, {5, 6});
        out.push_back({"Claw_557", "claw_557", d.graph()});
    }
    {
        // (3,7,3,7)-edge-claw on C10: a on d1,d2; b on d6,d7
        Disk d(10);
        int a = d.add_path(1, 2, 1)[0];
        int b = d.add_path(6, 7, 1, {})[0];
        d.add_path(a, b, 0, {3, 4, 5});
        out.push_back({"EdgeClaw_3737", "edge_claw_3737", d.graph()});
    }
    {
        // (5,5,5,5)-edge-claw on C10: a on d1,d4; b on d6,d9
        Disk d(10);
        int a = d.add_path(1, 4, 1)[0];
        int b = d.add_path(6, 9, 1, {7, 8})[0];
        d.add_path(a, b, 0, {5});
        out.push_back({"EdgeClaw_5555", "edge_claw_5555", d.graph()});
    }
    {
        // (3,7,3,8)-edge-claw on C11: a on d1,d2; b on d6,d7
        Disk d(11);
        int a = d.add_path(1, 2, 1)[0];
        int b = d.add_path(6, 7, 1, {})[0];
        d.add_path(a, b, 0, {3, 4, 5});
        out.push_back({"EdgeClaw_3738", "edge_claw_3738", d.graph()});
    }
    {
        // (5,5,5,5,5)-path-claw on C11: a on d1,d4; b on d6; c on d8,d11
        Disk d(11);
        int a = d.add_path(1, 4, 1)[0];
        int c = d.add_path(8, 11, 1, {9, 10})[0];
        int b = d.add_path(a, 6, 1, {5})[0];
        d.add_path(b, c, 0, {7});
        out.push_back({"PathClaw_55555", "path_claw_55555", d.graph()});
    }
    {
        // (5,5,5,5,5)-pentagon-claw on C10: pentagon legs at d1,d3,d5,d7,d9
        Disk d(10);
        auto first = d.add_path(1, 3, 2);
        int p1 = first[0], p2 = first[1];
        int p3 = d.add_path(p2, 5, 1, {4})[0];
        int p4 = d.add_path(p3, 7, 1, {6})[0];
        int p5 = d.add_path(p4, 9, 1, {8})[0];
        d.add_path(p5, p1, 0, {10});
        out.push_back({"PentagonClaw_55555", "pentagon_claw_55555", d.graph()});
    }
    {
        // the same (3,7,3,8) host with the 8-cell's (3,7)-chord present
        Disk d(11);
        int a = d.add_path(1, 2, 1)[0];
        int b = d.add_path(6, 7, 1, {})[0];
        d.add_path(a, b, 0, {3, 4, 5});
        d.add_path(7, 9, 0, {8});
        out.push_back({"EdgeClaw_3738", "edge_claw_3738_chorded", d.graph()});
    }
    return out;
}

} // namespace dlab
