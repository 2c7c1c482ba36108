#include "dlab/acceptance.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "dlab/coloring.hpp"
#include "dlab/configurations.hpp"
#include "dlab/cycle_analysis.hpp"
#include "dlab/discharging.hpp"
#include "dlab/json_report.hpp"
#include "dlab/plg_io.hpp"

namespace dlab {

int thread_cap() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 2;
    if (const char* env = std::getenv("DISCHARGE_LAB_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return std::min<int>(v, static_cast<int>(hw) * 4);
    }
    return static_cast<int>(hw);
}

void parallel_for(int n, const std::function<void(int)>& fn) {
    int workers = std::min(n, thread_cap());
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next++; i < n; i = next++) fn(i);
        });
    for (auto& t : pool) t.join();
}

std::vector<CorpusEntry> load_manifest(const std::string& corpus_dir) {
    std::ifstream in(corpus_dir + "/manifest.json");
    if (!in) throw Error(ErrorKind::ParseError, corpus_dir + "/manifest.json: cannot open");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("manifest: ") + e.what());
    }
    std::vector<CorpusEntry> out;
    for (const auto& e : j["entries"]) {
        CorpusEntry c;
        c.path = e.at("path").get<std::string>();
        c.expect_class_g = e.at("class_g").get<bool>();
        if (e.contains("kinds"))
            for (const auto& k : e["kinds"]) c.expect_kinds.push_back(k.get<std::string>());
        if (e.contains("golden_ledger")) c.golden_ledger = e["golden_ledger"].get<std::string>();
        if (e.contains("host_kind")) c.host_kind = e["host_kind"].get<std::string>();
        if (e.contains("host_case")) c.host_case = e["host_case"].get<std::string>();
        if (e.contains("enumeration_bound")) c.enumeration_bound = e["enumeration_bound"].get<int>();
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Independent brute-force template search used to cross-check
// find_bad_partition: enumerates core candidates and leg subsets directly and
// matches the eight cell patterns on traced cells of H.
bool brute_bad_partition(const PlaneGraph& g, const std::vector<int>& cycle);

struct SubH {
    std::set<std::pair<int, int>> edges;
};

std::pair<int, int> e(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

// trace the faces of the subgraph H = cycle + extra, return all walk lengths
// except the one matching the cycle itself; empty if degenerate
std::vector<int> cells_lengths(const PlaneGraph& g, const std::vector<int>& cycle,
                               const std::set<std::pair<int, int>>& extra,
                               std::vector<std::vector<int>>* walks_out = nullptr) {
    std::set<std::pair<int, int>> hedges = extra;
    for (size_t i = 0; i < cycle.size(); ++i)
        hedges.insert(e(cycle[i], cycle[(i + 1) % cycle.size()]));
    std::map<int, std::vector<int>> rot;
    for (const auto& [a, b] : hedges) {
        (void)a;
        (void)b;
    }
    std::set<int> verts;
    for (const auto& ed : hedges) {
        verts.insert(ed.first);
        verts.insert(ed.second);
    }
    for (int v : verts)
        for (int u : g.rotation(v))
            if (hedges.count(e(u, v))) rot[v].push_back(u);

    std::set<std::pair<int, int>> used;
    std::vector<std::vector<int>> walks;
    for (const auto& [v0, r0] : rot)
        for (int u0 : r0) {
            if (used.count({v0, u0})) continue;
            std::vector<int> walk;
            int cu = v0, cv = u0;
            do {
                used.insert({cu, cv});
                walk.push_back(cu);
                const auto& rv = rot[cv];
                int j = 0;
                for (size_t i = 0; i < rv.size(); ++i)
                    if (rv[i] == cu) j = static_cast<int>(i);
                int w = rv[(j + rv.size() - 1) % rv.size()];
                cu = cv;
                cv = w;
            } while (!(cu == v0 && cv == u0));
            walks.push_back(std::move(walk));
        }
    std::set<int> cset(cycle.begin(), cycle.end());
    std::vector<int> lens;
    bool cycle_face = false;
    for (auto& w : walks) {
        std::set<int> ws(w.begin(), w.end());
        if (ws.size() != w.size()) return {};
        if (!cycle_face && w.size() == cycle.size() && ws == cset) {
            cycle_face = true;
            continue;
        }
        lens.push_back(static_cast<int>(w.size()));
        if (walks_out) walks_out->push_back(w);
    }
    if (!cycle_face) return {};
    std::sort(lens.begin(), lens.end());
    return lens;
}

bool brute_bad_partition(const PlaneGraph& g, const std::vector<int>& cycle) {
    CycleSides sides = sides_of_cycle(g, cycle);
    std::set<int> in(sides.interior.begin(), sides.interior.end());
    std::set<int> cs(cycle.begin(), cycle.end());
    int len = static_cast<int>(cycle.size());
    auto legs_of = [&](int v) {
        std::vector<int> out;
        for (int u : g.rotation(v))
            if (cs.count(u)) out.push_back(u);
        return out;
    };
    auto subsets = [](int n, int k) {
        std::vector<std::vector<int>> out;
        std::vector<int> idx(k);
        std::function<void(int, int)> rec = [&](int start, int depth) {
            if (depth == k) {
                out.push_back(idx);
                return;
            }
            for (int i = start; i < n; ++i) {
                idx[depth] = i;
                rec(i + 1, depth + 1);
            }
        };
        rec(0, 0);
        return out;
    };

    // claws
    for (int v : in) {
        auto legs = legs_of(v);
        for (const auto& pick : subsets(static_cast<int>(legs.size()), 3)) {
            std::set<std::pair<int, int>> extra;
            for (int i : pick) extra.insert(e(v, legs[i]));
            auto lens = cells_lengths(g, cycle, extra);
            if (lens == std::vector<int>{5, 5, 5} && len == 9) return true;
            if (lens == std::vector<int>{3, 7, 7} && len == 11) return true;
            if (lens == std::vector<int>{5, 5, 7} && len == 11) return true;
        }
    }
    // edge-claws
    for (int a : in)
        for (int b : in) {
            if (b <= a || !g.adjacent(a, b)) continue;
            auto la = legs_of(a), lb = legs_of(b);
            for (const auto& pa : subsets(static_cast<int>(la.size()), 2))
                for (const auto& pb : subsets(static_cast<int>(lb.size()), 2)) {
                    std::set<std::pair<int, int>> extra{e(a, b)};
                    for (int i : pa) extra.insert(e(a, la[i]));
                    for (int i : pb) extra.insert(e(b, lb[i]));
                    if (extra.size() != 5) continue;
                    std::vector<std::vector<int>> walks;
                    auto lens = cells_lengths(g, cycle, extra, &walks);
                    if (lens.size() != 4) continue;
                    std::multiset<int> mids, lobes;
                    for (const auto& w : walks) {
                        bool has_ab = false;
                        for (size_t i = 0; i < w.size(); ++i) {
                            int x = w[i], y = w[(i + 1) % w.size()];
                            if (e(x, y) == e(a, b)) has_ab = true;
                        }
                        (has_ab ? mids : lobes).insert(static_cast<int>(w.size()));
                    }
                    if (len == 10 && lobes == std::multiset<int>{3, 3} &&
                        mids == std::multiset<int>{7, 7})
                        return true;
                    if (len == 10 && lobes == std::multiset<int>{5, 5} &&
                        mids == std::multiset<int>{5, 5})
                        return true;
                    if (len == 11 && lobes == std::multiset<int>{3, 3} &&
                        mids == std::multiset<int>{7, 8})
                        return true;
                }
        }
    // path-claws
    for (int b : in) {
        std::vector<int> inn;
        for (int u : g.rotation(b))
            if (in.count(u)) inn.push_back(u);
        for (size_t x = 0; x < inn.size(); ++x)
            for (size_t y = x + 1; y < inn.size(); ++y) {
                int a = inn[x], c = inn[y];
                auto la = legs_of(a), lb = legs_of(b), lc = legs_of(c);
                for (const auto& pa : subsets(static_cast<int>(la.size()), 2))
                    for (int mb = 0; mb < static_cast<int>(lb.size()); ++mb)
                        for (const auto& pc : subsets(static_cast<int>(lc.size()), 2)) {
                            std::set<std::pair<int, int>> extra{e(a, b), e(b, c)};
                            for (int i : pa) extra.insert(e(a, la[i]));
                            extra.insert(e(b, lb[mb]));
                            for (int i : pc) extra.insert(e(c, lc[i]));
                            if (extra.size() != 7) continue;
                            auto lens = cells_lengths(g, cycle, extra);
                            if (len == 11 && lens == std::vector<int>{5, 5, 5, 5, 5}) return true;
                        }
            }
    }
    // pentagon-claws
    if (len == 10) {
        for (const auto& pent : find_short_cycles(g, 5)) {
            if (pent.size() != 5) continue;
            bool inside = true;
            for (int v : pent)
                if (!in.count(v)) inside = false;
            if (!inside) continue;
            std::vector<std::vector<int>> legs;
            for (int v : pent) legs.push_back(legs_of(v));
            bool empty = false;
            for (auto& l : legs)
                if (l.empty()) empty = true;
            if (empty) continue;
            std::vector<size_t> pick(5, 0);
            while (true) {
                std::set<std::pair<int, int>> extra;
                for (int i = 0; i < 5; ++i) {
                    extra.insert(e(pent[i], pent[(i + 1) % 5]));
                    extra.insert(e(pent[i], legs[i][pick[i]]));
                }
                if (extra.size() == 10) {
                    auto lens = cells_lengths(g, cycle, extra);
                    if (lens == std::vector<int>{5, 5, 5, 5, 5, 5}) return true;
                }
                size_t i = 0;
                while (i < 5 && ++pick[i] == legs[i].size()) pick[i++] = 0;
                if (i == 5) break;
            }
        }
    }
    return false;
}

struct Ctx {
    std::string dir;
    std::vector<CorpusEntry> entries;
    std::vector<PlaneGraph> graphs;
    std::vector<ClassGReport> reports;
};

void crit(AcceptanceReport& rep, int id, const std::string& name, bool pass,
          const std::string& detail) {
    rep.criteria.push_back({id, name, pass, detail});
}

} // namespace

AcceptanceReport run_acceptance(const std::string& corpus_dir) {
    AcceptanceReport rep;
    Ctx ctx;
    ctx.dir = corpus_dir;
    ctx.entries = load_manifest(corpus_dir);
    for (const auto& ent : ctx.entries) {
        ctx.graphs.push_back(load_plg(corpus_dir + "/" + ent.path));
        ctx.reports.push_back(validate_class_G(ctx.graphs.back()));
    }
    int n = static_cast<int>(ctx.entries.size());

    // expected verdicts must hold before anything else is meaningful
    {
        int bad = 0;
        std::string detail;
        for (int i = 0; i < n; ++i)
            if (ctx.reports[i].verdict != ctx.entries[i].expect_class_g) {
                ++bad;
                if (detail.empty()) detail = "first mismatch: " + ctx.entries[i].path;
            }
        crit(rep, 0, "manifest verdicts", bad == 0,
             bad ? detail : std::to_string(n) + " entries validated");
    }

    // 1: oracle equivalence on graphs with <= 12 vertices
    {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (ctx.graphs[i].vertex_count() <= 12) idx.push_back(i);
        std::atomic<int> failures{0};
        std::atomic<long> checked{0};
        parallel_for(static_cast<int>(idx.size()), [&](int k) {
            const PlaneGraph& g = ctx.graphs[idx[k]];
            auto all = enumerate_all(g, 12);
            auto sol = solve(g);
            bool ok = sol.has_value() == !all.empty();
            if (sol && !coloring_valid(g, *sol)) ok = false;
            for (const auto& c : all)
                if (!coloring_valid(g, c)) ok = false;
            if (!ok) ++failures;
            ++checked;
        });
        crit(rep, 1, "oracle equivalence (solve vs enumerate_all)",
             failures == 0 && checked >= 200,
             "graphs checked: " + std::to_string(checked.load()) +
                 ", failures: " + std::to_string(failures.load()));
    }

    // 2: every class-G corpus graph admits a coloring
    {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (ctx.reports[i].verdict && ctx.graphs[i].vertex_count() <= 20) idx.push_back(i);
        std::atomic<int> failures{0};
        parallel_for(static_cast<int>(idx.size()), [&](int k) {
            auto sol = solve(ctx.graphs[idx[k]]);
            if (!sol || !coloring_valid(ctx.graphs[idx[k]], *sol)) ++failures;
        });
        crit(rep, 2, "Theorem-1 instances (class-G graphs colorable)",
             failures == 0 && static_cast<int>(idx.size()) >= 100,
             "class-G graphs: " + std::to_string(idx.size()) +
                 ", failures: " + std::to_string(failures.load()));
    }

    // 3: super-extension from every valid precoloring of a good outer cycle
    {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i) {
            if (!ctx.reports[i].verdict) continue;
            const PlaneGraph& g = ctx.graphs[i];
            const auto& walk = g.face(g.outer_face_id()).walk;
            std::set<int> dv(walk.begin(), walk.end());
            if (dv.size() != walk.size() || walk.size() > 9) continue;
            if (!classify_cycle(g, walk).good) continue;
            idx.push_back(i);
        }
        std::atomic<int> failures{0};
        std::atomic<long> precolorings{0};
        parallel_for(static_cast<int>(idx.size()), [&](int k) {
            const PlaneGraph& g = ctx.graphs[idx[k]];
            const auto& walk = g.face(g.outer_face_id()).walk;
            for (const auto& pre : enumerate_induced_colorings(g, walk)) {
                Precoloring p;
                p.assignment = pre;
                ++precolorings;
                auto wit = super_extend(g, p);
                if (!wit || !coloring_valid(g, wit->coloring)) {
                    ++failures;
                    return;
                }
            }
        });
        crit(rep, 3, "Theorem-2 instances (super-extension over good boundaries)",
             failures == 0 && !idx.empty(),
             "graphs: " + std::to_string(idx.size()) + ", precolorings: " +
                 std::to_string(precolorings.load()) + ", failures: " +
                 std::to_string(failures.load()));
    }

    // 4: classifier vs independent brute force on graphs <= 14 vertices
    {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (ctx.graphs[i].vertex_count() <= 14) idx.push_back(i);
        std::atomic<int> failures{0};
        std::atomic<long> cycles_checked{0};
        parallel_for(static_cast<int>(idx.size()), [&](int k) {
            const PlaneGraph& g = ctx.graphs[idx[k]];
            for (const auto& cyc : find_short_cycles(g, 11)) {
                ++cycles_checked;
                auto mine = find_bad_partition(g, cyc);
                bool brute = brute_bad_partition(g, cyc);
                if (mine.has_value() != brute) ++failures;
                if (mine && (cyc.size() < 9 || cyc.size() > 11)) ++failures;
            }
        });
        crit(rep, 4, "bad-partition classifier vs brute force",
             failures == 0 && cycles_checked > 0,
             "cycles: " + std::to_string(cycles_checked.load()) + ", failures: " +
                 std::to_string(failures.load()));
    }

    // 5: reducibility certification over shipped hosts
    {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (!ctx.entries[i].host_kind.empty()) idx.push_back(i);
        std::atomic<int> failures{0};
        std::mutex mu;
        std::map<std::string, std::set<std::string>> branch_cover;
        std::set<std::string> kinds_seen;
        std::vector<std::string> notes;
        parallel_for(static_cast<int>(idx.size()), [&](int k) {
            const CorpusEntry& ent = ctx.entries[idx[k]];
            const PlaneGraph& g = ctx.graphs[idx[k]];
            auto kind = config_kind_from_name(ent.host_kind);
            if (!kind) {
                ++failures;
                return;
            }
            ConfigMatch pick;
            bool found = false;
            for (const auto& m : detect_all(g))
                if (m.kind == *kind && (ent.host_case.empty() || m.case_tag == ent.host_case)) {
                    pick = m;
                    found = true;
                    break;
                }
            if (!found) {
                ++failures;
                std::lock_guard<std::mutex> lk(mu);
                notes.push_back(ent.path + ": expected configuration not detected");
                return;
            }
            auto r = verify_reducibility_host(g, pick, ent.path, ent.enumeration_bound);
            std::lock_guard<std::mutex> lk(mu);
            kinds_seen.insert(ent.host_kind);
            for (const auto& b : r.branch_tags_hit)
                branch_cover[ent.host_kind + (ent.host_case.empty() ? "" : ":" + ent.host_case)]
                    .insert(b);
            if (!r.ok()) {
                ++failures;
                notes.push_back(ent.path + ": " +
                                (r.stuck.empty() ? "replay mismatch" : r.stuck.front()));
            }
        });
        std::string detail = "hosts: " + std::to_string(idx.size()) + ", kinds: " +
                             std::to_string(kinds_seen.size()) + ", failures: " +
                             std::to_string(failures.load());
        for (const auto& s : notes) detail += "; " + s;
        crit(rep, 5, "reducibility certification (extend_back replays)",
             failures == 0 && !idx.empty(), detail);
    }

    // 6: exact conservation and the derived total identity
    {
        std::atomic<int> failures{0};
        parallel_for(n, [&](int i) {
            const PlaneGraph& g = ctx.graphs[i];
            auto led = apply_rules(g, initial_charges(g));
            Rational ti = led.total_initial(), tf = led.total_final();
            Rational expect(10 - g.face(g.outer_face_id()).degree());
            if (!(ti == tf) || !(ti == expect)) ++failures;
        });
        crit(rep, 6, "discharging conservation and 10 - d(f0) identity", failures == 0,
             "graphs: " + std::to_string(n) + ", failures: " + std::to_string(failures.load()));
    }

    // 7: counting inequalities on internal vertices of class-G graphs
    {
        std::atomic<int> failures{0};
        parallel_for(n, [&](int i) {
            if (!ctx.reports[i].verdict) return;
            const PlaneGraph& g = ctx.graphs[i];
            auto led = apply_rules(g, initial_charges(g));
            auto a = audit(g, led);
            if (!a.eq_ok()) ++failures;
        });
        crit(rep, 7, "Eq.(1)/(2) counters", failures == 0,
             "failures: " + std::to_string(failures.load()));
    }

    // 8: rule-order independence, ten seeded shuffles
    {
        std::atomic<int> failures{0};
        parallel_for(n, [&](int i) {
            const PlaneGraph& g = ctx.graphs[i];
            std::string base = dump_json(ledger_json(apply_rules(g, initial_charges(g))));
            std::mt19937 rng(20260810u + static_cast<unsigned>(i));
            std::vector<int> order{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
            for (int t = 0; t < 10; ++t) {
                std::shuffle(order.begin(), order.end(), rng);
                auto led = apply_rules_in_order(g, initial_charges(g), order, {});
                if (dump_json(ledger_json(led)) != base) {
                    ++failures;
                    break;
                }
            }
        });
        crit(rep, 8, "rule-order independence", failures == 0,
             "failures: " + std::to_string(failures.load()));
    }

    // 9: golden ledgers byte-for-byte
    {
        int with_golden = 0, failures = 0;
        std::string detail;
        for (int i = 0; i < n; ++i) {
            if (ctx.entries[i].golden_ledger.empty()) continue;
            ++with_golden;
            auto led = apply_rules(ctx.graphs[i], initial_charges(ctx.graphs[i]));
            std::string got = dump_json(ledger_json(led));
            std::string want = read_file(corpus_dir + "/" + ctx.entries[i].golden_ledger);
            if (got != want) {
                ++failures;
                if (detail.empty()) detail = "first mismatch: " + ctx.entries[i].path;
            }
        }
        crit(rep, 9, "golden ledgers", failures == 0 && with_golden >= 4,
             failures ? detail : "goldens compared: " + std::to_string(with_golden));
    }

    return rep;
}

} // namespace dlab
