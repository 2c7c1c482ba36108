#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dlab/acceptance.hpp"
#include "dlab/coloring.hpp"
#include "dlab/configurations.hpp"
#include "dlab/cycle_analysis.hpp"
#include "dlab/discharging.hpp"
#include "dlab/dot.hpp"
#include "dlab/json_report.hpp"
#include "dlab/plg_io.hpp"

namespace {

using namespace dlab;

std::vector<int> parse_cycle_arg(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

Coloring load_coloring(const PlaneGraph& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open");
    Coloring c = Coloring::blank(g.vertex_count());
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tag;
        int v, k;
        if (!(ls >> tag >> v >> k) || tag != "col")
            throw Error(ErrorKind::ParseError, path + ":" + std::to_string(no) + ": expected 'col <v> <c>'");
        if (v < 1 || v > g.vertex_count())
            throw Error(ErrorKind::ParseError, path + ":" + std::to_string(no) + ": vertex out of range");
        c.color[v] = k;
    }
    return c;
}

std::string coloring_text(const Coloring& c) {
    std::ostringstream out;
    for (size_t v = 1; v < c.color.size(); ++v)
        out << "col " << v << " " << c.color[v] << "\n";
    return out.str();
}

Precoloring load_precoloring(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open");
    Precoloring p;
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tag;
        int v, k;
        if (!(ls >> tag >> v >> k) || tag != "col")
            throw Error(ErrorKind::ParseError, path + ":" + std::to_string(no) + ": expected 'col <v> <c>'");
        p.assignment[v] = k;
    }
    return p;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"plane-graph toolkit for (1,0,0)-coloring and discharging analysis"};
    app.require_subcommand(1);

    std::string file, cycle_arg, precoloring_file, coloring_file, corpus_dir, match_kind;
    std::string out_file;
    int match_id = 0, max_len = 11, max_n = 14;
    bool r12_split = false, r3_ten_thirds = false;

    auto add_file = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "input .plg file")->required();
    };

    auto* c_validate = app.add_subcommand("validate", "class-G membership report");
    add_file(c_validate);
    auto* c_faces = app.add_subcommand("faces", "derived faces of the embedding");
    add_file(c_faces);
    auto* c_cycles = app.add_subcommand("cycles", "enumerate short cycles");
    add_file(c_cycles);
    c_cycles->add_option("--max-len", max_len, "maximum cycle length (default 11)");
    auto* c_classify = app.add_subcommand("classify", "good/bad classification of a cycle");
    add_file(c_classify);
    c_classify->add_option("--cycle", cycle_arg, "comma-separated vertex list")->required();
    auto* c_remark1 = app.add_subcommand("remark1", "audit a bad cycle against the five interior facts");
    add_file(c_remark1);
    c_remark1->add_option("--cycle", cycle_arg, "comma-separated vertex list")->required();
    auto* c_configs = app.add_subcommand("configs", "detect reducible configurations");
    add_file(c_configs);
    auto* c_reduce = app.add_subcommand("reduce", "apply a configuration's surgery");
    add_file(c_reduce);
    c_reduce->add_option("--match", match_id, "index into the configs list")->required();
    auto* c_certify = app.add_subcommand("certify", "replay extension recipes over the host corpus");
    c_certify->add_option("--kind", match_kind, "configuration kind")->required();
    c_certify->add_option("--corpus", corpus_dir, "corpus directory")->required();
    auto* c_color = app.add_subcommand("color", "find a (1,0,0)-coloring");
    add_file(c_color);
    c_color->add_option("--out", out_file, "write the coloring here");
    auto* c_extend = app.add_subcommand("extend", "super-extend a boundary precoloring");
    add_file(c_extend);
    c_extend->add_option("--precoloring", precoloring_file, "col-file on V(D)")->required();
    c_extend->add_option("--out", out_file, "write the extension here");
    auto* c_oracle = app.add_subcommand("oracle", "exhaustive coloring count");
    add_file(c_oracle);
    c_oracle->add_option("--max-n", max_n, "vertex bound (default 14)");
    auto* c_discharge = app.add_subcommand("discharge", "emit the charge ledger");
    add_file(c_discharge);
    c_discharge->add_flag("--r12-split", r12_split, "R6-style split for R12 pendent charges");
    c_discharge->add_flag("--r3-ten-thirds", r3_ten_thirds, "extra strong-(3,5,5) clause at 10/3");
    auto* c_audit = app.add_subcommand("audit", "conservation and counting audit");
    add_file(c_audit);
    c_audit->add_flag("--r12-split", r12_split, "R6-style split for R12 pendent charges");
    c_audit->add_flag("--r3-ten-thirds", r3_ten_thirds, "extra strong-(3,5,5) clause at 10/3");
    auto* c_corpus = app.add_subcommand("corpus-run", "run the acceptance criteria over a corpus");
    c_corpus->add_option("dir", corpus_dir, "corpus directory")->required();
    auto* c_dot = app.add_subcommand("dot", "emit a DOT drawing");
    add_file(c_dot);
    c_dot->add_option("--coloring", coloring_file, "col-file to shade classes");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_validate) {
            PlaneGraph g = load_plg(file);
            auto repv = validate_class_G(g);
            std::cout << dump_json(class_g_json(repv));
            return repv.verdict ? 0 : 2;
        }
        if (*c_faces) {
            std::cout << dump_json(faces_json(load_plg(file)));
            return 0;
        }
        if (*c_cycles) {
            PlaneGraph g = load_plg(file);
            Json arr = Json::array();
            for (const auto& rec : enumerate_cycles(g, max_len))
                arr.push_back(cycle_json(g, rec, rec.length <= 11));
            std::cout << dump_json(arr);
            return 0;
        }
        if (*c_classify) {
            PlaneGraph g = load_plg(file);
            auto rec = make_cycle_record(g, parse_cycle_arg(cycle_arg));
            std::cout << dump_json(cycle_json(g, rec, true));
            return 0;
        }
        if (*c_remark1) {
            PlaneGraph g = load_plg(file);
            auto cyc = parse_cycle_arg(cycle_arg);
            auto cls = classify_cycle(g, cyc);
            if (cls.good) {
                Json j;
                j["verdict"] = "good";
                j["note"] = "remark applies to bad cycles only";
                std::cout << dump_json(j);
                return 2;
            }
            std::cout << dump_json(remark1_json(check_remark1(g, cyc, *cls.partition)));
            return 0;
        }
        if (*c_configs) {
            PlaneGraph g = load_plg(file);
            Json arr = Json::array();
            int id = 0;
            for (const auto& m : detect_all(g)) {
                Json mj = match_json(m);
                mj["id"] = id++;
                arr.push_back(mj);
            }
            std::cout << dump_json(arr);
            return 0;
        }
        if (*c_reduce) {
            PlaneGraph g = load_plg(file);
            auto matches = detect_all(g);
            if (match_id < 0 || match_id >= static_cast<int>(matches.size()))
                throw Error(ErrorKind::BadArgument, "match index out of range");
            Surgery s = apply_surgery(g, matches[match_id]);
            std::cout << dump_json(surgery_json(g, s, validate_surgery(g, s)));
            return 0;
        }
        if (*c_certify) {
            auto kind = config_kind_from_name(match_kind);
            if (!kind) throw Error(ErrorKind::BadArgument, "unknown kind " + match_kind);
            auto entries = load_manifest(corpus_dir);
            Json arr = Json::array();
            bool all_ok = true, any = false;
            for (const auto& ent : entries) {
                if (ent.host_kind != match_kind) continue;
                any = true;
                PlaneGraph g = load_plg(corpus_dir + "/" + ent.path);
                for (const auto& m : detect_all(g)) {
                    if (m.kind != *kind) continue;
                    if (!ent.host_case.empty() && m.case_tag != ent.host_case) continue;
                    auto r = verify_reducibility_host(g, m, ent.path, ent.enumeration_bound);
                    arr.push_back(reducibility_json(r));
                    all_ok = all_ok && r.ok();
                    break;
                }
            }
            std::cout << dump_json(arr);
            return any && all_ok ? 0 : 2;
        }
        if (*c_color) {
            PlaneGraph g = load_plg(file);
            auto sol = solve(g);
            if (!sol) {
                std::cout << "# no (1,0,0)-coloring exists\n";
                return 2;
            }
            std::string text = coloring_text(*sol);
            if (!out_file.empty()) std::ofstream(out_file) << text;
            std::cout << text;
            return 0;
        }
        if (*c_extend) {
            PlaneGraph g = load_plg(file);
            auto wit = super_extend(g, load_precoloring(precoloring_file));
            if (!wit) {
                std::cout << "# precoloring does not super-extend\n";
                return 2;
            }
            std::string text = coloring_text(wit->coloring);
            if (!out_file.empty()) std::ofstream(out_file) << text;
            std::cout << text;
            return 0;
        }
        if (*c_oracle) {
            PlaneGraph g = load_plg(file);
            auto all = enumerate_all(g, max_n);
            Json j;
            j["count"] = all.size();
            std::cout << dump_json(j);
            return all.empty() ? 2 : 0;
        }
        if (*c_discharge) {
            PlaneGraph g = load_plg(file);
            DischargeOptions opts{r12_split, r3_ten_thirds};
            auto led = apply_rules(g, initial_charges(g), opts);
            std::cout << dump_json(ledger_json(led));
            return 0;
        }
        if (*c_audit) {
            PlaneGraph g = load_plg(file);
            DischargeOptions opts{r12_split, r3_ten_thirds};
            auto led = apply_rules(g, initial_charges(g), opts);
            std::cout << dump_json(audit_json(audit(g, led, opts)));
            return 0;
        }
        if (*c_corpus) {
            auto rep = run_acceptance(corpus_dir);
            for (const auto& c : rep.criteria)
                std::cout << (c.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name
                          << "): " << c.detail << "\n";
            return rep.all_pass() ? 0 : 2;
        }
        if (*c_dot) {
            PlaneGraph g = load_plg(file);
            std::optional<Coloring> col;
            if (!coloring_file.empty()) col = load_coloring(g, coloring_file);
            std::cout << emit_dot(g, col);
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
