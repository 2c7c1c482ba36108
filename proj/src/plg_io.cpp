#include "dlab/plg_io.hpp"

#include <fstream>
#include <sstream>

namespace dlab {

namespace {

struct Line {
    int number;
    std::string text;
};

[[noreturn]] void fail(const std::string& file, int line, const std::string& msg) {
    throw Error(ErrorKind::ParseError, file + ":" + std::to_string(line) + ": " + msg);
}

} // namespace

PlaneGraph parse_plg(const std::string& text, const std::string& filename) {
    std::vector<Line> lines;
    {
        std::istringstream in(text);
        std::string raw;
        int no = 0;
        while (std::getline(in, raw)) {
            ++no;
            size_t a = raw.find_first_not_of(" \t\r");
            if (a == std::string::npos) continue;
            if (raw[a] == '#') continue;
            lines.push_back({no, raw});
        }
    }
    if (lines.empty()) fail(filename, 1, "empty file");

    size_t idx = 0;
    auto next_line = [&]() -> const Line& {
        if (idx >= lines.size()) fail(filename, lines.back().number, "unexpected end of file");
        return lines[idx++];
    };

    {
        const Line& l = next_line();
        std::istringstream s(l.text);
        std::string tag;
        int ver = 0;
        if (!(s >> tag >> ver) || tag != "plg" || ver != 1)
            fail(filename, l.number, "expected header 'plg 1'");
    }

    int n = 0;
    {
        const Line& l = next_line();
        std::istringstream s(l.text);
        std::string tag;
        if (!(s >> tag >> n) || tag != "n" || n <= 0)
            fail(filename, l.number, "expected 'n <V>' with positive V");
    }

    std::vector<int> outer;
    {
        const Line& l = next_line();
        std::istringstream s(l.text);
        std::string tag;
        int k = 0;
        if (!(s >> tag >> k) || tag != "outer" || k <= 0)
            fail(filename, l.number, "expected 'outer <k> <v1> ... <vk>'");
        outer.resize(k);
        for (int i = 0; i < k; ++i)
            if (!(s >> outer[i])) fail(filename, l.number, "outer walk shorter than declared");
    }

    std::vector<std::vector<int>> rot(n);
    std::vector<char> seen(n + 1, 0);
    for (int i = 0; i < n; ++i) {
        const Line& l = next_line();
        std::istringstream s(l.text);
        std::string tag;
        if (!(s >> tag) || tag != "rot") fail(filename, l.number, "expected 'rot <v>: ...'");
        std::string vtok;
        if (!(s >> vtok) || vtok.empty() || vtok.back() != ':')
            fail(filename, l.number, "expected '<v>:' after 'rot'");
        int v = 0;
        try {
            v = std::stoi(vtok.substr(0, vtok.size() - 1));
        } catch (...) {
            fail(filename, l.number, "bad vertex id '" + vtok + "'");
        }
        if (v < 1 || v > n) fail(filename, l.number, "vertex id out of range");
        if (seen[v]) fail(filename, l.number, "duplicate rotation for vertex " + std::to_string(v));
        seen[v] = 1;
        int u;
        while (s >> u) rot[v - 1].push_back(u);
    }
    if (idx != lines.size()) fail(filename, lines[idx].number, "trailing content");

    try {
        return PlaneGraph::build_from_rotation(n, std::move(rot), std::move(outer));
    } catch (const Error& e) {
        throw Error(e.kind(), filename + ": " + e.what());
    }
}

PlaneGraph load_plg(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_plg(ss.str(), path);
}

std::string write_plg(const PlaneGraph& g) {
    std::ostringstream out;
    out << "plg 1\n";
    out << "n " << g.vertex_count() << "\n";
    const auto& ow = g.outer_walk();
    out << "outer " << ow.size();
    for (int v : ow) out << " " << v;
    out << "\n";
    for (int v = 1; v <= g.vertex_count(); ++v) {
        out << "rot " << v << ":";
        for (int u : g.rotation(v)) out << " " << u;
        out << "\n";
    }
    return out.str();
}

void save_plg(const PlaneGraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::ParseError, path + ": cannot open for writing");
    out << write_plg(g);
}

} // namespace dlab
