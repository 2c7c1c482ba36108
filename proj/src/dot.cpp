#include "dlab/dot.hpp"

#include <sstream>

namespace dlab {

std::string emit_dot(const PlaneGraph& g, const std::optional<Coloring>& coloring,
                     const std::vector<ConfigMatch>& highlights) {
    static const char* fills[4] = {"white", "#fb9a99", "#a6cee3", "#b2df8a"};
    std::ostringstream out;
    out << "graph G {\n";
    out << "  node [style=filled, shape=circle];\n";
    for (size_t i = 0; i < highlights.size(); ++i) {
        const auto& m = highlights[i];
        out << "  subgraph cluster_" << i << " {\n";
        out << "    label=\"" << config_kind_name(m.kind);
        if (!m.case_tag.empty()) out << " " << m.case_tag;
        out << "\";\n    ";
        for (const auto& [role, v] : m.binding) out << v << "; ";
        out << "\n  }\n";
    }
    for (int v = 1; v <= g.vertex_count(); ++v) {
        int c = coloring ? coloring->color[v] : 0;
        out << "  " << v << " [fillcolor=\"" << fills[c >= 0 && c <= 3 ? c : 0] << "\"";
        if (g.is_external(v)) out << ", penwidth=2";
        out << "];\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace dlab
