#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dlab/coloring.hpp"
#include "dlab/configurations.hpp"
#include "dlab/plane_graph.hpp"

namespace dlab {

// Deterministic DOT text: nodes ascending, edges sorted, color classes as
// fills, highlighted matches as clusters. Human inspection only.
std::string emit_dot(const PlaneGraph& g, const std::optional<Coloring>& coloring = std::nullopt,
                     const std::vector<ConfigMatch>& highlights = {});

} // namespace dlab
