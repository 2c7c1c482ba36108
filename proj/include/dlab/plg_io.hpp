#pragma once

#include <iosfwd>
#include <string>

#include "dlab/plane_graph.hpp"

namespace dlab {

// PLG text format (line oriented, ASCII, LF newlines):
//   plg 1
//   n <V>
//   outer <k> <v1> ... <vk>
//   rot <v>: <u1> <u2> ... <ud>     (one line per vertex, ascending v)
// Vertex ids are 1-based. Blank lines and '#' comment lines are ignored.

PlaneGraph parse_plg(const std::string& text, const std::string& filename = "<plg>");
PlaneGraph load_plg(const std::string& path);

std::string write_plg(const PlaneGraph& g);
void save_plg(const PlaneGraph& g, const std::string& path);

} // namespace dlab
