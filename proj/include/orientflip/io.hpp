#pragma once

#include <iosfwd>
#include <string>

#include "orientflip/multigraph.hpp"

namespace orientflip {

// Text graph format: first data line "n m", then m lines "u v" (EdgeId = data
// line index - 1). Lines starting with '#' are comments.
UndirectedMultigraph read_graph(std::istream& in);
void write_graph(std::ostream& out, const UndirectedMultigraph& g);

// Orientation format: m characters '0'/'1' ('0' = forward), whitespace
// ignored, '#' comment lines skipped.
Orientation read_orientation(std::istream& in, GraphPtr g);
void write_orientation(std::ostream& out, const Orientation& d);

std::string orientation_bits(const Orientation& d);

UndirectedMultigraph read_graph_file(const std::string& path);
Orientation read_orientation_file(const std::string& path, GraphPtr g);

}  // namespace orientflip
