#pragma once

#include <optional>

#include "orientflip/flip_core.hpp"
#include "orientflip/multigraph.hpp"

namespace orientflip {

// A 2-edge-cut whose two edges both disagree between the two orientations.
// Such a pair can never be flipped while staying strong, so it separates the
// orientations in the flip graph.
struct Obstruction {
  EdgeId e1 = -1;
  EdgeId e2 = -1;
  VertexSet side;  // one side of the cut; excludes vertex 0
};

std::optional<Obstruction> find_obstruction(const Orientation& d1, const Orientation& d2);

// Shortest flip sequence between two strong orientations (length equals the
// number of disagreeing edges), every intermediate strongly connected.
// Lambdas are certified only when `certify` is set.
FlipSequence reconfigure_strong(const Orientation& d1, const Orientation& d2, bool certify = true);

}  // namespace orientflip
