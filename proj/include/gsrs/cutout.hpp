#pragma once

// Parameter cells on which prescribed floor relations hold: the cutout
// polygon of a cycle and the witness polyhedron of a witness graph.

#include "gsrs/dynamics.hpp"
#include "gsrs/geometry.hpp"

#include <vector>

namespace gsrs {

/// Constraints for floor(s * g) = k in the unknown s = (x, y). Returns false
/// when the system is infeasible for every s (only possible for g = 0).
bool floor_equation(const GaussianInt& g, const GaussianInt& k, std::vector<HalfPlane>& out);

/// {r : floor(r a_i) = -a_{i+1} for all i}, clipped to the frame.
Cell cycle_polygon(const Cycle& pi, const Cell& frame = default_frame());

/// {s : every recorded variant image of the graph is reproduced by s}.
Cell witness_polyhedron(const WitnessGraph& g, const Cell& frame = default_frame());

}  // namespace gsrs
