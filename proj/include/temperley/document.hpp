#pragma once

// Graph document format (UTF-8 JSON):
//   {
//     "name": "K3",
//     "vertices": [{"id": "0", "x": 0, "y": 0}, ...],
//     "edges": [{"id": "e1", "u": "0", "v": "1"}, ...],
//     "root": "0",
//     "rotation": {"0": ["e1", "e3"], ...},        // optional, darts in CCW order
//     "outer_face": ["e3:2", "e1:0"]               // optional, dart specs edge:tail
//   }
// Coordinates are exact: integers, [num, den] pairs, or strings like "1/3"
// and "0.25".  Rotation is derived from coordinates by counterclockwise
// angular sort when absent; parallel edges require explicit rotation and
// outer_face.  `emit_document` writes the canonical form (sorted ids,
// explicit rotation and outer face), and reparsing it yields an equal graph.

#include <string>

#include "temperley/planar.hpp"

namespace temperley {

EmbeddedPlanarGraph parse_document(const std::string& text);
std::string emit_document(const EmbeddedPlanarGraph& g);

// FNV-1a over the canonical document bytes; stable across runs.
std::string document_digest(const EmbeddedPlanarGraph& g);

} // namespace temperley
