#pragma once

// DOT and SVG emitters for G, the overlay G with its dual, and G+, with
// optional tree / matching / orientation decoration.  White vertices draw as
// open circles, black vertices filled, matching the usual dimer convention.

#include <optional>
#include <string>

#include "temperley/gplus.hpp"

namespace temperley {

struct RenderSelection {
    std::optional<int> tree;    // index into enumerate_trees
    std::optional<int> matching; // index into enumerate_matchings
    bool show_orientation = false; // arrows of the selected tree's orientation
};

std::string dot_graph(const EmbeddedPlanarGraph& g, const RenderSelection& sel = {});
std::string dot_overlay(const GPlusGraph& h, const RenderSelection& sel = {});
std::string dot_gplus(const GPlusGraph& h, const RenderSelection& sel = {});

// SVG needs straight-line coordinates on G (BadDocument otherwise).
std::string svg_graph(const EmbeddedPlanarGraph& g, const RenderSelection& sel = {});
std::string svg_overlay(const GPlusGraph& h, const RenderSelection& sel = {});
std::string svg_gplus(const GPlusGraph& h, const RenderSelection& sel = {});

} // namespace temperley
