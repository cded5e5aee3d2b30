#pragma once

// Spanning trees, q-connected orientations, equivalence classes under
// directed cycle and cut reversals, and the Bernardi map to the Jacobian.

#include <cstdint>
#include <vector>

#include "temperley/divisor.hpp"
#include "temperley/planar.hpp"

namespace temperley {

struct SpanningTree {
    std::vector<int> edges; // sorted edge indices, |V|-1 of them
    uint32_t mask = 0;

    bool contains(int e) const { return (mask >> e) & 1u; }
    bool operator==(const SpanningTree& rhs) const { return mask == rhs.mask; }
};

// Total orientation of G; forward[e] means the stored direction u->v.
struct Orientation {
    std::vector<char> forward;

    int head(const PlanarStructure& s, int e) const {
        return forward[e] ? s.edge_v(e) : s.edge_u(e);
    }
    int tail(const PlanarStructure& s, int e) const {
        return forward[e] ? s.edge_u(e) : s.edge_v(e);
    }
    // The dart that traverses e in the chosen direction.
    int dart(int e) const { return forward[e] ? dart_forward(e) : dart_backward(e); }

    uint32_t mask() const;
    static Orientation from_mask(int edge_count, uint32_t mask);
    bool operator==(const Orientation& rhs) const = default;
};

// All spanning trees in lexicographic edge-index order; the count matches
// spanning_tree_count.
std::vector<SpanningTree> enumerate_trees(const EmbeddedPlanarGraph& g);

// Tree edges away from q, each non-tree edge closing a counterclockwise
// fundamental cycle (traversed along the non-tree edge first, then back
// through the tree path).
Orientation q_connected_orientation(const EmbeddedPlanarGraph& g, const SpanningTree& t);

// Every vertex reachable from q along directed edges.
bool is_q_connected(const EmbeddedPlanarGraph& g, const Orientation& o);

// One equivalence class of orientations under directed cycle/cut reversals.
// The q-connected members of a class form a single orbit under directed
// cycle reversals alone; the canonical class representative is the unique
// member arising from a spanning tree.
struct OrientationClass {
    std::vector<uint32_t> members;             // ascending orientation masks
    std::vector<uint32_t> q_connected_members; // ascending, nonempty
};

inline constexpr int kOrientationExhaustionBound = 14;

// Partition of all 2^|E| orientations into reversal classes; TooLarge above
// the exhaustion bound.
std::vector<OrientationClass> orientation_classes(const EmbeddedPlanarGraph& g,
                                                  int max_edges = kOrientationExhaustionBound);

// Generator moves as (edge mask, forward-pattern) pairs: an orientation o
// contains the directed cycle/cut iff (o & mask) equals the pattern or its
// complement within the mask; the reversal is o ^ mask.
std::vector<std::pair<uint32_t, uint32_t>> simple_cycle_patterns(const EmbeddedPlanarGraph& g);
std::vector<std::pair<uint32_t, uint32_t>> bond_patterns(const EmbeddedPlanarGraph& g);

// indeg(v) - 1 on every vertex; degree is always genus - 1.
Divisor bernardi_divisor(const EmbeddedPlanarGraph& g, const Orientation& o);

// Class of bernardi_divisor(o) - d0; BadReferenceDegree unless deg(d0) = genus - 1.
JacobianElement bernardi_class(const JacobianContext& jac, const Orientation& o,
                               const Divisor& d0);

} // namespace temperley
