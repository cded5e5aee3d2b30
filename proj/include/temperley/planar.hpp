#pragma once

// Embedded planar graphs as rotation systems.  The rotation system is the
// source of truth; straight-line coordinates are optional and only used to
// derive rotations, cross-check orientation tests and render figures.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "temperley/errors.hpp"

namespace temperley {

using Rat = mpq_class;

// A dart is a directed copy of an edge: dart 2e is edge e traversed u->v
// (stored endpoint order), dart 2e+1 is the reverse.
inline int dart_forward(int edge) { return 2 * edge; }
inline int dart_backward(int edge) { return 2 * edge + 1; }
inline int dart_edge(int dart) { return dart / 2; }
inline bool dart_is_forward(int dart) { return (dart & 1) == 0; }
inline int dart_reverse(int dart) { return dart ^ 1; }

// Vertex-count + edge list + rotation system, with faces traced eagerly.
// Faces are orbits of the successor rule "previous dart in the rotation at
// the head of the reversed dart"; with counterclockwise rotations this makes
// every face lie to the LEFT of each of its boundary darts, bounded faces
// traced counterclockwise and the outer face clockwise.
class PlanarStructure {
  public:
    PlanarStructure() = default;

    // Validates dart coverage and the Euler relation (NonPlanarRotation).
    static PlanarStructure build(int vertex_count, std::vector<std::pair<int, int>> edges,
                                 std::vector<std::vector<int>> rotation);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return int(edges_.size()); }
    int dart_count() const { return 2 * edge_count(); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int edge_u(int e) const { return edges_[e].first; }
    int edge_v(int e) const { return edges_[e].second; }

    int dart_tail(int dart) const {
        return dart_is_forward(dart) ? edges_[dart_edge(dart)].first : edges_[dart_edge(dart)].second;
    }
    int dart_head(int dart) const { return dart_tail(dart_reverse(dart)); }

    const std::vector<std::vector<int>>& rotation() const { return rotation_; }
    int degree(int v) const { return int(rotation_[v].size()); }

    // Face data; faces are canonically ordered by their smallest dart.
    int face_count() const { return int(faces_.size()); }
    const std::vector<std::vector<int>>& face_boundaries() const { return faces_; }
    const std::vector<int>& face_boundary(int f) const { return faces_[f]; }
    int face_left(int dart) const { return face_of_dart_[dart]; }
    int face_right(int dart) const { return face_of_dart_[dart_reverse(dart)]; }

    int outer_face() const { return outer_face_; }
    void set_outer_face(int f);

    bool has_parallel_edges() const;
    bool is_connected() const;
    std::vector<int> incident_darts(int v) const { return rotation_[v]; }

    // Degree of a face = boundary length.
    int face_degree(int f) const { return int(faces_[f].size()); }

  private:
    int vertex_count_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> rotation_;
    std::vector<std::vector<int>> faces_;
    std::vector<int> face_of_dart_;
    int outer_face_ = -1;
};

struct Face {
    int id = -1;
    std::vector<int> boundary;
};

struct DualGraph {
    int face_count = 0;
    // dual_edges[e] = (face left of dart 2e, face right of dart 2e); one dual
    // edge per primal edge, never a self-loop on bridgeless input.
    std::vector<std::pair<int, int>> dual_edges;
};

// Vertex and edge ids are free-form strings; ordering is numeric-aware so
// that "2" sorts before "10".
int compare_ids(const std::string& a, const std::string& b);

class EmbeddedPlanarGraph {
  public:
    EmbeddedPlanarGraph() = default;
    EmbeddedPlanarGraph(std::string name, PlanarStructure structure,
                        std::vector<std::string> vertex_ids, std::vector<std::string> edge_ids,
                        std::optional<std::vector<std::pair<Rat, Rat>>> coords, int root);

    const std::string& name() const { return name_; }
    const PlanarStructure& structure() const { return structure_; }
    int vertex_count() const { return structure_.vertex_count(); }
    int edge_count() const { return structure_.edge_count(); }
    int root() const { return root_; }
    int genus() const { return edge_count() - vertex_count() + 1; }

    const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
    const std::vector<std::string>& edge_ids() const { return edge_ids_; }
    const std::string& vertex_id(int v) const { return vertex_ids_[v]; }
    const std::string& edge_id(int e) const { return edge_ids_[e]; }
    int vertex_index(const std::string& id) const; // UnknownVertex
    int edge_index(const std::string& id) const;

    bool has_coords() const { return coords_.has_value(); }
    const std::vector<std::pair<Rat, Rat>>& coords() const { return *coords_; }

    std::vector<Face> faces() const;
    std::string face_id(int f) const;

    bool operator==(const EmbeddedPlanarGraph& rhs) const;

  private:
    std::string name_;
    PlanarStructure structure_;
    std::vector<std::string> vertex_ids_;
    std::vector<std::string> edge_ids_;
    std::optional<std::vector<std::pair<Rat, Rat>>> coords_;
    int root_ = -1;
};

// One dual vertex per face, one dual edge per primal edge (HasBridge if a
// dual self-loop would arise).
DualGraph dual(const EmbeddedPlanarGraph& g);

// Every simple cycle, once per undirected cycle, as a dart sequence.
// Desk-scale backtracking enumeration.
std::vector<std::vector<int>> simple_cycles(const PlanarStructure& s);

// Dual reachability sweep around a simple cycle: which side is enclosed,
// and how much of the graph it swallows.
struct EnclosedRegion {
    bool ccw = false; // enclosed region lies left of the traversal
    int faces = 0;    // bounded faces inside the cycle
    int edges = 0;    // edges strictly inside
    int vertices = 0; // vertices strictly inside
};
EnclosedRegion enclosed_region(const PlanarStructure& s, const std::vector<int>& cycle_darts);

// True iff traversing the cycle keeps the enclosed region on the left,
// decided by a reachability sweep in the dual from the outer face crossing
// only edges not on the cycle.  Throws NotACycle for walks that are not
// simple closed cycles.
bool is_ccw(const PlanarStructure& s, const std::vector<int>& cycle_darts);

inline bool is_ccw(const EmbeddedPlanarGraph& g, const std::vector<int>& cycle_darts) {
    return is_ccw(g.structure(), cycle_darts);
}

// Twice the signed area of the polygon through the tails of the cycle darts;
// positive iff counterclockwise.  Straight-line coordinates required.
Rat shoelace_area_2x(const EmbeddedPlanarGraph& g, const std::vector<int>& cycle_darts);

} // namespace temperley
