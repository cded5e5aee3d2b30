#pragma once

// The Temperley graph G+: overlay G with its planar dual, subdivide each
// primal/dual crossing into a white vertex, then delete q, the outer-face
// dual vertex q*, and their incident edges.  Whites are tagged by edges of
// G, blacks by the surviving vertices and bounded faces; every G+ edge is a
// primal or dual half-edge.

#include <cstdint>
#include <string>
#include <vector>

#include "temperley/algebra.hpp"
#include "temperley/orientation.hpp"
#include "temperley/planar.hpp"

namespace temperley {

enum class HalfKind { Primal, Dual };

struct GPlusEdge {
    int white;         // white index == source edge index in G
    int black;         // black index
    HalfKind kind;
    int source_attach; // primal: vertex of G at this half; dual: face of G
};

class GPlusGraph {
  public:
    static GPlusGraph build(const EmbeddedPlanarGraph& g);

    const EmbeddedPlanarGraph& source() const { return source_; }

    int white_count() const { return source_.edge_count(); }
    int black_count() const { return int(black_tags_.size()); }
    int edge_count() const { return int(edges_.size()); }
    const std::vector<GPlusEdge>& edges() const { return edges_; }

    // Black tags: vertices of G except q first, then bounded faces.
    bool black_is_vertex(int b) const { return black_tags_[b].is_vertex; }
    int black_source(int b) const { return black_tags_[b].source; }
    int black_of_vertex(int v) const { return black_of_vertex_[v]; } // -1 for q
    int black_of_face(int f) const { return black_of_face_[f]; }     // -1 for outer

    const std::vector<int>& white_edges(int w) const { return white_edges_[w]; }
    const std::vector<int>& black_edges(int b) const { return black_edges_[b]; }

    // The half-edge of e attached at vertex v / face f, or -1.
    int primal_half(int e, int v) const;
    int dual_half(int e, int f) const;

    // Inherited plane embedding of G+: structure vertex w for whites,
    // white_count()+b for blacks; structure edge i == G+ edge i; the outer
    // face is the merged region around the deleted q and q*.
    const PlanarStructure& structure() const { return structure_; }
    int vertex_of_white(int w) const { return w; }
    int vertex_of_black(int b) const { return white_count() + b; }

    std::string white_id(int w) const { return "w(" + source_.edge_id(w) + ")"; }
    std::string black_id(int b) const;
    std::string edge_label(int i) const;

  private:
    struct BlackTag {
        bool is_vertex;
        int source;
    };
    EmbeddedPlanarGraph source_;
    std::vector<GPlusEdge> edges_;
    std::vector<BlackTag> black_tags_;
    std::vector<int> black_of_vertex_;
    std::vector<int> black_of_face_;
    std::vector<std::vector<int>> white_edges_;
    std::vector<std::vector<int>> black_edges_;
    PlanarStructure structure_;
};

inline GPlusGraph construct_gplus(const EmbeddedPlanarGraph& g) { return GPlusGraph::build(g); }

// Perfect matching of G+ as a sorted list of G+ edge indices.
struct Matching {
    std::vector<int> edges;
    bool operator==(const Matching& rhs) const = default;
    bool operator<(const Matching& rhs) const { return edges < rhs.edges; }
};

// All perfect matchings, canonically ordered (empty if none exist).
std::vector<Matching> enumerate_matchings(const GPlusGraph& h);

// positive[i] == true means G+ edge i is oriented white -> black.
struct GPlusOrientation {
    std::vector<char> positive;
    bool operator==(const GPlusOrientation& rhs) const = default;
};

// Primal halves inherit the q-connected orientation of G (the half toward
// the head is white -> black); dual halves cross their primal edge from its
// right face to its left face.  NotQConnected if o is not q-connected.
GPlusOrientation induced_kasteleyn_orientation(const GPlusGraph& h, const Orientation& o);

// Odd number of clockwise edges around every bounded face of G+.
bool is_kasteleyn_orientation(const GPlusGraph& h, const GPlusOrientation& ko);

// Exhaustive desk-scale audit over every simple cycle of G+.  A cycle
// enclosing no vertices must have an odd clockwise count (equivalently the
// mod-4 positive-edge rule); the general law extends this to
// clockwise(C) = enclosed_vertices(C) + 1 (mod 2).
struct KasteleynCycleAudit {
    long cycles_checked = 0;
    long hollow_cycles = 0;        // cycles enclosing no vertex
    bool faces_odd = false;        // bounded faces have odd clockwise count
    bool hollow_cycles_odd = false; // every hollow simple cycle is odd
    bool vertex_parity = false;    // clockwise = enclosed vertices + 1 (mod 2), all cycles
    bool mod4_equivalent = false;  // odd-clockwise matches the mod-4 positives form, per cycle
};
KasteleynCycleAudit audit_kasteleyn_cycles(const GPlusGraph& h, const GPlusOrientation& ko);

// Signed bipartite adjacency matrix, blacks indexing rows and whites
// indexing columns; entry = (#positive) - (#negative) halves between the
// pair.  NotKasteleyn unless ko passes the face test.
IntegerMatrix kasteleyn_matrix(const GPlusGraph& h, const GPlusOrientation& ko);

// White-vertex divisors modulo the row lattice of a Kasteleyn matrix.
struct KasteleynSystem {
    IntegerMatrix matrix;
    Int det;
    std::vector<Int> invariant_factors; // > 1
    RelationLattice lattice;
};
KasteleynSystem kasteleyn_cokernel(const IntegerMatrix& k); // SingularMatrix if det = 0

// Temperley bijection: tree edges pick the positively oriented primal half,
// non-tree edges the positively oriented dual half.
Matching temperley_matching(const GPlusGraph& h, const SpanningTree& t);

// Inverse via the primal-half criterion (e is a tree edge iff w(e) is
// matched through a primal half), validated against the forward map.
SpanningTree temperley_inverse(const GPlusGraph& h, const Matching& m);

bool is_perfect_matching(const GPlusGraph& h, const Matching& m);

} // namespace temperley
