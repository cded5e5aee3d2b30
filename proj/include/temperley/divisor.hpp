#pragma once

// Divisors on G, the Laplacian, chip-firing and the Jacobian with canonical
// class representatives in the Smith basis of the reduced Laplacian.

#include <vector>

#include "temperley/algebra.hpp"
#include "temperley/planar.hpp"

namespace temperley {

// Integer chip counts indexed by vertex.
struct Divisor {
    std::vector<long> coefficients;

    Divisor() = default;
    explicit Divisor(int vertex_count) : coefficients(vertex_count, 0) {}

    long degree() const;
    Divisor operator+(const Divisor& rhs) const;
    Divisor operator-(const Divisor& rhs) const;
    bool operator==(const Divisor& rhs) const = default;
};

// |V| x |V|, diagonal deg(v), off-diagonal minus the edge multiplicity.
IntegerMatrix laplacian(const EmbeddedPlanarGraph& g);

// Reduced Laplacian: the root's row and column deleted; vertex order is the
// canonical vertex order with the root skipped.
IntegerMatrix reduced_laplacian(const EmbeddedPlanarGraph& g);

// Fire one vertex: it loses deg(v) chips, each neighbor gains the edge
// multiplicity.  The degree of the divisor is preserved.
Divisor chip_fire(const EmbeddedPlanarGraph& g, const Divisor& d, int vertex);

Int spanning_tree_count(const EmbeddedPlanarGraph& g);

// Invariant factors > 1 of the reduced Laplacian; their product is the
// spanning tree count.
std::vector<Int> jacobian_structure(const EmbeddedPlanarGraph& g);

bool linearly_equivalent(const EmbeddedPlanarGraph& g, const Divisor& a, const Divisor& b);

struct JacobianElement {
    CokernelClass cls;
    Divisor witness; // degree-0 representative

    bool operator==(const JacobianElement& rhs) const { return cls == rhs.cls; }
};

// Caches the Smith bases of the full and reduced Laplacian for one graph.
class JacobianContext {
  public:
    explicit JacobianContext(const EmbeddedPlanarGraph& g);

    const EmbeddedPlanarGraph& graph() const { return *graph_; }
    const RelationLattice& reduced_lattice() const { return reduced_; }
    const RelationLattice& full_lattice() const { return full_; }
    const std::vector<Int>& invariant_factors() const { return reduced_.moduli(); }
    Int order() const { return reduced_.torsion_order(); }

    // Canonical class of a degree-0 divisor (coordinates restricted to the
    // non-root vertices).
    JacobianElement class_of(const Divisor& degree_zero) const;
    JacobianElement zero() const;

    bool equivalent(const Divisor& a, const Divisor& b) const;

  private:
    const EmbeddedPlanarGraph* graph_;
    RelationLattice reduced_;
    RelationLattice full_;
};

} // namespace temperley
