#pragma once

// The map Psi from matchings to the Kasteleyn cokernel, the isomorphism to
// Jac(G), the induced simply transitive group action on perfect matchings,
// and exhaustive desk-scale verification of its canonicity.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "temperley/gplus.hpp"

namespace temperley {

// Integer chips on the white vertices of G+ (indexed by source edge of G).
struct WhiteDivisor {
    std::vector<long> coefficients;
    bool operator==(const WhiteDivisor& rhs) const = default;
};

// Symmetric difference of two perfect matchings, decomposed into
// vertex-disjoint simple cycles whose edges alternate between the two.
struct AlternatingCycleSet {
    std::vector<std::vector<int>> cycles; // G+ edge indices in cyclic order
    std::vector<int> support;             // sorted union of the cycle edges
};

AlternatingCycleSet symmetric_difference(const GPlusGraph& h, const Matching& m1,
                                         const Matching& m2);

// Everything tied to one choice of reference matching: its Temperley tree,
// the q-connected orientation, the induced Kasteleyn orientation and the
// cokernel lattice it defines.
class ReferenceContext {
  public:
    ReferenceContext(const GPlusGraph& h, Matching reference);

    const GPlusGraph& gplus() const { return *h_; }
    const Matching& reference() const { return ref_; }
    const SpanningTree& tree() const { return tree_; }
    const Orientation& orientation() const { return orientation_; }
    const GPlusOrientation& kasteleyn() const { return ko_; }
    const KasteleynSystem& system() const { return system_; }

    // Psi relative to this reference: 0 on whites where the two symmetric
    // difference edges have the same orientation sign, 1 where they differ;
    // the class is taken in this reference's cokernel lattice.
    std::pair<WhiteDivisor, CokernelClass> psi(const Matching& m) const;

  private:
    const GPlusGraph* h_;
    Matching ref_;
    SpanningTree tree_;
    Orientation orientation_;
    GPlusOrientation ko_;
    KasteleynSystem system_;
};

// Standalone form of psi; ko must be the Kasteleyn orientation induced from
// the reference's Temperley tree (WrongReferenceOrientation otherwise).
std::pair<WhiteDivisor, CokernelClass> psi(const GPlusGraph& h, const Matching& ref,
                                           const Matching& m, const GPlusOrientation& ko);

// Indicator of the edges whose orientation differs between o0 and oi.
WhiteDivisor reversed_edges_divisor(const EmbeddedPlanarGraph& g, const Orientation& o0,
                                    const Orientation& oi);

// The isomorphism to Jac(G): each white chip count d on w(e) places d chips
// on the tail and -d on the head of e under the reference orientation (the
// sign under which the Temperley/Bernardi square commutes).
JacobianElement phi(const JacobianContext& jac, const WhiteDivisor& d, const Orientation& o0);

// Materialized action of the cokernel on matchings for a fixed reference:
// group elements are mixed-radix indices over the invariant factors.
class ActionTable {
  public:
    ActionTable(const GPlusGraph& h, int reference_index);

    const std::vector<Matching>& matchings() const { return matchings_; }
    int reference_index() const { return reference_; }
    const std::vector<Int>& moduli() const { return moduli_; }
    uint64_t group_order() const { return order_; }

    uint64_t index_of(const CokernelClass& c) const;
    CokernelClass class_at(uint64_t index) const;
    uint64_t add(uint64_t a, uint64_t b) const { return add_[a * order_ + b]; }
    uint64_t sub(uint64_t a, uint64_t b) const { return sub_[a * order_ + b]; }

    uint64_t psi_index(int matching) const { return psi_[matching]; }
    int matching_of(uint64_t class_index) const; // Psi^-1; NoPreimage if unmapped

    // k . m = Psi^-1(k + Psi(m)).
    int act(uint64_t class_index, int matching) const;

  private:
    const GPlusGraph* h_;
    int reference_;
    std::vector<Matching> matchings_;
    std::vector<Int> moduli_;
    uint64_t order_ = 1;
    std::vector<uint64_t> psi_;
    std::vector<int> inverse_;
    std::vector<uint64_t> add_, sub_;
};

inline int group_act(const CokernelClass& k, int matching, const ActionTable& table) {
    return table.act(table.index_of(k), matching);
}

struct ActionCheckReport {
    bool pass = true;
    long checks = 0;
    std::string counterexample; // empty when pass
};

// Identity, compatibility and simple transitivity of the reference action.
ActionCheckReport verify_action_axioms(const ActionTable& table);

// For every reference matching M_i and all matchings a, b, c: the matching d
// with Psi_i(d) - Psi_i(c) = Psi_i(a) - Psi_i(b), computed in the M_i
// lattice, agrees with the M_0-based table.
ActionCheckReport verify_reference_independence(const GPlusGraph& h);

// The square phi . Psi . Temperley = Bernardi, row by row over spanning trees,
// with the reference tree mapping to the identity on both paths.
ActionCheckReport verify_commutative_diagram(const EmbeddedPlanarGraph& g);

} // namespace temperley
