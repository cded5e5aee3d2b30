#include "temperley/action.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace temperley {

AlternatingCycleSet symmetric_difference(const GPlusGraph& h, const Matching& m1,
                                         const Matching& m2) {
    require(is_perfect_matching(h, m1) && is_perfect_matching(h, m2), Errc::DimensionMismatch,
            "symmetric difference needs two perfect matchings of the same G+");
    std::set<int> in1(m1.edges.begin(), m1.edges.end());
    std::set<int> in2(m2.edges.begin(), m2.edges.end());
    std::vector<int> diff;
    for (int i : m1.edges)
        if (!in2.count(i)) diff.push_back(i);
    for (int i : m2.edges)
        if (!in1.count(i)) diff.push_back(i);
    std::sort(diff.begin(), diff.end());

    AlternatingCycleSet out;
    out.support = diff;

    // Each touched vertex has exactly one diff edge from each matching; walk
    // the 2-regular subgraph into cycles, alternating sides as we go.
    const int nv = h.white_count() + h.black_count();
    std::vector<std::vector<int>> at(nv);
    for (int i : diff) {
        at[h.edges()[i].white].push_back(i);
        at[h.white_count() + h.edges()[i].black].push_back(i);
    }
    for (const auto& list : at)
        require(list.empty() || list.size() == 2, Errc::Internal,
                "symmetric difference is not 2-regular on its support");
    std::set<int> used;
    for (int start : diff) {
        if (used.count(start)) continue;
        std::vector<int> cycle;
        int edge = start;
        int vertex = h.edges()[edge].white;
        for (;;) {
            cycle.push_back(edge);
            used.insert(edge);
            bool from_m1 = in1.count(edge) > 0;
            int next_vertex = (vertex == h.edges()[edge].white)
                                  ? h.white_count() + h.edges()[edge].black
                                  : h.edges()[edge].white;
            const auto& options = at[next_vertex];
            int next_edge = options[0] == edge ? options[1] : options[0];
            // Strict alternation between the two matchings.
            require((in1.count(next_edge) > 0) != from_m1, Errc::Internal,
                    "cycle does not alternate between the matchings");
            vertex = next_vertex;
            edge = next_edge;
            if (edge == start) break;
        }
        require(cycle.size() % 2 == 0, Errc::Internal, "alternating cycle of odd length");
        out.cycles.push_back(std::move(cycle));
    }
    return out;
}

ReferenceContext::ReferenceContext(const GPlusGraph& h, Matching reference)
    : h_(&h), ref_(std::move(reference)), tree_(temperley_inverse(h, ref_)),
      orientation_(q_connected_orientation(h.source(), tree_)),
      ko_(induced_kasteleyn_orientation(h, orientation_)),
      system_(kasteleyn_cokernel(kasteleyn_matrix(h, ko_))) {}

std::pair<WhiteDivisor, CokernelClass> ReferenceContext::psi(const Matching& m) const {
    AlternatingCycleSet diff = symmetric_difference(*h_, ref_, m);
    WhiteDivisor d;
    d.coefficients.assign(h_->white_count(), 0);
    // Two diff edges per supported white: same orientation sign -> 0,
    // opposite -> 1.
    std::vector<std::vector<int>> at_white(h_->white_count());
    for (int i : diff.support) at_white[h_->edges()[i].white].push_back(i);
    for (int w = 0; w < h_->white_count(); ++w) {
        if (at_white[w].empty()) continue;
        require(at_white[w].size() == 2, Errc::Internal, "white not 2-covered in L");
        bool p0 = ko_.positive[at_white[w][0]];
        bool p1 = ko_.positive[at_white[w][1]];
        d.coefficients[w] = (p0 == p1) ? 0 : 1;
    }
    std::vector<Int> vec(d.coefficients.begin(), d.coefficients.end());
    return {d, system_.lattice.reduce(vec)};
}

std::pair<WhiteDivisor, CokernelClass> psi(const GPlusGraph& h, const Matching& ref,
                                           const Matching& m, const GPlusOrientation& ko) {
    ReferenceContext ctx(h, ref);
    require(ko == ctx.kasteleyn(), Errc::WrongReferenceOrientation,
            "orientation is not the one induced from the reference matching's tree");
    return ctx.psi(m);
}

WhiteDivisor reversed_edges_divisor(const EmbeddedPlanarGraph& g, const Orientation& o0,
                                    const Orientation& oi) {
    require(o0.forward.size() == oi.forward.size() &&
                int(o0.forward.size()) == g.edge_count(),
            Errc::DimensionMismatch, "orientations of different graphs");
    WhiteDivisor d;
    d.coefficients.assign(g.edge_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e)
        d.coefficients[e] = o0.forward[e] != oi.forward[e] ? 1 : 0;
    return d;
}

JacobianElement phi(const JacobianContext& jac, const WhiteDivisor& d, const Orientation& o0) {
    const EmbeddedPlanarGraph& g = jac.graph();
    require(int(d.coefficients.size()) == g.edge_count(), Errc::DimensionMismatch,
            "white divisor size");
    require(is_q_connected(g, o0), Errc::NotQConnected,
            "phi needs the fixed q-connected reference orientation");
    Divisor div(g.vertex_count());
    // Chips land on the tail: reversing an edge of a q-connected orientation
    // moves one unit of indegree from its head to its tail, so this is the
    // sign under which the Temperley/Bernardi square commutes.
    for (int e = 0; e < g.edge_count(); ++e) {
        long c = d.coefficients[e];
        if (c == 0) continue;
        div.coefficients[o0.tail(g.structure(), e)] += c;
        div.coefficients[o0.head(g.structure(), e)] -= c;
    }
    return jac.class_of(div);
}

ActionTable::ActionTable(const GPlusGraph& h, int reference_index)
    : h_(&h), reference_(reference_index), matchings_(enumerate_matchings(h)) {
    require(reference_ >= 0 && reference_ < int(matchings_.size()), Errc::BadDocument,
            "reference matching index out of range");
    ReferenceContext ctx(h, matchings_[reference_]);
    moduli_ = ctx.system().lattice.moduli();
    for (const Int& m : moduli_) {
        require(m.fits_ulong_p(), Errc::TooLarge, "cokernel too large for table indices");
        order_ *= m.get_ui();
    }
    require(order_ == matchings_.size(), Errc::Internal,
            "group order does not match the matching count");

    psi_.resize(matchings_.size());
    inverse_.assign(order_, -1);
    for (int i = 0; i < int(matchings_.size()); ++i) {
        psi_[i] = index_of(ctx.psi(matchings_[i]).second);
        require(inverse_[psi_[i]] < 0, Errc::Internal, "Psi is not injective");
        inverse_[psi_[i]] = i;
    }

    add_.resize(order_ * order_);
    sub_.resize(order_ * order_);
    for (uint64_t a = 0; a < order_; ++a) {
        CokernelClass ca = class_at(a);
        for (uint64_t b = 0; b < order_; ++b) {
            CokernelClass cb = class_at(b);
            add_[a * order_ + b] = index_of(ca + cb);
            sub_[a * order_ + b] = index_of(ca - cb);
        }
    }
}

uint64_t ActionTable::index_of(const CokernelClass& c) const {
    require(c.moduli == moduli_, Errc::DimensionMismatch, "class from a different lattice");
    uint64_t idx = 0, stride = 1;
    for (size_t i = 0; i < moduli_.size(); ++i) {
        idx += c.residues[i].get_ui() * stride;
        stride *= moduli_[i].get_ui();
    }
    return idx;
}

CokernelClass ActionTable::class_at(uint64_t index) const {
    CokernelClass c;
    c.moduli = moduli_;
    for (const Int& m : moduli_) {
        unsigned long mod = m.get_ui();
        c.residues.push_back(Int(static_cast<unsigned long>(index % mod)));
        index /= mod;
    }
    return c;
}

int ActionTable::matching_of(uint64_t class_index) const {
    require(class_index < order_, Errc::NoPreimage, "class index out of range");
    int m = inverse_[class_index];
    require(m >= 0, Errc::NoPreimage, "no matching maps to this class");
    return m;
}

int ActionTable::act(uint64_t class_index, int matching) const {
    return matching_of(add(class_index, psi_[matching]));
}

ActionCheckReport verify_action_axioms(const ActionTable& table) {
    ActionCheckReport report;
    const uint64_t n = table.group_order();
    const int m = int(table.matchings().size());
    auto complain = [&](const std::string& what) {
        report.pass = false;
        if (report.counterexample.empty()) report.counterexample = what;
    };

    // Identity fixes every matching.
    for (int i = 0; i < m; ++i) {
        ++report.checks;
        if (table.act(0, i) != i) complain("identity moves matching " + std::to_string(i));
    }
    // Compatibility: (k1 + k2) . m = k1 . (k2 . m).
    for (uint64_t k1 = 0; k1 < n; ++k1)
        for (uint64_t k2 = 0; k2 < n; ++k2)
            for (int i = 0; i < m; ++i) {
                ++report.checks;
                if (table.act(table.add(k1, k2), i) != table.act(k1, table.act(k2, i)))
                    complain("compatibility fails at k1=" + std::to_string(k1) +
                             " k2=" + std::to_string(k2) + " m=" + std::to_string(i));
            }
    // Simple transitivity: exactly one k with k . m1 = m2.
    for (int m1 = 0; m1 < m; ++m1)
        for (int m2 = 0; m2 < m; ++m2) {
            int hits = 0;
            for (uint64_t k = 0; k < n; ++k)
                if (table.act(k, m1) == m2) ++hits;
            ++report.checks;
            if (hits != 1)
                complain("transitivity fails between " + std::to_string(m1) + " and " +
                         std::to_string(m2) + " (" + std::to_string(hits) + " carriers)");
        }
    return report;
}

ActionCheckReport verify_reference_independence(const GPlusGraph& h) {
    ActionCheckReport report;
    std::vector<Matching> matchings = enumerate_matchings(h);
    const int m = int(matchings.size());
    if (m == 0) return report;

    // Per-reference Psi tables in each reference's own lattice.
    ActionTable base(h, 0);
    const uint64_t n = base.group_order();
    std::vector<std::vector<uint64_t>> psi_of(m);
    std::vector<std::vector<int>> inv_of(m);
    for (int r = 0; r < m; ++r) {
        ReferenceContext ctx(h, matchings[r]);
        require(ctx.system().lattice.moduli() == base.moduli(), Errc::Internal,
                "cokernel moduli differ across references");
        psi_of[r].resize(m);
        inv_of[r].assign(n, -1);
        for (int i = 0; i < m; ++i) {
            uint64_t idx = base.index_of(ctx.psi(matchings[i]).second);
            psi_of[r][i] = idx;
            require(inv_of[r][idx] < 0, Errc::Internal, "Psi not injective for a reference");
            inv_of[r][idx] = i;
        }
    }

    auto complain = [&](int r, int a, int b, int c, int expect, int got) {
        report.pass = false;
        if (!report.counterexample.empty()) return;
        std::ostringstream os;
        os << "reference " << r << ": a=" << a << " b=" << b << " c=" << c << " gives " << got
           << ", reference 0 gives " << expect;
        report.counterexample = os.str();
    };

    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c) {
                int expected =
                    inv_of[0][base.add(base.sub(psi_of[0][a], psi_of[0][b]), psi_of[0][c])];
                for (int r = 1; r < m; ++r) {
                    uint64_t idx = base.add(base.sub(psi_of[r][a], psi_of[r][b]), psi_of[r][c]);
                    int got = inv_of[r][idx];
                    ++report.checks;
                    if (got != expected) complain(r, a, b, c, expected, got);
                }
                ++report.checks;
            }
    return report;
}

ActionCheckReport verify_commutative_diagram(const EmbeddedPlanarGraph& g) {
    ActionCheckReport report;
    GPlusGraph h = construct_gplus(g);
    JacobianContext jac(g);
    std::vector<SpanningTree> trees = enumerate_trees(g);
    ReferenceContext ctx(h, temperley_matching(h, trees[0]));
    Divisor d0 = bernardi_divisor(g, ctx.orientation());

    for (size_t i = 0; i < trees.size(); ++i) {
        Matching m = temperley_matching(h, trees[i]);
        auto [white, cls] = ctx.psi(m);
        JacobianElement lhs = phi(jac, white, ctx.orientation());
        JacobianElement rhs = bernardi_class(jac, q_connected_orientation(g, trees[i]), d0);
        ++report.checks;
        bool ok = lhs == rhs;
        if (i == 0) ok = ok && lhs.cls.is_zero() && rhs.cls.is_zero();
        if (!ok) {
            report.pass = false;
            if (report.counterexample.empty())
                report.counterexample = "tree row " + std::to_string(i) + ": phi(psi(temperley)) = " +
                                        lhs.cls.to_string() + " vs bernardi " + rhs.cls.to_string();
        }
    }
    return report;
}

} // namespace temperley
