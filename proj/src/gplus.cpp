#include "temperley/gplus.hpp"

#include <algorithm>
#include <set>

namespace temperley {

int GPlusGraph::primal_half(int e, int v) const {
    for (int i : white_edges_[e]) {
        const GPlusEdge& ge = edges_[i];
        if (ge.kind == HalfKind::Primal && ge.source_attach == v) return i;
    }
    return -1;
}

int GPlusGraph::dual_half(int e, int f) const {
    for (int i : white_edges_[e]) {
        const GPlusEdge& ge = edges_[i];
        if (ge.kind == HalfKind::Dual && ge.source_attach == f) return i;
    }
    return -1;
}

std::string GPlusGraph::black_id(int b) const {
    if (black_is_vertex(b)) return "b(" + source_.vertex_id(black_source(b)) + ")";
    return "b(" + source_.face_id(black_source(b)) + ")";
}

std::string GPlusGraph::edge_label(int i) const {
    const GPlusEdge& e = edges_[i];
    return white_id(e.white) + "-" + black_id(e.black) +
           (e.kind == HalfKind::Primal ? " [primal]" : " [dual]");
}

GPlusGraph GPlusGraph::build(const EmbeddedPlanarGraph& g) {
    const PlanarStructure& s = g.structure();
    GPlusGraph h;
    h.source_ = g;

    // Blacks: non-root vertices in canonical order, then bounded faces.
    h.black_of_vertex_.assign(s.vertex_count(), -1);
    h.black_of_face_.assign(s.face_count(), -1);
    for (int v = 0; v < s.vertex_count(); ++v) {
        if (v == g.root()) continue;
        h.black_of_vertex_[v] = int(h.black_tags_.size());
        h.black_tags_.push_back({true, v});
    }
    for (int f = 0; f < s.face_count(); ++f) {
        if (f == s.outer_face()) continue;
        h.black_of_face_[f] = int(h.black_tags_.size());
        h.black_tags_.push_back({false, f});
    }

    // Whites carry their incident halves in overlay rotation order around
    // the crossing point: head, left face, tail, right face of the stored
    // forward dart, with deleted attachments omitted.
    h.white_edges_.resize(s.edge_count());
    h.black_edges_.resize(h.black_tags_.size());
    auto add_edge = [&](int white, HalfKind kind, int attach, int black) {
        int idx = int(h.edges_.size());
        h.edges_.push_back(GPlusEdge{white, black, kind, attach});
        h.white_edges_[white].push_back(idx);
        h.black_edges_[black].push_back(idx);
        return idx;
    };
    for (int e = 0; e < s.edge_count(); ++e) {
        int u = s.edge_u(e), v = s.edge_v(e);
        int fl = s.face_left(dart_forward(e)), fr = s.face_right(dart_forward(e));
        if (h.black_of_vertex_[v] >= 0) add_edge(e, HalfKind::Primal, v, h.black_of_vertex_[v]);
        if (h.black_of_face_[fl] >= 0) add_edge(e, HalfKind::Dual, fl, h.black_of_face_[fl]);
        if (h.black_of_vertex_[u] >= 0) add_edge(e, HalfKind::Primal, u, h.black_of_vertex_[u]);
        if (h.black_of_face_[fr] >= 0) add_edge(e, HalfKind::Dual, fr, h.black_of_face_[fr]);
    }

    // Inherited embedding: white rotations are already in overlay order;
    // black rotations follow the source rotation (vertices) or the boundary
    // walk (faces).
    const int nw = h.white_count(), nb = h.black_count();
    std::vector<std::pair<int, int>> struct_edges;
    for (const GPlusEdge& ge : h.edges_)
        struct_edges.emplace_back(ge.white, nw + ge.black);
    std::vector<std::vector<int>> rotation(nw + nb);
    for (int w = 0; w < nw; ++w)
        for (int i : h.white_edges_[w]) rotation[w].push_back(dart_forward(i));
    for (int b = 0; b < nb; ++b) {
        if (h.black_is_vertex(b)) {
            int v = h.black_source(b);
            for (int d : s.rotation()[v]) {
                int i = h.primal_half(dart_edge(d), v);
                require(i >= 0, Errc::Internal, "missing primal half");
                rotation[nw + b].push_back(dart_backward(i));
            }
        } else {
            int f = h.black_source(b);
            for (int d : s.face_boundary(f)) {
                int i = h.dual_half(dart_edge(d), f);
                require(i >= 0, Errc::Internal, "missing dual half");
                rotation[nw + b].push_back(dart_backward(i));
            }
        }
    }
    try {
        h.structure_ = PlanarStructure::build(nw + nb, struct_edges, rotation);
    } catch (const Error& e) {
        fail(Errc::Internal, std::string("G+ embedding is inconsistent: ") + e.what());
    }

    // Bounded faces of G+ are exactly the overlay corners (v, f) with v != q
    // and f bounded; everything else merges into the single outer face.
    std::set<int> corner_faces;
    for (int v = 0; v < s.vertex_count(); ++v) {
        if (v == g.root()) continue;
        for (int d : s.rotation()[v]) {
            int f = s.face_left(d);
            if (f == s.outer_face()) continue;
            int deg = s.degree(v);
            const auto& rot = s.rotation()[v];
            int slot = int(std::find(rot.begin(), rot.end(), d) - rot.begin());
            int d_next = rot[(slot + 1) % deg];
            // Corner cycle: v -> w(e(d)) -> f -> w(e(next)) -> v.
            int pe1 = h.primal_half(dart_edge(d), v);
            int de1 = h.dual_half(dart_edge(d), f);
            int de2 = h.dual_half(dart_edge(d_next), f);
            int pe2 = h.primal_half(dart_edge(d_next), v);
            require(pe1 >= 0 && de1 >= 0 && de2 >= 0 && pe2 >= 0, Errc::Internal,
                    "corner halves missing");
            int face = h.structure_.face_left(dart_backward(pe1));
            require(face == h.structure_.face_left(dart_forward(de1)) &&
                        face == h.structure_.face_left(dart_backward(de2)) &&
                        face == h.structure_.face_left(dart_forward(pe2)) &&
                        h.structure_.face_degree(face) == 4,
                    Errc::Internal, "overlay corner does not bound a quadrilateral of G+");
            corner_faces.insert(face);
        }
    }
    require(int(corner_faces.size()) == h.structure_.face_count() - 1, Errc::Internal,
            "G+ faces are not corners plus one outer face");
    for (int f = 0; f < h.structure_.face_count(); ++f)
        if (!corner_faces.count(f)) h.structure_.set_outer_face(f);

    require(h.white_count() == h.black_count(), Errc::Internal,
            "G+ bipartition is not square (Euler violation)");
    return h;
}

bool is_perfect_matching(const GPlusGraph& h, const Matching& m) {
    std::vector<int> cover(h.white_count() + h.black_count(), 0);
    for (int i : m.edges) {
        if (i < 0 || i >= h.edge_count()) return false;
        cover[h.edges()[i].white] += 1;
        cover[h.white_count() + h.edges()[i].black] += 1;
    }
    return std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
}

std::vector<Matching> enumerate_matchings(const GPlusGraph& h) {
    const int nw = h.white_count();
    std::vector<char> white_done(nw, 0);
    std::vector<char> black_done(h.black_count(), 0);
    std::vector<int> picked;
    std::vector<Matching> out;

    auto recurse = [&](auto&& self) -> void {
        // Least-degree-first: the uncovered white with fewest free halves.
        int best = -1, best_count = 0;
        for (int w = 0; w < nw; ++w) {
            if (white_done[w]) continue;
            int count = 0;
            for (int i : h.white_edges(w))
                if (!black_done[h.edges()[i].black]) ++count;
            if (best < 0 || count < best_count) {
                best = w;
                best_count = count;
            }
            if (count == 0) break;
        }
        if (best < 0) {
            Matching m;
            m.edges = picked;
            std::sort(m.edges.begin(), m.edges.end());
            out.push_back(std::move(m));
            return;
        }
        if (best_count == 0) return;
        white_done[best] = 1;
        for (int i : h.white_edges(best)) {
            int b = h.edges()[i].black;
            if (black_done[b]) continue;
            black_done[b] = 1;
            picked.push_back(i);
            self(self);
            picked.pop_back();
            black_done[b] = 0;
        }
        white_done[best] = 0;
    };
    recurse(recurse);
    std::sort(out.begin(), out.end());
    return out;
}

GPlusOrientation induced_kasteleyn_orientation(const GPlusGraph& h, const Orientation& o) {
    const EmbeddedPlanarGraph& g = h.source();
    require(int(o.forward.size()) == g.edge_count(), Errc::DimensionMismatch,
            "orientation size");
    require(is_q_connected(g, o), Errc::NotQConnected,
            "induced Kasteleyn orientations need a q-connected source orientation");
    const PlanarStructure& s = g.structure();
    GPlusOrientation ko;
    ko.positive.resize(h.edge_count());
    for (int i = 0; i < h.edge_count(); ++i) {
        const GPlusEdge& ge = h.edges()[i];
        int e = ge.white;
        if (ge.kind == HalfKind::Primal) {
            ko.positive[i] = (ge.source_attach == o.head(s, e));
        } else {
            ko.positive[i] = (ge.source_attach == s.face_left(o.dart(e)));
        }
    }
    return ko;
}

namespace {

// Clockwise = traversed against its orientation on a counterclockwise
// boundary.
inline bool dart_is_clockwise(const GPlusOrientation& ko, int dart) {
    bool along_positive = dart_is_forward(dart); // forward darts run white -> black
    return along_positive != bool(ko.positive[dart_edge(dart)]);
}

} // namespace

bool is_kasteleyn_orientation(const GPlusGraph& h, const GPlusOrientation& ko) {
    const PlanarStructure& s = h.structure();
    for (int f = 0; f < s.face_count(); ++f) {
        if (f == s.outer_face()) continue;
        int clockwise = 0;
        for (int d : s.face_boundary(f))
            if (dart_is_clockwise(ko, d)) ++clockwise;
        if (clockwise % 2 == 0) return false;
    }
    return true;
}

KasteleynCycleAudit audit_kasteleyn_cycles(const GPlusGraph& h, const GPlusOrientation& ko) {
    const PlanarStructure& s = h.structure();
    KasteleynCycleAudit audit;
    audit.faces_odd = is_kasteleyn_orientation(h, ko);
    audit.hollow_cycles_odd = true;
    audit.vertex_parity = true;
    audit.mod4_equivalent = true;

    auto handle_cycle = [&](const std::vector<int>& darts) {
        std::vector<int> cycle = darts;
        EnclosedRegion region = enclosed_region(s, cycle);
        if (!region.ccw) {
            std::vector<int> rev;
            for (auto it = cycle.rbegin(); it != cycle.rend(); ++it)
                rev.push_back(dart_reverse(*it));
            cycle = rev;
        }
        int clockwise = 0, positives = 0;
        for (int d : cycle) {
            if (dart_is_clockwise(ko, d)) ++clockwise;
            if (ko.positive[dart_edge(d)]) ++positives;
        }
        bool odd_cw = clockwise % 2 == 1;
        size_t len = cycle.size();
        bool mod4_ok = (len % 4 == 0) ? (positives % 2 == 1) : (positives % 2 == 0);
        audit.mod4_equivalent = audit.mod4_equivalent && (odd_cw == mod4_ok);
        audit.vertex_parity = audit.vertex_parity && (odd_cw == (region.vertices % 2 == 0));
        if (region.vertices == 0) {
            ++audit.hollow_cycles;
            audit.hollow_cycles_odd = audit.hollow_cycles_odd && odd_cw;
        }
        ++audit.cycles_checked;
    };
    for (const auto& cycle : simple_cycles(s)) handle_cycle(cycle);
    return audit;
}

IntegerMatrix kasteleyn_matrix(const GPlusGraph& h, const GPlusOrientation& ko) {
    require(int(ko.positive.size()) == h.edge_count(), Errc::DimensionMismatch,
            "orientation size");
    require(is_kasteleyn_orientation(h, ko), Errc::NotKasteleyn,
            "orientation fails the odd-clockwise face condition");
    IntegerMatrix k(h.black_count(), h.white_count());
    for (int i = 0; i < h.edge_count(); ++i) {
        const GPlusEdge& ge = h.edges()[i];
        k.at(ge.black, ge.white) += ko.positive[i] ? 1 : -1;
    }
    return k;
}

KasteleynSystem kasteleyn_cokernel(const IntegerMatrix& k) {
    require(k.rows() == k.cols(), Errc::NotSquare, "Kasteleyn matrices are square here");
    Int det = determinant(k);
    require(det != 0, Errc::SingularMatrix, "no perfect matching: det K = 0");
    RelationLattice lattice(k);
    return KasteleynSystem{k, det, lattice.snf().nontrivial_factors(), std::move(lattice)};
}

Matching temperley_matching(const GPlusGraph& h, const SpanningTree& t) {
    const EmbeddedPlanarGraph& g = h.source();
    const PlanarStructure& s = g.structure();
    Orientation o = q_connected_orientation(g, t);
    Matching m;
    for (int e = 0; e < g.edge_count(); ++e) {
        int i;
        if (t.contains(e)) {
            i = h.primal_half(e, o.head(s, e));
        } else {
            i = h.dual_half(e, s.face_left(o.dart(e)));
        }
        require(i >= 0, Errc::Internal, "temperley rule selected a deleted half-edge");
        m.edges.push_back(i);
    }
    std::sort(m.edges.begin(), m.edges.end());
    require(is_perfect_matching(h, m), Errc::Internal, "temperley output is not perfect");
    return m;
}

SpanningTree temperley_inverse(const GPlusGraph& h, const Matching& m) {
    require(is_perfect_matching(h, m), Errc::NotInImage, "not a perfect matching of this G+");
    SpanningTree t;
    for (int i : m.edges)
        if (h.edges()[i].kind == HalfKind::Primal) t.edges.push_back(h.edges()[i].white);
    std::sort(t.edges.begin(), t.edges.end());
    require(int(t.edges.size()) == h.source().vertex_count() - 1, Errc::NotInImage,
            "primal-half criterion does not select |V|-1 edges");
    for (int e : t.edges) t.mask |= (1u << e);
    // Acyclicity via union-find.
    {
        std::vector<int> parent(h.source().vertex_count());
        for (int v = 0; v < int(parent.size()); ++v) parent[v] = v;
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (int e : t.edges) {
            int a = find(h.source().structure().edge_u(e)), b = find(h.source().structure().edge_v(e));
            require(a != b, Errc::NotInImage, "primal-half criterion selects a cycle");
            parent[a] = b;
        }
    }
    require(temperley_matching(h, t) == m, Errc::NotInImage,
            "matching is not the Temperley image of its primal tree");
    return t;
}

} // namespace temperley
