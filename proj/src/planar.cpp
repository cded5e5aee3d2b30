#include "temperley/planar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>

namespace temperley {

namespace {

// Position of each dart inside the rotation list of its tail vertex.
struct DartIndex {
    std::vector<int> vertex;
    std::vector<int> slot;
};

DartIndex index_darts(int dart_count, const std::vector<std::vector<int>>& rotation) {
    DartIndex idx{std::vector<int>(dart_count, -1), std::vector<int>(dart_count, -1)};
    for (int v = 0; v < int(rotation.size()); ++v)
        for (int k = 0; k < int(rotation[v].size()); ++k) {
            int d = rotation[v][k];
            require(d >= 0 && d < dart_count, Errc::BadDocument, "rotation refers to unknown dart");
            require(idx.vertex[d] < 0, Errc::BadDocument, "dart listed twice in rotation system");
            idx.vertex[d] = v;
            idx.slot[d] = k;
        }
    return idx;
}

} // namespace

PlanarStructure PlanarStructure::build(int vertex_count, std::vector<std::pair<int, int>> edges,
                                       std::vector<std::vector<int>> rotation) {
    PlanarStructure s;
    s.vertex_count_ = vertex_count;
    s.edges_ = std::move(edges);
    s.rotation_ = std::move(rotation);
    require(int(s.rotation_.size()) == vertex_count, Errc::BadDocument, "rotation list size");

    const int darts = s.dart_count();
    DartIndex idx = index_darts(darts, s.rotation_);
    for (int d = 0; d < darts; ++d) {
        require(idx.vertex[d] >= 0, Errc::BadDocument, "dart missing from rotation system");
        require(idx.vertex[d] == s.dart_tail(d), Errc::BadDocument,
                "dart listed at a vertex other than its tail");
    }

    // Trace face orbits: successor(d) = rotation-predecessor of reverse(d).
    s.face_of_dart_.assign(darts, -1);
    std::vector<std::vector<int>> orbits;
    for (int start = 0; start < darts; ++start) {
        if (s.face_of_dart_[start] >= 0) continue;
        std::vector<int> orbit;
        int d = start;
        while (s.face_of_dart_[d] < 0) {
            s.face_of_dart_[d] = int(orbits.size());
            orbit.push_back(d);
            int r = dart_reverse(d);
            int v = idx.vertex[r];
            int k = idx.slot[r];
            int deg = int(s.rotation_[v].size());
            d = s.rotation_[v][(k + deg - 1) % deg];
        }
        require(d == start, Errc::Internal, "face orbit did not close");
        orbits.push_back(std::move(orbit));
    }

    // Canonical face order: by smallest boundary dart; boundaries rotated to
    // start at that dart.
    for (auto& orbit : orbits) {
        auto smallest = std::min_element(orbit.begin(), orbit.end());
        std::rotate(orbit.begin(), smallest, orbit.end());
    }
    std::vector<int> order(orbits.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return orbits[a][0] < orbits[b][0]; });
    std::vector<int> rank(orbits.size());
    for (int i = 0; i < int(order.size()); ++i) rank[order[i]] = i;
    s.faces_.resize(orbits.size());
    for (int i = 0; i < int(order.size()); ++i) s.faces_[i] = std::move(orbits[order[i]]);
    for (int d = 0; d < darts; ++d) s.face_of_dart_[d] = rank[s.face_of_dart_[d]];

    require(vertex_count - s.edge_count() + s.face_count() == 2, Errc::NonPlanarRotation,
            "rotation system is not a sphere embedding (Euler check failed)");
    return s;
}

void PlanarStructure::set_outer_face(int f) {
    require(f >= 0 && f < face_count(), Errc::Internal, "outer face index out of range");
    outer_face_ = f;
}

bool PlanarStructure::has_parallel_edges() const {
    std::vector<std::pair<int, int>> keys;
    keys.reserve(edges_.size());
    for (auto [u, v] : edges_) keys.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(keys.begin(), keys.end());
    return std::adjacent_find(keys.begin(), keys.end()) != keys.end();
}

bool PlanarStructure::is_connected() const {
    if (vertex_count_ == 0) return true;
    std::vector<char> seen(vertex_count_, 0);
    std::queue<int> queue;
    queue.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (int d : rotation_[v]) {
            int w = dart_head(d);
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                queue.push(w);
            }
        }
    }
    return reached == vertex_count_;
}

int compare_ids(const std::string& a, const std::string& b) {
    auto is_numeric = [](const std::string& s) {
        if (s.empty()) return false;
        size_t i = s[0] == '-' ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    bool na = is_numeric(a), nb = is_numeric(b);
    if (na != nb) return na ? -1 : 1; // numbers sort before names
    if (na) {
        mpz_class va(a, 10), vb(b, 10);
        if (va != vb) return va < vb ? -1 : 1;
        return a.compare(b);
    }
    return a.compare(b);
}

EmbeddedPlanarGraph::EmbeddedPlanarGraph(std::string name, PlanarStructure structure,
                                         std::vector<std::string> vertex_ids,
                                         std::vector<std::string> edge_ids,
                                         std::optional<std::vector<std::pair<Rat, Rat>>> coords,
                                         int root)
    : name_(std::move(name)), structure_(std::move(structure)), vertex_ids_(std::move(vertex_ids)),
      edge_ids_(std::move(edge_ids)), coords_(std::move(coords)), root_(root) {}

int EmbeddedPlanarGraph::vertex_index(const std::string& id) const {
    for (int v = 0; v < int(vertex_ids_.size()); ++v)
        if (vertex_ids_[v] == id) return v;
    fail(Errc::UnknownVertex, "no vertex with id '" + id + "'");
}

int EmbeddedPlanarGraph::edge_index(const std::string& id) const {
    for (int e = 0; e < int(edge_ids_.size()); ++e)
        if (edge_ids_[e] == id) return e;
    fail(Errc::BadDocument, "no edge with id '" + id + "'");
}

std::vector<Face> EmbeddedPlanarGraph::faces() const {
    std::vector<Face> out;
    for (int f = 0; f < structure_.face_count(); ++f)
        out.push_back(Face{f, structure_.face_boundary(f)});
    return out;
}

std::string EmbeddedPlanarGraph::face_id(int f) const {
    int d = structure_.face_boundary(f)[0];
    return "f(" + edge_id(dart_edge(d)) + ":" + vertex_id(structure_.dart_tail(d)) + ")";
}

bool EmbeddedPlanarGraph::operator==(const EmbeddedPlanarGraph& rhs) const {
    bool base = name_ == rhs.name_ && vertex_ids_ == rhs.vertex_ids_ && edge_ids_ == rhs.edge_ids_ &&
                root_ == rhs.root_ && structure_.edges() == rhs.structure_.edges() &&
                structure_.rotation() == rhs.structure_.rotation() &&
                structure_.outer_face() == rhs.structure_.outer_face();
    if (!base) return false;
    if (coords_.has_value() != rhs.coords_.has_value()) return false;
    if (!coords_) return true;
    for (size_t i = 0; i < coords_->size(); ++i)
        if ((*coords_)[i].first != (*rhs.coords_)[i].first ||
            (*coords_)[i].second != (*rhs.coords_)[i].second)
            return false;
    return true;
}

DualGraph dual(const EmbeddedPlanarGraph& g) {
    const PlanarStructure& s = g.structure();
    DualGraph d;
    d.face_count = s.face_count();
    for (int e = 0; e < s.edge_count(); ++e) {
        int left = s.face_left(dart_forward(e));
        int right = s.face_right(dart_forward(e));
        require(left != right, Errc::HasBridge,
                "edge '" + g.edge_id(e) + "' has the same face on both sides");
        d.dual_edges.emplace_back(left, right);
    }
    return d;
}

std::vector<std::vector<int>> simple_cycles(const PlanarStructure& s) {
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    std::vector<char> used(s.vertex_count(), 0);
    auto walk = [&](auto&& self, int base, int v) -> void {
        for (int d : s.rotation()[v]) {
            int w = s.dart_head(d);
            if (!path.empty() && dart_edge(d) == dart_edge(path.back())) continue;
            if (w == base && !path.empty()) {
                path.push_back(d);
                // Each undirected cycle once: second vertex below last, with
                // 2-gons (second == last) kept via the dart comparison.
                if (path.size() == 2 ? path[0] < dart_reverse(path[1])
                                     : s.dart_head(path[0]) < s.dart_tail(path.back()))
                    out.push_back(path);
                path.pop_back();
                continue;
            }
            if (w < base || used[w]) continue;
            used[w] = 1;
            path.push_back(d);
            self(self, base, w);
            path.pop_back();
            used[w] = 0;
        }
    };
    for (int base = 0; base < s.vertex_count(); ++base) {
        used[base] = 1;
        walk(walk, base, base);
        used[base] = 0;
    }
    return out;
}

EnclosedRegion enclosed_region(const PlanarStructure& s, const std::vector<int>& cycle_darts) {
    require(s.outer_face() >= 0, Errc::Internal, "outer face not set");
    const int k = int(cycle_darts.size());
    require(k >= 2, Errc::NotACycle, "cycle needs at least two darts");
    std::vector<char> seen_vertex(s.vertex_count(), 0), on_cycle(s.edge_count(), 0);
    for (int i = 0; i < k; ++i) {
        int d = cycle_darts[i];
        require(d >= 0 && d < s.dart_count(), Errc::NotACycle, "dart out of range");
        require(s.dart_head(d) == s.dart_tail(cycle_darts[(i + 1) % k]), Errc::NotACycle,
                "darts do not chain head-to-tail");
        int tail = s.dart_tail(d);
        require(!seen_vertex[tail], Errc::NotACycle, "cycle revisits a vertex");
        seen_vertex[tail] = 1;
        require(!on_cycle[dart_edge(d)], Errc::NotACycle, "cycle revisits an edge");
        on_cycle[dart_edge(d)] = 1;
    }

    // Sweep the dual from the outer face without crossing the cycle.
    std::vector<char> reachable(s.face_count(), 0);
    std::vector<std::vector<int>> adjacency(s.face_count());
    for (int e = 0; e < s.edge_count(); ++e) {
        if (on_cycle[e]) continue;
        int a = s.face_left(dart_forward(e));
        int b = s.face_left(dart_backward(e));
        adjacency[a].push_back(b);
        adjacency[b].push_back(a);
    }
    std::queue<int> queue;
    queue.push(s.outer_face());
    reachable[s.outer_face()] = 1;
    while (!queue.empty()) {
        int f = queue.front();
        queue.pop();
        for (int g : adjacency[f])
            if (!reachable[g]) {
                reachable[g] = 1;
                queue.push(g);
            }
    }

    int inside = 0, outside = 0;
    for (int d : cycle_darts) (reachable[s.face_left(d)] ? outside : inside)++;
    require(inside == 0 || outside == 0, Errc::Internal,
            "cycle left faces straddle the outer region");

    EnclosedRegion region;
    region.ccw = inside == k;
    for (int f = 0; f < s.face_count(); ++f)
        if (!reachable[f]) ++region.faces;
    for (int e = 0; e < s.edge_count(); ++e)
        if (!on_cycle[e] && !reachable[s.face_left(dart_forward(e))]) ++region.edges;
    // Euler for the closed disk: (V_in + k) - (E_in + k) + F_in = 1.
    region.vertices = 1 - region.faces + region.edges;
    return region;
}

bool is_ccw(const PlanarStructure& s, const std::vector<int>& cycle_darts) {
    return enclosed_region(s, cycle_darts).ccw;
}

Rat shoelace_area_2x(const EmbeddedPlanarGraph& g, const std::vector<int>& cycle_darts) {
    require(g.has_coords(), Errc::BadDocument, "graph has no coordinates");
    const auto& xy = g.coords();
    Rat area = 0;
    const int k = int(cycle_darts.size());
    for (int i = 0; i < k; ++i) {
        auto [x1, y1] = xy[g.structure().dart_tail(cycle_darts[i])];
        auto [x2, y2] = xy[g.structure().dart_tail(cycle_darts[(i + 1) % k])];
        area += x1 * y2 - x2 * y1;
    }
    return area;
}

} // namespace temperley
