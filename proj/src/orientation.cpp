#include "temperley/orientation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace temperley {

uint32_t Orientation::mask() const {
    uint32_t m = 0;
    for (size_t e = 0; e < forward.size(); ++e)
        if (forward[e]) m |= (1u << e);
    return m;
}

Orientation Orientation::from_mask(int edge_count, uint32_t mask) {
    Orientation o;
    o.forward.resize(edge_count);
    for (int e = 0; e < edge_count; ++e) o.forward[e] = (mask >> e) & 1u;
    return o;
}

namespace {

// Union-find with rollback for the tree enumeration.
struct Dsu {
    std::vector<int> parent, size;
    std::vector<std::pair<int, int>> trail; // (child root, old size of parent root)

    explicit Dsu(int n) : parent(n), size(n, 1) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) const {
        while (parent[x] != x) x = parent[x];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        trail.emplace_back(b, size[a]);
        size[a] += size[b];
        return true;
    }
    void rollback(size_t mark) {
        while (trail.size() > mark) {
            auto [child, old_size] = trail.back();
            trail.pop_back();
            size[parent[child]] = old_size;
            parent[child] = child;
        }
    }
};

} // namespace

std::vector<SpanningTree> enumerate_trees(const EmbeddedPlanarGraph& g) {
    const auto& s = g.structure();
    const int n = s.vertex_count(), m = s.edge_count();
    const int need = n - 1;
    std::vector<SpanningTree> out;
    std::vector<int> chosen;
    Dsu dsu(n);
    auto recurse = [&](auto&& self, int next) -> void {
        if (int(chosen.size()) == need) {
            SpanningTree t;
            t.edges = chosen;
            for (int e : chosen) t.mask |= (1u << e);
            out.push_back(std::move(t));
            return;
        }
        int missing = need - int(chosen.size());
        for (int e = next; e + missing <= m; ++e) {
            size_t mark = dsu.trail.size();
            if (!dsu.unite(s.edge_u(e), s.edge_v(e))) continue;
            chosen.push_back(e);
            self(self, e + 1);
            chosen.pop_back();
            dsu.rollback(mark);
        }
    };
    require(m < 31, Errc::TooLarge, "tree enumeration uses 32-bit edge masks");
    recurse(recurse, 0);
    return out;
}

namespace {

// Darts of the unique tree path between two vertices.
std::vector<int> tree_path(const PlanarStructure& s, const SpanningTree& t, int from, int to) {
    std::vector<int> parent_dart(s.vertex_count(), -1);
    std::vector<char> seen(s.vertex_count(), 0);
    std::queue<int> queue;
    queue.push(from);
    seen[from] = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        if (v == to) break;
        for (int d : s.rotation()[v]) {
            if (!t.contains(dart_edge(d))) continue;
            int w = s.dart_head(d);
            if (seen[w]) continue;
            seen[w] = 1;
            parent_dart[w] = d;
            queue.push(w);
        }
    }
    require(seen[to], Errc::Internal, "tree does not span");
    std::vector<int> darts;
    for (int v = to; v != from; v = s.dart_tail(parent_dart[v])) darts.push_back(parent_dart[v]);
    std::reverse(darts.begin(), darts.end());
    return darts;
}

} // namespace

Orientation q_connected_orientation(const EmbeddedPlanarGraph& g, const SpanningTree& t) {
    const auto& s = g.structure();
    Orientation o;
    o.forward.assign(s.edge_count(), 0);

    // Tree edges: parent -> child from the root.
    std::vector<char> seen(s.vertex_count(), 0);
    std::queue<int> queue;
    queue.push(g.root());
    seen[g.root()] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (int d : s.rotation()[v]) {
            if (!t.contains(dart_edge(d))) continue;
            int w = s.dart_head(d);
            if (seen[w]) continue;
            seen[w] = 1;
            ++reached;
            o.forward[dart_edge(d)] = dart_is_forward(d);
            queue.push(w);
        }
    }
    require(reached == s.vertex_count(), Errc::Internal, "not a spanning tree");

    // Non-tree edges close a counterclockwise fundamental cycle.
    for (int e = 0; e < s.edge_count(); ++e) {
        if (t.contains(e)) continue;
        std::vector<int> walk{dart_forward(e)};
        auto path = tree_path(s, t, s.edge_v(e), s.edge_u(e));
        walk.insert(walk.end(), path.begin(), path.end());
        o.forward[e] = is_ccw(s, walk);
    }
    return o;
}

bool is_q_connected(const EmbeddedPlanarGraph& g, const Orientation& o) {
    const auto& s = g.structure();
    std::vector<char> seen(s.vertex_count(), 0);
    std::queue<int> queue;
    queue.push(g.root());
    seen[g.root()] = 1;
    int reached = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (int d : s.rotation()[v]) {
            int e = dart_edge(d);
            if (o.tail(s, e) != v) continue;
            int w = o.head(s, e);
            if (seen[w]) continue;
            seen[w] = 1;
            ++reached;
            queue.push(w);
        }
    }
    return reached == s.vertex_count();
}

std::vector<std::pair<uint32_t, uint32_t>> simple_cycle_patterns(const EmbeddedPlanarGraph& g) {
    std::vector<std::pair<uint32_t, uint32_t>> out;
    for (const auto& cycle : simple_cycles(g.structure())) {
        uint32_t mask = 0, pattern = 0;
        for (int d : cycle) {
            mask |= (1u << dart_edge(d));
            if (dart_is_forward(d)) pattern |= (1u << dart_edge(d));
        }
        out.emplace_back(mask, pattern);
    }
    return out;
}

std::vector<std::pair<uint32_t, uint32_t>> bond_patterns(const EmbeddedPlanarGraph& g) {
    const auto& s = g.structure();
    const int n = s.vertex_count();
    require(n <= 30, Errc::TooLarge, "bond enumeration uses vertex-set bitmasks");
    const uint32_t all = (n == 32) ? ~0u : ((1u << n) - 1);

    std::vector<uint32_t> adjacency(n, 0);
    for (auto [u, v] : s.edges()) {
        adjacency[u] |= (1u << v);
        adjacency[v] |= (1u << u);
    }
    auto connected_in = [&](uint32_t set) {
        if (set == 0) return false;
        uint32_t start = set & (~set + 1);
        uint32_t seen = start, frontier = start;
        while (frontier) {
            uint32_t next = 0;
            uint32_t f = frontier;
            while (f) {
                int v = __builtin_ctz(f);
                f &= f - 1;
                next |= adjacency[v] & set;
            }
            frontier = next & ~seen;
            seen |= next;
        }
        return seen == set;
    };

    std::vector<std::pair<uint32_t, uint32_t>> out;
    // Canonical side: subsets not containing vertex 0.
    for (uint32_t side = 1; side < (1u << (n - 1)); ++side) {
        uint32_t set = side << 1;
        if (!connected_in(set) || !connected_in(all & ~set)) continue;
        uint32_t mask = 0, pattern = 0;
        for (int e = 0; e < s.edge_count(); ++e) {
            bool u_in = (set >> s.edge_u(e)) & 1u;
            bool v_in = (set >> s.edge_v(e)) & 1u;
            if (u_in == v_in) continue;
            mask |= (1u << e);
            if (v_in) pattern |= (1u << e); // forward dart points into the set
        }
        if (mask) out.emplace_back(mask, pattern);
    }
    return out;
}

std::vector<OrientationClass> orientation_classes(const EmbeddedPlanarGraph& g, int max_edges) {
    const auto& s = g.structure();
    const int m = s.edge_count();
    require(m <= max_edges && m <= kOrientationExhaustionBound, Errc::TooLarge,
            "orientation class exhaustion is limited to " +
                std::to_string(kOrientationExhaustionBound) + " edges");

    auto moves = simple_cycle_patterns(g);
    auto bonds = bond_patterns(g);
    moves.insert(moves.end(), bonds.begin(), bonds.end());

    const uint32_t total = 1u << m;
    std::vector<uint32_t> parent(total);
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto unite = [&](uint32_t a, uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    };
    for (uint32_t o = 0; o < total; ++o)
        for (auto [mask, pattern] : moves) {
            uint32_t bits = o & mask;
            if (bits == pattern || bits == (mask ^ pattern)) unite(o, o ^ mask);
        }

    std::map<uint32_t, OrientationClass> classes;
    for (uint32_t o = 0; o < total; ++o) classes[find(o)].members.push_back(o);
    std::vector<OrientationClass> out;
    for (auto& [root, cls] : classes) {
        for (uint32_t o : cls.members)
            if (is_q_connected(g, Orientation::from_mask(m, o))) cls.q_connected_members.push_back(o);
        out.push_back(std::move(cls));
    }
    return out;
}

Divisor bernardi_divisor(const EmbeddedPlanarGraph& g, const Orientation& o) {
    Divisor d(g.vertex_count());
    for (auto& c : d.coefficients) c = -1;
    for (int e = 0; e < g.edge_count(); ++e) d.coefficients[o.head(g.structure(), e)] += 1;
    return d;
}

JacobianElement bernardi_class(const JacobianContext& jac, const Orientation& o,
                               const Divisor& d0) {
    const EmbeddedPlanarGraph& g = jac.graph();
    require(d0.degree() == g.genus() - 1, Errc::BadReferenceDegree,
            "reference divisor must have degree genus - 1");
    return jac.class_of(bernardi_divisor(g, o) - d0);
}

} // namespace temperley
