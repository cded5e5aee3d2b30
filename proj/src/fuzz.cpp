#include "temperley/fuzz.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace temperley {

namespace {

struct Builder {
    std::vector<std::pair<Rat, Rat>> coords;
    std::vector<std::pair<int, int>> edges;

    int add_vertex(Rat x, Rat y) {
        coords.emplace_back(std::move(x), std::move(y));
        return int(coords.size()) - 1;
    }
    void add_edge(int u, int v) { edges.emplace_back(u, v); }

    bool connected_without(int skip) const {
        const int n = int(coords.size());
        std::vector<std::vector<int>> adj(n);
        for (int e = 0; e < int(edges.size()); ++e) {
            if (e == skip) continue;
            adj[edges[e].first].push_back(edges[e].second);
            adj[edges[e].second].push_back(edges[e].first);
        }
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        return reached == n;
    }

    bool bridgeless_without(int skip) const {
        // DFS lowlink bridge detection on the graph minus one edge.
        const int n = int(coords.size());
        std::vector<std::vector<std::pair<int, int>>> adj(n); // (neighbor, edge)
        for (int e = 0; e < int(edges.size()); ++e) {
            if (e == skip) continue;
            adj[edges[e].first].emplace_back(edges[e].second, e);
            adj[edges[e].second].emplace_back(edges[e].first, e);
        }
        std::vector<int> disc(n, -1), low(n, 0);
        int timer = 0;
        bool bridge = false;
        auto dfs = [&](auto&& self, int v, int via_edge) -> void {
            disc[v] = low[v] = timer++;
            for (auto [w, e] : adj[v]) {
                if (e == via_edge) {
                    via_edge = -2; // consume one copy; parallel edges are back-edges
                    continue;
                }
                if (disc[w] < 0) {
                    self(self, w, e);
                    low[v] = std::min(low[v], low[w]);
                    if (low[w] > disc[v]) bridge = true;
                } else {
                    low[v] = std::min(low[v], disc[w]);
                }
            }
        };
        dfs(dfs, 0, -1);
        return !bridge;
    }
};

std::string rat_to_json(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return "[" + r.get_num().get_str() + ", " + r.get_den().get_str() + "]";
}

} // namespace

EmbeddedPlanarGraph random_planar_graph(Rng& rng, int max_edges, const std::string& name) {
    require(max_edges >= 3, Errc::BadDocument, "fuzz graphs need at least 3 edges");
    Builder b;
    b.add_vertex(Rat(0), Rat(0));
    b.add_vertex(Rat(1), Rat(0));
    b.add_vertex(Rat(0), Rat(1));
    b.add_edge(0, 1);
    b.add_edge(1, 2);
    b.add_edge(2, 0);
    // Triangles as vertex triples, kept in sync while stacking.
    std::vector<std::array<int, 3>> faces{{0, 1, 2}};

    int stackings = int(rng.below(uint64_t((max_edges - 3) / 3) + 1));
    for (int step = 0; step < stackings; ++step) {
        int pick = int(rng.below(faces.size()));
        auto [u, v, w] = faces[pick];
        Rat cx = (b.coords[u].first + b.coords[v].first + b.coords[w].first) / 3;
        Rat cy = (b.coords[u].second + b.coords[v].second + b.coords[w].second) / 3;
        int x = b.add_vertex(cx, cy);
        b.add_edge(u, x);
        b.add_edge(v, x);
        b.add_edge(w, x);
        faces[pick] = {u, v, x};
        faces.push_back({v, w, x});
        faces.push_back({w, u, x});
    }

    // Random deletions that keep the graph connected and bridgeless.
    int attempts = int(rng.below(uint64_t(b.edges.size())));
    std::vector<char> deleted(b.edges.size(), 0);
    for (int k = 0; k < attempts; ++k) {
        int e = int(rng.below(b.edges.size()));
        if (deleted[e]) continue;
        deleted[e] = 1;
        Builder trial;
        trial.coords = b.coords;
        for (int i = 0; i < int(b.edges.size()); ++i)
            if (!deleted[i]) trial.add_edge(b.edges[i].first, b.edges[i].second);
        if (int(trial.edges.size()) < 3 || !trial.connected_without(-1) ||
            !trial.bridgeless_without(-1))
            deleted[e] = 0;
    }

    // Emit a document with a provisional root, parse, then pick a random
    // root on the resulting outer face.
    auto emit = [&](const std::string& root) {
        std::ostringstream os;
        os << "{\"name\": \"" << name << "\", \"vertices\": [";
        for (int v = 0; v < int(b.coords.size()); ++v) {
            if (v) os << ", ";
            os << "{\"id\": \"v" << v << "\", \"x\": " << rat_to_json(b.coords[v].first)
               << ", \"y\": " << rat_to_json(b.coords[v].second) << "}";
        }
        os << "], \"edges\": [";
        bool first = true;
        for (int e = 0; e < int(b.edges.size()); ++e) {
            if (deleted[e]) continue;
            if (!first) os << ", ";
            first = false;
            os << "{\"id\": \"e" << e << "\", \"u\": \"v" << b.edges[e].first << "\", \"v\": \"v"
               << b.edges[e].second << "\"}";
        }
        os << "], \"root\": \"" << root << "\"}";
        return os.str();
    };

    EmbeddedPlanarGraph provisional = parse_document(emit("v0"));
    const PlanarStructure& s = provisional.structure();
    std::vector<int> outer_vertices;
    for (int d : s.face_boundary(s.outer_face())) outer_vertices.push_back(s.dart_tail(d));
    std::sort(outer_vertices.begin(), outer_vertices.end());
    outer_vertices.erase(std::unique(outer_vertices.begin(), outer_vertices.end()),
                         outer_vertices.end());
    int q = outer_vertices[rng.below(outer_vertices.size())];
    return parse_document(emit(provisional.vertex_id(q)));
}

std::vector<FuzzOutcome> run_fuzz(const FuzzOptions& options, const VerifyOptions& verify) {
    Rng rng(options.seed);
    std::vector<FuzzOutcome> out;
    for (int i = 0; i < options.count; ++i) {
        std::string name = "fuzz" + std::to_string(i);
        EmbeddedPlanarGraph g = random_planar_graph(rng, options.max_edges, name);
        FuzzOutcome outcome;
        outcome.name = name;
        outcome.edges = g.edge_count();
        outcome.report = verify_graph(g, verify);
        out.push_back(std::move(outcome));
    }
    return out;
}

} // namespace temperley
