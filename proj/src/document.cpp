#include "temperley/document.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace temperley {

namespace {

using json = nlohmann::ordered_json;

std::string id_to_string(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    fail(Errc::BadDocument, "ids must be strings or integers");
}

Rat parse_exact_number(const json& v, const std::string& what) {
    if (v.is_number_integer()) return Rat(mpz_class(std::to_string(v.get<long long>())));
    if (v.is_array()) {
        require(v.size() == 2 && v[0].is_number_integer() && v[1].is_number_integer(),
                Errc::BadDocument, what + ": rational pairs are [numerator, denominator]");
        Rat r(mpz_class(std::to_string(v[0].get<long long>())),
              mpz_class(std::to_string(v[1].get<long long>())));
        require(r.get_den() != 0, Errc::BadDocument, what + ": zero denominator");
        r.canonicalize();
        return r;
    }
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        // "p/q" or a plain decimal such as "-0.25".
        auto slash = s.find('/');
        try {
            if (slash != std::string::npos) {
                Rat r(mpz_class(s.substr(0, slash), 10), mpz_class(s.substr(slash + 1), 10));
                require(r.get_den() != 0, Errc::BadDocument, what + ": zero denominator");
                r.canonicalize();
                return r;
            }
            auto dot = s.find('.');
            if (dot == std::string::npos) return Rat(mpz_class(s, 10));
            std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            int scale = int(s.size() - dot - 1);
            Rat r{mpz_class(digits, 10)};
            for (int i = 0; i < scale; ++i) r /= 10;
            r.canonicalize();
            return r;
        } catch (const std::invalid_argument&) {
            fail(Errc::BadDocument, what + ": cannot parse number '" + s + "'");
        }
    }
    if (v.is_number_float()) {
        // Exact binary value of the double; decimals that are not binary
        // fractions should be passed as strings or pairs instead.
        Rat r(v.get<double>());
        r.canonicalize();
        return r;
    }
    fail(Errc::BadDocument, what + ": expected an exact number");
}

json emit_exact_number(const Rat& r) {
    if (r.get_den() == 1) {
        if (r.get_num().fits_slong_p()) return json(r.get_num().get_si());
        return json(r.get_num().get_str());
    }
    if (r.get_num().fits_slong_p() && r.get_den().fits_slong_p())
        return json::array({r.get_num().get_si(), r.get_den().get_si()});
    return json(r.get_num().get_str() + "/" + r.get_den().get_str());
}

// Counterclockwise angular order from the positive x-axis, exact.
struct AngularLess {
    const std::vector<std::pair<Rat, Rat>>* vectors;
    bool operator()(int a, int b) const {
        const auto& [ax, ay] = (*vectors)[a];
        const auto& [bx, by] = (*vectors)[b];
        auto half = [](const Rat& x, const Rat& y) {
            return (y > 0 || (y == 0 && x > 0)) ? 0 : 1;
        };
        int ha = half(ax, ay), hb = half(bx, by);
        if (ha != hb) return ha < hb;
        Rat cross = ax * by - ay * bx;
        require(cross != 0, Errc::AmbiguousRotation,
                "two incident edges leave a vertex in the same direction");
        return cross > 0;
    }
};

} // namespace

EmbeddedPlanarGraph parse_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(Errc::BadDocument, std::string("not valid JSON: ") + e.what());
    }
    require(doc.is_object(), Errc::BadDocument, "top level must be an object");
    require(doc.contains("vertices") && doc["vertices"].is_array(), Errc::BadDocument,
            "missing 'vertices' list");
    require(doc.contains("edges") && doc["edges"].is_array(), Errc::BadDocument,
            "missing 'edges' list");
    require(doc.contains("root"), Errc::BadDocument, "missing 'root'");
    std::string name = doc.value("name", std::string{});

    // Vertices: canonical order, optional exact coordinates (all or none).
    std::vector<std::string> vertex_ids;
    std::map<std::string, std::pair<Rat, Rat>> coord_by_id;
    bool any_coords = false, all_coords = true;
    for (const auto& v : doc["vertices"]) {
        require(v.is_object() && v.contains("id"), Errc::BadDocument, "vertex entries need an id");
        std::string id = id_to_string(v["id"]);
        require(std::find(vertex_ids.begin(), vertex_ids.end(), id) == vertex_ids.end(),
                Errc::BadDocument, "duplicate vertex id '" + id + "'");
        vertex_ids.push_back(id);
        bool has_x = v.contains("x"), has_y = v.contains("y");
        require(has_x == has_y, Errc::BadDocument, "vertex '" + id + "' has x without y");
        if (has_x) {
            any_coords = true;
            coord_by_id[id] = {parse_exact_number(v["x"], "vertex " + id + " x"),
                               parse_exact_number(v["y"], "vertex " + id + " y")};
        } else {
            all_coords = false;
        }
    }
    require(!vertex_ids.empty(), Errc::BadDocument, "graph needs at least one vertex");
    require(!any_coords || all_coords, Errc::BadDocument,
            "either every vertex has coordinates or none do");
    std::sort(vertex_ids.begin(), vertex_ids.end(),
              [](const std::string& a, const std::string& b) { return compare_ids(a, b) < 0; });
    auto vertex_index = [&](const std::string& id) {
        auto it = std::lower_bound(vertex_ids.begin(), vertex_ids.end(), id,
                                   [](const std::string& a, const std::string& b) {
                                       return compare_ids(a, b) < 0;
                                   });
        require(it != vertex_ids.end() && *it == id, Errc::BadDocument,
                "unknown vertex id '" + id + "'");
        return int(it - vertex_ids.begin());
    };

    std::optional<std::vector<std::pair<Rat, Rat>>> coords;
    if (any_coords) {
        coords.emplace(vertex_ids.size());
        for (const auto& [id, xy] : coord_by_id) (*coords)[vertex_index(id)] = xy;
    }

    // Edges: canonical order by id; no self-loops.
    struct RawEdge {
        std::string id;
        std::string u, v;
    };
    std::vector<RawEdge> raw_edges;
    for (const auto& e : doc["edges"]) {
        require(e.is_object() && e.contains("id") && e.contains("u") && e.contains("v"),
                Errc::BadDocument, "edge entries need id, u, v");
        RawEdge re{id_to_string(e["id"]), id_to_string(e["u"]), id_to_string(e["v"])};
        for (const auto& other : raw_edges)
            require(other.id != re.id, Errc::BadDocument, "duplicate edge id '" + re.id + "'");
        raw_edges.push_back(std::move(re));
    }
    require(!raw_edges.empty(), Errc::BadDocument, "graph needs at least one edge");
    std::sort(raw_edges.begin(), raw_edges.end(),
              [](const RawEdge& a, const RawEdge& b) { return compare_ids(a.id, b.id) < 0; });

    std::vector<std::string> edge_ids;
    std::vector<std::pair<int, int>> edges;
    for (const auto& re : raw_edges) {
        int u = vertex_index(re.u), v = vertex_index(re.v);
        require(u != v, Errc::HasSelfLoop, "edge '" + re.id + "' is a self-loop");
        edge_ids.push_back(re.id);
        edges.emplace_back(u, v);
    }
    auto edge_index = [&](const std::string& id) {
        for (int e = 0; e < int(edge_ids.size()); ++e)
            if (edge_ids[e] == id) return e;
        fail(Errc::BadDocument, "unknown edge id '" + id + "'");
    };

    const int n = int(vertex_ids.size());
    std::vector<std::vector<int>> incident(n); // darts with tail at v
    for (int e = 0; e < int(edges.size()); ++e) {
        incident[edges[e].first].push_back(dart_forward(e));
        incident[edges[e].second].push_back(dart_backward(e));
    }

    // Connectivity before any face computation.
    {
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int d : incident[v]) {
                int w = edges[dart_edge(d)].first == v ? edges[dart_edge(d)].second
                                                       : edges[dart_edge(d)].first;
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        require(reached == n, Errc::NotConnected, "graph is not connected");
    }

    bool parallel = false;
    {
        std::vector<std::pair<int, int>> keys;
        for (auto [u, v] : edges) keys.emplace_back(std::min(u, v), std::max(u, v));
        std::sort(keys.begin(), keys.end());
        parallel = std::adjacent_find(keys.begin(), keys.end()) != keys.end();
    }

    // Rotation: explicit, or derived from coordinates by CCW angular sort.
    std::vector<std::vector<int>> rotation(n);
    if (doc.contains("rotation")) {
        require(doc["rotation"].is_object(), Errc::BadDocument, "'rotation' must be an object");
        for (const auto& [vid, list] : doc["rotation"].items()) {
            int v = vertex_index(vid);
            require(list.is_array(), Errc::BadDocument, "rotation entries are edge-id lists");
            for (const auto& item : list) {
                int e = edge_index(id_to_string(item));
                int d = edges[e].first == v ? dart_forward(e) : dart_backward(e);
                require(edges[e].first == v || edges[e].second == v, Errc::BadDocument,
                        "rotation at '" + vid + "' lists non-incident edge '" + edge_ids[e] + "'");
                rotation[v].push_back(d);
            }
        }
        for (int v = 0; v < n; ++v) {
            auto sorted_expected = incident[v];
            auto sorted_given = rotation[v];
            std::sort(sorted_expected.begin(), sorted_expected.end());
            std::sort(sorted_given.begin(), sorted_given.end());
            require(sorted_expected == sorted_given, Errc::BadDocument,
                    "rotation at '" + vertex_ids[v] + "' must list each incident edge exactly once");
        }
    } else {
        require(coords.has_value(), Errc::AmbiguousRotation,
                "no rotation given and no coordinates to derive one from");
        require(!parallel, Errc::AmbiguousRotation,
                "parallel edges require an explicit rotation");
        for (int v = 0; v < n; ++v) {
            std::vector<std::pair<Rat, Rat>> dirs;
            for (int d : incident[v]) {
                int w = edges[dart_edge(d)].first == v ? edges[dart_edge(d)].second
                                                       : edges[dart_edge(d)].first;
                dirs.emplace_back((*coords)[w].first - (*coords)[v].first,
                                  (*coords)[w].second - (*coords)[v].second);
                require(dirs.back().first != 0 || dirs.back().second != 0, Errc::BadDocument,
                        "two vertices share coordinates");
            }
            std::vector<int> order(incident[v].size());
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&](int a, int b) {
                return AngularLess{&dirs}(a, b);
            });
            for (int k : order) rotation[v].push_back(incident[v][k]);
        }
    }

    // Canonical rotation start: smallest dart first (cyclic order unchanged).
    for (auto& list : rotation) {
        if (list.empty()) continue;
        auto smallest = std::min_element(list.begin(), list.end());
        std::rotate(list.begin(), smallest, list.end());
    }

    PlanarStructure structure = PlanarStructure::build(n, edges, rotation);

    // Bridges make the dual edge a self-loop; reject them.
    for (int e = 0; e < structure.edge_count(); ++e)
        require(structure.face_left(dart_forward(e)) != structure.face_right(dart_forward(e)),
                Errc::HasBridge, "edge '" + edge_ids[e] + "' is a bridge");

    // Outer face: explicit dart specs, else the unique clockwise boundary by
    // the shoelace sign of the face polygon.
    int outer = -1;
    if (doc.contains("outer_face")) {
        const auto& of = doc["outer_face"];
        std::vector<std::string> specs;
        if (of.is_string()) specs.push_back(of.get<std::string>());
        else {
            require(of.is_array() && !of.empty(), Errc::BadDocument,
                    "'outer_face' is a dart spec list");
            for (const auto& item : of) specs.push_back(item.get<std::string>());
        }
        // Dart specs are 'edgeid:tailid'; ids may themselves contain colons,
        // so try every split and demand exactly one (edge, endpoint) match.
        auto resolve_dart = [&](const std::string& spec) {
            int dart = -1;
            for (size_t colon = spec.find(':'); colon != std::string::npos;
                 colon = spec.find(':', colon + 1)) {
                std::string edge_id = spec.substr(0, colon);
                std::string tail_id = spec.substr(colon + 1);
                auto eit = std::find(edge_ids.begin(), edge_ids.end(), edge_id);
                if (eit == edge_ids.end()) continue;
                int e = int(eit - edge_ids.begin());
                auto vit = std::find(vertex_ids.begin(), vertex_ids.end(), tail_id);
                if (vit == vertex_ids.end()) continue;
                int tail = int(vit - vertex_ids.begin());
                if (edges[e].first != tail && edges[e].second != tail) continue;
                int candidate = edges[e].first == tail ? dart_forward(e) : dart_backward(e);
                require(dart < 0 || dart == candidate, Errc::BadDocument,
                        "ambiguous dart spec '" + spec + "'");
                dart = candidate;
            }
            require(dart >= 0, Errc::BadDocument,
                    "dart '" + spec + "' does not name an edge and one of its endpoints");
            return dart;
        };
        for (size_t i = 0; i < specs.size(); ++i) {
            int f = structure.face_left(resolve_dart(specs[i]));
            if (i == 0) outer = f;
            require(f == outer, Errc::BadDocument,
                    "outer_face darts do not all lie on one face");
        }
    } else if (coords.has_value() && !parallel) {
        for (int f = 0; f < structure.face_count(); ++f) {
            Rat area = 0;
            const auto& boundary = structure.face_boundary(f);
            for (size_t i = 0; i < boundary.size(); ++i) {
                auto [x1, y1] = (*coords)[structure.dart_tail(boundary[i])];
                auto [x2, y2] = (*coords)[structure.dart_tail(boundary[(i + 1) % boundary.size()])];
                area += x1 * y2 - x2 * y1;
            }
            if (area < 0) {
                require(outer < 0, Errc::AmbiguousOuterFace,
                        "more than one face has a clockwise boundary polygon");
                outer = f;
            }
        }
        require(outer >= 0, Errc::AmbiguousOuterFace, "no face has a clockwise boundary polygon");
    } else {
        fail(Errc::AmbiguousOuterFace,
             "outer_face must be given explicitly (no usable coordinates)");
    }
    structure.set_outer_face(outer);

    // Root must sit on the outer boundary walk.
    std::string root_id = id_to_string(doc["root"]);
    int root = vertex_index(root_id);
    bool on_outer = false;
    for (int d : structure.face_boundary(outer))
        if (structure.dart_tail(d) == root) on_outer = true;
    require(on_outer, Errc::RootNotOnOuterFace,
            "root '" + root_id + "' is not on the outer face boundary");

    return EmbeddedPlanarGraph(name, std::move(structure), std::move(vertex_ids),
                               std::move(edge_ids), std::move(coords), root);
}

std::string emit_document(const EmbeddedPlanarGraph& g) {
    const PlanarStructure& s = g.structure();
    json doc;
    doc["name"] = g.name();
    doc["vertices"] = json::array();
    for (int v = 0; v < g.vertex_count(); ++v) {
        json entry;
        entry["id"] = g.vertex_id(v);
        if (g.has_coords()) {
            entry["x"] = emit_exact_number(g.coords()[v].first);
            entry["y"] = emit_exact_number(g.coords()[v].second);
        }
        doc["vertices"].push_back(entry);
    }
    doc["edges"] = json::array();
    for (int e = 0; e < g.edge_count(); ++e)
        doc["edges"].push_back({{"id", g.edge_id(e)},
                                {"u", g.vertex_id(s.edge_u(e))},
                                {"v", g.vertex_id(s.edge_v(e))}});
    doc["root"] = g.vertex_id(g.root());
    json rotation = json::object();
    for (int v = 0; v < g.vertex_count(); ++v) {
        json list = json::array();
        for (int d : s.rotation()[v]) list.push_back(g.edge_id(dart_edge(d)));
        rotation[g.vertex_id(v)] = list;
    }
    doc["rotation"] = rotation;
    json outer = json::array();
    for (int d : s.face_boundary(s.outer_face()))
        outer.push_back(g.edge_id(dart_edge(d)) + ":" + g.vertex_id(s.dart_tail(d)));
    doc["outer_face"] = outer;
    return doc.dump(2) + "\n";
}

std::string document_digest(const EmbeddedPlanarGraph& g) {
    std::string bytes = emit_document(g);
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << "fnv1a:" << std::hex << h;
    return os.str();
}

} // namespace temperley
