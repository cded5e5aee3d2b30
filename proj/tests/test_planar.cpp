#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "temperley/document.hpp"
#include "temperley/planar.hpp"

using namespace temperley;

TEST_CASE("face counts are Euler-forced on the desk graphs") {
    CHECK(fixtures::graph(fixtures::k3()).structure().face_count() == 2);
    CHECK(fixtures::graph(fixtures::c4()).structure().face_count() == 2);
    CHECK(fixtures::graph(fixtures::theta()).structure().face_count() == 3);
    CHECK(fixtures::graph(fixtures::digon()).structure().face_count() == 2);
    CHECK(fixtures::graph(fixtures::k4()).structure().face_count() == 4);
}

TEST_CASE("theta faces match the hand trace") {
    auto g = fixtures::graph(fixtures::theta());
    const auto& s = g.structure();
    REQUIRE(s.face_count() == 3);
    // Each face is a 2-gon; f(e1,e2), f(e2,e3) bounded, f(e3,e1) outer.
    for (int f = 0; f < 3; ++f) CHECK(s.face_degree(f) == 2);
    int e1 = g.edge_index("e1"), e2 = g.edge_index("e2"), e3 = g.edge_index("e3");
    int f12 = s.face_left(dart_forward(e1));
    CHECK(f12 == s.face_left(dart_backward(e2)));
    int f23 = s.face_left(dart_forward(e2));
    CHECK(f23 == s.face_left(dart_backward(e3)));
    int fout = s.face_left(dart_forward(e3));
    CHECK(fout == s.face_left(dart_backward(e1)));
    CHECK(s.outer_face() == fout);
}

TEST_CASE("Euler relation and dart partition hold on every fixture") {
    for (const auto& text : fixtures::desk_documents()) {
        auto g = fixtures::graph(text);
        const auto& s = g.structure();
        CAPTURE(g.name());
        CHECK(s.vertex_count() - s.edge_count() + s.face_count() == 2);
        int total = 0;
        std::vector<int> seen(s.dart_count(), 0);
        for (int f = 0; f < s.face_count(); ++f)
            for (int d : s.face_boundary(f)) {
                ++seen[d];
                ++total;
            }
        CHECK(total == 2 * s.edge_count());
        for (int d = 0; d < s.dart_count(); ++d) CHECK(seen[d] == 1);
    }
}

TEST_CASE("duals of the desk graphs") {
    auto g3 = fixtures::graph(fixtures::k3());
    DualGraph d3 = dual(g3);
    CHECK(d3.face_count == 2);
    CHECK(d3.dual_edges.size() == 3); // theta graph on the two faces
    for (auto [a, b] : d3.dual_edges) CHECK(a != b);

    auto gc = fixtures::graph(fixtures::c4());
    DualGraph dc = dual(gc);
    CHECK(dc.face_count == 2);
    CHECK(dc.dual_edges.size() == 4);

    auto gt = fixtures::graph(fixtures::theta());
    DualGraph dt = dual(gt);
    CHECK(dt.face_count == 3);
    CHECK(dt.dual_edges.size() == 3);
    // Dual of theta is a triangle: all three face pairs appear.
    std::set<std::pair<int, int>> pairs;
    for (auto [a, b] : dt.dual_edges) pairs.insert({std::min(a, b), std::max(a, b)});
    CHECK(pairs.size() == 3);
}

TEST_CASE("is_ccw on the K3 triangle") {
    auto g = fixtures::graph(fixtures::k3());
    int e1 = g.edge_index("e1"), e2 = g.edge_index("e2"), e3 = g.edge_index("e3");
    // 0 -> 1 -> 2 -> 0 keeps the inner face on the left.
    std::vector<int> cycle{dart_forward(e1), dart_forward(e2), dart_forward(e3)};
    CHECK(is_ccw(g, cycle));
    std::vector<int> reversed{dart_backward(e3), dart_backward(e2), dart_backward(e1)};
    CHECK_FALSE(is_ccw(g, reversed));
    CHECK(shoelace_area_2x(g, cycle) > 0);
    CHECK(shoelace_area_2x(g, reversed) < 0);
}

TEST_CASE("is_ccw on a theta 2-gon") {
    auto g = fixtures::graph(fixtures::theta());
    const auto& s = g.structure();
    int e1 = g.edge_index("e1"), e2 = g.edge_index("e2");
    // e1 forward then e2 backward encloses f(e1,e2), which lies left of e1 forward.
    std::vector<int> cycle{dart_forward(e1), dart_backward(e2)};
    int enclosed = s.face_left(dart_forward(e1));
    CHECK(enclosed != s.outer_face());
    CHECK(is_ccw(g, cycle));
    CHECK_FALSE(is_ccw(g, {dart_forward(e2), dart_backward(e1)}));
}

TEST_CASE("is_ccw rejects non-cycles") {
    auto g = fixtures::graph(fixtures::k3());
    int e1 = g.edge_index("e1"), e2 = g.edge_index("e2");
    CHECK_THROWS_AS(is_ccw(g, {dart_forward(e1)}), Error);
    CHECK_THROWS_AS(is_ccw(g, {dart_forward(e1), dart_forward(e2)}), Error); // open walk
    CHECK_THROWS_AS(is_ccw(g, {dart_forward(e1), dart_backward(e1)}), Error);
}

TEST_CASE("is_ccw xor reversal on every simple cycle of every fixture") {
    for (const auto& text : fixtures::desk_documents()) {
        auto g = fixtures::graph(text);
        const auto& s = g.structure();
        CAPTURE(g.name());
        // Enumerate simple cycles by dart-path backtracking from each base vertex.
        std::vector<std::vector<int>> cycles;
        std::vector<int> path;
        std::vector<char> used_vertex(s.vertex_count(), 0);
        auto walk = [&](auto&& self, int base, int v) -> void {
            for (int d : s.rotation()[v]) {
                int w = s.dart_head(d);
                if (!path.empty() && dart_edge(d) == dart_edge(path.back())) continue;
                if (w == base && path.size() >= 1) {
                    path.push_back(d);
                    cycles.push_back(path);
                    path.pop_back();
                    continue;
                }
                if (w < base || used_vertex[w]) continue;
                used_vertex[w] = 1;
                path.push_back(d);
                self(self, base, w);
                path.pop_back();
                used_vertex[w] = 0;
            }
        };
        for (int base = 0; base < s.vertex_count(); ++base) {
            used_vertex[base] = 1;
            walk(walk, base, base);
            used_vertex[base] = 0;
        }
        int checked = 0;
        for (const auto& cycle : cycles) {
            if (cycle.size() < 2) continue;
            std::vector<int> rev;
            for (auto it = cycle.rbegin(); it != cycle.rend(); ++it) rev.push_back(dart_reverse(*it));
            bool fwd = is_ccw(s, cycle);
            CHECK(fwd != is_ccw(s, rev));
            if (g.has_coords() && !s.has_parallel_edges()) {
                Rat area = shoelace_area_2x(g, cycle);
                CHECK((area > 0) == fwd);
            }
            ++checked;
        }
        CHECK(checked > 0);
    }
}

TEST_CASE("document round trip is the identity on the canonical form") {
    for (const auto& text : fixtures::desk_documents()) {
        auto g = fixtures::graph(text);
        std::string canon = emit_document(g);
        auto g2 = parse_document(canon);
        CAPTURE(g.name());
        CHECK(g == g2);
        CHECK(emit_document(g2) == canon);
        CHECK(document_digest(g) == document_digest(g2));
    }
}

TEST_CASE("parse errors carry the right codes") {
    auto code_of = [](const std::string& text) {
        try {
            parse_document(text);
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::Internal;
    };

    SUBCASE("self loop") {
        CHECK(code_of(R"({"name":"x","vertices":[{"id":"a"},{"id":"b"}],
          "edges":[{"id":"e1","u":"a","v":"a"},{"id":"e2","u":"a","v":"b"}],"root":"a"})") ==
              Errc::HasSelfLoop);
    }
    SUBCASE("not connected") {
        CHECK(code_of(R"({"name":"x","vertices":[
            {"id":"0","x":0,"y":0},{"id":"1","x":1,"y":0},{"id":"2","x":0,"y":1},
            {"id":"3","x":5,"y":0},{"id":"4","x":6,"y":0},{"id":"5","x":5,"y":1}],
          "edges":[{"id":"a1","u":"0","v":"1"},{"id":"a2","u":"1","v":"2"},{"id":"a3","u":"2","v":"0"},
                   {"id":"b1","u":"3","v":"4"},{"id":"b2","u":"4","v":"5"},{"id":"b3","u":"5","v":"3"}],
          "root":"0"})") == Errc::NotConnected);
    }
    SUBCASE("bridge: two triangles joined by an edge") {
        CHECK(code_of(R"({"name":"x","vertices":[
            {"id":"0","x":0,"y":0},{"id":"1","x":2,"y":0},{"id":"2","x":1,"y":1},
            {"id":"3","x":5,"y":0},{"id":"4","x":7,"y":0},{"id":"5","x":6,"y":1}],
          "edges":[{"id":"a1","u":"0","v":"1"},{"id":"a2","u":"1","v":"2"},{"id":"a3","u":"2","v":"0"},
                   {"id":"b1","u":"3","v":"4"},{"id":"b2","u":"4","v":"5"},{"id":"b3","u":"5","v":"3"},
                   {"id":"br","u":"1","v":"3"}],
          "root":"0"})") == Errc::HasBridge);
    }
    SUBCASE("root not on outer face") {
        // Wheel on 4 rim vertices, hub as root.
        CHECK(code_of(R"({"name":"x","vertices":[
            {"id":"0","x":0,"y":0},{"id":"1","x":4,"y":0},{"id":"2","x":4,"y":4},{"id":"3","x":0,"y":4},
            {"id":"h","x":2,"y":2}],
          "edges":[{"id":"r1","u":"0","v":"1"},{"id":"r2","u":"1","v":"2"},{"id":"r3","u":"2","v":"3"},{"id":"r4","u":"3","v":"0"},
                   {"id":"s1","u":"h","v":"0"},{"id":"s2","u":"h","v":"1"},{"id":"s3","u":"h","v":"2"},{"id":"s4","u":"h","v":"3"}],
          "root":"h"})") == Errc::RootNotOnOuterFace);
    }
    SUBCASE("parallel edges without explicit rotation") {
        CHECK(code_of(R"({"name":"x","vertices":[{"id":"a","x":0,"y":0},{"id":"b","x":1,"y":0}],
          "edges":[{"id":"e1","u":"a","v":"b"},{"id":"e2","u":"a","v":"b"}],"root":"a"})") ==
              Errc::AmbiguousRotation);
    }
    SUBCASE("no rotation and no coordinates") {
        CHECK(code_of(R"({"name":"x","vertices":[{"id":"a"},{"id":"b"},{"id":"c"}],
          "edges":[{"id":"e1","u":"a","v":"b"},{"id":"e2","u":"b","v":"c"},{"id":"e3","u":"c","v":"a"}],
          "root":"a"})") == Errc::AmbiguousRotation);
    }
    SUBCASE("rotation without any way to pick the outer face") {
        CHECK(code_of(R"({"name":"x","vertices":[{"id":"a"},{"id":"b"},{"id":"c"}],
          "edges":[{"id":"e1","u":"a","v":"b"},{"id":"e2","u":"b","v":"c"},{"id":"e3","u":"c","v":"a"}],
          "root":"a",
          "rotation":{"a":["e1","e3"],"b":["e2","e1"],"c":["e3","e2"]}})") ==
              Errc::AmbiguousOuterFace);
    }
    SUBCASE("nonplanar rotation fails the Euler check") {
        // K4 with one rotation flipped relative to a planar embedding.
        CHECK(code_of(R"({"name":"x","vertices":[{"id":"0"},{"id":"1"},{"id":"2"},{"id":"3"}],
          "edges":[{"id":"e1","u":"0","v":"1"},{"id":"e2","u":"1","v":"2"},{"id":"e3","u":"2","v":"0"},
                   {"id":"e4","u":"0","v":"3"},{"id":"e5","u":"1","v":"3"},{"id":"e6","u":"2","v":"3"}],
          "root":"0",
          "rotation":{"0":["e1","e4","e3"],"1":["e2","e5","e1"],"2":["e3","e6","e2"],
                      "3":["e4","e6","e5"]},
          "outer_face":["e1:1"]})") == Errc::NonPlanarRotation);
    }
    SUBCASE("malformed json") {
        CHECK(code_of("{nope") == Errc::BadDocument);
    }
}

TEST_CASE("coordinates parse exactly in all supported spellings") {
    auto g = parse_document(R"({"name":"x","vertices":[
        {"id":"0","x":0,"y":0},{"id":"1","x":[1,2],"y":"0.25"},{"id":"2","x":"1/3","y":2}],
      "edges":[{"id":"e1","u":"0","v":"1"},{"id":"e2","u":"1","v":"2"},{"id":"e3","u":"2","v":"0"}],
      "root":"0"})");
    CHECK(g.coords()[1].first == Rat(1, 2));
    CHECK(g.coords()[1].second == Rat(1, 4));
    CHECK(g.coords()[2].first == Rat(1, 3));
    // The canonical form survives a round trip.
    auto g2 = parse_document(emit_document(g));
    CHECK(g == g2);
}

TEST_CASE("numeric-aware id ordering") {
    CHECK(compare_ids("2", "10") < 0);
    CHECK(compare_ids("10", "2") > 0);
    CHECK(compare_ids("2", "b") < 0);
    CHECK(compare_ids("a", "b") < 0);
    CHECK(compare_ids("a", "a") == 0);
}
