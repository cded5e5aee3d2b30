#pragma once

// Desk-scale fixture graphs shared by the test suites.

#include <sstream>
#include <string>

#include "temperley/document.hpp"

namespace fixtures {

// Triangle, q = 0, straight-line coordinates, rotation derived.
inline std::string k3() {
    return R"({
      "name": "K3",
      "vertices": [{"id": "0", "x": 0, "y": 0}, {"id": "1", "x": 1, "y": 0}, {"id": "2", "x": 0, "y": 1}],
      "edges": [{"id": "e1", "u": "0", "v": "1"}, {"id": "e2", "u": "1", "v": "2"}, {"id": "e3", "u": "2", "v": "0"}],
      "root": "0"
    })";
}

// 4-cycle, q = 0.
inline std::string c4() {
    return R"({
      "name": "C4",
      "vertices": [{"id": "0", "x": 0, "y": 0}, {"id": "1", "x": 1, "y": 0}, {"id": "2", "x": 1, "y": 1}, {"id": "3", "x": 0, "y": 1}],
      "edges": [{"id": "e1", "u": "0", "v": "1"}, {"id": "e2", "u": "1", "v": "2"}, {"id": "e3", "u": "2", "v": "3"}, {"id": "e4", "u": "3", "v": "0"}],
      "root": "0"
    })";
}

// Theta graph: two vertices, three parallel edges, explicit rotation.
inline std::string theta() {
    return R"({
      "name": "Theta",
      "vertices": [{"id": "a"}, {"id": "b"}],
      "edges": [{"id": "e1", "u": "a", "v": "b"}, {"id": "e2", "u": "a", "v": "b"}, {"id": "e3", "u": "a", "v": "b"}],
      "root": "a",
      "rotation": {"a": ["e1", "e2", "e3"], "b": ["e3", "e2", "e1"]},
      "outer_face": ["e3:a", "e1:b"]
    })";
}

// Two vertices joined by a pair of parallel edges (smallest bridgeless graph).
inline std::string digon() {
    return R"({
      "name": "Digon",
      "vertices": [{"id": "a"}, {"id": "b"}],
      "edges": [{"id": "e1", "u": "a", "v": "b"}, {"id": "e2", "u": "a", "v": "b"}],
      "root": "a",
      "rotation": {"a": ["e1", "e2"], "b": ["e2", "e1"]},
      "outer_face": ["e2:a", "e1:b"]
    })";
}

// Triangle with a doubled edge: mixes parallel and simple edges.
inline std::string dtri() {
    return R"({
      "name": "DTri",
      "vertices": [{"id": "0"}, {"id": "1"}, {"id": "2"}],
      "edges": [{"id": "e1", "u": "0", "v": "1"}, {"id": "e1b", "u": "0", "v": "1"},
                {"id": "e2", "u": "1", "v": "2"}, {"id": "e3", "u": "2", "v": "0"}],
      "root": "0",
      "rotation": {"0": ["e1", "e1b", "e3"], "1": ["e2", "e1b", "e1"], "2": ["e3", "e2"]},
      "outer_face": ["e1:1"]
    })";
}

// K4 drawn with vertex 3 inside the outer triangle.
inline std::string k4() {
    return R"({
      "name": "K4",
      "vertices": [{"id": "0", "x": 0, "y": 0}, {"id": "1", "x": 4, "y": 0}, {"id": "2", "x": 0, "y": 4}, {"id": "3", "x": 1, "y": 1}],
      "edges": [{"id": "e1", "u": "0", "v": "1"}, {"id": "e2", "u": "1", "v": "2"}, {"id": "e3", "u": "2", "v": "0"},
                {"id": "e4", "u": "0", "v": "3"}, {"id": "e5", "u": "1", "v": "3"}, {"id": "e6", "u": "2", "v": "3"}],
      "root": "0"
    })";
}

// Triangular prism: 6 vertices, 9 edges.
inline std::string prism() {
    return R"({
      "name": "Prism",
      "vertices": [{"id": "0", "x": 0, "y": 0}, {"id": "1", "x": 6, "y": 0}, {"id": "2", "x": 0, "y": 6},
                   {"id": "3", "x": 1, "y": 1}, {"id": "4", "x": 4, "y": 1}, {"id": "5", "x": 1, "y": 4}],
      "edges": [{"id": "a1", "u": "0", "v": "1"}, {"id": "a2", "u": "1", "v": "2"}, {"id": "a3", "u": "2", "v": "0"},
                {"id": "b1", "u": "3", "v": "4"}, {"id": "b2", "u": "4", "v": "5"}, {"id": "b3", "u": "5", "v": "3"},
                {"id": "c1", "u": "0", "v": "3"}, {"id": "c2", "u": "1", "v": "4"}, {"id": "c3", "u": "2", "v": "5"}],
      "root": "0"
    })";
}

// Cube graph: nested squares, 12 edges.
inline std::string cube() {
    return R"({
      "name": "Cube",
      "vertices": [{"id": "0", "x": 0, "y": 0}, {"id": "1", "x": 6, "y": 0}, {"id": "2", "x": 6, "y": 6}, {"id": "3", "x": 0, "y": 6},
                   {"id": "4", "x": 2, "y": 2}, {"id": "5", "x": 4, "y": 2}, {"id": "6", "x": 4, "y": 4}, {"id": "7", "x": 2, "y": 4}],
      "edges": [{"id": "o1", "u": "0", "v": "1"}, {"id": "o2", "u": "1", "v": "2"}, {"id": "o3", "u": "2", "v": "3"}, {"id": "o4", "u": "3", "v": "0"},
                {"id": "i1", "u": "4", "v": "5"}, {"id": "i2", "u": "5", "v": "6"}, {"id": "i3", "u": "6", "v": "7"}, {"id": "i4", "u": "7", "v": "4"},
                {"id": "s1", "u": "0", "v": "4"}, {"id": "s2", "u": "1", "v": "5"}, {"id": "s3", "u": "2", "v": "6"}, {"id": "s4", "u": "3", "v": "7"}],
      "root": "0"
    })";
}

// 3x3 grid with one or two cell diagonals added (13 and 14 edges).
inline std::string grid33_diag(int diagonals) {
    std::ostringstream os;
    os << R"({"name": "Grid3x3d)" << diagonals << R"(", "vertices": [)";
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            if (r || c) os << ", ";
            os << "{\"id\": \"" << (r * 3 + c) << "\", \"x\": " << c << ", \"y\": " << r << "}";
        }
    os << "], \"edges\": [";
    bool first = true;
    auto edge = [&](const std::string& id, int u, int v) {
        if (!first) os << ", ";
        first = false;
        os << "{\"id\": \"" << id << "\", \"u\": \"" << u << "\", \"v\": \"" << v << "\"}";
    };
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c + 1 < 3; ++c)
            edge("h_" + std::to_string(r) + "_" + std::to_string(c), r * 3 + c, r * 3 + c + 1);
    for (int r = 0; r + 1 < 3; ++r)
        for (int c = 0; c < 3; ++c)
            edge("v_" + std::to_string(r) + "_" + std::to_string(c), r * 3 + c, (r + 1) * 3 + c);
    if (diagonals >= 1) edge("d_0", 0, 4);
    if (diagonals >= 2) edge("d_1", 4, 8);
    os << "], \"root\": \"0\"}";
    return os.str();
}

// r-by-c grid with unit coordinates, root at the origin corner.
inline std::string grid(int rows, int cols) {
    std::ostringstream os;
    os << "{\"name\": \"Grid" << rows << "x" << cols << "\", \"vertices\": [";
    bool first = true;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (!first) os << ", ";
            first = false;
            os << "{\"id\": \"" << (r * cols + c) << "\", \"x\": " << c << ", \"y\": " << r << "}";
        }
    os << "], \"edges\": [";
    first = true;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c + 1 < cols; ++c) {
            if (!first) os << ", ";
            first = false;
            os << "{\"id\": \"h_" << r << "_" << c << "\", \"u\": \"" << (r * cols + c)
               << "\", \"v\": \"" << (r * cols + c + 1) << "\"}";
        }
    for (int r = 0; r + 1 < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            os << ", {\"id\": \"v_" << r << "_" << c << "\", \"u\": \"" << (r * cols + c)
               << "\", \"v\": \"" << ((r + 1) * cols + c) << "\"}";
        }
    os << "], \"root\": \"0\"}";
    return os.str();
}

inline temperley::EmbeddedPlanarGraph graph(const std::string& text) {
    return temperley::parse_document(text);
}

// The standard desk set exercised by most suites.
inline std::vector<std::string> desk_documents() {
    return {k3(), c4(), theta(), digon(), dtri(), k4(), prism()};
}

} // namespace fixtures
