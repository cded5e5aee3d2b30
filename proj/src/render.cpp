#include "temperley/render.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace temperley {

namespace {

struct Decoration {
    std::set<int> tree_edges;       // edges of G
    std::set<int> matching_edges;   // edges of G+
    std::optional<Orientation> orientation;
};

Decoration resolve(const EmbeddedPlanarGraph& g, const GPlusGraph* h, const RenderSelection& sel) {
    Decoration dec;
    std::optional<SpanningTree> tree;
    if (sel.tree) {
        auto trees = enumerate_trees(g);
        require(*sel.tree >= 0 && *sel.tree < int(trees.size()), Errc::BadDocument,
                "tree index out of range");
        tree = trees[*sel.tree];
        dec.tree_edges.insert(tree->edges.begin(), tree->edges.end());
    }
    if (sel.matching && h) {
        auto matchings = enumerate_matchings(*h);
        require(*sel.matching >= 0 && *sel.matching < int(matchings.size()), Errc::BadDocument,
                "matching index out of range");
        dec.matching_edges.insert(matchings[*sel.matching].edges.begin(),
                                  matchings[*sel.matching].edges.end());
    } else if (sel.tree && h) {
        Matching m = temperley_matching(*h, *tree);
        dec.matching_edges.insert(m.edges.begin(), m.edges.end());
    }
    if (sel.show_orientation && tree) dec.orientation = q_connected_orientation(g, *tree);
    return dec;
}

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

double to_double(const Rat& r) { return r.get_d(); }

struct Layout {
    std::vector<std::pair<double, double>> vertex;         // of G
    std::vector<std::pair<double, double>> white;          // edge midpoints
    std::vector<std::pair<double, double>> face;           // face centroids
    std::pair<double, double> qstar;                       // outside the hull
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
};

Layout layout(const EmbeddedPlanarGraph& g) {
    require(g.has_coords(), Errc::BadDocument, "SVG rendering needs coordinates");
    const PlanarStructure& s = g.structure();
    Layout out;
    for (auto [x, y] : g.coords()) {
        out.vertex.emplace_back(to_double(x), to_double(y));
        out.xmin = std::min(out.xmin, out.vertex.back().first);
        out.xmax = std::max(out.xmax, out.vertex.back().first);
        out.ymin = std::min(out.ymin, out.vertex.back().second);
        out.ymax = std::max(out.ymax, out.vertex.back().second);
    }
    for (int e = 0; e < s.edge_count(); ++e) {
        auto [ux, uy] = out.vertex[s.edge_u(e)];
        auto [vx, vy] = out.vertex[s.edge_v(e)];
        out.white.emplace_back((ux + vx) / 2, (uy + vy) / 2);
    }
    for (int f = 0; f < s.face_count(); ++f) {
        std::set<int> verts;
        for (int d : s.face_boundary(f)) verts.insert(s.dart_tail(d));
        double x = 0, y = 0;
        for (int v : verts) {
            x += out.vertex[v].first;
            y += out.vertex[v].second;
        }
        out.face.emplace_back(x / double(verts.size()), y / double(verts.size()));
    }
    out.qstar = {out.xmax + 0.2 * (out.xmax - out.xmin) + 0.5,
                 out.ymax + 0.2 * (out.ymax - out.ymin) + 0.5};
    out.face[s.outer_face()] = out.qstar;
    return out;
}

// ---- DOT ----------------------------------------------------------------

std::string dot_pos(std::pair<double, double> p) {
    std::ostringstream os;
    os << p.first << "," << p.second << "!";
    return os.str();
}

std::string dot_for_graph(const EmbeddedPlanarGraph& g, const Decoration& dec) {
    const PlanarStructure& s = g.structure();
    std::ostringstream os;
    os << (dec.orientation ? "digraph" : "graph") << " G {\n";
    os << "  node [shape=circle];\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        os << "  " << quoted(g.vertex_id(v));
        os << " [";
        if (v == g.root()) os << "style=bold,xlabel=\"q\",";
        if (g.has_coords())
            os << "pos=" << quoted(dot_pos({to_double(g.coords()[v].first),
                                            to_double(g.coords()[v].second)}));
        os << "];\n";
    }
    for (int e = 0; e < s.edge_count(); ++e) {
        int u = s.edge_u(e), v = s.edge_v(e);
        if (dec.orientation) {
            u = dec.orientation->tail(s, e);
            v = dec.orientation->head(s, e);
        }
        os << "  " << quoted(g.vertex_id(u)) << (dec.orientation ? " -> " : " -- ")
           << quoted(g.vertex_id(v)) << " [label=" << quoted(g.edge_id(e));
        if (dec.tree_edges.count(e)) os << ",penwidth=3";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

std::string dot_for_gplus(const GPlusGraph& h, const Decoration& dec, bool with_source) {
    const EmbeddedPlanarGraph& g = h.source();
    std::ostringstream os;
    os << "graph Gplus {\n";
    os << "  node [shape=circle];\n";
    if (with_source) {
        for (int v = 0; v < g.vertex_count(); ++v)
            os << "  " << quoted(g.vertex_id(v)) << " [shape=point];\n";
        os << "  " << quoted(std::string("qstar")) << " [shape=point,xlabel=\"q*\"];\n";
    }
    for (int w = 0; w < h.white_count(); ++w)
        os << "  " << quoted(h.white_id(w)) << " [style=filled,fillcolor=white];\n";
    for (int b = 0; b < h.black_count(); ++b)
        os << "  " << quoted(h.black_id(b)) << " [style=filled,fillcolor=black,fontcolor=white];\n";
    for (int i = 0; i < h.edge_count(); ++i) {
        const GPlusEdge& e = h.edges()[i];
        os << "  " << quoted(h.white_id(e.white)) << " -- " << quoted(h.black_id(e.black));
        os << " [";
        if (dec.matching_edges.count(i)) os << "penwidth=3,";
        os << "style=" << (e.kind == HalfKind::Primal ? "solid" : "dashed") << "];\n";
    }
    if (with_source) {
        // Deleted halves, drawn dotted toward q and q*.
        const PlanarStructure& s = g.structure();
        for (int e = 0; e < s.edge_count(); ++e) {
            if (h.primal_half(e, s.edge_u(e)) < 0)
                os << "  " << quoted(h.white_id(e)) << " -- " << quoted(g.vertex_id(s.edge_u(e)))
                   << " [style=dotted];\n";
            if (h.primal_half(e, s.edge_v(e)) < 0)
                os << "  " << quoted(h.white_id(e)) << " -- " << quoted(g.vertex_id(s.edge_v(e)))
                   << " [style=dotted];\n";
            for (int d : {dart_forward(e), dart_backward(e)})
                if (s.face_left(d) == s.outer_face())
                    os << "  " << quoted(h.white_id(e)) << " -- \"qstar\" [style=dotted];\n";
        }
    }
    os << "}\n";
    return os.str();
}

// ---- SVG ----------------------------------------------------------------

class SvgCanvas {
  public:
    SvgCanvas(double xmin, double xmax, double ymin, double ymax) {
        scale_ = 640.0 / std::max(1e-9, std::max(xmax - xmin, ymax - ymin));
        xoff_ = -xmin;
        ymax_ = ymax;
        width_ = (xmax - xmin) * scale_ + 2 * margin_;
        height_ = (ymax - ymin) * scale_ + 2 * margin_;
    }

    std::pair<double, double> map(std::pair<double, double> p) const {
        // Flip y so the drawing matches the usual math orientation.
        return {(p.first + xoff_) * scale_ + margin_, (ymax_ - p.second) * scale_ + margin_};
    }

    void line(std::pair<double, double> a, std::pair<double, double> b, const std::string& style) {
        auto [x1, y1] = map(a);
        auto [x2, y2] = map(b);
        body_ << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
              << "\" " << style << "/>\n";
    }

    // Quadratic arc, used to separate parallel edges.
    void arc(std::pair<double, double> a, std::pair<double, double> b,
             std::pair<double, double> control, const std::string& style) {
        auto [x1, y1] = map(a);
        auto [x2, y2] = map(b);
        auto [cx, cy] = map(control);
        body_ << "  <path d=\"M " << x1 << " " << y1 << " Q " << cx << " " << cy << " " << x2
              << " " << y2 << "\" fill=\"none\" " << style << "/>\n";
    }

    void circle(std::pair<double, double> c, double r, const std::string& style) {
        auto [x, y] = map(c);
        body_ << "  <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << r << "\" " << style
              << "/>\n";
    }

    void text(std::pair<double, double> c, const std::string& label) {
        auto [x, y] = map(c);
        body_ << "  <text x=\"" << x + 7 << "\" y=\"" << y - 7 << "\" font-size=\"12\">" << label
              << "</text>\n";
    }

    std::string finish() const {
        std::ostringstream os;
        os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_ << "\" height=\""
           << height_ << "\" viewBox=\"0 0 " << width_ << " " << height_ << "\">\n";
        os << body_.str();
        os << "</svg>\n";
        return os.str();
    }

  private:
    double scale_ = 1, xoff_ = 0, ymax_ = 1, width_ = 1, height_ = 1;
    double margin_ = 24;
    std::ostringstream body_;
};

// Control point for the k-th of n parallel edges between two endpoints.
std::pair<double, double> parallel_control(std::pair<double, double> a,
                                           std::pair<double, double> b, int k, int n) {
    double mx = (a.first + b.first) / 2, my = (a.second + b.second) / 2;
    if (n <= 1) return {mx, my};
    double dx = b.first - a.first, dy = b.second - a.second;
    double len = std::max(1e-9, std::hypot(dx, dy));
    double offset = (double(k) - double(n - 1) / 2) * 0.5 * len / n;
    return {mx - dy / len * offset, my + dx / len * offset};
}

std::string svg_for_graph(const EmbeddedPlanarGraph& g, const Decoration& dec) {
    Layout lay = layout(g);
    SvgCanvas canvas(lay.xmin, lay.xmax + 0.4 * (lay.xmax - lay.xmin) + 1,
                     lay.ymin, lay.ymax + 0.4 * (lay.ymax - lay.ymin) + 1);
    const PlanarStructure& s = g.structure();

    std::map<std::pair<int, int>, std::vector<int>> bundles;
    for (int e = 0; e < s.edge_count(); ++e) {
        auto key = std::minmax(s.edge_u(e), s.edge_v(e));
        bundles[{key.first, key.second}].push_back(e);
    }
    for (const auto& [key, edges] : bundles)
        for (size_t k = 0; k < edges.size(); ++k) {
            int e = edges[k];
            std::string style = "stroke=\"black\" stroke-width=\"" +
                                std::string(dec.tree_edges.count(e) ? "4" : "1.5") + "\"";
            auto a = lay.vertex[s.edge_u(e)], b = lay.vertex[s.edge_v(e)];
            if (edges.size() == 1)
                canvas.line(a, b, style);
            else
                canvas.arc(a, b, parallel_control(a, b, int(k), int(edges.size())), style);
        }
    for (int v = 0; v < g.vertex_count(); ++v) {
        canvas.circle(lay.vertex[v], v == g.root() ? 7 : 5, "fill=\"black\"");
        canvas.text(lay.vertex[v], g.vertex_id(v) + (v == g.root() ? " (q)" : ""));
    }
    if (dec.orientation) {
        for (int e = 0; e < s.edge_count(); ++e) {
            auto t = lay.vertex[dec.orientation->tail(s, e)];
            auto hd = lay.vertex[dec.orientation->head(s, e)];
            // Arrowhead marker: short stroke near the head.
            std::pair<double, double> tip{t.first + 0.8 * (hd.first - t.first),
                                          t.second + 0.8 * (hd.second - t.second)};
            canvas.circle(tip, 3, "fill=\"crimson\"");
        }
    }
    return canvas.finish();
}

std::string svg_for_overlay(const GPlusGraph& h, const Decoration& dec, bool gplus_only) {
    const EmbeddedPlanarGraph& g = h.source();
    Layout lay = layout(g);
    SvgCanvas canvas(lay.xmin, lay.xmax + 0.4 * (lay.xmax - lay.xmin) + 1,
                     lay.ymin, lay.ymax + 0.4 * (lay.ymax - lay.ymin) + 1);
    const PlanarStructure& s = g.structure();

    if (!gplus_only) {
        // Underlying primal edges, faint.
        for (int e = 0; e < s.edge_count(); ++e)
            canvas.line(lay.vertex[s.edge_u(e)], lay.vertex[s.edge_v(e)],
                        "stroke=\"#cccccc\" stroke-width=\"1\"");
    }
    // Halves of G+ (and the deleted halves when drawing the full overlay).
    auto black_pos = [&](int b) {
        return h.black_is_vertex(b) ? lay.vertex[h.black_source(b)] : lay.face[h.black_source(b)];
    };
    for (int i = 0; i < h.edge_count(); ++i) {
        const GPlusEdge& e = h.edges()[i];
        std::string style = e.kind == HalfKind::Primal
                                ? "stroke=\"black\" stroke-width=\"{W}\""
                                : "stroke=\"steelblue\" stroke-dasharray=\"6 3\" stroke-width=\"{W}\"";
        std::string width = dec.matching_edges.count(i) ? "4" : "1.5";
        auto pos = style.find("{W}");
        style = style.substr(0, pos) + width + style.substr(pos + 3);
        canvas.line(lay.white[e.white], black_pos(e.black), style);
    }
    if (!gplus_only) {
        for (int e = 0; e < s.edge_count(); ++e) {
            if (h.primal_half(e, s.edge_u(e)) < 0)
                canvas.line(lay.white[e], lay.vertex[s.edge_u(e)],
                            "stroke=\"#bbbbbb\" stroke-dasharray=\"2 4\" stroke-width=\"1\"");
            if (h.primal_half(e, s.edge_v(e)) < 0)
                canvas.line(lay.white[e], lay.vertex[s.edge_v(e)],
                            "stroke=\"#bbbbbb\" stroke-dasharray=\"2 4\" stroke-width=\"1\"");
            for (int d : {dart_forward(e), dart_backward(e)})
                if (s.face_left(d) == s.outer_face())
                    canvas.line(lay.white[e], lay.qstar,
                                "stroke=\"#bbbbbb\" stroke-dasharray=\"2 4\" stroke-width=\"1\"");
        }
        canvas.circle(lay.qstar, 5, "fill=\"white\" stroke=\"black\"");
        canvas.text(lay.qstar, "q*");
    }
    // Whites open, blacks filled.
    for (int w = 0; w < h.white_count(); ++w) {
        canvas.circle(lay.white[w], 5, "fill=\"white\" stroke=\"black\"");
        canvas.text(lay.white[w], h.white_id(w));
    }
    for (int b = 0; b < h.black_count(); ++b) {
        canvas.circle(black_pos(b), 5, "fill=\"black\"");
        canvas.text(black_pos(b), h.black_id(b));
    }
    if (!gplus_only) {
        for (int v = 0; v < g.vertex_count(); ++v)
            if (v == g.root()) {
                canvas.circle(lay.vertex[v], 7, "fill=\"white\" stroke=\"black\"");
                canvas.text(lay.vertex[v], "q");
            }
    }
    return canvas.finish();
}

} // namespace

std::string dot_graph(const EmbeddedPlanarGraph& g, const RenderSelection& sel) {
    return dot_for_graph(g, resolve(g, nullptr, sel));
}

std::string dot_overlay(const GPlusGraph& h, const RenderSelection& sel) {
    return dot_for_gplus(h, resolve(h.source(), &h, sel), true);
}

std::string dot_gplus(const GPlusGraph& h, const RenderSelection& sel) {
    return dot_for_gplus(h, resolve(h.source(), &h, sel), false);
}

std::string svg_graph(const EmbeddedPlanarGraph& g, const RenderSelection& sel) {
    return svg_for_graph(g, resolve(g, nullptr, sel));
}

std::string svg_overlay(const GPlusGraph& h, const RenderSelection& sel) {
    return svg_for_overlay(h, resolve(h.source(), &h, sel), false);
}

std::string svg_gplus(const GPlusGraph& h, const RenderSelection& sel) {
    return svg_for_overlay(h, resolve(h.source(), &h, sel), true);
}

} // namespace temperley
