// Command-line surface: parse graph documents, run each pipeline stage and
// emit canonical reports.  Exit codes: 0 success, 1 verification failure,
// 2 input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "temperley/action.hpp"
#include "temperley/fuzz.hpp"
#include "temperley/render.hpp"
#include "temperley/verify.hpp"

using namespace temperley;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Options {
    std::string input;
    std::string format = "text";
    std::string out_dir = ".";
    int reference = 0;
    std::optional<int> tree;
    std::optional<int> matching;
    bool orientation = false;
    uint64_t seed = 1;
    int count = 100;
    int max_edges = 10;
};

EmbeddedPlanarGraph load(const Options& opt) {
    std::ifstream in(opt.input);
    if (!in) fail(Errc::BadDocument, "cannot open input file '" + opt.input + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_document(buffer.str());
}

std::string divisor_json(const EmbeddedPlanarGraph& g, const Divisor& d) {
    ordered_json obj = ordered_json::object();
    for (int v = 0; v < g.vertex_count(); ++v)
        if (d.coefficients[v] != 0) obj[g.vertex_id(v)] = d.coefficients[v];
    return obj.dump();
}

std::string orientation_json(const EmbeddedPlanarGraph& g, const Orientation& o) {
    ordered_json obj = ordered_json::object();
    const PlanarStructure& s = g.structure();
    for (int e = 0; e < g.edge_count(); ++e)
        obj[g.edge_id(e)] = g.vertex_id(o.tail(s, e)) + ">" + g.vertex_id(o.head(s, e));
    return obj.dump();
}

std::string factors_string(const std::vector<Int>& factors) {
    std::string out = "[";
    for (size_t i = 0; i < factors.size(); ++i)
        out += (i ? "," : "") + factors[i].get_str();
    return out + "]";
}

std::string group_string(const std::vector<Int>& factors) {
    if (factors.empty()) return "trivial";
    std::string out;
    for (size_t i = 0; i < factors.size(); ++i)
        out += (i ? " x " : "") + std::string("Z/") + factors[i].get_str();
    return out;
}

std::string matching_string(const GPlusGraph& h, const Matching& m) {
    std::string out = "{";
    for (size_t i = 0; i < m.edges.size(); ++i) {
        const GPlusEdge& e = h.edges()[m.edges[i]];
        out += (i ? ", " : "") + h.white_id(e.white) + "-" + h.black_id(e.black);
    }
    return out + "}";
}

int cmd_canon(const Options& opt) {
    std::cout << emit_document(load(opt));
    return 0;
}

int cmd_info(const Options& opt) {
    EmbeddedPlanarGraph g = load(opt);
    GPlusGraph h = construct_gplus(g);
    auto trees = enumerate_trees(g);
    auto matchings = enumerate_matchings(h);
    std::vector<Int> jac = jacobian_structure(g);
    ReferenceContext ctx(h, temperley_matching(h, trees[0]));
    if (opt.format == "structured") {
        ordered_json doc;
        doc["tool"] = kToolVersion;
        doc["name"] = g.name();
        doc["digest"] = document_digest(g);
        doc["vertices"] = g.vertex_count();
        doc["edges"] = g.edge_count();
        doc["faces"] = g.structure().face_count();
        doc["genus"] = g.genus();
        doc["trees"] = trees.size();
        doc["matchings"] = matchings.size();
        doc["jacobian"] = group_string(jac);
        doc["kasteleyn_cokernel"] = group_string(ctx.system().invariant_factors);
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "tool: " << kToolVersion << "\n";
        std::cout << "name: " << g.name() << "\n";
        std::cout << "digest: " << document_digest(g) << "\n";
        std::cout << "vertices: " << g.vertex_count() << "\n";
        std::cout << "edges: " << g.edge_count() << "\n";
        std::cout << "faces: " << g.structure().face_count() << "\n";
        std::cout << "genus: " << g.genus() << "\n";
        std::cout << "trees: " << trees.size() << "\n";
        std::cout << "matchings: " << matchings.size() << "\n";
        std::cout << "jacobian: " << factors_string(jac) << " (" << group_string(jac) << ")\n";
        std::cout << "kasteleyn_cokernel: " << factors_string(ctx.system().invariant_factors)
                  << " (" << group_string(ctx.system().invariant_factors) << ")\n";
    }
    return 0;
}

int cmd_gplus(const Options& opt) {
    EmbeddedPlanarGraph g = load(opt);
    GPlusGraph h = construct_gplus(g);
    const PlanarStructure& s = h.structure();
    // Same document format, with a provenance map for the tags.
    ordered_json doc;
    doc["name"] = g.name() + "+";
    doc["vertices"] = ordered_json::array();
    auto vertex_label = [&](int sv) {
        return sv < h.white_count() ? h.white_id(sv) : h.black_id(sv - h.white_count());
    };
    for (int v = 0; v < s.vertex_count(); ++v) {
        ordered_json entry;
        entry["id"] = vertex_label(v);
        doc["vertices"].push_back(entry);
    }
    doc["edges"] = ordered_json::array();
    for (int i = 0; i < h.edge_count(); ++i) {
        const GPlusEdge& e = h.edges()[i];
        doc["edges"].push_back({{"id", "h" + std::to_string(i)},
                                {"u", h.white_id(e.white)},
                                {"v", h.black_id(e.black)}});
    }
    doc["root"] = vertex_label(0);
    ordered_json rotation = ordered_json::object();
    for (int v = 0; v < s.vertex_count(); ++v) {
        ordered_json list = ordered_json::array();
        for (int d : s.rotation()[v]) list.push_back("h" + std::to_string(dart_edge(d)));
        rotation[vertex_label(v)] = list;
    }
    doc["rotation"] = rotation;
    ordered_json outer = ordered_json::array();
    for (int d : s.face_boundary(s.outer_face()))
        outer.push_back("h" + std::to_string(dart_edge(d)) + ":" +
                        vertex_label(s.dart_tail(d)));
    doc["outer_face"] = outer;
    ordered_json prov = ordered_json::object();
    for (int w = 0; w < h.white_count(); ++w)
        prov[h.white_id(w)] = ordered_json{{"kind", "edge"}, {"source", g.edge_id(w)}};
    for (int b = 0; b < h.black_count(); ++b) {
        if (h.black_is_vertex(b))
            prov[h.black_id(b)] =
                ordered_json{{"kind", "vertex"}, {"source", g.vertex_id(h.black_source(b))}};
        else
            prov[h.black_id(b)] =
                ordered_json{{"kind", "face"}, {"source", g.face_id(h.black_source(b))}};
    }
    ordered_json halves = ordered_json::object();
    for (int i = 0; i < h.edge_count(); ++i)
        halves["h" + std::to_string(i)] =
            h.edges()[i].kind == HalfKind::Primal ? "primal" : "dual";
    doc["provenance"] = prov;
    doc["halves"] = halves;
    std::cout << doc.dump(2) << "\n";
    return 0;
}

int cmd_trees(const Options& opt) {
    EmbeddedPlanarGraph g = load(opt);
    auto trees = enumerate_trees(g);
    for (size_t i = 0; i < trees.size(); ++i) {
        std::cout << "tree " << i << ": [";
        for (size_t k = 0; k < trees[i].edges.size(); ++k)
            std::cout << (k ? "," : "") << g.edge_id(trees[i].edges[k]);
        std::cout << "]\n";
    }
    std::cout << "total: " << trees.size() << "\n";
    return 0;
}

int cmd_matchings(const Options& opt) {
    EmbeddedPlanarGraph g = load(opt);
    GPlusGraph h = construct_gplus(g);
    auto matchings = enumerate_matchings(h);
    for (size_t i = 0; i < matchings.size(); ++i)
        std::cout << "matching " << i << ": " << matching_string(h, matchings[i]) << "\n";
    std::cout << "total: " << matchings.size() << "\n";
    return 0;
}

int cmd_jacobian(const Options& opt) {
    EmbeddedPlanarGraph g = load(opt);
    std::vector<Int> jac = jacobian_structure(g);
    std::cout << "reduced_laplacian: " << reduced_laplacian(g).to_string() << "\n";
    std::cout << "invariant_factors: " << factors_string(jac) << "\n";
    std::cout << "group: " << group_string(jac) << "\n";
    std::cout << "order: " << spanning_tree_count(g).get_str() << "\n";
    return 0;
}

int cmd_kasteleyn(const Options& opt) {
    EmbeddedPlanarGraph g = load(opt);
    GPlusGraph h = construct_gplus(g);
    auto matchings = enumerate_matchings(h);
    require(opt.reference >= 0 && opt.reference < int(matchings.size()), Errc::BadDocument,
            "--reference out of range");
    ReferenceContext ctx(h, matchings[opt.reference]);
    std::cout << "reference_matching: " << opt.reference << "\n";
    std::cout << "whites:";
    for (int w = 0; w < h.white_count(); ++w) std::cout << " " << h.white_id(w);
    std::cout << "\nblacks:";
    for (int b = 0; b < h.black_count(); ++b) std::cout << " " << h.black_id(b);
    std::cout << "\nmatrix: " << ctx.system().matrix.to_string() << "\n";
    std::cout << "det: " << ctx.system().det.get_str() << "\n";
    std::cout << "invariant_factors: " << factors_string(ctx.system().invariant_factors) << "\n";
    std::cout << "group: " << group_string(ctx.system().invariant_factors) << "\n";
    return 0;
}

int cmd_bernardi(const Options& opt) {
    EmbeddedPlanarGraph g = load(opt);
    JacobianContext jac(g);
    auto trees = enumerate_trees(g);
    Divisor d0 = bernardi_divisor(g, q_connected_orientation(g, trees[0]));
    std::cout << "reference_divisor: " << divisor_json(g, d0) << "\n";
    for (size_t i = 0; i < trees.size(); ++i) {
        Orientation o = q_connected_orientation(g, trees[i]);
        JacobianElement cls = bernardi_class(jac, o, d0);
        std::cout << "tree " << i << ": orientation " << orientation_json(g, o) << " divisor "
                  << divisor_json(g, bernardi_divisor(g, o)) << " class " << cls.cls.to_string()
                  << "\n";
    }
    return 0;
}

int cmd_temperley(const Options& opt) {
    EmbeddedPlanarGraph g = load(opt);
    GPlusGraph h = construct_gplus(g);
    auto trees = enumerate_trees(g);
    for (size_t i = 0; i < trees.size(); ++i) {
        Matching m = temperley_matching(h, trees[i]);
        std::cout << "tree " << i << " -> " << matching_string(h, m) << "\n";
        SpanningTree back = temperley_inverse(h, m);
        require(back == trees[i], Errc::Internal, "inverse mismatch");
    }
    std::cout << "bijection: " << trees.size() << " trees <-> " << trees.size()
              << " matchings\n";
    return 0;
}

int cmd_action(const Options& opt) {
    EmbeddedPlanarGraph g = load(opt);
    GPlusGraph h = construct_gplus(g);
    ActionTable table(h, opt.reference);
    std::cout << "reference_matching: " << opt.reference << "\n";
    std::cout << "group: " << group_string(table.moduli()) << " order " << table.group_order()
              << "\n";
    std::cout << "psi:";
    for (size_t i = 0; i < table.matchings().size(); ++i)
        std::cout << " " << table.class_at(table.psi_index(int(i))).to_string();
    std::cout << "\n";
    for (uint64_t k = 0; k < table.group_order(); ++k) {
        std::cout << "act " << table.class_at(k).to_string() << ":";
        for (size_t m = 0; m < table.matchings().size(); ++m)
            std::cout << " " << m << "->" << table.act(k, int(m));
        std::cout << "\n";
    }
    return 0;
}

int cmd_verify(const Options& opt) {
    EmbeddedPlanarGraph g = load(opt);
    VerificationReport report = verify_graph(g);
    std::cout << (opt.format == "structured" ? report_json(report) : report_text(report));
    return report.pass() ? 0 : 1;
}

int cmd_render(const Options& opt) {
    EmbeddedPlanarGraph g = load(opt);
    GPlusGraph h = construct_gplus(g);
    RenderSelection sel;
    sel.tree = opt.tree;
    sel.matching = opt.matching;
    sel.show_orientation = opt.orientation;
    std::filesystem::create_directories(opt.out_dir);
    auto write = [&](const std::string& file, const std::string& body) {
        std::ofstream out(std::filesystem::path(opt.out_dir) / file);
        out << body;
        std::cout << "wrote " << (std::filesystem::path(opt.out_dir) / file).string() << "\n";
    };
    write("g.dot", dot_graph(g, sel));
    write("overlay.dot", dot_overlay(h, sel));
    write("gplus.dot", dot_gplus(h, sel));
    if (g.has_coords()) {
        write("g.svg", svg_graph(g, sel));
        write("overlay.svg", svg_overlay(h, sel));
        write("gplus.svg", svg_gplus(h, sel));
    } else {
        std::cout << "skipping SVG (no coordinates)\n";
    }
    return 0;
}

int cmd_fuzz(const Options& opt) {
    FuzzOptions fuzz;
    fuzz.count = opt.count;
    fuzz.max_edges = opt.max_edges;
    fuzz.seed = opt.seed;
    auto outcomes = run_fuzz(fuzz);
    int failures = 0;
    for (const auto& o : outcomes) {
        bool ok = o.report.pass();
        if (!ok) ++failures;
        std::cout << o.name << ": " << (ok ? "pass" : "FAIL") << " (edges=" << o.edges
                  << ", digest=" << o.report.digest << ")\n";
        if (!ok) std::cout << report_text(o.report);
    }
    std::cout << "fuzz: " << (outcomes.size() - failures) << "/" << outcomes.size()
              << " passed (seed=" << opt.seed << ", max-edges=" << opt.max_edges << ")\n";
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Temperley graphs: dimer matchings, Kasteleyn cokernels and the sandpile action"};
    app.require_subcommand(1);
    Options opt;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--input", opt.input, "graph document path")->required();
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "text or structured")
            ->check(CLI::IsMember({"text", "structured"}));
    };

    auto* canon = app.add_subcommand("canon", "re-emit the canonical document form");
    add_input(canon);
    auto* info = app.add_subcommand("info", "counts, genus, group structures");
    add_input(info);
    add_format(info);
    auto* gplus = app.add_subcommand("gplus", "emit the constructed G+ with provenance tags");
    add_input(gplus);
    auto* trees = app.add_subcommand("trees", "enumerate spanning trees");
    add_input(trees);
    auto* matchings = app.add_subcommand("matchings", "enumerate perfect matchings of G+");
    add_input(matchings);
    auto* jacobian = app.add_subcommand("jacobian", "Jacobian invariant factors");
    add_input(jacobian);
    auto* kasteleyn = app.add_subcommand("kasteleyn", "Kasteleyn matrix and cokernel");
    add_input(kasteleyn);
    kasteleyn->add_option("--reference", opt.reference, "reference matching index");
    auto* bernardi = app.add_subcommand("bernardi", "Bernardi divisors and classes per tree");
    add_input(bernardi);
    auto* temperley = app.add_subcommand("temperley", "the tree <-> matching bijection");
    add_input(temperley);
    auto* action = app.add_subcommand("action", "full action table of K(G+) on matchings");
    add_input(action);
    action->add_option("--reference", opt.reference, "reference matching index");
    auto* verify = app.add_subcommand("verify", "run every invariant and theorem check");
    add_input(verify);
    add_format(verify);
    auto* render = app.add_subcommand("render", "write DOT and SVG figures");
    add_input(render);
    render->add_option("--out", opt.out_dir, "output directory");
    render->add_option("--tree", opt.tree, "highlight this spanning tree");
    render->add_option("--matching", opt.matching, "highlight this matching");
    render->add_flag("--orientation", opt.orientation, "draw the selected tree's orientation");
    auto* fuzz = app.add_subcommand("fuzz", "verify random bridgeless planar graphs");
    fuzz->add_option("--count", opt.count, "number of graphs");
    fuzz->add_option("--max-edges", opt.max_edges, "edge budget per graph");
    fuzz->add_option("--seed", opt.seed, "deterministic seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (canon->parsed()) return cmd_canon(opt);
        if (info->parsed()) return cmd_info(opt);
        if (gplus->parsed()) return cmd_gplus(opt);
        if (trees->parsed()) return cmd_trees(opt);
        if (matchings->parsed()) return cmd_matchings(opt);
        if (jacobian->parsed()) return cmd_jacobian(opt);
        if (kasteleyn->parsed()) return cmd_kasteleyn(opt);
        if (bernardi->parsed()) return cmd_bernardi(opt);
        if (temperley->parsed()) return cmd_temperley(opt);
        if (action->parsed()) return cmd_action(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (render->parsed()) return cmd_render(opt);
        if (fuzz->parsed()) return cmd_fuzz(opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
