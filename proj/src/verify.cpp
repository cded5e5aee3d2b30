#include "temperley/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace temperley {

bool VerificationReport::pass() const {
    return std::none_of(checks.begin(), checks.end(),
                        [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

int VerificationReport::failed() const {
    return int(std::count_if(checks.begin(), checks.end(),
                             [](const CheckResult& c) { return c.status == CheckStatus::Fail; }));
}

namespace {

// Small deterministic generator so reports are byte-stable.
struct Splitmix {
    uint64_t state;
    uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t n) { return n ? next() % n : 0; }
};

class Checker {
  public:
    Checker(VerificationReport& report) : report_(report) {}

    void add(const std::string& id, bool pass, const std::string& detail) {
        report_.checks.push_back({id, pass ? CheckStatus::Pass : CheckStatus::Fail, detail});
    }
    void skip(const std::string& id, const std::string& why) {
        report_.checks.push_back({id, CheckStatus::Skip, why});
    }

  private:
    VerificationReport& report_;
};

std::string plural(long n, const std::string& what) {
    return std::to_string(n) + " " + what;
}

} // namespace

VerificationReport verify_graph(const EmbeddedPlanarGraph& g, const VerifyOptions& options) {
    VerificationReport report;
    report.graph_name = g.name();
    report.digest = document_digest(g);
    report.tool = kToolVersion;
    Checker out(report);

    const PlanarStructure& s = g.structure();
    const int ne = s.edge_count();

    // --- planar core -------------------------------------------------------
    out.add("euler_formula", s.vertex_count() - ne + s.face_count() == 2,
            std::to_string(s.vertex_count()) + " - " + std::to_string(ne) + " + " +
                std::to_string(s.face_count()) + " = 2");
    {
        std::vector<int> seen(s.dart_count(), 0);
        long total = 0;
        for (int f = 0; f < s.face_count(); ++f)
            for (int d : s.face_boundary(f)) {
                ++seen[d];
                ++total;
            }
        bool ok = total == 2 * ne && std::all_of(seen.begin(), seen.end(),
                                                 [](int c) { return c == 1; });
        out.add("dart_partition", ok, plural(total, "darts across faces"));
    }
    {
        bool ok = false;
        std::string detail;
        try {
            ok = parse_document(emit_document(g)) == g;
            detail = "reparse(emit(g)) == g";
        } catch (const Error& e) {
            detail = e.what();
        }
        out.add("canonical_roundtrip", ok, detail);
    }

    std::vector<std::vector<int>> cycles = simple_cycles(s);
    {
        bool antisym = true, shoelace_ok = true;
        bool use_coords = g.has_coords() && !s.has_parallel_edges();
        for (const auto& cycle : cycles) {
            std::vector<int> rev;
            for (auto it = cycle.rbegin(); it != cycle.rend(); ++it)
                rev.push_back(dart_reverse(*it));
            bool fwd = is_ccw(s, cycle);
            if (fwd == is_ccw(s, rev)) antisym = false;
            if (use_coords && ((shoelace_area_2x(g, cycle) > 0) != fwd)) shoelace_ok = false;
        }
        out.add("ccw_antisymmetry", antisym, plural(long(cycles.size()), "simple cycles"));
        if (use_coords)
            out.add("ccw_shoelace_agreement", shoelace_ok,
                    plural(long(cycles.size()), "simple cycles"));
        else
            out.skip("ccw_shoelace_agreement", "no usable straight-line coordinates");
    }

    // --- divisor theory ----------------------------------------------------
    JacobianContext jac(g);
    IntegerMatrix lap = laplacian(g);
    {
        bool ok = true;
        for (int i = 0; i < lap.rows(); ++i) {
            Int sum = 0;
            for (int j = 0; j < lap.cols(); ++j) sum += lap.at(i, j);
            if (sum != 0) ok = false;
        }
        out.add("laplacian_rows_degree_zero", ok, lap.to_string());
    }
    {
        Splitmix rng{options.seed};
        bool ok = true;
        for (int trial = 0; trial < 4 && ok; ++trial) {
            Divisor d(g.vertex_count());
            for (auto& c : d.coefficients) c = long(rng.below(9)) - 4;
            for (int v = 0; v < g.vertex_count() && ok; ++v) {
                Divisor next = chip_fire(g, d, v);
                if (next.degree() != d.degree()) ok = false;
                for (int w = 0; w < g.vertex_count(); ++w)
                    if (Int(next.coefficients[w] - d.coefficients[w]) != -lap.at(v, w)) ok = false;
            }
        }
        out.add("chip_fire_matches_laplacian_rows", ok, "4 random divisors, all vertices");
    }
    {
        Splitmix rng{options.seed + 1};
        bool ok = true;
        for (int trial = 0; trial < 12 && ok; ++trial) {
            Divisor a(g.vertex_count()), b(g.vertex_count()), c(g.vertex_count());
            for (auto* d : {&a, &b, &c})
                for (auto& x : d->coefficients) x = long(rng.below(7)) - 3;
            if (!jac.equivalent(a, a)) ok = false;
            if (jac.equivalent(a, b) != jac.equivalent(b, a)) ok = false;
            if (jac.equivalent(a, b) && jac.equivalent(b, c) && !jac.equivalent(a, c)) ok = false;
            Divisor fired = chip_fire(g, a, int(rng.below(g.vertex_count())));
            if (!jac.equivalent(a, fired)) ok = false;
        }
        out.add("linear_equivalence_relation", ok, "random divisor triples");
    }

    // --- counting: trees, matchings, determinants --------------------------
    GPlusGraph h = construct_gplus(g);
    std::vector<SpanningTree> trees = enumerate_trees(g);
    std::vector<Matching> matchings = enumerate_matchings(h);
    Int tree_det = spanning_tree_count(g);
    {
        std::ostringstream os;
        os << "trees=" << trees.size() << " det(reduced laplacian)=" << tree_det.get_str()
           << " |Jac|=" << jac.order().get_str() << " matchings=" << matchings.size();
        bool ok = Int(trees.size()) == tree_det && jac.order() == tree_det &&
                  Int(matchings.size()) == tree_det;
        out.add("tree_matching_count_agreement", ok, os.str());
    }
    out.add("gplus_square_bipartition", h.white_count() == h.black_count(),
            std::to_string(h.white_count()) + " white, " + std::to_string(h.black_count()) +
                " black");
    {
        const PlanarStructure& hs = h.structure();
        bool ok = hs.vertex_count() - hs.edge_count() + hs.face_count() == 2;
        for (int f = 0; f < hs.face_count(); ++f)
            if (f != hs.outer_face() && hs.face_degree(f) != 4) ok = false;
        out.add("gplus_embedding", ok,
                plural(hs.face_count() - 1, "quadrilateral faces plus outer"));
    }

    // --- Kasteleyn machinery -----------------------------------------------
    std::vector<Int> jac_factors = jac.invariant_factors();
    {
        bool faces_ok = true, det_ok = true, factors_ok = true, positive_ok = true;
        for (const auto& t : trees) {
            Orientation o = q_connected_orientation(g, t);
            GPlusOrientation ko = induced_kasteleyn_orientation(h, o);
            if (!is_kasteleyn_orientation(h, ko)) {
                faces_ok = false;
                continue;
            }
            KasteleynSystem sys = kasteleyn_cokernel(kasteleyn_matrix(h, ko));
            if (abs(sys.det) != Int(matchings.size())) det_ok = false;
            if (sys.invariant_factors != jac_factors) factors_ok = false;
            Matching m = temperley_matching(h, t);
            for (int i : m.edges)
                if (!ko.positive[i]) positive_ok = false;
        }
        out.add("induced_orientations_kasteleyn", faces_ok, plural(long(trees.size()), "trees"));
        out.add("kasteleyn_determinant_counts_matchings", det_ok,
                "|det K| = " + std::to_string(matchings.size()) + " for every tree");
        out.add("kasteleyn_cokernel_isomorphic_to_jacobian", factors_ok,
                "invariant factors match the Jacobian for every tree");
        out.add("temperley_edges_positive", positive_ok,
                "matched edges positively oriented under their tree's orientation");
    }
    {
        GPlusOrientation ko =
            induced_kasteleyn_orientation(h, q_connected_orientation(g, trees[0]));
        KasteleynCycleAudit audit = audit_kasteleyn_cycles(h, ko);
        std::ostringstream os;
        os << audit.cycles_checked << " cycles, " << audit.hollow_cycles << " hollow";
        out.add("kasteleyn_hollow_cycles_odd", audit.faces_odd && audit.hollow_cycles_odd,
                os.str());
        out.add("kasteleyn_vertex_parity_law", audit.vertex_parity, os.str());
        out.add("kasteleyn_mod4_reformulation", audit.mod4_equivalent, os.str());
    }
    {
        // Cokernel invariance across Kasteleyn signings: all q-connected
        // orientations whose induced orientation passes the face test.
        if (ne <= 12) {
            bool ok = true;
            long audited = 0;
            for (uint32_t mask = 0; mask < (1u << ne); ++mask) {
                Orientation o = Orientation::from_mask(ne, mask);
                if (!is_q_connected(g, o)) continue;
                GPlusOrientation ko = induced_kasteleyn_orientation(h, o);
                if (!is_kasteleyn_orientation(h, ko)) continue;
                KasteleynSystem sys = kasteleyn_cokernel(kasteleyn_matrix(h, ko));
                if (sys.invariant_factors != jac_factors) ok = false;
                ++audited;
            }
            out.add("cokernel_signing_invariance", ok, plural(audited, "Kasteleyn signings"));
        } else {
            out.skip("cokernel_signing_invariance", "edge count above sweep bound");
        }
    }

    // --- orientation closure classes ----------------------------------------
    if (ne <= options.exhaustion_bound) {
        auto classes = orientation_classes(g, options.exhaustion_bound);
        out.add("orientation_class_count_equals_trees", classes.size() == trees.size(),
                std::to_string(classes.size()) + " classes, " + std::to_string(trees.size()) +
                    " trees");
        bool nonempty = std::all_of(classes.begin(), classes.end(), [](const OrientationClass& c) {
            return !c.q_connected_members.empty();
        });
        out.add("orientation_classes_have_q_connected_member", nonempty,
                plural(long(classes.size()), "classes"));

        // Unique q-connected member up to directed cycle reversals.
        auto cycle_moves = simple_cycle_patterns(g);
        bool single_orbit = true;
        for (const auto& cls : classes) {
            std::map<uint32_t, uint32_t> parent;
            for (uint32_t m : cls.q_connected_members) parent[m] = m;
            auto find = [&](uint32_t x) {
                while (parent[x] != x) x = parent[x];
                return x;
            };
            for (uint32_t m : cls.q_connected_members)
                for (auto [mask, pattern] : cycle_moves) {
                    uint32_t bits = m & mask;
                    if (bits != pattern && bits != (mask ^ pattern)) continue;
                    if (!parent.count(m ^ mask)) continue;
                    uint32_t a = find(m), b = find(m ^ mask);
                    if (a != b) parent[std::max(a, b)] = std::min(a, b);
                }
            std::set<uint32_t> roots;
            for (uint32_t m : cls.q_connected_members) roots.insert(find(m));
            if (roots.size() != 1) single_orbit = false;
        }
        out.add("q_connected_unique_up_to_cycle_reversal", single_orbit,
                "q-connected members form one cycle-reversal orbit per class");

        // Tree representatives hit each class exactly once.
        std::map<uint32_t, int> class_of;
        for (int c = 0; c < int(classes.size()); ++c)
            for (uint32_t m : classes[c].members) class_of[m] = c;
        std::set<int> hit;
        bool all_q_connected = true;
        for (const auto& t : trees) {
            Orientation o = q_connected_orientation(g, t);
            if (!is_q_connected(g, o)) all_q_connected = false;
            hit.insert(class_of.at(o.mask()));
        }
        out.add("tree_orientations_canonical_representatives",
                all_q_connected && hit.size() == classes.size() && hit.size() == trees.size(),
                plural(long(trees.size()), "trees onto classes"));

        // Bernardi: constant on classes, bijective onto Jac.
        Divisor d0 = bernardi_divisor(g, q_connected_orientation(g, trees[0]));
        bool degree_ok = true, constant_ok = true;
        std::set<std::vector<Int>> images;
        for (const auto& cls : classes) {
            JacobianElement first =
                bernardi_class(jac, Orientation::from_mask(ne, cls.members[0]), d0);
            for (uint32_t m : cls.members) {
                Orientation o = Orientation::from_mask(ne, m);
                if (bernardi_divisor(g, o).degree() != g.genus() - 1) degree_ok = false;
                if (!(bernardi_class(jac, o, d0) == first)) constant_ok = false;
            }
            images.insert(first.cls.residues);
        }
        out.add("bernardi_degree_genus_minus_one", degree_ok,
                plural(1l << ne, "orientations"));
        out.add("bernardi_constant_on_classes", constant_ok, plural(long(classes.size()), "classes"));
        out.add("bernardi_bijective_onto_jacobian", Int(images.size()) == jac.order(),
                std::to_string(images.size()) + " distinct classes");
    } else {
        out.skip("orientation_class_count_equals_trees", "edge count above exhaustion bound");
        out.skip("orientation_classes_have_q_connected_member", "edge count above exhaustion bound");
        out.skip("q_connected_unique_up_to_cycle_reversal", "edge count above exhaustion bound");
        out.skip("tree_orientations_canonical_representatives", "edge count above exhaustion bound");
        out.skip("bernardi_degree_genus_minus_one", "edge count above exhaustion bound");
        out.skip("bernardi_constant_on_classes", "edge count above exhaustion bound");
        out.skip("bernardi_bijective_onto_jacobian", "edge count above exhaustion bound");
    }

    // --- Temperley bijection -----------------------------------------------
    {
        std::set<Matching> images;
        bool round_trip = true;
        for (const auto& t : trees) {
            Matching m = temperley_matching(h, t);
            images.insert(m);
            if (!(temperley_inverse(h, m) == t)) round_trip = false;
        }
        bool bijective = images.size() == trees.size() && images.size() == matchings.size();
        out.add("temperley_bijection", bijective && round_trip,
                std::to_string(images.size()) + " distinct images, inverse round-trips");
    }

    // --- alternating cycles --------------------------------------------------
    {
        bool ok = true;
        long pairs = 0;
        for (size_t i = 0; i < matchings.size() && ok; ++i)
            for (size_t j = 0; j < matchings.size() && ok; ++j) {
                AlternatingCycleSet diff = symmetric_difference(h, matchings[i], matchings[j]);
                std::set<int> m1(matchings[i].edges.begin(), matchings[i].edges.end());
                size_t support = 0;
                for (const auto& cycle : diff.cycles) {
                    if (cycle.size() % 2 != 0) ok = false;
                    for (size_t k = 0; k < cycle.size(); ++k)
                        if ((m1.count(cycle[k]) > 0) ==
                            (m1.count(cycle[(k + 1) % cycle.size()]) > 0))
                            ok = false;
                    support += cycle.size();
                }
                if (support != diff.support.size()) ok = false;
                if (i == j && !diff.cycles.empty()) ok = false;
                ++pairs;
            }
        out.add("alternating_cycles_wellformed", ok, plural(pairs, "matching pairs"));
    }

    // --- Psi, phi and the reversed-edge description ---------------------------
    {
        bool zero_ok = true, bijective_ok = true, lemma_ok = true;
        for (const auto& ref : matchings) {
            ReferenceContext ctx(h, ref);
            if (!ctx.psi(ref).second.is_zero()) zero_ok = false;
            std::set<std::vector<Int>> classes;
            for (const auto& m : matchings) {
                auto [white, cls] = ctx.psi(m);
                classes.insert(cls.residues);
                Orientation oi = q_connected_orientation(g, temperley_inverse(h, m));
                if (!(white == reversed_edges_divisor(g, ctx.orientation(), oi)))
                    lemma_ok = false;
            }
            if (Int(classes.size()) != Int(matchings.size()) ||
                Int(classes.size()) != ctx.system().lattice.torsion_order())
                bijective_ok = false;
        }
        out.add("psi_reference_to_zero", zero_ok, plural(long(matchings.size()), "references"));
        out.add("psi_bijective_all_references", bijective_ok,
                "injective and surjective for every reference");
        out.add("psi_divisor_equals_reversed_edges", lemma_ok,
                plural(long(matchings.size() * matchings.size()), "(reference, matching) pairs"));
    }
    {
        // phi: well-defined (kernel contains the Kasteleyn rows) and
        // injective on classes.
        ReferenceContext ctx(h, matchings[0]);
        const IntegerMatrix& k = ctx.system().matrix;
        bool ok = true;
        std::set<std::vector<Int>> images;
        for (const auto& m : matchings) {
            WhiteDivisor d = ctx.psi(m).first;
            JacobianElement base = phi(jac, d, ctx.orientation());
            images.insert(base.cls.residues);
            for (int b = 0; b < k.rows(); ++b) {
                WhiteDivisor shifted = d;
                for (int w = 0; w < k.cols(); ++w)
                    shifted.coefficients[w] += long(k.at(b, w).get_si());
                if (!(phi(jac, shifted, ctx.orientation()) == base)) ok = false;
            }
        }
        out.add("phi_well_defined_injective", ok && Int(images.size()) == jac.order(),
                std::to_string(images.size()) + " classes");
    }

    // --- the action ----------------------------------------------------------
    {
        ActionTable table(h, 0);
        ActionCheckReport axioms = verify_action_axioms(table);
        out.add("action_axioms_simply_transitive", axioms.pass,
                axioms.pass ? plural(axioms.checks, "checks") : axioms.counterexample);
    }
    if (int(matchings.size()) <= options.independence_full_limit) {
        ActionCheckReport indep = verify_reference_independence(h);
        out.add("action_reference_independence", indep.pass,
                indep.pass ? plural(indep.checks, "cells") : indep.counterexample);
    } else {
        // Seeded sample of (reference, a, b, c) cells.
        ActionTable base(h, 0);
        const int m = int(matchings.size());
        std::vector<ReferenceContext> contexts;
        Splitmix rng{options.seed + 2};
        bool ok = true;
        long cells = 0;
        std::vector<std::vector<uint64_t>> psi_of(m);
        std::vector<std::map<uint64_t, int>> inv_of(m);
        std::set<int> refs;
        for (int pick = 0; pick < 6; ++pick) refs.insert(int(rng.below(m)));
        refs.insert(0);
        for (int r : refs) {
            ReferenceContext ctx(h, matchings[r]);
            psi_of[r].resize(m);
            for (int i = 0; i < m; ++i) {
                psi_of[r][i] = base.index_of(ctx.psi(matchings[i]).second);
                inv_of[r][psi_of[r][i]] = i;
            }
        }
        for (long trial = 0; trial < 4000 && ok; ++trial) {
            int a = int(rng.below(m)), b = int(rng.below(m)), c = int(rng.below(m));
            int expected = inv_of[0][base.add(base.sub(psi_of[0][a], psi_of[0][b]), psi_of[0][c])];
            for (int r : refs) {
                uint64_t idx = base.add(base.sub(psi_of[r][a], psi_of[r][b]), psi_of[r][c]);
                auto it = inv_of[r].find(idx);
                if (it == inv_of[r].end() || it->second != expected) ok = false;
                ++cells;
            }
        }
        out.add("action_reference_independence", ok,
                plural(cells, "sampled cells (instance above full-sweep bound)"));
    }
    {
        ActionCheckReport diagram = verify_commutative_diagram(g);
        out.add("temperley_bernardi_square", diagram.pass,
                diagram.pass ? plural(diagram.checks, "tree rows") : diagram.counterexample);
    }

    return report;
}

std::string report_text(const VerificationReport& report) {
    std::ostringstream os;
    os << "tool: " << report.tool << "\n";
    os << "graph: " << report.graph_name << "\n";
    os << "digest: " << report.digest << "\n";
    for (const auto& c : report.checks) {
        const char* status = c.status == CheckStatus::Pass   ? "pass"
                             : c.status == CheckStatus::Fail ? "FAIL"
                                                             : "skip";
        os << "check " << c.id << ": " << status;
        if (!c.detail.empty()) os << " (" << c.detail << ")";
        os << "\n";
    }
    long passed = 0, failed = 0, skipped = 0;
    for (const auto& c : report.checks) {
        if (c.status == CheckStatus::Pass) ++passed;
        if (c.status == CheckStatus::Fail) ++failed;
        if (c.status == CheckStatus::Skip) ++skipped;
    }
    os << "result: " << (failed == 0 ? "pass" : "fail") << " (" << passed << " passed, " << failed
       << " failed, " << skipped << " skipped)\n";
    return os.str();
}

std::string report_json(const VerificationReport& report) {
    nlohmann::ordered_json doc;
    doc["tool"] = report.tool;
    doc["graph"] = report.graph_name;
    doc["digest"] = report.digest;
    doc["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        nlohmann::ordered_json entry;
        entry["id"] = c.id;
        entry["status"] = c.status == CheckStatus::Pass   ? "pass"
                          : c.status == CheckStatus::Fail ? "fail"
                                                          : "skip";
        entry["detail"] = c.detail;
        doc["checks"].push_back(entry);
    }
    doc["pass"] = report.pass();
    return doc.dump(2) + "\n";
}

} // namespace temperley
