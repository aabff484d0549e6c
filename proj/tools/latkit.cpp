#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "latkit/jsonio.hpp"
#include "latkit/paperlab.hpp"

namespace {

using namespace latkit;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

bool text_mode = false;

std::uint64_t disc_group_cap() {
    if (const char* env = std::getenv("GLUE_MAX_DISC_GROUP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw domain_error("GLUE_MAX_DISC_GROUP must be a positive integer");
    }
    return kDefaultDiscGroupCap;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json signature_json(const Signature& s) {
    return Json::array({s.n_plus, s.n_minus});
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

int cmd_discform(const std::string& path) {
    IntegerLattice l = lattice_from_json(load_json_file(path));
    DiscriminantGroup g = discriminant_group(l);
    if (text_mode) {
        std::vector<std::string> factors;
        for (const Int& d : g.invariant_factors) factors.push_back(d.get_str());
        std::cout << "rank " << l.rank() << ", discriminant "
                  << discriminant(l).get_str() << "\n";
        std::cout << "invariant factors: "
                  << (factors.empty() ? "none (unimodular)" : join(factors, " | "))
                  << "\n";
        for (int i = 0; i < g.length(); ++i) {
            Elem a = g.zero();
            a[i] = 1;
            std::vector<std::string> lift;
            for (const Rat& x : g.generator_lifts[i]) lift.push_back(to_string(x));
            std::cout << "g" << i + 1 << " = (" << join(lift, ", ")
                      << "), q = " << to_string(g.q(a)) << "\n";
        }
        for (int i = 0; i < g.length(); ++i)
            for (int j = i + 1; j < g.length(); ++j) {
                Elem a = g.zero(), b = g.zero();
                a[i] = 1;
                b[j] = 1;
                std::cout << "b(g" << i + 1 << ",g" << j + 1
                          << ") = " << to_string(g.b(a, b)) << "\n";
            }
        return kExitOk;
    }
    Json out;
    out["rank"] = l.rank();
    out["discriminant"] = discriminant(l).get_str();
    out["signature"] = signature_json(signature(l));
    Json factors = Json::array();
    for (const Int& d : g.invariant_factors) factors.push_back(d.get_str());
    out["invariant_factors"] = std::move(factors);
    out["length"] = g.length();
    Json lifts = Json::array();
    for (const QVec& v : g.generator_lifts) lifts.push_back(qvec_to_json(v));
    out["generator_lifts"] = std::move(lifts);
    Json qtab = Json::array(), btab = Json::array();
    for (int i = 0; i < g.length(); ++i) {
        Elem a = g.zero();
        a[i] = 1;
        qtab.push_back(to_string(g.q(a)));
        Json brow = Json::array();
        for (int j = 0; j < g.length(); ++j) {
            Elem b = g.zero();
            b[j] = 1;
            brow.push_back(to_string(g.b(a, b)));
        }
        btab.push_back(std::move(brow));
    }
    out["q_on_generators"] = std::move(qtab);
    out["b_on_generators"] = std::move(btab);
    print_json(out);
    return kExitOk;
}

int cmd_roots(const std::string& path, bool all) {
    IntegerLattice l = lattice_from_json(load_json_file(path));
    RootSystem rs = enumerate_roots(l);
    std::vector<std::string> comps;
    for (const ADEType& t : rs.components) comps.push_back(t.name());
    if (text_mode) {
        std::cout << rs.count() << " roots, type "
                  << (comps.empty() ? "none" : join(comps, " + ")) << "\n";
        if (all)
            for (const ZVec& r : rs.roots) {
                std::vector<std::string> c;
                for (const Int& x : r) c.push_back(x.get_str());
                std::cout << "(" << join(c, ", ") << ")\n";
            }
        return kExitOk;
    }
    Json out;
    out["count"] = rs.count();
    out["components"] = comps;
    out["span_rank"] = rs.simple_roots.rows;
    if (all) {
        Json roots = Json::array();
        for (const ZVec& r : rs.roots) {
            Json row = Json::array();
            for (const Int& x : r) row.push_back(x.get_si());
            roots.push_back(std::move(row));
        }
        out["roots"] = std::move(roots);
    }
    print_json(out);
    return kExitOk;
}

Json subgroup_json(const IsotropicSubgroup& h) {
    Json gens = Json::array();
    for (const Elem& e : h.generators) gens.push_back(e);
    Json j;
    j["order"] = h.elements.size();
    j["generators"] = std::move(gens);
    return j;
}

int cmd_glue_overlattices(const std::string& path) {
    IntegerLattice l = lattice_from_json(load_json_file(path));
    DiscriminantGroup g = discriminant_group(l);
    auto subs = isotropic_subgroups(g, disc_group_cap());
    if (text_mode) {
        std::cout << subs.size() << " isotropic subgroups\n";
        for (const IsotropicSubgroup& h : subs) {
            OverlatticeResult o = overlattice_from(g, h);
            std::cout << "index " << o.index.get_str() << ", discriminant "
                      << discriminant(o.lattice).get_str() << "\n";
        }
        return kExitOk;
    }
    Json out;
    out["discriminant"] = discriminant(l).get_str();
    out["isotropic_subgroups"] = subs.size();
    Json list = Json::array();
    for (const IsotropicSubgroup& h : subs) {
        OverlatticeResult o = overlattice_from(g, h);
        Json jo = subgroup_json(h);
        jo["index"] = o.index.get_str();
        jo["overlattice_discriminant"] = discriminant(o.lattice).get_str();
        Json glue = Json::array();
        for (const QVec& v : o.glue_lifts) glue.push_back(qvec_to_json(v));
        jo["glue_vectors"] = std::move(glue);
        jo["gram"] = lattice_to_json(o.lattice)["gram"];
        list.push_back(std::move(jo));
    }
    out["overlattices"] = std::move(list);
    print_json(out);
    return kExitOk;
}

int cmd_glue_saturate(const std::string& ambient_path, const std::string& sub_path) {
    IntegerLattice ambient = lattice_from_json(load_json_file(ambient_path));
    ZMat vectors = vectors_from_json(load_json_file(sub_path));
    Embedding e = Embedding::make(ambient, vectors);
    auto [sat, index] = saturation(e);
    if (text_mode) {
        std::cout << "saturation index " << index.get_str() << " ("
                  << (index == 1 ? "primitive" : "not primitive") << ")\n";
        return kExitOk;
    }
    Json out;
    out["index"] = index.get_str();
    out["primitive"] = index == 1;
    out["saturation_basis"] = vectors_to_json(sat.basis)["vectors"];
    out["saturation_gram"] = lattice_to_json(
        IntegerLattice::make_span(sat.induced_gram()))["gram"];
    print_json(out);
    return kExitOk;
}

int cmd_glue_scan(long p, int rmax) {
    ThresholdScanReport rep = overlattice_threshold_scan(p, rmax, disc_group_cap());
    if (text_mode) {
        for (const ThresholdScanRow& r : rep.rows)
            std::cout << "r=" << r.r << ": overlattice "
                      << (r.admits_overlattice ? "yes" : "no") << ", non-root "
                      << (r.admits_nonroot_overlattice ? "yes" : "no") << "\n";
        std::cout << (rep.matches_thresholds ? "thresholds match\n"
                                             : "THRESHOLD MISMATCH\n");
        return rep.matches_thresholds ? kExitOk : kExitVerificationFailure;
    }
    Json out;
    out["p"] = rep.p;
    Json rows = Json::array();
    for (const ThresholdScanRow& r : rep.rows) {
        Json jr;
        jr["r"] = r.r;
        jr["admits_overlattice"] = r.admits_overlattice;
        jr["admits_nonroot_overlattice"] = r.admits_nonroot_overlattice;
        rows.push_back(std::move(jr));
    }
    out["rows"] = std::move(rows);
    out["matches_thresholds"] = rep.matches_thresholds;
    print_json(out);
    return rep.matches_thresholds ? kExitOk : kExitVerificationFailure;
}

int cmd_complement(const std::string& ambient_path, const std::string& sub_path) {
    IntegerLattice ambient = lattice_from_json(load_json_file(ambient_path));
    ZMat vectors = vectors_from_json(load_json_file(sub_path));
    Embedding e = Embedding::make(ambient, vectors);
    Embedding comp = orthogonal_complement(e);
    if (text_mode) {
        std::cout << "complement rank " << comp.rank() << "\n";
        for (std::size_t i = 0; i < comp.basis.rows; ++i) {
            std::vector<std::string> c;
            for (const Int& x : comp.basis.row(i)) c.push_back(x.get_str());
            std::cout << "(" << join(c, ", ") << ")\n";
        }
        return kExitOk;
    }
    Json out;
    out["rank"] = comp.rank();
    out["basis"] = vectors_to_json(comp.basis)["vectors"];
    out["gram"] = lattice_to_json(IntegerLattice::make_span(comp.induced_gram()))["gram"];
    print_json(out);
    return kExitOk;
}

int cmd_graph_analyze(const std::string& path) {
    CurveGraph g = graph_from_json(load_json_file(path));
    auto configs = find_elliptic_configurations(g);
    if (text_mode) {
        for (const EllipticConfiguration& c : configs) {
            std::vector<std::string> sup;
            for (std::size_t i = 0; i < c.support.size(); ++i)
                sup.push_back(g.vertices[c.support[i]].label + ":" +
                              std::to_string(c.multiplicities[i]));
            std::cout << c.kodaira_name() << "  " << join(sup, " ") << "\n";
        }
        if (!configs.empty()) {
            OverExceptionalVertexSet orth = orthogonal_vertex_set(g, configs);
            std::cout << "orthogonal vertices: "
                      << (orth.labels.empty() ? "none" : join(orth.labels, " "))
                      << "\n";
        }
        return kExitOk;
    }
    Json out;
    Json list = Json::array();
    for (const EllipticConfiguration& c : configs) {
        Json jc;
        jc["type"] = c.kodaira_name();
        Json sup = Json::array();
        for (std::size_t i = 0; i < c.support.size(); ++i)
            sup.push_back(Json::array(
                {g.vertices[c.support[i]].label, c.multiplicities[i]}));
        jc["support"] = std::move(sup);
        list.push_back(std::move(jc));
    }
    out["configurations"] = std::move(list);
    if (!configs.empty()) {
        OverExceptionalVertexSet orth = orthogonal_vertex_set(g, configs);
        out["orthogonal_vertices"] = orth.labels;
        if (!orth.vertices.empty() && !orth.spanned.degenerate) {
            RootSystem rs = enumerate_roots(orth.spanned);
            Json comps = Json::array();
            for (const ADEType& t : rs.components) comps.push_back(t.name());
            out["orthogonal_span"] = std::move(comps);
        } else {
            out["orthogonal_span"] =
                orth.vertices.empty() ? "empty" : "degenerate";
        }
    } else {
        out["orthogonal_vertices"] = Json::array();
    }
    print_json(out);
    return kExitOk;
}

int cmd_verify_paper() {
    Json out;
    bool all = true;
    auto record = [&](const std::string& name, bool pass, Json detail) {
        Json j;
        j["name"] = name;
        j["pass"] = pass;
        j["detail"] = std::move(detail);
        out["checks"].push_back(std::move(j));
        std::cerr << (pass ? "[PASS] " : "[FAIL] ") << name << "\n";
        all = all && pass;
    };

    {
        AdeTableReport r = verify_ade_table();
        Json d = Json::array();
        for (const AdeTableEntry& e : r.entries)
            if (!e.pass) d.push_back(e.lattice);
        record("ade-discriminant-table", r.pass, std::move(d));
    }
    {
        NoOverlatticeReport r = no_overlattice_check();
        Json d = Json::array();
        for (const auto& e : r.entries)
            d.push_back(Json::array({e.lattice, e.nontrivial_isotropic_elements}));
        record("no-overlattice-quartet", r.pass, std::move(d));
    }
    for (long p : {2L, 3L, 5L}) {
        int rmax = p == 2 ? 10 : p == 3 ? 7 : 4;
        ThresholdScanReport r = overlattice_threshold_scan(p, rmax);
        Json d;
        d["p"] = p;
        d["rmax"] = rmax;
        record("overlattice-thresholds-p" + std::to_string(p), r.matches_thresholds,
               std::move(d));
    }
    {
        RootOverlatticeSweepReport r = root_overlattice_sweep(7);
        Json d;
        d["lattices"] = r.lattices_checked;
        d["overlattices"] = r.overlattices_checked;
        d["counterexamples"] = r.counterexamples;
        record("root-overlattice-sweep-rank7", r.pass, std::move(d));
    }
    {
        ComplementChainReport r = e6_complement_chain();
        Json d;
        d["subgroups"] = r.nontrivial_subgroups;
        d["orbits"] = r.subgroup_orbits;
        d["roots"] = r.overlattice_roots;
        d["complement"] = Json::array({r.complement_rank, r.complement_disc.get_str(),
                                       r.complement_roots, to_string(r.complement_q)});
        record("e6-complement-chain", r.pass, std::move(d));
    }
    {
        CurveTableReport r = candidate_curve_table(build_ten_sequence_model());
        Json d;
        d["classes"] = r.classes_checked;
        d["identities"] = r.identities_checked;
        d["failures"] = r.failures;
        record("candidate-curve-table", r.pass, std::move(d));
    }
    {
        FigureOrthogonalityReport r = figure_orthogonality_check();
        Json d = Json::array();
        for (const auto& e : r.entries)
            d.push_back(Json::array({e.figure, e.pass}));
        record("figure-orthogonality", r.pass, std::move(d));
    }
    {
        K3PipelineReport r = finite_automorphism_k3_pipeline();
        K3PipelineReport swapped = finite_automorphism_k3_pipeline(true);
        Json d;
        d["saturation_index"] = r.saturation_index.get_str();
        d["concentration"] = r.concentration_labels;
        d["swap_invariant"] = swapped.pass;
        record("k3-example-pipeline", r.pass && swapped.pass, std::move(d));
    }

    out["pass"] = all;
    if (text_mode)
        std::cout << (all ? "all checks passed\n" : "some checks FAILED\n");
    else
        print_json(out);
    return all ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for even lattices and (-2)-curve configurations"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));

    std::string lattice_path, ambient_path, sub_path, graph_path;
    bool show_all = false;
    long scan_p = 2;
    int scan_rmax = 10;

    CLI::App* discform = app.add_subcommand("discform", "discriminant group and form");
    discform->add_option("gram", lattice_path, "Gram matrix JSON file")->required();

    CLI::App* roots = app.add_subcommand("roots", "norm -2 vectors and ADE type");
    roots->add_option("gram", lattice_path, "Gram matrix JSON file")->required();
    roots->add_flag("--all", show_all, "print the full root list");

    CLI::App* glue = app.add_subcommand("glue", "overlattices, saturation and scans");
    glue->require_subcommand(1);
    CLI::App* over = glue->add_subcommand("overlattices", "all overlattices via glue");
    over->add_option("gram", lattice_path, "Gram matrix JSON file")->required();
    CLI::App* sat = glue->add_subcommand("saturate", "saturation of an embedding");
    sat->add_option("ambient", ambient_path, "ambient Gram JSON")->required();
    sat->add_option("sub", sub_path, "embedded vectors JSON")->required();
    CLI::App* scan = glue->add_subcommand("scan", "overlattice threshold scan");
    scan->add_option("--p", scan_p, "prime p")->required();
    scan->add_option("--rmax", scan_rmax, "largest number of summands")->required();

    CLI::App* graph = app.add_subcommand("graph", "dual graph analysis");
    graph->require_subcommand(1);
    CLI::App* analyze = graph->add_subcommand("analyze", "configurations and orthogonal set");
    analyze->add_option("graph", graph_path, "graph JSON file")->required();

    CLI::App* complement = app.add_subcommand("complement", "orthogonal complement");
    complement->add_option("ambient", ambient_path, "ambient Gram JSON")->required();
    complement->add_option("sub", sub_path, "embedded vectors JSON")->required();

    CLI::App* verify = app.add_subcommand("verify-paper", "run the full verification suite");

    try {
        app.parse(argc, argv);
        text_mode = format == "text";
        if (discform->parsed()) return cmd_discform(lattice_path);
        if (roots->parsed()) return cmd_roots(lattice_path, show_all);
        if (glue->parsed()) {
            if (over->parsed()) return cmd_glue_overlattices(lattice_path);
            if (sat->parsed()) return cmd_glue_saturate(ambient_path, sub_path);
            if (scan->parsed()) return cmd_glue_scan(scan_p, scan_rmax);
        }
        if (graph->parsed() && analyze->parsed()) return cmd_graph_analyze(graph_path);
        if (complement->parsed()) return cmd_complement(ambient_path, sub_path);
        if (verify->parsed()) return cmd_verify_paper();
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    } catch (const resource_error& e) {
        Json err;
        err["error"] = e.what();
        err["required_bound"] = e.required.get_str();
        std::cerr << err.dump() << "\n";
        return kExitResource;
    } catch (const domain_error& e) {
        Json err;
        err["error"] = e.what();
        std::cerr << err.dump() << "\n";
        return kExitUsage;
    } catch (const Json::exception& e) {
        Json err;
        err["error"] = e.what();
        std::cerr << err.dump() << "\n";
        return kExitUsage;
    }
}
