// Command-line front end: generate instances, run the reductions, solve and
// verify. File formats are UGIF (instances, covers) and SCF (surfaces).

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "ugtop/covering.hpp"
#include "ugtop/csp.hpp"
#include "ugtop/errors.hpp"
#include "ugtop/homology.hpp"
#include "ugtop/io.hpp"
#include "ugtop/kkmo.hpp"
#include "ugtop/nonabelian.hpp"
#include "ugtop/surface.hpp"
#include "ugtop/surface_reduction.hpp"

using namespace ugtop;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Args {
    std::string command;
    std::string mode;
    std::string input;
    std::string input_b;
    std::string output;
    int n = 0, degree = 0, k = 2, q = 2;
    double noise = 0.0;
    std::uint64_t seed = 0;
    std::uint64_t budget = std::uint64_t(1) << 26;
    int threads = 1;
    int universal = -1;
};

int cmd_gen(const Args& a) {
    Max2LinInstance inst = gen_planted(a.n, a.degree, a.k, a.noise, a.seed);
    std::vector<std::string> comments = {
        "planted instance: n " + std::to_string(a.n) + " degree " + std::to_string(a.degree) +
        " k " + std::to_string(a.k) + " noise " + std::to_string(a.noise) + " seed " +
        std::to_string(a.seed)};
    write_file(a.output, serialize_ugif(UgifDoc::from(inst, comments)));
    return kExitOk;
}

int cmd_reduce(const Args& a) {
    if (a.mode == "square") {
        UGInstance inst = parse_ugif_file(a.input).to_ug();
        write_file(a.output, serialize_ugif(UgifDoc::from(square(inst), {"squared instance"})));
        return kExitOk;
    }
    if (a.mode == "kkmo") {
        UGInstance inst = parse_ugif_file(a.input).to_ug();
        Max2LinInstance out = kkmo_reduce(inst, a.q, a.budget);
        std::vector<std::string> comments = {
            "kkmo reduction: n " + std::to_string(inst.vertex_count) + " k " +
                std::to_string(inst.k) + " q " + std::to_string(a.q),
            "vertex (i, t) has id i * q^(k-1) + rank(t); t canonical with t[0] = 0"};
        write_file(a.output, serialize_ugif(UgifDoc::from(out, comments)));
        return kExitOk;
    }
    if (a.mode == "surface") {
        UgifDoc doc = parse_ugif_file(a.input);
        ScfDoc out;
        if (doc.type == UgifDoc::Type::max2lin) {
            out = ScfDoc::from(graph_to_one_face(doc.to_max2lin()));
        } else {
            out = ScfDoc::from(graph_to_one_face_ug(doc.to_ug()));
        }
        out.comments.push_back("one-face surface instance");
        write_file(a.output, serialize_scf(out));
        return kExitOk;
    }
    if (a.mode == "triangulate") {
        SurfaceInstance si = parse_scf_file(a.input).to_instance();
        ScfDoc out = ScfDoc::from(triangulate_face(si));
        out.comments.push_back("triangulated instance");
        write_file(a.output, serialize_scf(out));
        return kExitOk;
    }
    if (a.mode == "dual") {
        ScfDoc doc = parse_scf_file(a.input);
        SurfaceComplex c = doc.to_complex();
        SurfaceComplex dual = dual_complex(c);
        ScfDoc out = ScfDoc::from(dual);
        if (doc.zk) {
            Cochain1 labels = doc.to_cochain();
            Chain1 as_chain{*doc.zk, labels.values};
            if (is_cycle(as_chain, c)) {
                // cycle on the primal becomes a cocycle on the dual
                Cochain1 transported = dual_transport(as_chain, c, dual);
                out.zk = *doc.zk;
                out.zk_labels = transported.values;
            } else if (is_cocycle(labels, c)) {
                // cocycle on the primal becomes a cycle on the dual
                Chain1 zd{*doc.zk, labels.values};
                if (!is_cycle(zd, dual))
                    throw input_error("dual: transported labels are not a cycle");
                out.zk = *doc.zk;
                out.zk_labels = labels.values;
            } else {
                throw input_error("dual: labels are neither a cycle nor a cocycle");
            }
        }
        out.comments.push_back("dual complex");
        write_file(a.output, serialize_scf(out));
        return kExitOk;
    }
    if (a.mode == "patch") {
        ScfDoc doc = parse_scf_file(a.input);
        SurfaceComplex c = doc.to_complex();
        NonAbCochain1 f = doc.to_nonab();
        std::optional<int> universal;
        if (a.universal >= 0) universal = a.universal;
        else if (doc.universal_vertex) universal = doc.universal_vertex;
        PatchResult patched = patch_cell(c, f, universal);
        CoverSurfaceInstance si;
        si.complex = patched.complex;
        si.labels = patched.labels;
        si.prov.universal_vertex = universal;
        ScfDoc out = ScfDoc::from(si);
        out.comments.push_back("commutator patch");
        write_file(a.output, serialize_scf(out));
        return kExitOk;
    }
    std::cerr << "unknown reduce mode " << a.mode << "\n";
    return kExitUsage;
}

int cmd_solve(const Args& a) {
    UgifDoc doc = parse_ugif_file(a.input);
    if (a.mode == "brute") {
        BruteOptions opt;
        opt.budget = a.budget;
        opt.threads = a.threads;
        OptResult r;
        long long total = 0;
        if (doc.type == UgifDoc::Type::max2lin) {
            Max2LinInstance inst = doc.to_max2lin();
            r = opt_brute(inst, opt);
            total = (long long)inst.constraints.size();
        } else {
            UGInstance inst = doc.to_ug();
            r = opt_brute(inst, opt);
            total = (long long)inst.constraints.size();
        }
        std::cout << "best " << r.best_count << "\n";
        std::cout << "total " << total << "\n";
        std::cout << "fraction " << Rat(r.best_count, total) << "\n";
        std::cout << "witness";
        for (int v : r.witness) std::cout << " " << v;
        std::cout << "\n";
        return kExitOk;
    }
    if (a.mode == "greedy") {
        long long sat = 0, total = 0, bound = 0;
        Assignment s;
        if (doc.type == UgifDoc::Type::max2lin) {
            Max2LinInstance inst = doc.to_max2lin();
            s = greedy_half(inst);
            sat = satisfied_count(inst, s);
            total = (long long)inst.constraints.size();
            bound = greedy_bound(inst);
        } else {
            UGInstance inst = doc.to_ug();
            s = greedy_half(inst);
            sat = satisfied_count(inst, s);
            total = (long long)inst.constraints.size();
            bound = greedy_bound(inst);
        }
        std::cout << "satisfied " << sat << "\n";
        std::cout << "total " << total << "\n";
        std::cout << "fraction " << Rat(sat, total) << "\n";
        std::cout << "bound " << bound << "\n";
        std::cout << "witness";
        for (int v : s) std::cout << " " << v;
        std::cout << "\n";
        return sat >= bound ? kExitOk : kExitViolation;
    }
    std::cerr << "unknown solve mode " << a.mode << "\n";
    return kExitUsage;
}

int cmd_verify(const Args& a) {
    if (a.mode == "cocycle") {
        ScfDoc doc = parse_scf_file(a.input);
        SurfaceComplex c = doc.to_complex();
        bool ok;
        if (doc.sn) ok = nonab_is_cocycle(doc.to_nonab(), c);
        else ok = is_cocycle(doc.to_cochain(), c);
        std::cout << (ok ? "cocycle ok" : "cocycle violated") << "\n";
        return ok ? kExitOk : kExitViolation;
    }
    if (a.mode == "faces") {
        ScfDoc doc = parse_scf_file(a.input);
        if (doc.faces.empty()) {
            std::cout << "faces missing from document\n";
            return kExitViolation;
        }
        SurfaceComplex c = make_complex(doc.vertices, doc.edges, doc.rotation);
        if (c.faces != doc.faces) {
            std::cout << "faces do not match the rotation system\n";
            return kExitViolation;
        }
        c.validate();
        std::cout << "faces ok: " << c.face_count() << " faces, every dart covered once\n";
        return kExitOk;
    }
    if (a.mode == "euler") {
        ScfDoc doc = parse_scf_file(a.input);
        SurfaceComplex c = doc.to_complex();
        int chi = c.euler_characteristic();
        int g = c.genus();  // throws on odd characteristic
        std::cout << "euler ok: V - E + F = " << chi << ", genus " << g << " ("
                  << c.component_count() << " component"
                  << (c.component_count() == 1 ? "" : "s") << ")\n";
        return kExitOk;
    }
    if (a.mode == "iso") {
        GCoveringGraph c1 = parse_ugif_file(a.input).to_cover();
        GCoveringGraph c2 = parse_ugif_file(a.input_b).to_cover();
        auto witness = check_isomorphic(c1, c2);
        if (!witness) {
            std::cout << "not isomorphic\n";
            return kExitViolation;
        }
        std::cout << "isomorphic\n";
        for (std::size_t v = 0; v < witness->size(); ++v) {
            std::cout << "g " << v << " ";
            for (std::size_t i = 0; i < (*witness)[v].size(); ++i)
                std::cout << (i ? "," : "") << (*witness)[v][i];
            std::cout << "\n";
        }
        return kExitOk;
    }
    if (a.mode == "gap") {
        SurfaceInstance si_in = parse_scf_file(a.input).to_instance();
        SurfaceInstance si_out = parse_scf_file(a.input_b).to_instance();
        GapReport rep = gap_bounds_check(si_in, si_out, a.budget);
        std::cout << "rho_in " << rep.rho_in << "\n";
        std::cout << "rho_out " << rep.rho_out << "\n";
        std::cout << "lower " << rep.lower << "\n";
        std::cout << "upper " << rep.upper << "\n";
        std::cout << (rep.ok ? "gap bounds ok" : "gap bounds violated") << "\n";
        return rep.ok ? kExitOk : kExitViolation;
    }
    std::cerr << "unknown verify mode " << a.mode << "\n";
    return kExitUsage;
}

int cmd_stats(const Args& a) {
    ScfDoc doc = parse_scf_file(a.input);
    SurfaceComplex c = doc.to_complex();
    std::cout << "vertices " << c.vertex_count << "\n";
    std::cout << "edges " << c.edge_count() << "\n";
    std::cout << "faces " << c.face_count() << "\n";
    std::cout << "components " << c.component_count() << "\n";
    std::cout << "euler " << c.euler_characteristic() << "\n";
    std::cout << "genus " << c.genus() << "\n";
    if (!doc.edge_classes.empty()) {
        long long xp = 0, s = 0, cc = 0, l = 0;
        for (const auto& name : doc.edge_classes) {
            if (name == "S") ++s;
            else if (name == "C") ++cc;
            else if (name == "L") ++l;
            else ++xp;
        }
        std::cout << "classes X' " << xp << " S " << s << " C " << cc << " L " << l << "\n";
        if (s == 2 * xp && cc == 2 * xp && l == 4 * xp)
            std::cout << "class-ratio 1:2:2:4 ok\n";
    }
    try {
        auto cert = xuong_certificate(c.vertex_count, c.edges);
        if (cert)
            std::cout << "xuong certificate: tree " << cert->tree_edges.size() << " edges, "
                      << cert->pairing.size() << " co-tree pairs\n";
        else
            std::cout << "xuong certificate: none\n";
    } catch (const input_error&) {
        std::cout << "xuong certificate: skipped (disconnected)\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"unique games, covering graphs and surface homology toolkit"};
    app.require_subcommand(1);
    Args args;

    auto* gen = app.add_subcommand("gen", "generate a planted max2lin instance");
    gen->add_option("--n", args.n, "vertex count")->required();
    gen->add_option("--degree", args.degree, "vertex degree")->required();
    gen->add_option("--k", args.k, "modulus")->required();
    gen->add_option("--noise", args.noise, "corruption probability");
    gen->add_option("--seed", args.seed, "random seed")->required();
    gen->add_option("-o,--output", args.output, "output UGIF file")->required();

    auto* reduce = app.add_subcommand("reduce", "apply a reduction");
    reduce->add_option("mode", args.mode, "square|kkmo|surface|triangulate|dual|patch")
        ->required();
    reduce->add_option("-i,--input", args.input, "input file")->required();
    reduce->add_option("-o,--output", args.output, "output file")->required();
    reduce->add_option("--q", args.q, "target modulus (kkmo)");
    reduce->add_option("--budget", args.budget, "work budget");
    reduce->add_option("--universal", args.universal, "universal vertex id (patch)");

    auto* solve = app.add_subcommand("solve", "run a solver");
    solve->add_option("mode", args.mode, "brute|greedy")->required();
    solve->add_option("-i,--input", args.input, "input UGIF file")->required();
    solve->add_option("--budget", args.budget, "assignment budget for brute");
    solve->add_option("--threads", args.threads, "solver threads");

    auto* verify = app.add_subcommand("verify", "check an invariant");
    verify->add_option("mode", args.mode, "cocycle|faces|euler|iso|gap")->required();
    verify->add_option("inputs", args.input, "input file")->required();
    verify->add_option("input_b", args.input_b, "second input file (iso, gap)");
    verify->add_option("--budget", args.budget, "work budget");

    auto* stats = app.add_subcommand("stats", "report complex statistics");
    stats->add_option("-i,--input", args.input, "input SCF file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(args);
        if (reduce->parsed()) return cmd_reduce(args);
        if (solve->parsed()) return cmd_solve(args);
        if (verify->parsed()) {
            if ((args.mode == "iso" || args.mode == "gap") && args.input_b.empty()) {
                std::cerr << "verify " << args.mode << " needs two files\n";
                return kExitUsage;
            }
            return cmd_verify(args);
        }
        if (stats->parsed()) return cmd_stats(args);
    } catch (const budget_error& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return kExitBudget;
    } catch (const parse_error& e) {
        std::cerr << "parse: " << e.what() << "\n";
        return kExitUsage;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    }
    return kExitUsage;
}
