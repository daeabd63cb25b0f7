// rotg: construct simple rotation r-graphs from r-graphs of odd regularity,
// replay reduction scripts, and run the small-instance conjecture checkers.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "rotg/build.hpp"
#include "rotg/certify.hpp"
#include "rotg/conjecture.hpp"
#include "rotg/errors.hpp"
#include "rotg/iso.hpp"
#include "rotg/mgf.hpp"
#include "rotg/shape.hpp"

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

rotg::MgfDocument load(const std::string& path) { return rotg::read_mgf(slurp(path)); }

int run_verify(const std::string& path, int r) {
    const auto doc = load(path);
    const bool ok = rotg::is_r_graph(doc.graph, r);
    std::cout << "rgraph " << (ok ? 1 : 0) << '\n';
    if (doc.graph.vertex_count() >= 1 && rotg::is_connected(doc.graph)) {
        const auto cert = rotg::min_odd_cut(doc.graph);
        std::cout << "oddcut " << cert.value << '\n';
        std::cout << "oddcut-witness " << cert.witness.size();
        for (rotg::VertexId v : cert.witness) std::cout << ' ' << v;
        std::cout << '\n';
    } else {
        std::cerr << "no odd-cut certificate: graph is empty or disconnected\n";
    }
    return ok ? kExitHolds : kExitFails;
}

int run_construct(const std::string& path, int r) {
    const auto doc = load(path);
    const auto built = rotg::construct_rotation_graph(doc.graph, r);
    rotg::MgfDocument out;
    out.graph = built.rotation.base.graph;
    out.tree = built.rotation.base.tree;
    out.permutation = built.rotation.rotation;
    out.script = built.to_input;
    std::cout << rotg::write_mgf(out);
    return kExitHolds;
}

int run_reduce(const std::string& path) {
    const auto doc = load(path);
    if (!doc.script) {
        std::cerr << "input has no script section\n";
        return kExitUsage;
    }
    rotg::MgfDocument out;
    out.graph = rotg::apply_script(doc.graph, *doc.script);
    std::cout << rotg::write_mgf(out);
    return kExitHolds;
}

int run_rotation_check(const std::string& path) {
    const auto doc = load(path);
    if (!doc.tree || !doc.permutation) {
        std::cerr << "input needs tree and perm sections\n";
        return kExitUsage;
    }
    const bool ok = rotg::is_automorphism(doc.graph, *doc.permutation) &&
                    rotg::is_rotational(doc.graph, *doc.tree, *doc.permutation);
    std::cout << "rotational " << (ok ? 1 : 0) << '\n';
    return ok ? kExitHolds : kExitFails;
}

int run_cover(const std::string& path, const std::string& mode, int r, int k) {
    const auto doc = load(path);
    int count = 0;
    rotg::CoverRule rule;
    if (mode == "fulkerson") {
        count = 2 * r;
        rule = rotg::CoverRule::ExactlyTwo;
    } else if (mode == "berge") {
        count = 2 * r - 1;
        rule = rotg::CoverRule::AtLeastOne;
    } else if (mode == "atmost-k") {
        count = r;
        rule = rotg::CoverRule::AtMostK;
        if (k < 1) {
            std::cerr << "--k is required for atmost-k\n";
            return kExitUsage;
        }
    } else {
        std::cerr << "unknown cover mode '" << mode << "'\n";
        return kExitUsage;
    }
    const auto witness = rotg::find_pm_cover(doc.graph, count, rule, k);
    if (!witness) return kExitFails;
    std::cout << "cover " << witness->size() << '\n';
    for (const auto& pm : *witness) {
        std::cout << "matching " << pm.edges.size();
        for (rotg::EdgeId e : pm.edges) std::cout << ' ' << e;
        std::cout << '\n';
    }
    return kExitHolds;
}

int run_flow(const std::string& path, int k) {
    const auto doc = load(path);
    const auto flow = rotg::nowhere_zero_flow(doc.graph, k);
    if (!flow) return kExitFails;
    std::cout << "flow " << flow->values.size() << '\n';
    for (rotg::EdgeId e = 0; e < doc.graph.edge_count(); ++e) {
        const auto& ed = doc.graph.edge(e);
        const rotg::VertexId from = flow->forward(e) ? ed.u : ed.v;
        const rotg::VertexId to = flow->forward(e) ? ed.v : ed.u;
        std::cout << e << ' ' << from << ' ' << to << ' ' << flow->magnitude(e) << '\n';
    }
    return kExitHolds;
}

int run_snark(const std::string& path) {
    const auto doc = load(path);
    const bool ok = rotg::is_snark(doc.graph);
    std::cout << "snark " << (ok ? 1 : 0) << '\n';
    return ok ? kExitHolds : kExitFails;
}

int run_gen(const std::string& kind, int r, int depth) {
    rotg::MgfDocument out;
    if (kind == "tir") {
        out.graph = rotg::build_tir(r, depth);
        out.tree = rotg::whole_graph_tree(out.graph, 0);
    } else if (kind == "base-rotation") {
        const auto rg = rotg::base_rotation_graph(r, depth);
        out.graph = rg.base.graph;
        out.tree = rg.base.tree;
        out.permutation = rg.rotation;
    } else {
        std::cerr << "unknown gen kind '" << kind << "'\n";
        return kExitUsage;
    }
    std::cout << rotg::write_mgf(out);
    return kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rotation r-graph construction and verification"};
    app.require_subcommand(1);

    std::string file, mode, kind;
    int r = 3, k = 0, depth = 1;

    auto* verify = app.add_subcommand("verify", "check the r-graph property and print a certificate");
    verify->add_option("--r", r, "regularity")->required();
    verify->add_option("file", file, "mgf input ('-' for stdin)")->required();

    auto* construct = app.add_subcommand("construct", "emit a simple rotation r-graph with a script back");
    construct->add_option("--r", r, "regularity")->required();
    construct->add_option("file", file, "mgf input ('-' for stdin)")->required();

    auto* reduce = app.add_subcommand("reduce", "apply the embedded reduction script");
    reduce->add_option("file", file, "mgf input ('-' for stdin)")->required();

    auto* rotation = app.add_subcommand("rotation-check", "verify the embedded rotational automorphism");
    rotation->add_option("file", file, "mgf input ('-' for stdin)")->required();

    auto* cover = app.add_subcommand("cover", "search for perfect-matching covers");
    cover->add_option("--mode", mode, "fulkerson | berge | atmost-k")->required();
    cover->add_option("--r", r, "regularity")->required();
    cover->add_option("--k", k, "bound for atmost-k");
    cover->add_option("file", file, "mgf input ('-' for stdin)")->required();

    auto* flow = app.add_subcommand("flow", "search for a nowhere-zero k-flow");
    flow->add_option("--k", k, "flow order")->required();
    flow->add_option("file", file, "mgf input ('-' for stdin)")->required();

    auto* snark = app.add_subcommand("snark", "bridgeless cubic and not 3-edge-colorable");
    snark->add_option("file", file, "mgf input ('-' for stdin)")->required();

    auto* gen = app.add_subcommand("gen", "generate tir trees and base rotation graphs");
    gen->add_option("--kind", kind, "tir | base-rotation")->required();
    gen->add_option("--r", r, "regularity")->required();
    gen->add_option("--depth", depth, "tree depth")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message
        return kExitUsage;
    }

    try {
        if (verify->parsed()) return run_verify(file, r);
        if (construct->parsed()) return run_construct(file, r);
        if (reduce->parsed()) return run_reduce(file);
        if (rotation->parsed()) return run_rotation_check(file);
        if (cover->parsed()) return run_cover(file, mode, r, k);
        if (flow->parsed()) return run_flow(file, k);
        if (snark->parsed()) return run_snark(file);
        if (gen->parsed()) return run_gen(kind, r, depth);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
