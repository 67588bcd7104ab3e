#include "polyspan/cli.hpp"

#include "polyspan/io.hpp"
#include "polyspan/spanners.hpp"
#include "polyspan/suite.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace polyspan {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text)) throw UsageError("cannot write " + path);
}

GraphKind graph_kind(const std::string& name) {
    if (auto k = parse_graph_kind(name)) return *k;
    throw UsageError("unknown graph \"" + name + "\" (expected vis, ginf, g15, g10 or g7)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Plane bounded-degree spanners among polygonal obstacles", "polyspan"};
    app.require_subcommand(1);

    GeneratorConfig gen_config;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "Generate a random instance");
    gen->add_option("--n", gen_config.n_points, "Number of vertices")->required();
    gen->add_option("--obstacles", gen_config.n_obstacles, "Number of convex obstacles");
    gen->add_option("--obstacle-size", gen_config.obstacle_size, "Samples per obstacle hull");
    gen->add_option("--bbox", gen_config.bbox, "Coordinate extent");
    gen->add_option("--seed", gen_config.seed, "Random seed");
    gen->add_option("--out", gen_out, "Output file (default stdout)");

    std::string in_path, out_path, graph_name;
    auto* build = app.add_subcommand("build", "Construct a graph and write its edge list");
    build->add_option("--graph", graph_name, "vis, ginf, g15, g10 or g7")->required();
    build->add_option("--in", in_path, "Instance file")->required();
    build->add_option("--out", out_path, "Edge list file (default stdout)");

    auto* verify = app.add_subcommand("verify", "Run every property check on an instance");
    verify->add_option("--in", in_path, "Instance file")->required();
    std::vector<std::string> verify_graphs, verify_edges;
    verify->add_option("--graph", verify_graphs, "Graph replaced by the matching --edges (repeatable)");
    verify->add_option("--edges", verify_edges, "Edge list checked in place of the built graph");

    bool labels = false;
    auto* render = app.add_subcommand("render", "Draw an instance and one of its graphs as SVG");
    render->add_option("--in", in_path, "Instance file")->required();
    render->add_option("--graph", graph_name, "vis, ginf, g15, g10 or g7")->required();
    render->add_option("--out", out_path, "SVG file (default stdout)");
    render->add_flag("--labels", labels, "Print vertex indices");

    auto* perturb = app.add_subcommand("perturb", "Rotate an instance into general position");
    perturb->add_option("--in", in_path, "Instance file")->required();
    perturb->add_option("--out", out_path, "Output file (default stdout)");

    std::vector<std::string> storage;
    storage.reserve(args.size() + 1);
    storage.push_back("polyspan");
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            write_output(gen_out, write_instance(generate(gen_config)), out);
            return 0;
        }
        if (build->parsed()) {
            const GraphKind kind = graph_kind(graph_name);
            const Scene scene = parse_instance(read_file(in_path));
            write_output(out_path, write_edge_list(build_graph(scene, kind)), out);
            return 0;
        }
        if (verify->parsed()) {
            const Scene scene = parse_instance(read_file(in_path));
            GraphOverrides overrides;
            if (verify_graphs.size() != verify_edges.size())
                throw UsageError("every --graph needs a matching --edges");
            for (std::size_t i = 0; i < verify_graphs.size(); ++i) {
                auto& slot = overrides.slot(graph_kind(verify_graphs[i]));
                if (slot) throw UsageError("graph " + verify_graphs[i] + " given twice");
                Graph g = parse_edge_list(read_file(verify_edges[i]));
                if (g.vertex_count() != scene.size())
                    throw UsageError("edge list has " + std::to_string(g.vertex_count()) +
                                     " vertices, instance has " + std::to_string(scene.size()));
                slot = std::move(g);
            }
            const SuiteReport report = run_suite(scene, overrides);
            out << report.text();
            if (report.ok()) {
                out << "all " << report.checks.size() << " checks passed\n";
                return 0;
            }
            const auto failed = report.failed();
            out << failed.size() << " of " << report.checks.size() << " checks failed:";
            for (const auto& f : failed) out << ' ' << f;
            out << '\n';
            return 1;
        }
        if (render->parsed()) {
            const GraphKind kind = graph_kind(graph_name);
            const Scene scene = parse_instance(read_file(in_path));
            SvgOptions options;
            options.label_vertices = labels;
            write_output(out_path, render_svg(scene, build_graph(scene, kind), options), out);
            return 0;
        }
        if (perturb->parsed()) {
            const Scene scene = parse_instance(read_file(in_path));
            const auto [rotated, k] = perturb_until_general_position(scene);
            write_output(out_path, write_instance(rotated), out);
            err << (k == 0 ? std::string("already in general position")
                           : "rotated with k = " + std::to_string(k))
                << '\n';
            return 0;
        }
    } catch (const InvariantError& e) {
        err << "error: internal invariant violated: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace polyspan
