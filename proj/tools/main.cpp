#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "toroflip/cache.hpp"
#include "toroflip/experiment.hpp"
#include "toroflip/families.hpp"
#include "toroflip/flipgraph.hpp"
#include "toroflip/forcing.hpp"
#include "toroflip/homology.hpp"
#include "toroflip/tilings.hpp"
#include "toroflip/torus.hpp"

using namespace toroflip;
using nlohmann::ordered_json;

namespace {

struct BatchOptions {
    std::vector<std::string> targets;
    bool bipartite = false;
    bool non_bipartite = false;
    bool simple_only = false;
    std::string output;
    std::string format = "json";
    std::string cache_dir;
    bool no_cache = false;
    unsigned threads = 0;
    std::size_t cap = default_store_cap;
    std::size_t forcing_limit = 100000;
    std::size_t oracle_limit = 1000;
    bool timings = false;
};

void add_batch_options(CLI::App* cmd, BatchOptions& o) {
    cmd->add_option("targets", o.targets, "T(n,m,r) specs and/or sweep ranges such as n=1..6 m=2..8 r=*");
    cmd->add_flag("--bipartite", o.bipartite, "keep bipartite instances only");
    cmd->add_flag("--non-bipartite", o.non_bipartite, "keep non-bipartite instances only");
    cmd->add_flag("--simple-only", o.simple_only, "drop tori with loops or parallel edges");
    cmd->add_option("-o,--output", o.output, "write the JSON report here and the CSV table next to it");
    cmd->add_option("--format", o.format, "stdout format when no --output is given")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--cache-dir", o.cache_dir, "tiling cache directory (default: $TOROFLIP_CACHE_DIR or ~/.cache)");
    cmd->add_flag("--no-cache", o.no_cache, "enumerate without reading or writing the cache");
    cmd->add_option("-j,--threads", o.threads, "worker threads (0 = all cores)");
    cmd->add_option("--cap", o.cap, "maximum tilings per instance");
    cmd->add_option("--forcing-limit", o.forcing_limit, "largest instance whose spectrum is checked by verify");
    cmd->add_option("--oracle-limit", o.oracle_limit, "largest instance cross-checked by brute force");
    cmd->add_flag("--timings", o.timings, "include wall times and cache status in the JSON report");
}

ExperimentConfig make_config(const BatchOptions& o, Task task) {
    if (o.bipartite && o.non_bipartite) throw CLI::ValidationError("--bipartite and --non-bipartite exclude each other");
    ExperimentConfig c;
    c.task = task;
    std::vector<std::string> sweep_tokens;
    for (const auto& t : o.targets) {
        if (is_sweep_token(t)) sweep_tokens.push_back(t);
        else c.specs.push_back(TorusSpec::parse(t));
    }
    if (!sweep_tokens.empty()) c.sweep = parse_sweep(sweep_tokens);
    c.parity = o.bipartite ? ParityFilter::bipartite : o.non_bipartite ? ParityFilter::non_bipartite : ParityFilter::any;
    c.simple_only = o.simple_only;
    c.output = o.output;
    if (!o.no_cache) c.cache_dir = o.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(o.cache_dir);
    c.threads = o.threads;
    c.cap = o.cap;
    c.forcing_limit = o.forcing_limit;
    c.oracle_limit = o.oracle_limit;
    c.timings = o.timings;
    return c;
}

int run_batch(const BatchOptions& o, Task task) {
    const ExperimentConfig config = make_config(o, task);
    const VerificationReport report = run(config);
    if (!config.output.empty()) emit(report, config);
    else if (o.format == "csv") write_csv(report, std::cout);
    else write_json(report, config, std::cout);
    for (const auto& r : report.instances) {
        if (!r.error.empty()) std::cerr << r.spec.to_string() << ": " << r.error << '\n';
        for (const auto& c : r.claims)
            if (!c.passed) std::cerr << r.spec.to_string() << ": " << c.name << " FAILED: " << c.detail << '\n';
    }
    return report.passed() ? 0 : 1;
}

void write_dot(const FlipGraph& graph, std::ostream& out) {
    out << "graph flips {\n  node [shape=point];\n";
    for (std::size_t t = 0; t < graph.tiling_count(); ++t)
        out << "  t" << t << " [component=" << graph.component_of(t) << "];\n";
    for (std::size_t t = 0; t < graph.tiling_count(); ++t)
        for (auto u : graph.neighbors(t))
            if (u > t) out << "  t" << t << " -- t" << u << ";\n";
    out << "}\n";
}

ordered_json torus_json(const Torus& torus) {
    const auto& s = torus.spec();
    ordered_json j;
    j["spec"] = s.to_string();
    j["bipartite"] = is_bipartite(s);
    j["simple"] = torus.is_simple();
    j["dual"] = dual(s).to_string();
    j["i_cycles"] = cycle_structure(s.m, s.r);
    ordered_json vertices = ordered_json::array();
    for (int v = 0; v < torus.vertex_count(); ++v) {
        ordered_json vj{{"index", v}, {"row", torus.vertex_row(v)}, {"col", torus.vertex_col(v)}};
        if (is_bipartite(s)) vj["black"] = is_black(torus, v);
        vertices.push_back(vj);
    }
    j["vertices"] = vertices;
    ordered_json edges = ordered_json::array();
    for (int e = 0; e < torus.edge_count(); ++e) {
        const Edge& ed = torus.edge(e);
        edges.push_back({{"index", e},
                         {"type", ed.kind == EdgeKind::horizontal ? "horizontal" : "vertical"},
                         {"row", ed.row},
                         {"col", ed.col},
                         {"tail", ed.tail},
                         {"head", ed.head}});
    }
    j["edges"] = edges;
    ordered_json faces = ordered_json::array();
    for (int f = 0; f < torus.face_count(); ++f) {
        const Face& fc = torus.face(f);
        faces.push_back({{"index", f},
                         {"row", fc.row},
                         {"col", fc.col},
                         {"top", fc.edges[0]},
                         {"bottom", fc.edges[1]},
                         {"left", fc.edges[2]},
                         {"right", fc.edges[3]},
                         {"proper", torus.face_is_proper(f)}});
    }
    j["faces"] = faces;
    return j;
}

Tiling parse_tiling(const Torus& torus, const std::string& hex) {
    Tiling t = EdgeSet::from_hex(torus.edge_count(), hex);
    if (!is_perfect_matching(torus, t))
        throw std::invalid_argument("--tiling " + hex + " is not a tiling of " + torus.spec().to_string());
    return t;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Domino tilings of quadriculated tori: flip graphs, flux and forcing spectra"};
    app.require_subcommand(1);

    std::string spec_text, tiling_hex, dot_path;
    std::size_t dot_limit = 5000;

    auto* torus_cmd = app.add_subcommand("torus", "export the torus structure as JSON");
    torus_cmd->add_option("spec", spec_text, "T(n,m,r)")->required();

    BatchOptions enum_opts, comp_opts, hist_opts, spec_opts, verify_opts;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "count tilings and write the cache");
    add_batch_options(enumerate_cmd, enum_opts);
    auto* components_cmd = app.add_subcommand("components", "flip-graph component statistics");
    add_batch_options(components_cmd, comp_opts);
    components_cmd->add_option("--dot", dot_path, "write the flip graph of a single instance as DOT");
    components_cmd->add_option("--dot-limit", dot_limit, "refuse DOT export above this many tilings");
    auto* hist_cmd = app.add_subcommand("flux-histogram", "flux class vs tilings vs components");
    add_batch_options(hist_cmd, hist_opts);
    auto* spectrum_cmd = app.add_subcommand("spectrum", "forcing spectrum with per-value counts");
    add_batch_options(spectrum_cmd, spec_opts);
    auto* verify_cmd = app.add_subcommand("verify", "run every applicable check; exit 0 iff all pass");
    add_batch_options(verify_cmd, verify_opts);

    auto* flux_cmd = app.add_subcommand("flux", "flux of one tiling");
    flux_cmd->add_option("spec", spec_text, "T(n,m,r)")->required();
    flux_cmd->add_option("--tiling", tiling_hex, "edge bitmask, hex, edge 0 = lowest bit")->required();

    auto* forcing_cmd = app.add_subcommand("forcing", "forcing number of one tiling with a minimum witness");
    forcing_cmd->add_option("spec", spec_text, "T(n,m,r)")->required();
    forcing_cmd->add_option("--tiling", tiling_hex, "edge bitmask, hex, edge 0 = lowest bit")->required();

    auto* families_cmd = app.add_subcommand("families", "named tilings with their fluxes");
    families_cmd->add_option("spec", spec_text, "T(n,m,r)")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*enumerate_cmd) return run_batch(enum_opts, Task::enumerate);
        if (*hist_cmd) return run_batch(hist_opts, Task::flux_histogram);
        if (*spectrum_cmd) return run_batch(spec_opts, Task::spectrum);
        if (*verify_cmd) return run_batch(verify_opts, Task::verify);
        if (*components_cmd) {
            const int rc = run_batch(comp_opts, Task::components);
            if (!dot_path.empty()) {
                const ExperimentConfig c = make_config(comp_opts, Task::components);
                const auto specs = expand_instances(c);
                if (specs.size() != 1) throw std::invalid_argument("--dot needs exactly one instance");
                const Torus torus(specs.front());
                const TilingStore store = TilingStore::enumerate(torus, dot_limit);
                const FlipGraph graph(torus, store, true, c.threads);
                std::ofstream out(dot_path);
                write_dot(graph, out);
            }
            return rc;
        }

        const Torus torus(TorusSpec::parse(spec_text));
        if (*torus_cmd) {
            std::cout << torus_json(torus).dump(2) << '\n';
            return 0;
        }
        if (*flux_cmd) {
            const FluxClass f = flux(torus, parse_tiling(torus, tiling_hex), base_tiling(torus));
            std::cout << ordered_json{{"spec", torus.spec().to_string()}, {"a", f.a}, {"b", f.b}}.dump(2) << '\n';
            return 0;
        }
        if (*forcing_cmd) {
            const Tiling t = parse_tiling(torus, tiling_hex);
            const TilingStore store = TilingCache(default_cache_dir()).load_or_enumerate(torus, default_store_cap);
            const ForcingResult r = forcing_number(torus, t, store);
            std::cout << ordered_json{{"spec", torus.spec().to_string()},
                                      {"tiling", t.to_hex()},
                                      {"tiling_index", r.tiling_index},
                                      {"forcing_number", r.number},
                                      {"witness", r.witness}}
                             .dump(2)
                      << '\n';
            return 0;
        }
        if (*families_cmd) {
            const auto& s = torus.spec();
            if (!is_bipartite(s)) throw NotBipartite(s.to_string() + " is not bipartite; families need flux");
            const HomologyBasis basis(torus);
            const Tiling base = base_tiling(torus);
            ordered_json list = ordered_json::array();
            auto add = [&](const std::string& name, const Tiling& t) {
                const FluxClass f = flux(basis, t, base);
                list.push_back({{"name", name}, {"tiling", t.to_hex()}, {"flux", {f.a, f.b}}});
            };
            add("t_base", base);
            if (s.n >= 3 && s.m >= 3)
                for (const auto& nt : four_singletons(s)) add(nt.name, nt.tiling);
            if (s.n >= 4 && s.m >= 4)
                for (const auto& mem : horizontal_flux_family(s)) {
                    add("t_" + std::to_string(mem.k), mem.t);
                    add("t'_" + std::to_string(mem.k), mem.t_prime);
                }
            if (s.n >= 4 && s.m >= 4 && s.n % 2 == 0 && s.r == s.m)
                for (const auto& mem : vertical_flux_family(s)) {
                    add("t^" + std::to_string(mem.k), mem.t);
                    add("t'^" + std::to_string(mem.k), mem.t_prime);
                }
            if (s.n == s.m && s.m == s.r && s.n % 2 == 0 && s.n >= 4) {
                const auto diag = diagonal_singletons(s.n / 2);
                for (std::size_t i = 4; i < diag.size(); ++i) add("diagonal_" + std::to_string(i - 4), diag[i]);
            }
            std::cout << ordered_json{{"spec", s.to_string()}, {"tilings", list}}.dump(2) << '\n';
            return 0;
        }
    } catch (const InvalidSpec& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
