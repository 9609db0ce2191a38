#include "toroflip/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "toroflip/cache.hpp"
#include "toroflip/families.hpp"
#include "toroflip/flipgraph.hpp"
#include "toroflip/parallel.hpp"

namespace toroflip {

namespace {

struct GoldenCounts {
    std::size_t tilings, components, singletons;
};

const std::map<TorusSpec, GoldenCounts>& golden_counts() {
    static const std::map<TorusSpec, GoldenCounts> table{
        {{3, 4, 1}, {80, 12, 8}},
        {{4, 4, 2}, {260, 11, 4}},
        {{4, 4, 4}, {272, 17, 12}},
    };
    return table;
}

struct GoldenSpectrum {
    std::size_t tilings;
    std::vector<int> values;
};

const std::map<TorusSpec, GoldenSpectrum>& golden_spectra() {
    static const std::map<TorusSpec, GoldenSpectrum> table{
        {{3, 10, 1}, {18656, {3, 5, 6, 7, 8}}},
        {{4, 10, 10}, {537636, {4, 6, 7, 8, 9, 10}}},
    };
    return table;
}

int parse_int(std::string_view s, std::string_view context) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw InvalidSpec("bad integer '" + std::string(s) + "' in '" + std::string(context) + "'");
    return v;
}

Range parse_range(std::string_view value, std::string_view token) {
    if (value == "*") return {1, 1, true};
    if (const auto dots = value.find(".."); dots != std::string_view::npos) {
        Range r{parse_int(value.substr(0, dots), token), parse_int(value.substr(dots + 2), token), false};
        if (r.lo > r.hi) throw InvalidSpec("empty range in '" + std::string(token) + "'");
        return r;
    }
    const int v = parse_int(value, token);
    return {v, v, false};
}

std::string range_text(const Range& r) {
    if (r.any) return "*";
    if (r.lo == r.hi) return std::to_string(r.lo);
    return std::to_string(r.lo) + ".." + std::to_string(r.hi);
}

Claim claim(std::string name, bool ok, std::string detail = {}) { return {std::move(name), ok, std::move(detail)}; }

std::string join(const std::vector<int>& v, char sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? std::string(1, sep) : "") + std::to_string(v[i]);
    return s;
}

// Component id of every tiling, or of one tiling looked up in the store.
struct Lookup {
    const TilingStore& store;
    const FlipGraph& graph;

    std::optional<std::uint32_t> component(const Tiling& t) const {
        const auto idx = store.find(t);
        if (!idx) return std::nullopt;
        return graph.component_of(*idx);
    }
    bool singleton(const Tiling& t) const {
        const auto c = component(t);
        return c && graph.components()[*c].singleton();
    }
};

void bipartite_claims(const Torus& torus, const TilingStore& store, const FlipGraph& graph, InstanceRecord& rec,
                      bool full) {
    const auto& spec = torus.spec();
    const HomologyBasis basis(torus);
    const Tiling base = base_tiling(torus);
    const Lookup look{store, graph};

    std::vector<FluxClass> fluxes(store.size());
    for (std::size_t i = 0; i < store.size(); ++i) fluxes[i] = flux(basis, store.tiling(i), base);

    // histogram: flux -> tilings, components
    std::map<FluxClass, std::pair<std::size_t, std::set<std::uint32_t>>> hist;
    for (std::size_t i = 0; i < store.size(); ++i) {
        auto& [count, comps] = hist[fluxes[i]];
        ++count;
        comps.insert(graph.component_of(i));
    }
    for (const auto& [f, entry] : hist) rec.flux_histogram.push_back({f, entry.first, entry.second.size()});
    if (!full) return;

    {
        std::string witness;
        for (std::size_t i = 0; i < store.size() && witness.empty(); ++i)
            for (auto j : graph.neighbors(i))
                if (!(fluxes[i] == fluxes[j])) {
                    witness = "flip " + store.tiling(i).to_hex() + " -> " + store.tiling(j).to_hex() + " changes flux " +
                              fluxes[i].to_string() + " to " + fluxes[j].to_string();
                    break;
                }
        rec.claims.push_back(claim("flux-invariant-under-flips", witness.empty(), witness));
    }
    {
        // different flux must mean different component: each component carries one flux
        std::vector<std::optional<FluxClass>> of_component(graph.component_count());
        std::string witness;
        for (std::size_t i = 0; i < store.size() && witness.empty(); ++i) {
            auto& slot = of_component[graph.component_of(i)];
            if (!slot) slot = fluxes[i];
            else if (!(*slot == fluxes[i]))
                witness = "component " + std::to_string(graph.component_of(i)) + " holds fluxes " + slot->to_string() +
                          " and " + fluxes[i].to_string();
        }
        rec.claims.push_back(claim("flux-separates-components", witness.empty(), witness));
    }
    bool embedded_faces = true;
    for (int f = 0; f < torus.face_count(); ++f) embedded_faces = embedded_faces && torus.face_is_proper(f);
    if (embedded_faces) {
        // same component <=> same (flux, ladder set), checked as a bijection
        std::map<std::pair<FluxClass, LadderSet>, std::uint32_t> comp_of_key;
        std::vector<const std::pair<FluxClass, LadderSet>*> key_of_comp(graph.component_count(), nullptr);
        std::string witness;
        for (std::size_t i = 0; i < store.size() && witness.empty(); ++i) {
            const std::uint32_t c = graph.component_of(i);
            auto [it, fresh] = comp_of_key.try_emplace({fluxes[i], ladder_set(torus, store.tiling(i))}, c);
            if (it->second != c)
                witness = "tiling " + store.tiling(i).to_hex() + " shares flux and ladders with component " +
                          std::to_string(it->second) + " but lies in component " + std::to_string(c);
            else if (!key_of_comp[c])
                key_of_comp[c] = &it->first;
            else if (*key_of_comp[c] != it->first)
                witness = "component " + std::to_string(c) + " mixes flux/ladder signatures (tiling " +
                          store.tiling(i).to_hex() + ")";
        }
        rec.claims.push_back(claim("ladder-flux-criterion", witness.empty(), witness));
    }

    if (spec.n >= 3 && spec.m >= 3) {
        const auto four = four_singletons(spec);
        std::set<Tiling> distinct;
        std::string witness;
        for (const auto& nt : four) {
            distinct.insert(nt.tiling);
            if (!look.singleton(nt.tiling) && witness.empty())
                witness = nt.name + " = " + nt.tiling.to_hex() + " is not an isolated tiling";
        }
        if (distinct.size() != 4 && witness.empty()) witness = "the four tilings are not distinct";
        rec.claims.push_back(claim("four-singletons", witness.empty(), witness));
    }

    std::set<std::uint32_t> certified;  // non-singleton components reached by flux families
    bool families_ok = true;
    std::string family_witness;
    auto certify = [&](const Tiling& t, FluxClass expected, const std::string& name) {
        const auto c = look.component(t);
        const FluxClass got = flux(basis, t, base);
        if (!c || graph.components()[*c].singleton() || !(got == expected)) {
            families_ok = false;
            if (family_witness.empty())
                family_witness = name + " = " + t.to_hex() + ": flux " + got.to_string() + ", expected " +
                                 expected.to_string() + (c ? "" : ", not a tiling");
            return;
        }
        certified.insert(*c);
    };
    const bool horizontal = spec.n >= 4 && spec.m >= 4;
    const bool vertical = horizontal && spec.n % 2 == 0 && spec.r == spec.m;
    if (horizontal) {
        certify(base, {0, 0}, "base");
        for (const auto& mem : horizontal_flux_family(spec)) {
            certify(mem.t, {-(mem.k + 1), 0}, "t_" + std::to_string(mem.k));
            certify(mem.t_prime, {mem.k + 1, 0}, "t'_" + std::to_string(mem.k));
        }
        const std::size_t bound = 2 * (spec.n / 2) - 1;
        rec.claims.push_back(claim("horizontal-flux-family", families_ok && certified.size() >= bound,
                                   families_ok ? (certified.size() >= bound ? ""
                                                                            : std::to_string(certified.size()) +
                                                                                  " components certified, need " +
                                                                                  std::to_string(bound))
                                               : family_witness));
    }
    if (vertical) {
        for (const auto& mem : vertical_flux_family(spec)) {
            certify(mem.t, {0, mem.k + 1}, "t^" + std::to_string(mem.k));
            certify(mem.t_prime, {0, -(mem.k + 1)}, "t'^" + std::to_string(mem.k));
        }
        const std::size_t bound = static_cast<std::size_t>(spec.n + spec.m - 3);
        rec.claims.push_back(claim("vertical-flux-family", families_ok && certified.size() >= bound,
                                   families_ok ? (certified.size() >= bound ? ""
                                                                            : std::to_string(certified.size()) +
                                                                                  " components certified, need " +
                                                                                  std::to_string(bound))
                                               : family_witness));
    }
    if (spec.n == spec.m && spec.m == spec.r && spec.n % 2 == 0 && spec.n >= 4) {
        const int half = spec.n / 2;
        const auto diag = diagonal_singletons(half);
        const std::set<Tiling> distinct(diag.begin(), diag.end());
        std::string witness;
        for (const auto& t : diag)
            if (!look.singleton(t)) {
                witness = "tiling " + t.to_hex() + " is not an isolated tiling";
                break;
            }
        const std::size_t expected = 4 + (std::size_t{1} << (half + 1));
        if (witness.empty() && (distinct.size() != expected || diag.size() != expected))
            witness = std::to_string(distinct.size()) + " distinct tilings, expected " + std::to_string(expected);
        rec.claims.push_back(claim("diagonal-singletons", witness.empty(), witness));
    }
}

void forcing_claims(const Torus& torus, const TilingStore& store, const FlipGraph* graph, InstanceRecord& rec,
                    const ExperimentConfig& config, unsigned threads, bool full) {
    const auto numbers = forcing_numbers(torus, store, threads);
    rec.spectrum = spectrum_of(numbers);
    if (!full || store.size() == 0) return;

    const auto golden = golden_spectra().find(torus.spec());
    if (golden != golden_spectra().end()) {
        const bool ok = golden->second.tilings == store.size() && rec.spectrum->values() == golden->second.values;
        rec.claims.push_back(claim("golden-spectrum", ok,
                                   ok ? "" : std::to_string(store.size()) + " tilings, spectrum {" +
                                                 join(rec.spectrum->values(), ',') + "}"));
    }
    if (!rec.bipartite && rec.simple) {
        const bool ok = is_integer_interval(*rec.spectrum);
        rec.claims.push_back(claim("spectrum-interval", ok, ok ? "" : "gaps " + join(rec.spectrum->gaps(), ',')));
    }
    if (graph) {
        std::string witness;
        for (std::size_t i = 0; i < store.size() && witness.empty(); ++i)
            for (auto j : graph->neighbors(i))
                if (std::abs(int(numbers[i]) - int(numbers[j])) > 1) {
                    witness = "flip " + store.tiling(i).to_hex() + " (" + std::to_string(numbers[i]) + ") -> " +
                              store.tiling(j).to_hex() + " (" + std::to_string(numbers[j]) + ")";
                    break;
                }
        rec.claims.push_back(claim("forcing-flip-lipschitz", witness.empty(), witness));
    }
    {
        std::string witness;
        try {
            const auto r = forcing_number(torus, store.tiling(0), store);
            if (r.number != numbers[0]) witness = "witness size differs from forcing number";
        } catch (const std::exception& e) {
            witness = e.what();
        }
        rec.claims.push_back(claim("forcing-witness", witness.empty(), witness));
    }
    if (store.size() <= config.oracle_limit) {
        std::string witness;
        for (std::size_t i = 0; i < store.size() && witness.empty(); ++i) {
            const int oracle = brute_force_forcing_number(torus, store.tiling(i));
            if (oracle != numbers[i])
                witness = "tiling " + store.tiling(i).to_hex() + ": solver " + std::to_string(numbers[i]) +
                          ", subset growth " + std::to_string(oracle);
        }
        rec.claims.push_back(claim("forcing-oracle", witness.empty(), witness));
    }
}

void run_task(const Torus& torus, const TilingStore& store, InstanceRecord& rec, const ExperimentConfig& config,
              unsigned threads) {
    const Task task = config.task;
    rec.tilings = store.size();
    if (task == Task::enumerate) return;

    if (task == Task::spectrum) {
        forcing_claims(torus, store, nullptr, rec, config, threads, false);
        return;
    }

    const bool verify = task == Task::verify;
    const FlipGraph graph(torus, store, verify, threads);
    rec.components = graph.component_count();
    rec.component_sizes = graph.sorted_component_sizes();
    rec.singletons = graph.singleton_count();

    if (task == Task::flux_histogram) {
        if (!rec.bipartite) throw NotBipartite("flux is defined on bipartite tori only");
        bipartite_claims(torus, store, graph, rec, false);
        return;
    }
    if (!verify) return;

    const auto golden = golden_counts().find(torus.spec());
    if (golden != golden_counts().end()) {
        const auto& g = golden->second;
        const bool ok = store.size() == g.tilings && graph.component_count() == g.components &&
                        graph.singleton_count() == g.singletons;
        rec.claims.push_back(claim("golden-counts", ok,
                                   ok ? "" : std::to_string(store.size()) + " tilings, " +
                                                 std::to_string(graph.component_count()) + " components, " +
                                                 std::to_string(graph.singleton_count()) + " singletons"));
    }
    if (store.size() == 0) return;

    if (rec.bipartite) {
        bipartite_claims(torus, store, graph, rec, true);
    } else if (rec.simple) {
        std::string witness;
        try {
            const auto r = check_two_components(graph);
            if (!r.passed()) witness = "two-component check failed";
        } catch (const std::exception& e) {
            witness = e.what();
        }
        rec.claims.push_back(claim("two-isomorphic-components", witness.empty(), witness));
    }

    const bool small_enough = torus.vertex_count() <= 128 &&
                              (store.size() <= config.forcing_limit || golden_spectra().contains(torus.spec()));
    if (small_enough) forcing_claims(torus, store, &graph, rec, config, threads, true);
}

}  // namespace

std::string_view task_name(Task task) {
    switch (task) {
        case Task::enumerate: return "enumerate";
        case Task::components: return "components";
        case Task::flux_histogram: return "flux-histogram";
        case Task::spectrum: return "spectrum";
        case Task::verify: return "verify";
    }
    return "verify";
}

Task parse_task(std::string_view name) {
    for (Task t : {Task::enumerate, Task::components, Task::flux_histogram, Task::spectrum, Task::verify})
        if (task_name(t) == name) return t;
    throw std::invalid_argument("unknown task '" + std::string(name) + "'");
}

bool is_sweep_token(std::string_view token) {
    return token.size() > 2 && (token[0] == 'n' || token[0] == 'm' || token[0] == 'r') && token[1] == '=';
}

Sweep parse_sweep(const std::vector<std::string>& tokens) {
    Sweep s;
    bool have_n = false, have_m = false;
    for (const auto& tok : tokens) {
        if (!is_sweep_token(tok)) throw InvalidSpec("not a sweep token: '" + tok + "'");
        const Range r = parse_range(std::string_view(tok).substr(2), tok);
        switch (tok[0]) {
            case 'n':
                if (r.any) throw InvalidSpec("n cannot be '*'");
                s.n = r;
                have_n = true;
                break;
            case 'm':
                if (r.any) throw InvalidSpec("m cannot be '*'");
                s.m = r;
                have_m = true;
                break;
            default: s.r = r;
        }
    }
    if (!have_n || !have_m) throw InvalidSpec("a sweep needs both n= and m= ranges");
    return s;
}

std::vector<TorusSpec> expand_instances(const ExperimentConfig& config) {
    std::vector<TorusSpec> out;
    std::set<TorusSpec> seen;
    auto keep = [&](const TorusSpec& s) {
        if (config.parity == ParityFilter::bipartite && !is_bipartite(s)) return false;
        if (config.parity == ParityFilter::non_bipartite && is_bipartite(s)) return false;
        if (config.simple_only && !is_simple(s)) return false;
        return true;
    };
    for (const auto& s : config.specs)
        if (keep(s) && seen.insert(s).second) out.push_back(s);
    if (config.sweep) {
        const Sweep& sw = *config.sweep;
        for (int n = std::max(1, sw.n.lo); n <= sw.n.hi; ++n)
            for (int m = std::max(2, sw.m.lo); m <= sw.m.hi; ++m) {
                const int r_lo = sw.r.any ? 1 : std::max(1, sw.r.lo);
                const int r_hi = sw.r.any ? m : std::min(m, sw.r.hi);
                for (int r = r_lo; r <= r_hi; ++r) {
                    const TorusSpec s{n, m, r};
                    if ((n * m) % 2 != 0) continue;
                    if (keep(s) && seen.insert(s).second) out.push_back(s);
                }
            }
    }
    return out;
}

bool InstanceRecord::passed() const {
    return error.empty() && std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.passed; });
}

bool VerificationReport::passed() const {
    return std::all_of(instances.begin(), instances.end(), [](const InstanceRecord& r) { return r.passed(); });
}

InstanceRecord run_instance(const TorusSpec& spec, const ExperimentConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    InstanceRecord rec;
    rec.spec = spec;
    try {
        spec.validate();
        rec.bipartite = is_bipartite(spec);
        rec.simple = is_simple(spec);
        const Torus torus(spec);
        const unsigned threads = config.threads;
        if (config.cache_dir.empty()) {
            const TilingStore store = TilingStore::enumerate(torus, config.cap);
            run_task(torus, store, rec, config, threads);
        } else {
            TilingCache::Outcome outcome;
            const TilingStore store = TilingCache(config.cache_dir).load_or_enumerate(torus, config.cap, &outcome);
            rec.cache = outcome.reused ? "reused" : outcome.regenerated ? "regenerated" : "written";
            run_task(torus, store, rec, config, threads);
        }
    } catch (const std::exception& e) {
        rec.error = e.what();
    }
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

VerificationReport run(const ExperimentConfig& config) {
    VerificationReport report;
    report.task = config.task;
    const auto instances = expand_instances(config);
    report.instances.resize(instances.size());
    const unsigned threads = resolve_threads(config.threads);
    if (instances.size() > 1 && threads > 1) {
        ExperimentConfig inner = config;
        inner.threads = 1;
        parallel_for(instances.size(), threads, [&](std::size_t begin, std::size_t end, unsigned) {
            for (std::size_t i = begin; i < end; ++i) report.instances[i] = run_instance(instances[i], inner);
        });
    } else {
        for (std::size_t i = 0; i < instances.size(); ++i) report.instances[i] = run_instance(instances[i], config);
    }
    return report;
}

void write_json(const VerificationReport& report, const ExperimentConfig& config, std::ostream& out) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["schema"] = "toroflip-report";
    j["schema_version"] = report_schema_version;
    j["task"] = std::string(task_name(report.task));

    ordered_json cfg;
    cfg["specs"] = ordered_json::array();
    for (const auto& s : config.specs) cfg["specs"].push_back(s.to_string());
    if (config.sweep)
        cfg["sweep"] = "n=" + range_text(config.sweep->n) + " m=" + range_text(config.sweep->m) +
                       " r=" + range_text(config.sweep->r);
    else
        cfg["sweep"] = nullptr;
    cfg["parity"] = config.parity == ParityFilter::any         ? "any"
                    : config.parity == ParityFilter::bipartite ? "bipartite"
                                                               : "non-bipartite";
    cfg["simple_only"] = config.simple_only;
    cfg["cap"] = config.cap;
    cfg["forcing_limit"] = config.forcing_limit;
    cfg["oracle_limit"] = config.oracle_limit;
    j["config"] = cfg;
    j["passed"] = report.passed();

    ordered_json list = ordered_json::array();
    for (const auto& r : report.instances) {
        ordered_json o;
        o["spec"] = r.spec.to_string();
        o["bipartite"] = r.bipartite;
        o["simple"] = r.simple;
        o["tilings"] = r.tilings ? ordered_json(*r.tilings) : ordered_json(nullptr);
        if (r.components) {
            o["components"] = *r.components;
            o["component_sizes"] = r.component_sizes;
            o["singletons"] = *r.singletons;
        }
        if (!r.flux_histogram.empty()) {
            ordered_json h = ordered_json::array();
            for (const auto& row : r.flux_histogram)
                h.push_back({{"flux", {row.flux.a, row.flux.b}}, {"tilings", row.tilings}, {"components", row.components}});
            o["flux_histogram"] = h;
        }
        if (r.spectrum) {
            ordered_json s;
            s["values"] = r.spectrum->values();
            s["gaps"] = r.spectrum->gaps();
            ordered_json counts;
            for (const auto& [v, c] : r.spectrum->counts) counts[std::to_string(v)] = c;
            s["counts"] = counts;
            s["interval"] = !r.spectrum->empty() && r.spectrum->gaps().empty();
            o["spectrum"] = s;
        }
        ordered_json claims = ordered_json::array();
        for (const auto& c : r.claims) {
            ordered_json cj{{"claim", c.name}, {"passed", c.passed}};
            if (!c.passed) cj["witness"] = c.detail;
            claims.push_back(cj);
        }
        o["claims"] = claims;
        o["passed"] = r.passed();
        if (!r.error.empty()) o["error"] = r.error;
        if (config.timings) {
            o["wall_seconds"] = r.seconds;
            if (!r.cache.empty()) o["cache"] = r.cache;
        }
        list.push_back(o);
    }
    j["instances"] = list;
    out << j.dump(2) << '\n';
}

void write_csv(const VerificationReport& report, std::ostream& out) {
    auto opt = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string(); };
    auto largest = [](const InstanceRecord& r) {
        return r.component_sizes.empty() ? std::string() : std::to_string(r.component_sizes.front());
    };
    auto quote = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    };
    switch (report.task) {
        case Task::enumerate:
            out << "spec,tilings,error\n";
            for (const auto& r : report.instances)
                out << quote(r.spec.to_string()) << ',' << opt(r.tilings) << ',' << quote(r.error) << '\n';
            break;
        case Task::components:
            out << "spec,tilings,components,singletons,largest_component,error\n";
            for (const auto& r : report.instances)
                out << quote(r.spec.to_string()) << ',' << opt(r.tilings) << ',' << opt(r.components) << ','
                    << opt(r.singletons) << ',' << largest(r) << ',' << quote(r.error) << '\n';
            break;
        case Task::flux_histogram:
            out << "spec,flux_a,flux_b,tilings,components,error\n";
            for (const auto& r : report.instances) {
                if (!r.error.empty()) out << quote(r.spec.to_string()) << ",,,,," << quote(r.error) << '\n';
                for (const auto& row : r.flux_histogram)
                    out << quote(r.spec.to_string()) << ',' << row.flux.a << ',' << row.flux.b << ',' << row.tilings
                        << ',' << row.components << ",\n";
            }
            break;
        case Task::spectrum:
            out << "spec,tilings,spectrum,gaps,interval,error\n";
            for (const auto& r : report.instances) {
                out << quote(r.spec.to_string()) << ',' << opt(r.tilings) << ',';
                if (r.spectrum)
                    out << join(r.spectrum->values(), ';') << ',' << join(r.spectrum->gaps(), ';') << ','
                        << (!r.spectrum->empty() && r.spectrum->gaps().empty() ? "true" : "false");
                else
                    out << ",,";
                out << ',' << quote(r.error) << '\n';
            }
            break;
        case Task::verify:
            out << "spec,tilings,components,singletons,largest_component,spectrum,passed,failed_claims,error\n";
            for (const auto& r : report.instances) {
                std::string failed;
                for (const auto& c : r.claims)
                    if (!c.passed) failed += (failed.empty() ? "" : ";") + c.name;
                out << quote(r.spec.to_string()) << ',' << opt(r.tilings) << ',' << opt(r.components) << ','
                    << opt(r.singletons) << ',' << largest(r) << ','
                    << (r.spectrum ? join(r.spectrum->values(), ';') : std::string()) << ','
                    << (r.passed() ? "true" : "false") << ',' << failed << ',' << quote(r.error) << '\n';
            }
            break;
    }
}

void emit(const VerificationReport& report, const ExperimentConfig& config) {
    if (config.output.empty()) throw std::invalid_argument("emit: no output path");
    if (config.output.has_parent_path()) std::filesystem::create_directories(config.output.parent_path());
    std::filesystem::path csv = config.output;
    csv.replace_extension(".csv");
    if (csv == config.output) csv += ".csv";
    {
        std::ofstream out(config.output, std::ios::trunc);
        write_json(report, config, out);
        if (!out) throw std::runtime_error("cannot write " + config.output.string());
    }
    std::ofstream out(csv, std::ios::trunc);
    write_csv(report, out);
    if (!out) throw std::runtime_error("cannot write " + csv.string());
}

}  // namespace toroflip
