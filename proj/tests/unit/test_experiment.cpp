#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "toroflip/cache.hpp"
#include "toroflip/experiment.hpp"

using namespace toroflip;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("toroflip-test-" + name);
    fs::remove_all(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("sweep parsing and filters") {
    const Sweep s = parse_sweep({"n=1..3", "m=2..4"});
    CHECK(s.n.lo == 1);
    CHECK(s.n.hi == 3);
    CHECK(s.r.any);
    CHECK_THROWS_AS(parse_sweep({"n=1..3"}), InvalidSpec);
    CHECK_THROWS_AS(parse_sweep({"n=3..1", "m=2"}), InvalidSpec);
    CHECK_THROWS_AS(parse_sweep({"n=x", "m=2"}), InvalidSpec);

    ExperimentConfig c;
    c.sweep = parse_sweep({"n=1..3", "m=2..4", "r=*"});
    for (const auto& spec : expand_instances(c)) CHECK((spec.n * spec.m) % 2 == 0);
    c.parity = ParityFilter::non_bipartite;
    c.simple_only = true;
    for (const auto& spec : expand_instances(c)) {
        CHECK_FALSE(is_bipartite(spec));
        CHECK(is_simple(spec));
    }
    c.parity = ParityFilter::bipartite;
    c.simple_only = false;
    for (const auto& spec : expand_instances(c)) CHECK(is_bipartite(spec));
}

TEST_CASE("empty spec list gives an empty passing report") {
    ExperimentConfig c;
    const auto report = run(c);
    CHECK(report.instances.empty());
    CHECK(report.passed());
}

TEST_CASE("verify goldens") {
    ExperimentConfig c;
    c.specs = {{3, 4, 1}, {4, 4, 2}, {4, 4, 4}};
    const auto report = run(c);
    REQUIRE(report.instances.size() == 3);
    CHECK(report.passed());
    for (const auto& r : report.instances) {
        bool golden = false;
        for (const auto& cl : r.claims) golden |= cl.name == "golden-counts" && cl.passed;
        CHECK(golden);
    }
}

TEST_CASE("non-bipartite sweep reports two components") {
    ExperimentConfig c;
    c.sweep = parse_sweep({"n=1..4", "m=2..5"});
    c.parity = ParityFilter::non_bipartite;
    c.simple_only = true;
    const auto report = run(c);
    CHECK_FALSE(report.instances.empty());
    CHECK(report.passed());
    for (const auto& r : report.instances) CHECK(r.components == 2u);
}

TEST_CASE("errors are recorded per instance") {
    ExperimentConfig c;
    c.task = Task::flux_histogram;
    c.specs = {{3, 4, 2}, {4, 4, 4}};
    const auto report = run(c);
    CHECK_FALSE(report.instances[0].error.empty());
    CHECK(report.instances[1].error.empty());
    CHECK_FALSE(report.passed());
}

TEST_CASE("csv layouts") {
    ExperimentConfig c;
    c.task = Task::components;
    c.specs = {{4, 4, 4}};
    std::ostringstream os;
    write_csv(run(c), os);
    CHECK(os.str() == "spec,tilings,components,singletons,largest_component,error\n\"T(4,4,4)\",272,17,12,132,\n");

    c.task = Task::flux_histogram;
    std::ostringstream hist;
    write_csv(run(c), hist);
    for (const char* row : {"\"T(4,4,4)\",0,0,", "\"T(4,4,4)\",1,0,", "\"T(4,4,4)\",-1,0,", "\"T(4,4,4)\",0,1,", "\"T(4,4,4)\",0,-1,"})
        CHECK(hist.str().find(row) != std::string::npos);

    c.task = Task::spectrum;
    c.specs = {{3, 10, 1}};
    std::ostringstream spec;
    write_csv(run(c), spec);
    CHECK(spec.str().find("\"T(3,10,1)\",18656,3;5;6;7;8,4,false") != std::string::npos);
}

TEST_CASE("cache round trip, tamper detection and stable output") {
    const fs::path dir = scratch("cache");
    const Torus t(TorusSpec{4, 4, 2});
    const TilingCache cache(dir);
    CHECK_FALSE(cache.load(t).has_value());

    TilingCache::Outcome first, second, third;
    const auto a = cache.load_or_enumerate(t, default_store_cap, &first);
    CHECK_FALSE(first.reused);
    const auto b = cache.load_or_enumerate(t, default_store_cap, &second);
    CHECK(second.reused);
    CHECK(a.raw() == b.raw());

    {
        std::fstream f(cache.records_path(t.spec()), std::ios::in | std::ios::out | std::ios::binary);
        f.seekp(3);
        f.put('\x5a');
    }
    CHECK_THROWS_AS(cache.load(t), CacheCorrupt);
    const auto c = cache.load_or_enumerate(t, default_store_cap, &third);
    CHECK(third.regenerated);
    CHECK(c.raw() == a.raw());
    CHECK(cache.load(t).has_value());

    ExperimentConfig cfg;
    cfg.specs = {{4, 4, 2}, {3, 4, 2}};
    cfg.cache_dir = dir;
    cfg.output = dir / "out" / "report.json";
    emit(run(cfg), cfg);
    const std::string cold = slurp(cfg.output), cold_csv = slurp(dir / "out" / "report.csv");
    emit(run(cfg), cfg);
    CHECK(slurp(cfg.output) == cold);
    CHECK(slurp(dir / "out" / "report.csv") == cold_csv);
    fs::remove_all(dir);
}

TEST_CASE("default cache directory honours the environment") {
    if (const char* v = std::getenv(cache_dir_env)) CHECK(default_cache_dir() == fs::path(v));
}
