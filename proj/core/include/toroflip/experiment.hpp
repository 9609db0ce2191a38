#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "toroflip/forcing.hpp"
#include "toroflip/homology.hpp"
#include "toroflip/tilings.hpp"
#include "toroflip/torus.hpp"

namespace toroflip {

inline constexpr int report_schema_version = 1;

enum class Task { enumerate, components, flux_histogram, spectrum, verify };

std::string_view task_name(Task task);
Task parse_task(std::string_view name);

enum class ParityFilter { any, bipartite, non_bipartite };

// Inclusive bounds; `any` means r ranges over 1..m.
struct Range {
    int lo = 1;
    int hi = 1;
    bool any = false;
};

struct Sweep {
    Range n, m, r{1, 1, true};
};

// Parses sweep tokens such as "n=1..6", "m=4", "r=*". n and m are
// required; r defaults to "*".
Sweep parse_sweep(const std::vector<std::string>& tokens);
bool is_sweep_token(std::string_view token);

struct ExperimentConfig {
    std::vector<TorusSpec> specs;
    std::optional<Sweep> sweep;
    ParityFilter parity = ParityFilter::any;
    bool simple_only = false;
    Task task = Task::verify;
    std::filesystem::path output;     // report JSON; CSV goes next to it
    std::filesystem::path cache_dir;  // empty: no on-disk cache
    unsigned threads = 0;
    std::size_t cap = default_store_cap;
    std::size_t forcing_limit = 100000;   // spectra in verify sweeps
    std::size_t oracle_limit = 1000;      // brute-force forcing cross-check
    bool timings = false;                 // wall times make reports run-dependent
};

// Explicit specs followed by the filtered sweep, without duplicates.
// Sweeps skip untileable instances (nm odd).
std::vector<TorusSpec> expand_instances(const ExperimentConfig& config);

struct Claim {
    std::string name;
    bool passed = false;
    std::string detail;  // witness on failure
};

struct FluxRow {
    FluxClass flux;
    std::size_t tilings = 0;
    std::size_t components = 0;
};

struct InstanceRecord {
    TorusSpec spec;
    bool bipartite = false;
    bool simple = false;
    std::optional<std::size_t> tilings;
    std::optional<std::size_t> components;
    std::vector<std::size_t> component_sizes;  // descending
    std::optional<std::size_t> singletons;
    std::vector<FluxRow> flux_histogram;
    std::optional<Spectrum> spectrum;
    std::vector<Claim> claims;
    std::string error;
    std::string cache;  // "", "reused", "written", "regenerated"
    double seconds = 0;

    bool passed() const;
};

struct VerificationReport {
    Task task = Task::verify;
    std::vector<InstanceRecord> instances;

    bool passed() const;
};

// Runs one instance; errors are recorded rather than thrown.
InstanceRecord run_instance(const TorusSpec& spec, const ExperimentConfig& config);

VerificationReport run(const ExperimentConfig& config);

void write_json(const VerificationReport& report, const ExperimentConfig& config, std::ostream& out);
void write_csv(const VerificationReport& report, std::ostream& out);

// Writes <output> (JSON) and <output with .csv extension>.
void emit(const VerificationReport& report, const ExperimentConfig& config);

}  // namespace toroflip
