#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>

#include "toroflip/tilings.hpp"
#include "toroflip/torus.hpp"

namespace toroflip {

// Bump when the record layout or the enumeration order changes.
inline constexpr int cache_format_version = 1;

// Environment variable that overrides the default cache directory.
inline constexpr const char* cache_dir_env = "TOROFLIP_CACHE_DIR";

class CacheCorrupt : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// TOROFLIP_CACHE_DIR if set, else $XDG_CACHE_HOME/toroflip, else
// $HOME/.cache/toroflip, else ./toroflip-cache.
std::filesystem::path default_cache_dir();

std::uint64_t fnv1a64(const void* data, std::size_t bytes, std::uint64_t seed = 0xcbf29ce484222325ULL);

// On-disk tiling store: one file of little-endian 64-bit words per torus
// (words_per_tiling words per tiling, enumeration order) and a JSON sidecar
// with spec, counts and an FNV-1a checksum of the record file.
class TilingCache {
public:
    explicit TilingCache(std::filesystem::path dir);

    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path records_path(const TorusSpec& spec) const;
    std::filesystem::path sidecar_path(const TorusSpec& spec) const;

    // nullopt when no cache entry exists; CacheCorrupt on any mismatch.
    std::optional<TilingStore> load(const Torus& torus) const;
    void save(const TilingStore& store) const;

    struct Outcome {
        bool reused = false;
        bool regenerated = false;  // a corrupt entry was replaced
    };

    // Loads a valid entry or enumerates and writes a fresh one.
    TilingStore load_or_enumerate(const Torus& torus, std::size_t cap, Outcome* outcome = nullptr) const;

private:
    std::filesystem::path dir_;
};

}  // namespace toroflip
