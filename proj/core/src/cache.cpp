#include "toroflip/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <iterator>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace toroflip {

namespace fs = std::filesystem;

fs::path default_cache_dir() {
    if (const char* v = std::getenv(cache_dir_env); v && *v) return v;
    if (const char* v = std::getenv("XDG_CACHE_HOME"); v && *v) return fs::path(v) / "toroflip";
    if (const char* v = std::getenv("HOME"); v && *v) return fs::path(v) / ".cache" / "toroflip";
    return "toroflip-cache";
}

std::uint64_t fnv1a64(const void* data, std::size_t bytes, std::uint64_t seed) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = seed;
    for (std::size_t i = 0; i < bytes; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

namespace {

std::string stem(const TorusSpec& spec) {
    return "T_" + std::to_string(spec.n) + "_" + std::to_string(spec.m) + "_" + std::to_string(spec.r) + ".v" +
           std::to_string(cache_format_version);
}

std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << v;
    return os.str();
}

std::vector<unsigned char> to_bytes(const std::vector<Word>& words) {
    std::vector<unsigned char> out(words.size() * 8);
    for (std::size_t i = 0; i < words.size(); ++i)
        for (int b = 0; b < 8; ++b) out[i * 8 + b] = static_cast<unsigned char>(words[i] >> (8 * b));
    return out;
}

}  // namespace

TilingCache::TilingCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path TilingCache::records_path(const TorusSpec& spec) const { return dir_ / (stem(spec) + ".bin"); }

fs::path TilingCache::sidecar_path(const TorusSpec& spec) const { return dir_ / (stem(spec) + ".json"); }

std::optional<TilingStore> TilingCache::load(const Torus& torus) const {
    const TorusSpec& spec = torus.spec();
    const fs::path bin = records_path(spec), side = sidecar_path(spec);
    if (!fs::exists(bin) || !fs::exists(side)) return std::nullopt;

    nlohmann::json meta;
    try {
        std::ifstream in(side);
        meta = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw CacheCorrupt("unreadable sidecar " + side.string() + ": " + e.what());
    }
    const auto field = [&](const char* key) {
        if (!meta.contains(key)) throw CacheCorrupt("sidecar " + side.string() + " lacks '" + key + "'");
        return meta[key];
    };
    if (field("spec") != spec.to_string() || field("version") != cache_format_version ||
        field("edge_count") != torus.edge_count())
        throw CacheCorrupt("sidecar " + side.string() + " does not describe " + spec.to_string());

    std::ifstream in(bin, std::ios::binary);
    const std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const std::size_t count = field("count").get<std::size_t>();
    const std::size_t stride = words_for(torus.edge_count());
    if (bytes.size() != count * stride * 8)
        throw CacheCorrupt("record file " + bin.string() + " has " + std::to_string(bytes.size()) + " bytes, expected " +
                           std::to_string(count * stride * 8));
    if (field("checksum") != "fnv1a64:" + hex64(fnv1a64(bytes.data(), bytes.size())))
        throw CacheCorrupt("checksum mismatch for " + bin.string());

    TilingStore store(spec, torus.edge_count());
    std::vector<Word> key(stride);
    for (std::size_t t = 0; t < count; ++t) {
        for (std::size_t w = 0; w < stride; ++w) {
            Word v = 0;
            for (int b = 0; b < 8; ++b) v |= Word{bytes[(t * stride + w) * 8 + b]} << (8 * b);
            key[w] = v;
        }
        if (!store.insert(key).second) throw CacheCorrupt("duplicate tiling in " + bin.string());
    }
    return store;
}

void TilingCache::save(const TilingStore& store) const {
    fs::create_directories(dir_);
    const auto bytes = to_bytes(store.raw());
    const fs::path bin = records_path(store.spec());
    const fs::path tmp = bin.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
    }
    fs::rename(tmp, bin);

    nlohmann::ordered_json meta;
    meta["format"] = "toroflip-tilings";
    meta["version"] = cache_format_version;
    meta["spec"] = store.spec().to_string();
    meta["edge_count"] = store.edge_count();
    meta["words_per_tiling"] = store.words_per_tiling();
    meta["count"] = store.size();
    meta["checksum"] = "fnv1a64:" + hex64(fnv1a64(bytes.data(), bytes.size()));
    std::ofstream out(sidecar_path(store.spec()), std::ios::trunc);
    out << meta.dump(2) << '\n';
    if (!out) throw std::runtime_error("cannot write " + sidecar_path(store.spec()).string());
}

TilingStore TilingCache::load_or_enumerate(const Torus& torus, std::size_t cap, Outcome* outcome) const {
    Outcome local;
    try {
        if (auto cached = load(torus)) {
            if (cached->size() <= cap) {
                local.reused = true;
                if (outcome) *outcome = local;
                return std::move(*cached);
            }
        }
    } catch (const CacheCorrupt&) {
        local.regenerated = true;
    }
    TilingStore store = TilingStore::enumerate(torus, cap);
    save(store);
    if (outcome) *outcome = local;
    return store;
}

}  // namespace toroflip
