#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "toroflip/edge_set.hpp"
#include "toroflip/torus.hpp"

namespace toroflip {

inline constexpr std::size_t default_store_cap = std::size_t{1} << 23;

class StoreOverflow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// True iff every vertex is covered by exactly one selected edge and no loop
// is selected.
bool is_perfect_matching(const Torus& torus, const EdgeSet& edges);

// Backtracking over perfect matchings: repeatedly cover the lowest uncovered
// vertex with one of its edges, in edge-index order. Edges in `forced` are
// preselected, edges in `forbidden` are never used. `visit` returns false to
// stop early. Returns the number of matchings visited.
std::size_t for_each_matching(const Torus& torus, const EdgeSet& forced, const EdgeSet& forbidden,
                              const std::function<bool(const EdgeSet&)>& visit);

// Number of perfect matchings containing `forced`, stopping once `limit`
// is reached.
std::size_t count_completions(const Torus& torus, const EdgeSet& forced, std::size_t limit);

// All tilings of one torus, in enumeration order, with hash lookup.
class TilingStore {
public:
    TilingStore(TorusSpec spec, int edge_count);

    // Throws StoreOverflow when the instance has more than `cap` tilings.
    static TilingStore enumerate(const Torus& torus, std::size_t cap = default_store_cap);

    const TorusSpec& spec() const { return spec_; }
    int edge_count() const { return edge_count_; }
    int words_per_tiling() const { return stride_; }
    std::size_t size() const { return count_; }

    std::span<const Word> words(std::size_t idx) const {
        return {data_.data() + idx * stride_, static_cast<std::size_t>(stride_)};
    }
    Tiling tiling(std::size_t idx) const { return Tiling(edge_count_, words(idx)); }

    std::optional<std::size_t> find(std::span<const Word> key) const;
    std::optional<std::size_t> find(const EdgeSet& t) const { return find(t.words()); }

    // Appends a tiling; returns {index, inserted}. Duplicates are not added.
    std::pair<std::size_t, bool> insert(std::span<const Word> key);

    const std::vector<Word>& raw() const { return data_; }

private:
    void rehash(std::size_t capacity);
    std::uint64_t hash(std::span<const Word> key) const;
    bool equals(std::size_t idx, std::span<const Word> key) const;

    TorusSpec spec_;
    int edge_count_;
    int stride_;
    std::size_t count_ = 0;
    std::vector<Word> data_;
    std::vector<std::uint32_t> slots_;
};

// Image of t under v_{i,j} -> v_{i,j+1}.
Tiling phi(const Torus& torus, const Tiling& t);

// M1 = E_0 u E_2 u ..., M2 = E_1 u E_3 u ...; requires m even.
std::pair<Tiling, Tiling> canonical_horizontal(const Torus& torus);

// The flux base point t_+ = E_0 u E_2 u ... u E_{m-2}.
Tiling base_tiling(const Torus& torus);

}  // namespace toroflip
