#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "toroflip/edge_set.hpp"
#include "toroflip/homology.hpp"
#include "toroflip/tilings.hpp"
#include "toroflip/torus.hpp"

namespace toroflip {

// True iff the four boundary edges of face f alternate in t (two opposite
// sides selected, the other two not) and the face is proper.
bool face_alternates(const Torus& torus, std::span<const Word> t, int f);

// Writes t xor boundary(f) into out (same width as t).
void apply_flip(const Torus& torus, std::span<const Word> t, int f, std::span<Word> out);

struct Flip {
    int face;
    Tiling result;
};

std::vector<Flip> flips_of(const Torus& torus, const Tiling& t);
int flip_count(const Torus& torus, std::span<const Word> t);

struct ComponentSummary {
    std::size_t size = 0;
    std::size_t representative = 0;  // smallest tiling index in the component
    bool singleton() const { return size == 1; }
};

// Flip graph over a complete TilingStore. Components are numbered in order of
// their smallest tiling index.
class FlipGraph {
public:
    // Adjacency lists are built only when `with_adjacency` is set.
    FlipGraph(const Torus& torus, const TilingStore& store, bool with_adjacency = false, unsigned threads = 0);

    const Torus& torus() const { return *torus_; }
    const TilingStore& store() const { return *store_; }

    std::size_t tiling_count() const { return component_.size(); }
    std::size_t component_count() const { return components_.size(); }
    std::uint32_t component_of(std::size_t t) const { return component_[t]; }
    const std::vector<ComponentSummary>& components() const { return components_; }
    std::size_t singleton_count() const;
    std::vector<std::size_t> sorted_component_sizes() const;
    std::size_t flip_edge_count() const { return edge_count_; }

    bool has_adjacency() const { return !offsets_.empty(); }
    std::span<const std::uint32_t> neighbors(std::size_t t) const;
    // (tiling, face) pairs in the same order as neighbors(t)
    std::span<const std::uint16_t> neighbor_faces(std::size_t t) const;

private:
    const Torus* torus_;
    const TilingStore* store_;
    std::vector<std::uint32_t> component_;
    std::vector<ComponentSummary> components_;
    std::size_t edge_count_ = 0;
    std::vector<std::size_t> offsets_;
    std::vector<std::uint32_t> adjacency_;
    std::vector<std::uint16_t> adjacency_faces_;
};

FlipGraph build_flip_graph(const Torus& torus, const TilingStore& store, bool with_adjacency = false,
                           unsigned threads = 0);

class VerificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TwoComponentReport {
    TorusSpec spec;
    std::size_t tilings = 0;
    std::size_t components = 0;
    std::size_t size_a = 0;
    std::size_t size_b = 0;
    bool m1_m2_separated = false;
    bool phi_bijective = false;
    bool phi_preserves_flips = false;
    bool passed() const {
        return components == 2 && size_a == size_b && m1_m2_separated && phi_bijective && phi_preserves_flips;
    }
};

// Checks the two-isomorphic-components property on a simple non-bipartite
// torus. Throws InvalidSpec on bipartite or non-simple input and
// VerificationFailure if any claim is violated.
TwoComponentReport verify_two_components(const TorusSpec& spec, std::size_t cap = default_store_cap);

// Same checks on prebuilt data (graph must carry adjacency).
TwoComponentReport check_two_components(const FlipGraph& graph);

enum class LadderKind : std::uint8_t {
    horizontal_down_right,
    horizontal_down_left,
    vertical_right_down,
    vertical_right_up,
};

// Closed chain of parallel dominoes; each consecutive pair is staggered by
// one square and touches along one unit of the long side.
struct Ladder {
    LadderKind kind;
    std::vector<int> dominoes;  // edge indices in chain order
    bool horizontal() const {
        return kind == LadderKind::horizontal_down_right || kind == LadderKind::horizontal_down_left;
    }
};

std::vector<Ladder> find_ladders(const Torus& torus, const Tiling& t);

// Ladders as a canonical set of sorted domino sets.
using LadderSet = std::set<std::vector<int>>;
LadderSet ladder_set(const Torus& torus, const Tiling& t);

// Same component iff the fluxes agree and the ladder sets coincide.
// Throws NotBipartite on a non-bipartite torus.
bool same_component_criterion(const HomologyBasis& basis, const Tiling& t1, const Tiling& t2);

}  // namespace toroflip
