#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "toroflip/edge_set.hpp"
#include "toroflip/tilings.hpp"
#include "toroflip/torus.hpp"

namespace toroflip {

struct ForcingResult {
    std::size_t tiling_index = 0;
    int number = 0;
    std::vector<int> witness;  // lexicographically smallest minimum forcing set
};

// Exact forcing numbers by minimum hitting set: S ⊆ t forces t iff every
// t-alternating cycle uses an edge of S. Branch and bound over the edges of
// one alternating cycle at a time, with a disjoint-cycle packing bound.
//
// Bipartite tori use the digraph on matched edges (black end to white end),
// where alternating cycles are directed cycles; other tori search alternating
// cycles directly and fall back to constrained enumeration.
// Supports tilings with at most 64 dominoes.
class ForcingSolver {
public:
    explicit ForcingSolver(const Torus& torus);

    int number(const Tiling& t) const;
    std::vector<int> witness(const Tiling& t) const;

    const Torus& torus() const { return *torus_; }

private:
    const Torus* torus_;
    bool bipartite_;
    std::vector<int> black_;
};

// Single-tiling query against a complete store. Throws std::invalid_argument
// if t is not in the store and VerificationFailure if the witness does not
// force t.
ForcingResult forcing_number(const Torus& torus, const Tiling& t, const TilingStore& store);

// Forcing number of every tiling in store order.
std::vector<std::uint8_t> forcing_numbers(const Torus& torus, const TilingStore& store, unsigned threads = 0);

// Subset-growth oracle: smallest k such that some k-subset of t has t as
// its only completion. Exponential; for cross-checking small instances.
int brute_force_forcing_number(const Torus& torus, const Tiling& t);

struct Spectrum {
    std::map<int, std::size_t> counts;  // forcing number -> number of tilings

    std::vector<int> values() const;
    std::vector<int> gaps() const;  // missing integers between min and max
    std::size_t tilings() const;
    bool empty() const { return counts.empty(); }
};

Spectrum spectrum_of(const std::vector<std::uint8_t>& numbers);

// Enumerates the torus and returns its spectrum; StoreOverflow propagates.
Spectrum forcing_spectrum(const Torus& torus, std::size_t cap = default_store_cap, unsigned threads = 0);

// True iff the values form [min, max] ∩ Z. Throws std::invalid_argument on
// an empty spectrum.
bool is_integer_interval(const Spectrum& s);

}  // namespace toroflip
