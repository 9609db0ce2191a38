#pragma once

#include <vector>

#include "toroflip/edge_set.hpp"
#include "toroflip/torus.hpp"

namespace toroflip {

// Face-preserving automorphism given by its action on edge indices.
struct EdgePermutation {
    std::vector<int> edge;
    std::vector<int> face;

    EdgeSet apply(const EdgeSet& s) const;
};

// v_{i,j} -> v_{i,j+1}
EdgePermutation column_shift(const Torus& torus);

// v_{i,j} -> v_{i+1,j}, crossing the seam with the torsion shift.
EdgePermutation row_shift(const Torus& torus);

// Data needed to certify the two-component structure of a non-bipartite
// torus: the two all-horizontal matchings M1, M2 and the automorphism that
// swaps them. For T(odd, even, even) these are the canonical matchings and
// the column shift; every other non-bipartite torus is transported from its
// dual, which has that form.
struct TwoComponentSetup {
    Tiling m1;
    Tiling m2;
    EdgePermutation automorphism;
    bool via_dual = false;
    TorusSpec reduced;
};

TwoComponentSetup two_component_setup(const Torus& torus);

}  // namespace toroflip
