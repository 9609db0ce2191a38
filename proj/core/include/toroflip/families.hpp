#pragma once

#include <string>
#include <utility>
#include <vector>

#include "toroflip/edge_set.hpp"
#include "toroflip/torus.hpp"

namespace toroflip {

// Row and column edge sets used to assemble the explicit tilings.
//
//   X_i  = { v_{i,2k} v_{i,2k+1} }            horizontal, even start
//   Y_i  = { v_{i,2k+1} v_{i,2k+2} }          horizontal, odd start
//   W_j  = { v_{2k,j} v_{2k+1,j} : k < floor(n/2) }
//   F_j  = { v_{2k+1,j} v_{2k+2,j} : k < ceil((n-2)/2) }
//   F'_j = F_j u { v_{n-1,j-r} v_{0,j} }       (the seam edge entering column j)
//
// X and Y need m even.
class EdgeFamilySets {
public:
    explicit EdgeFamilySets(const Torus& torus);

    EdgeSet x(int i) const;
    EdgeSet y(int i) const;
    EdgeSet w(int j) const;
    EdgeSet f(int j) const;
    EdgeSet f_prime(int j) const;

private:
    const Torus* torus_;
};

struct NamedTiling {
    std::string name;
    Tiling tiling;
};

// t^1, t^2 (alternating X/Y rows) and t^3, t^4 (alternating F'/W columns).
// Requires a bipartite torus with n, m >= 3.
std::vector<NamedTiling> four_singletons(const TorusSpec& spec);

// Flip-free tilings of T(2n,2n,2n): the four universal singletons followed
// by 8 * 2^(n-2) tilings built from diagonal ladders, each grown from a
// T(2n-2,2n-2,2n-2) pattern by keeping its ladders and adding a new ladder
// in either orientation. Requires n >= 2; returns 4 + 2^(n+1) tilings.
std::vector<Tiling> diagonal_singletons(int n);

struct FluxFamilyMember {
    int k;
    Tiling t;        // t_k (horizontal family) or t^k (vertical family)
    Tiling t_prime;  // t'_k or t'^k
};

// t_k = Y_1 u Y_3 u ... u Y_{2k+1} u X_rest, t'_k = Y_0 u ... u Y_{2k} u X_rest
// for k < floor(n/2) - 1. Requires bipartite, n >= 4, m >= 4.
std::vector<FluxFamilyMember> horizontal_flux_family(const TorusSpec& spec);

// t^k = F'_1 u F'_3 u ... u F'_{2k+1} u W_rest, t'^k = F'_0 u ... u F'_{2k} u
// W_rest for k < m/2 - 1 on T(2a, 2b, 2b) with a, b >= 2.
std::vector<FluxFamilyMember> vertical_flux_family(const TorusSpec& spec);

}  // namespace toroflip
