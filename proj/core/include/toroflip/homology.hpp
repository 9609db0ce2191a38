#pragma once

#include <array>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "toroflip/edge_set.hpp"
#include "toroflip/torus.hpp"

namespace toroflip {

class NotBipartite : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotClosed : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Integer 1-chain: coefficient per edge relative to the edge's reference
// orientation tail -> head.
struct Chain1 {
    std::vector<int> coeff;

    explicit Chain1(int edge_count = 0) : coeff(edge_count, 0) {}

    Chain1& operator+=(const Chain1& o);
    Chain1& operator-=(const Chain1& o);
    friend Chain1 operator+(Chain1 a, const Chain1& b) { return a += b; }
    friend Chain1 operator-(Chain1 a, const Chain1& b) { return a -= b; }
    Chain1 operator-() const;
    bool is_zero() const;
    friend bool operator==(const Chain1&, const Chain1&) = default;
};

// Element of H_1 = Z^2 in the basis ([z_0], [z'_0]).
struct FluxClass {
    long a = 0;
    long b = 0;

    FluxClass& operator+=(const FluxClass& o) {
        a += o.a;
        b += o.b;
        return *this;
    }
    friend FluxClass operator+(FluxClass x, const FluxClass& y) { return x += y; }
    friend FluxClass operator-(const FluxClass& x, const FluxClass& y) { return {x.a - y.a, x.b - y.b}; }
    friend bool operator==(const FluxClass&, const FluxClass&) = default;
    friend auto operator<=>(const FluxClass&, const FluxClass&) = default;
    std::string to_string() const;
};

// Vertex-indexed boundary: coefficient of head minus coefficient of tail.
std::vector<int> boundary(const Torus& torus, const Chain1& c);
bool is_closed(const Torus& torus, const Chain1& c);

// Chain of a tiling with every matched edge directed black -> white.
Chain1 tiling_chain(const Torus& torus, const EdgeSet& t);

// Oriented boundary of face f: top, right, bottom reversed, left reversed.
Chain1 face_boundary(const Torus& torus, int f);

// Closed chain along a vertex path v_0 v_1 ... v_k = v_0; consecutive
// vertices must be adjacent (the lowest-index joining edge is used).
Chain1 path_chain(const Torus& torus, const std::vector<int>& vertices);

// z_i: row i traversed left to right.
Chain1 row_cycle(const Torus& torus, int i);
// z_0: row n-1 traversed left to right.
Chain1 z0(const Torus& torus);
// z'_0: up column 0, back across the seam to v_{n-1,m-r}, then right
// along row n-1 to v_{n-1,0}.
Chain1 z0_prime(const Torus& torus);

// Computes classes of closed chains in the basis ([z_0], [z'_0]).
//
// Raw coordinates are lattice winding numbers of the lifted chain: w2 is the
// signed number of crossings of the seam between rows n-1 and 0 and w1 the
// signed number of crossings of the seam between columns m-1 and 0 once
// the torsion is unwound. The raw vectors of z_0 and z'_0 form a unimodular
// matrix whose inverse maps raw coordinates to classes.
class HomologyBasis {
public:
    explicit HomologyBasis(const Torus& torus);

    std::array<long, 2> raw(const Chain1& c) const;
    // Throws NotClosed if c has non-zero boundary.
    FluxClass homology_class(const Chain1& c) const;

    const Torus& torus() const { return *torus_; }

private:
    const Torus* torus_;
    // inverse of [[raw z0], [raw z'0]] (rows), integer entries
    std::array<std::array<long, 2>, 2> inverse_{};
};

FluxClass homology_class(const Torus& torus, const Chain1& c);

// Flux(t) = [t - base]; requires a bipartite torus.
FluxClass flux(const HomologyBasis& basis, const EdgeSet& t, const EdgeSet& base);
FluxClass flux(const Torus& torus, const EdgeSet& t, const EdgeSet& base);

// Certificate that t1 and t2 lie in different flip components.
bool flux_separates(const HomologyBasis& basis, const EdgeSet& t1, const EdgeSet& t2, const EdgeSet& base);

}  // namespace toroflip
