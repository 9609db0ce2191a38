#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace toroflip {

class InvalidSpec : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Identity of a quadriculated torus T(n,m,r): n rows, m columns, the bottom
// row glued to the top row with a shift of r columns.
struct TorusSpec {
    int n = 0;
    int m = 0;
    int r = 0;

    // Throws InvalidSpec unless n >= 1, m >= 2 and 1 <= r <= m.
    void validate() const;

    int gcd_rm() const;
    std::string to_string() const;

    // Accepts "T(n,m,r)" with optional whitespace.
    static TorusSpec parse(std::string_view text);

    friend bool operator==(const TorusSpec&, const TorusSpec&) = default;
    friend auto operator<=>(const TorusSpec&, const TorusSpec&) = default;
};

enum class EdgeKind : std::uint8_t { horizontal, vertical };

// Structural edge. The reference orientation runs from `tail` = v_{row,col}
// to `head` (right neighbour for horizontal edges, lower neighbour for
// vertical ones, crossing the seam with the torsion shift when row = n-1).
struct Edge {
    EdgeKind kind;
    int row;
    int col;
    int tail;
    int head;

    bool is_loop() const { return tail == head; }
};

// Unit square with top-left corner v_{row,col}.
struct Face {
    int row;
    int col;
    // top, bottom, left, right
    std::array<int, 4> edges;
    // top-left, top-right, bottom-left, bottom-right
    std::array<int, 4> corners;

    int top() const { return edges[0]; }
    int bottom() const { return edges[1]; }
    int left() const { return edges[2]; }
    int right() const { return edges[3]; }
};

// Incidence structure of T(n,m,r).
//
// Indexing is fixed: vertex v_{i,j} -> i*m + j, horizontal edge (i,j) ->
// i*m + j, vertical edge (i,j) -> n*m + i*m + j, face (i,j) -> i*m + j.
// Edges are identified structurally, so loops and parallel edges of the
// degenerate tori stay distinct objects.
class Torus {
public:
    explicit Torus(TorusSpec spec);

    const TorusSpec& spec() const { return spec_; }
    int rows() const { return spec_.n; }
    int cols() const { return spec_.m; }

    int vertex_count() const { return spec_.n * spec_.m; }
    int edge_count() const { return 2 * spec_.n * spec_.m; }
    int face_count() const { return spec_.n * spec_.m; }

    int vertex(int i, int j) const;
    int vertex_row(int v) const { return v / spec_.m; }
    int vertex_col(int v) const { return v % spec_.m; }
    int horizontal_edge(int i, int j) const;
    int vertical_edge(int i, int j) const;
    int face_index(int i, int j) const;

    const Edge& edge(int e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Face& face(int f) const { return faces_[f]; }
    const std::vector<Face>& faces() const { return faces_; }

    // Edge slots at v in edge-index order; a loop appears twice.
    const std::vector<int>& incident(int v) const { return incident_[v]; }
    int other_end(int e, int v) const;

    // Lattice neighbours in the square picture.
    int right_of(int v) const;
    int left_of(int v) const;
    int below(int v) const;
    int above(int v) const;

    bool has_loops() const;
    bool has_parallel_edges() const;
    bool is_simple() const { return !has_loops() && !has_parallel_edges(); }

    // A face is proper when its four boundary edges and four corners are
    // pairwise distinct, i.e. it bounds a genuine 4-cycle.
    bool face_is_proper(int f) const { return proper_[f]; }

    // Column shift v_{i,j} -> v_{i,j+1}, acting on vertices, edges, faces.
    int shift_vertex(int v) const;
    int shift_edge(int e) const;
    int shift_face(int f) const;

private:
    TorusSpec spec_;
    std::vector<Edge> edges_;
    std::vector<Face> faces_;
    std::vector<std::vector<int>> incident_;
    std::vector<bool> proper_;
};

// Parity criterion: bipartite iff m and n + r are both even.
bool is_bipartite(const TorusSpec& spec);

// Colour of v_{i,j} under the fixed 2-colouring (black iff i + j is odd).
// Only meaningful on bipartite tori.
bool is_black(const Torus& torus, int v);

// Two-colouring of the bipartite torus, black = true; empty if not bipartite.
std::vector<bool> two_coloring(const Torus& torus);

bool is_simple(const TorusSpec& spec);

// Cycles of j -> j + r (mod m), each listed from its smallest element.
std::vector<std::vector<int>> cycle_structure(int m, int r);

struct IcycleDecomposition {
    // cycles[c] lists the columns c, c + r, c + 2r, ... (mod m)
    std::vector<std::vector<int>> cycles;
    // per-vertex I-cycle id and 1-based position label within that cycle
    std::vector<int> cycle_of;
    std::vector<int> label;
    // k with gcd(r,m) = r*k (mod m), 0 <= k < m / gcd(r,m)
    int k = 0;
};

IcycleDecomposition i_cycles(const Torus& torus);

// Unique k in [0, m/g) with g = r*k (mod m), g = gcd(r,m).
int dual_shift(const TorusSpec& spec);

// T*(n,m,r) = T(g, mn/g, (m/g - k) * n). Throws InvalidSpec for T(1,m,m),
// whose dual would have one column.
TorusSpec dual(const TorusSpec& spec);

// Isomorphism from T(n,m,r) onto its dual T*(n,m,r): the vertex with I-cycle
// c and label x goes to w_{g-1-c, x-1}. Vertical edges become horizontal and
// vice versa; faces go to faces. Each map is indexed by the source index.
struct DualMap {
    std::vector<int> vertex;
    std::vector<int> edge;
    std::vector<int> face;
};

// Throws std::logic_error if the constructed map fails to be an
// isomorphism preserving faces.
DualMap dual_map(const Torus& torus, const Torus& dual_torus);

// Direct scan for an odd cycle via BFS 2-colouring of the built graph.
bool has_odd_cycle(const Torus& torus);

}  // namespace toroflip
