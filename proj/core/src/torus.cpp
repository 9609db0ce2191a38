#include "toroflip/torus.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <queue>
#include <map>
#include <set>
#include <utility>

namespace toroflip {

namespace {

int mod(int a, int b) {
    int x = a % b;
    return x < 0 ? x + b : x;
}

}  // namespace

void TorusSpec::validate() const {
    if (n < 1) throw InvalidSpec("T(n,m,r): n must be >= 1, got " + std::to_string(n));
    if (m < 2) throw InvalidSpec("T(n,m,r): m must be >= 2, got " + std::to_string(m));
    if (r < 1 || r > m)
        throw InvalidSpec("T(n,m,r): r must lie in [1, m], got r=" + std::to_string(r) +
                          " m=" + std::to_string(m));
}

int TorusSpec::gcd_rm() const { return std::gcd(r, m); }

std::string TorusSpec::to_string() const {
    return "T(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(r) + ")";
}

TorusSpec TorusSpec::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    auto fail = [&] { throw InvalidSpec("cannot parse torus spec '" + std::string(text) + "'"); };
    if (s.size() < 8 || (s[0] != 'T' && s[0] != 't') || s[1] != '(' || s.back() != ')') fail();
    std::string_view body(s.data() + 2, s.size() - 3);
    std::array<int, 3> v{};
    std::size_t pos = 0;
    for (int k = 0; k < 3; ++k) {
        std::size_t end = body.find(',', pos);
        if (k < 2 && end == std::string_view::npos) fail();
        if (k == 2) {
            if (end != std::string_view::npos) fail();
            end = body.size();
        }
        auto part = body.substr(pos, end - pos);
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v[k]);
        if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) fail();
        pos = end + 1;
    }
    TorusSpec spec{v[0], v[1], v[2]};
    spec.validate();
    return spec;
}

Torus::Torus(TorusSpec spec) : spec_(spec) {
    spec_.validate();
    const int n = spec_.n, m = spec_.m, r = spec_.r;
    edges_.reserve(2 * n * m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            edges_.push_back({EdgeKind::horizontal, i, j, vertex(i, j), vertex(i, mod(j + 1, m))});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            int head = i < n - 1 ? vertex(i + 1, j) : vertex(0, mod(j + r, m));
            edges_.push_back({EdgeKind::vertical, i, j, vertex(i, j), head});
        }

    faces_.reserve(n * m);
    proper_.reserve(n * m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            int j1 = mod(j + 1, m);
            int low_row = i < n - 1 ? i + 1 : 0;
            int low_col = i < n - 1 ? j : mod(j + r, m);
            Face f{i, j,
                   {horizontal_edge(i, j), horizontal_edge(low_row, low_col), vertical_edge(i, j),
                    vertical_edge(i, j1)},
                   {vertex(i, j), vertex(i, j1), vertex(low_row, low_col),
                    vertex(low_row, mod(low_col + 1, m))}};
            faces_.push_back(f);
            std::set<int> es(f.edges.begin(), f.edges.end());
            std::set<int> vs(f.corners.begin(), f.corners.end());
            proper_.push_back(es.size() == 4 && vs.size() == 4);
        }

    incident_.assign(n * m, {});
    for (int e = 0; e < edge_count(); ++e) {
        incident_[edges_[e].tail].push_back(e);
        incident_[edges_[e].head].push_back(e);
    }
}

int Torus::vertex(int i, int j) const { return mod(i, spec_.n) * spec_.m + mod(j, spec_.m); }

int Torus::horizontal_edge(int i, int j) const { return vertex(i, j); }

int Torus::vertical_edge(int i, int j) const { return vertex_count() + vertex(i, j); }

int Torus::face_index(int i, int j) const { return vertex(i, j); }

int Torus::other_end(int e, int v) const {
    const Edge& ed = edges_[e];
    return ed.tail == v ? ed.head : ed.tail;
}

int Torus::right_of(int v) const { return edges_[horizontal_edge(vertex_row(v), vertex_col(v))].head; }

int Torus::left_of(int v) const { return vertex(vertex_row(v), vertex_col(v) - 1); }

int Torus::below(int v) const { return edges_[vertical_edge(vertex_row(v), vertex_col(v))].head; }

int Torus::above(int v) const {
    int i = vertex_row(v), j = vertex_col(v);
    return i > 0 ? vertex(i - 1, j) : vertex(spec_.n - 1, j - spec_.r);
}

bool Torus::has_loops() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

bool Torus::has_parallel_edges() const {
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : edges_) {
        if (e.is_loop()) continue;
        auto key = std::minmax(e.tail, e.head);
        if (!seen.insert(key).second) return true;
    }
    return false;
}

int Torus::shift_vertex(int v) const { return vertex(vertex_row(v), vertex_col(v) + 1); }

int Torus::shift_edge(int e) const {
    const Edge& ed = edges_[e];
    return ed.kind == EdgeKind::horizontal ? horizontal_edge(ed.row, ed.col + 1)
                                           : vertical_edge(ed.row, ed.col + 1);
}

int Torus::shift_face(int f) const { return face_index(faces_[f].row, faces_[f].col + 1); }

bool is_bipartite(const TorusSpec& spec) {
    spec.validate();
    return spec.m % 2 == 0 && (spec.n + spec.r) % 2 == 0;
}

bool is_black(const Torus& torus, int v) {
    return (torus.vertex_row(v) + torus.vertex_col(v)) % 2 == 1;
}

std::vector<bool> two_coloring(const Torus& torus) {
    if (!is_bipartite(torus.spec())) return {};
    std::vector<bool> color(torus.vertex_count());
    for (int v = 0; v < torus.vertex_count(); ++v) color[v] = is_black(torus, v);
    return color;
}

bool is_simple(const TorusSpec& spec) { return Torus(spec).is_simple(); }

std::vector<std::vector<int>> cycle_structure(int m, int r) {
    if (m < 1 || r < 1 || r > m) throw InvalidSpec("cycle_structure: need 1 <= r <= m");
    std::vector<std::vector<int>> cycles;
    std::vector<bool> seen(m, false);
    for (int start = 0; start < m; ++start) {
        if (seen[start]) continue;
        std::vector<int> cyc;
        for (int j = start; !seen[j]; j = (j + r) % m) {
            seen[j] = true;
            cyc.push_back(j);
        }
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

int dual_shift(const TorusSpec& spec) {
    spec.validate();
    const int g = spec.gcd_rm();
    const int len = spec.m / g;
    int found = -1;
    for (int k = 0; k < len; ++k) {
        if (static_cast<long long>(spec.r) * k % spec.m == g % spec.m) {
            if (found >= 0) throw std::logic_error("dual_shift: k is not unique for " + spec.to_string());
            found = k;
        }
    }
    if (found < 0) throw std::logic_error("dual_shift: no k for " + spec.to_string());
    return found;
}

TorusSpec dual(const TorusSpec& spec) {
    const int g = spec.gcd_rm();
    const int k = dual_shift(spec);
    if (spec.m * spec.n / g < 2)
        throw InvalidSpec("dual of " + spec.to_string() + " would have a single column");
    TorusSpec out{g, spec.m * spec.n / g, (spec.m / g - k) * spec.n};
    out.validate();
    return out;
}

IcycleDecomposition i_cycles(const Torus& torus) {
    const auto& spec = torus.spec();
    IcycleDecomposition dec;
    dec.k = dual_shift(spec);
    const int g = spec.gcd_rm();
    const int len = spec.m / g;
    dec.cycles.resize(g);
    dec.cycle_of.assign(torus.vertex_count(), -1);
    dec.label.assign(torus.vertex_count(), 0);
    for (int c = 0; c < g; ++c) {
        for (int t = 0; t < len; ++t) {
            int col = (c + t * spec.r) % spec.m;
            dec.cycles[c].push_back(col);
            for (int i = 0; i < spec.n; ++i) {
                int v = torus.vertex(i, col);
                dec.cycle_of[v] = c;
                dec.label[v] = t * spec.n + i + 1;
            }
        }
    }
    return dec;
}

DualMap dual_map(const Torus& torus, const Torus& dual_torus) {
    if (dual(torus.spec()) != dual_torus.spec())
        throw std::invalid_argument("dual_map: " + dual_torus.spec().to_string() + " is not the dual of " +
                                    torus.spec().to_string());
    const auto dec = i_cycles(torus);
    const int g = torus.spec().gcd_rm();
    DualMap map;
    map.vertex.resize(torus.vertex_count());
    for (int v = 0; v < torus.vertex_count(); ++v)
        map.vertex[v] = dual_torus.vertex(g - 1 - dec.cycle_of[v], dec.label[v] - 1);

    auto fail = [&](const std::string& what) {
        throw std::logic_error("dual_map: " + what + " for " + torus.spec().to_string());
    };
    map.edge.resize(torus.edge_count());
    for (int e = 0; e < torus.edge_count(); ++e) {
        const Edge& ed = torus.edge(e);
        const int a = map.vertex[ed.tail], b = map.vertex[ed.head];
        int image;
        if (ed.kind == EdgeKind::vertical) {
            image = dual_torus.horizontal_edge(dual_torus.vertex_row(a), dual_torus.vertex_col(a));
            if (dual_torus.edge(image).head != b) fail("vertical edge image mismatch");
        } else {
            image = dual_torus.vertical_edge(dual_torus.vertex_row(b), dual_torus.vertex_col(b));
            if (dual_torus.edge(image).head != a) fail("horizontal edge image mismatch");
        }
        map.edge[e] = image;
    }
    std::vector<int> sorted_edges = map.edge;
    std::sort(sorted_edges.begin(), sorted_edges.end());
    if (std::adjacent_find(sorted_edges.begin(), sorted_edges.end()) != sorted_edges.end())
        fail("edge map is not injective");

    std::map<std::array<int, 4>, int> dual_faces;
    for (int f = 0; f < dual_torus.face_count(); ++f) {
        auto key = dual_torus.face(f).edges;
        std::sort(key.begin(), key.end());
        dual_faces.emplace(key, f);
    }
    map.face.resize(torus.face_count());
    for (int f = 0; f < torus.face_count(); ++f) {
        std::array<int, 4> key;
        for (int s = 0; s < 4; ++s) key[s] = map.edge[torus.face(f).edges[s]];
        std::sort(key.begin(), key.end());
        auto it = dual_faces.find(key);
        if (it == dual_faces.end()) fail("face image is not a face");
        map.face[f] = it->second;
    }
    return map;
}

bool has_odd_cycle(const Torus& torus) {
    std::vector<int> side(torus.vertex_count(), -1);
    for (int s = 0; s < torus.vertex_count(); ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int e : torus.incident(v)) {
                int w = torus.other_end(e, v);
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    q.push(w);
                } else if (side[w] == side[v]) {
                    return true;
                }
            }
        }
    }
    return false;
}

}  // namespace toroflip
