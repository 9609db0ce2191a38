#include "toroflip/homology.hpp"

#include <algorithm>

namespace toroflip {

Chain1& Chain1::operator+=(const Chain1& o) {
    for (std::size_t k = 0; k < coeff.size(); ++k) coeff[k] += o.coeff[k];
    return *this;
}

Chain1& Chain1::operator-=(const Chain1& o) {
    for (std::size_t k = 0; k < coeff.size(); ++k) coeff[k] -= o.coeff[k];
    return *this;
}

Chain1 Chain1::operator-() const {
    Chain1 out = *this;
    for (int& c : out.coeff) c = -c;
    return out;
}

bool Chain1::is_zero() const {
    return std::all_of(coeff.begin(), coeff.end(), [](int c) { return c == 0; });
}

std::string FluxClass::to_string() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

std::vector<int> boundary(const Torus& torus, const Chain1& c) {
    std::vector<int> out(torus.vertex_count(), 0);
    for (int e = 0; e < torus.edge_count(); ++e) {
        if (c.coeff[e] == 0) continue;
        out[torus.edge(e).head] += c.coeff[e];
        out[torus.edge(e).tail] -= c.coeff[e];
    }
    return out;
}

bool is_closed(const Torus& torus, const Chain1& c) {
    auto b = boundary(torus, c);
    return std::all_of(b.begin(), b.end(), [](int x) { return x == 0; });
}

Chain1 tiling_chain(const Torus& torus, const EdgeSet& t) {
    if (!is_bipartite(torus.spec()))
        throw NotBipartite("tiling_chain: " + torus.spec().to_string() + " is not bipartite");
    Chain1 c(torus.edge_count());
    for (int e : t.members()) c.coeff[e] = is_black(torus, torus.edge(e).tail) ? 1 : -1;
    return c;
}

Chain1 face_boundary(const Torus& torus, int f) {
    const Face& face = torus.face(f);
    Chain1 c(torus.edge_count());
    c.coeff[face.top()] += 1;
    c.coeff[face.right()] += 1;
    c.coeff[face.bottom()] -= 1;
    c.coeff[face.left()] -= 1;
    return c;
}

Chain1 path_chain(const Torus& torus, const std::vector<int>& vertices) {
    Chain1 c(torus.edge_count());
    for (std::size_t k = 0; k + 1 < vertices.size(); ++k) {
        int u = vertices[k], w = vertices[k + 1];
        int best = -1;
        for (int e : torus.incident(u)) {
            if (torus.other_end(e, u) == w) {
                best = e;
                break;
            }
        }
        if (best < 0) throw std::invalid_argument("path_chain: consecutive vertices are not adjacent");
        c.coeff[best] += torus.edge(best).tail == u ? 1 : -1;
    }
    return c;
}

Chain1 row_cycle(const Torus& torus, int i) {
    Chain1 c(torus.edge_count());
    for (int j = 0; j < torus.cols(); ++j) c.coeff[torus.horizontal_edge(i, j)] += 1;
    return c;
}

Chain1 z0(const Torus& torus) { return row_cycle(torus, torus.rows() - 1); }

Chain1 z0_prime(const Torus& torus) {
    const auto& s = torus.spec();
    Chain1 c(torus.edge_count());
    for (int i = s.n - 2; i >= 0; --i) c.coeff[torus.vertical_edge(i, 0)] -= 1;
    const int start = (s.m - s.r) % s.m;
    c.coeff[torus.vertical_edge(s.n - 1, start)] -= 1;
    for (int j = start; j != 0 && j < s.m; ++j) c.coeff[torus.horizontal_edge(s.n - 1, j)] += 1;
    return c;
}

HomologyBasis::HomologyBasis(const Torus& torus) : torus_(&torus) {
    auto b0 = raw(z0(torus));
    auto b1 = raw(z0_prime(torus));
    const long det = b0[0] * b1[1] - b0[1] * b1[0];
    if (det != 1 && det != -1)
        throw std::logic_error("HomologyBasis: generator matrix is not unimodular for " +
                               torus.spec().to_string());
    // inverse of [[b0], [b1]]
    inverse_ = {{{b1[1] * det, -b0[1] * det}, {-b1[0] * det, b0[0] * det}}};
}

std::array<long, 2> HomologyBasis::raw(const Chain1& c) const {
    const auto& s = torus_->spec();
    long dx = 0, seam = 0;
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.m; ++j) dx += c.coeff[torus_->horizontal_edge(i, j)];
    for (int j = 0; j < s.m; ++j) seam += c.coeff[torus_->vertical_edge(s.n - 1, j)];
    // lifted displacement is w1 * (m, 0) + w2 * (-r, n)
    const long w2 = seam;
    const long num = dx + static_cast<long>(s.r) * w2;
    if (num % s.m != 0) throw NotClosed("HomologyBasis::raw: chain is not closed");
    return {num / s.m, w2};
}

FluxClass HomologyBasis::homology_class(const Chain1& c) const {
    if (!is_closed(*torus_, c)) throw NotClosed("homology_class: chain has non-zero boundary");
    auto w = raw(c);
    return {w[0] * inverse_[0][0] + w[1] * inverse_[1][0], w[0] * inverse_[0][1] + w[1] * inverse_[1][1]};
}

FluxClass homology_class(const Torus& torus, const Chain1& c) { return HomologyBasis(torus).homology_class(c); }

FluxClass flux(const HomologyBasis& basis, const EdgeSet& t, const EdgeSet& base) {
    const Torus& torus = basis.torus();
    return basis.homology_class(tiling_chain(torus, t) - tiling_chain(torus, base));
}

FluxClass flux(const Torus& torus, const EdgeSet& t, const EdgeSet& base) {
    return flux(HomologyBasis(torus), t, base);
}

bool flux_separates(const HomologyBasis& basis, const EdgeSet& t1, const EdgeSet& t2, const EdgeSet& base) {
    return flux(basis, t1, base) != flux(basis, t2, base);
}

}  // namespace toroflip
