#include "toroflip/families.hpp"

#include <array>

namespace toroflip {

EdgeFamilySets::EdgeFamilySets(const Torus& torus) : torus_(&torus) {}

EdgeSet EdgeFamilySets::x(int i) const {
    EdgeSet s(torus_->edge_count());
    for (int k = 0; 2 * k < torus_->cols(); ++k) s.set(torus_->horizontal_edge(i, 2 * k));
    return s;
}

EdgeSet EdgeFamilySets::y(int i) const {
    EdgeSet s(torus_->edge_count());
    for (int k = 0; 2 * k + 1 < torus_->cols(); ++k) s.set(torus_->horizontal_edge(i, 2 * k + 1));
    return s;
}

EdgeSet EdgeFamilySets::w(int j) const {
    EdgeSet s(torus_->edge_count());
    for (int k = 0; k < torus_->rows() / 2; ++k) s.set(torus_->vertical_edge(2 * k, j));
    return s;
}

EdgeSet EdgeFamilySets::f(int j) const {
    EdgeSet s(torus_->edge_count());
    const int upper = (torus_->rows() - 1) / 2;  // ceil((n-2)/2)
    for (int k = 0; k < upper; ++k) s.set(torus_->vertical_edge(2 * k + 1, j));
    return s;
}

EdgeSet EdgeFamilySets::f_prime(int j) const {
    EdgeSet s = f(j);
    const auto& spec = torus_->spec();
    s.set(torus_->vertical_edge(spec.n - 1, j - spec.r));
    return s;
}

std::vector<NamedTiling> four_singletons(const TorusSpec& spec) {
    if (!is_bipartite(spec) || spec.n < 3 || spec.m < 3)
        throw InvalidSpec("four_singletons: need a bipartite torus with n, m >= 3, got " + spec.to_string());
    Torus torus(spec);
    EdgeFamilySets sets(torus);
    std::vector<NamedTiling> out;
    for (int variant = 0; variant < 2; ++variant) {
        Tiling t(torus.edge_count());
        for (int i = 0; i < spec.n; ++i) t |= ((i + variant) % 2 == 0) ? sets.x(i) : sets.y(i);
        out.push_back({"t" + std::to_string(variant + 1), std::move(t)});
    }
    for (int variant = 0; variant < 2; ++variant) {
        Tiling t(torus.edge_count());
        for (int j = 0; j < spec.m; ++j) t |= ((j + variant) % 2 == 0) ? sets.f_prime(j) : sets.w(j);
        out.push_back({"t" + std::to_string(variant + 3), std::move(t)});
    }
    return out;
}

namespace {

struct DiagonalPattern {
    bool anti;
    int offset;
    std::vector<bool> vertical;  // orientation of ladder on diagonal pair p
};

Tiling render(const Torus& torus, const DiagonalPattern& p) {
    const int size = torus.rows();
    Tiling t(torus.edge_count());
    for (std::size_t pair = 0; pair < p.vertical.size(); ++pair) {
        const int d = p.offset + 2 * static_cast<int>(pair);
        for (int i = 0; i < size; ++i) {
            if (p.anti) {
                t.set(p.vertical[pair] ? torus.vertical_edge(i, d - i) : torus.horizontal_edge(i, d - i));
            } else {
                t.set(p.vertical[pair] ? torus.vertical_edge(i, i + d + 1) : torus.horizontal_edge(i, i + d));
            }
        }
    }
    return t;
}

}  // namespace

std::vector<Tiling> diagonal_singletons(int n) {
    if (n < 2) throw InvalidSpec("diagonal_singletons: need n >= 2, got " + std::to_string(n));
    // two mixed-orientation ladders on T(4,4,4), for both diagonal directions
    // and both ways of pairing the diagonals
    std::vector<DiagonalPattern> patterns;
    for (bool anti : {false, true})
        for (int offset : {0, 1})
            for (bool first_vertical : {false, true}) patterns.push_back({anti, offset, {first_vertical, !first_vertical}});
    for (int size = 3; size <= n; ++size) {
        std::vector<DiagonalPattern> grown;
        for (const auto& p : patterns)
            for (bool vertical : {false, true}) {
                DiagonalPattern q = p;
                q.vertical.push_back(vertical);
                grown.push_back(std::move(q));
            }
        patterns = std::move(grown);
    }

    const TorusSpec spec{2 * n, 2 * n, 2 * n};
    Torus torus(spec);
    std::vector<Tiling> out;
    for (auto& named : four_singletons(spec)) out.push_back(std::move(named.tiling));
    for (const auto& p : patterns) out.push_back(render(torus, p));
    return out;
}

std::vector<FluxFamilyMember> horizontal_flux_family(const TorusSpec& spec) {
    if (!is_bipartite(spec) || spec.n < 4 || spec.m < 4)
        throw InvalidSpec("horizontal_flux_family: need a bipartite torus with n, m >= 4, got " + spec.to_string());
    Torus torus(spec);
    EdgeFamilySets sets(torus);
    std::vector<FluxFamilyMember> out;
    for (int k = 0; k < spec.n / 2 - 1; ++k) {
        FluxFamilyMember mem{k, Tiling(torus.edge_count()), Tiling(torus.edge_count())};
        for (int i = 0; i < spec.n; ++i) {
            const bool odd_y = i % 2 == 1 && i <= 2 * k + 1;
            const bool even_y = i % 2 == 0 && i <= 2 * k;
            mem.t |= odd_y ? sets.y(i) : sets.x(i);
            mem.t_prime |= even_y ? sets.y(i) : sets.x(i);
        }
        out.push_back(std::move(mem));
    }
    return out;
}

std::vector<FluxFamilyMember> vertical_flux_family(const TorusSpec& spec) {
    if (spec.n % 2 != 0 || spec.m % 2 != 0 || spec.r != spec.m || spec.n < 4 || spec.m < 4)
        throw InvalidSpec("vertical_flux_family: need T(2a,2b,2b) with a, b >= 2, got " + spec.to_string());
    Torus torus(spec);
    EdgeFamilySets sets(torus);
    std::vector<FluxFamilyMember> out;
    for (int k = 0; k < spec.m / 2 - 1; ++k) {
        FluxFamilyMember mem{k, Tiling(torus.edge_count()), Tiling(torus.edge_count())};
        for (int j = 0; j < spec.m; ++j) {
            const bool odd_f = j % 2 == 1 && j <= 2 * k + 1;
            const bool even_f = j % 2 == 0 && j <= 2 * k;
            mem.t |= odd_f ? sets.f_prime(j) : sets.w(j);
            mem.t_prime |= even_f ? sets.f_prime(j) : sets.w(j);
        }
        out.push_back(std::move(mem));
    }
    return out;
}

}  // namespace toroflip
