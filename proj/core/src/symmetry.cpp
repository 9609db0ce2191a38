#include "toroflip/symmetry.hpp"

#include <stdexcept>

#include "toroflip/tilings.hpp"

namespace toroflip {

namespace {

EdgePermutation from_translation(const Torus& torus, const std::vector<int>& vmap) {
    EdgePermutation p;
    p.edge.resize(torus.edge_count());
    for (int e = 0; e < torus.edge_count(); ++e) {
        const Edge& ed = torus.edge(e);
        const int t = vmap[ed.tail];
        const int i = torus.vertex_row(t), j = torus.vertex_col(t);
        const int image = ed.kind == EdgeKind::horizontal ? torus.horizontal_edge(i, j) : torus.vertical_edge(i, j);
        if (torus.edge(image).head != vmap[ed.head]) throw std::logic_error("translation does not preserve edges");
        p.edge[e] = image;
    }
    p.face.resize(torus.face_count());
    for (int f = 0; f < torus.face_count(); ++f) p.face[f] = vmap[torus.face(f).corners[0]];
    return p;
}

}  // namespace

EdgeSet EdgePermutation::apply(const EdgeSet& s) const {
    EdgeSet out(s.size());
    for (int e : s.members()) out.set(edge[e]);
    return out;
}

EdgePermutation column_shift(const Torus& torus) {
    std::vector<int> vmap(torus.vertex_count());
    for (int v = 0; v < torus.vertex_count(); ++v) vmap[v] = torus.shift_vertex(v);
    return from_translation(torus, vmap);
}

EdgePermutation row_shift(const Torus& torus) {
    std::vector<int> vmap(torus.vertex_count());
    for (int v = 0; v < torus.vertex_count(); ++v) vmap[v] = torus.below(v);
    return from_translation(torus, vmap);
}

TwoComponentSetup two_component_setup(const Torus& torus) {
    const auto& s = torus.spec();
    if (is_bipartite(s)) throw InvalidSpec("two_component_setup: " + s.to_string() + " is bipartite");
    auto reduced_form = [](const TorusSpec& t) { return t.n % 2 == 1 && t.m % 2 == 0 && t.r % 2 == 0; };

    TwoComponentSetup setup;
    if (reduced_form(s)) {
        auto [m1, m2] = canonical_horizontal(torus);
        setup.m1 = std::move(m1);
        setup.m2 = std::move(m2);
        setup.automorphism = column_shift(torus);
        setup.reduced = s;
        return setup;
    }

    const TorusSpec d = dual(s);
    if (!reduced_form(d))
        throw std::logic_error("two_component_setup: dual " + d.to_string() + " of " + s.to_string() +
                               " is not of the form T(odd, even, even)");
    const Torus dual_torus(d);
    const DualMap map = dual_map(torus, dual_torus);
    std::vector<int> inverse_edge(dual_torus.edge_count());
    for (int e = 0; e < torus.edge_count(); ++e) inverse_edge[map.edge[e]] = e;
    std::vector<int> inverse_face(dual_torus.face_count());
    for (int f = 0; f < torus.face_count(); ++f) inverse_face[map.face[f]] = f;

    auto [dm1, dm2] = canonical_horizontal(dual_torus);
    setup.m1 = EdgeSet(torus.edge_count());
    setup.m2 = EdgeSet(torus.edge_count());
    for (int e : dm1.members()) setup.m1.set(inverse_edge[e]);
    for (int e : dm2.members()) setup.m2.set(inverse_edge[e]);

    const EdgePermutation shift = column_shift(dual_torus);
    setup.automorphism.edge.resize(torus.edge_count());
    setup.automorphism.face.resize(torus.face_count());
    for (int e = 0; e < torus.edge_count(); ++e) setup.automorphism.edge[e] = inverse_edge[shift.edge[map.edge[e]]];
    for (int f = 0; f < torus.face_count(); ++f) setup.automorphism.face[f] = inverse_face[shift.face[map.face[f]]];
    setup.via_dual = true;
    setup.reduced = d;
    return setup;
}

}  // namespace toroflip
