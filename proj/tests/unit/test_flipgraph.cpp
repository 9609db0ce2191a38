#include <doctest.h>

#include <queue>

#include "toroflip/flipgraph.hpp"
#include "toroflip/homology.hpp"
#include "toroflip/symmetry.hpp"

using namespace toroflip;

namespace {

// Components by breadth-first search over flips_of, independent of the
// union-find in FlipGraph.
std::vector<int> bfs_components(const Torus& torus, const TilingStore& store) {
    std::vector<int> comp(store.size(), -1);
    int next = 0;
    for (std::size_t s = 0; s < store.size(); ++s) {
        if (comp[s] >= 0) continue;
        std::queue<std::size_t> q;
        q.push(s);
        comp[s] = next;
        while (!q.empty()) {
            const auto u = q.front();
            q.pop();
            for (const auto& f : flips_of(torus, store.tiling(u))) {
                const auto v = *store.find(f.result);
                if (comp[v] < 0) {
                    comp[v] = next;
                    q.push(v);
                }
            }
        }
        ++next;
    }
    return comp;
}

}  // namespace

TEST_CASE("golden component counts") {
    struct Row {
        TorusSpec spec;
        std::size_t tilings, components, singletons;
    };
    for (const Row& r : {Row{{3, 4, 1}, 80, 12, 8}, Row{{4, 4, 2}, 260, 11, 4}, Row{{4, 4, 4}, 272, 17, 12}}) {
        const Torus t(r.spec);
        const auto store = TilingStore::enumerate(t);
        const FlipGraph g(t, store);
        CHECK(store.size() == r.tilings);
        CHECK(g.component_count() == r.components);
        CHECK(g.singleton_count() == r.singletons);
    }
}

TEST_CASE("union-find agrees with breadth-first search") {
    for (TorusSpec s : {TorusSpec{3, 4, 1}, TorusSpec{4, 4, 4}, TorusSpec{3, 6, 2}, TorusSpec{2, 6, 3}}) {
        const Torus t(s);
        const auto store = TilingStore::enumerate(t);
        const FlipGraph g(t, store, true);
        const auto bfs = bfs_components(t, store);
        for (std::size_t i = 0; i < store.size(); ++i)
            for (std::size_t j = i + 1; j < store.size(); j += 3)
                CHECK((g.component_of(i) == g.component_of(j)) == (bfs[i] == bfs[j]));
        std::size_t degree_sum = 0;
        for (std::size_t i = 0; i < store.size(); ++i) {
            CHECK(g.neighbors(i).size() == static_cast<std::size_t>(flip_count(t, store.words(i))));
            degree_sum += g.neighbors(i).size();
        }
        CHECK(degree_sum == 2 * g.flip_edge_count());
    }
}

TEST_CASE("a flip exchanges two parallel dominoes of one square") {
    const Torus t(TorusSpec{4, 4, 4});
    const Tiling base = base_tiling(t);
    const auto flips = flips_of(t, base);
    CHECK(flips.size() >= 4);
    for (const auto& f : flips) {
        CHECK(is_perfect_matching(t, f.result));
        CHECK((base ^ f.result).count() == 4);
    }
}

TEST_CASE("two isomorphic components on non-bipartite tori") {
    for (TorusSpec s : {TorusSpec{3, 4, 2}, TorusSpec{3, 6, 2}, TorusSpec{2, 5, 2}, TorusSpec{4, 3, 1}, TorusSpec{5, 4, 4}}) {
        CAPTURE(s.to_string());
        const auto r = verify_two_components(s);
        CHECK(r.passed());
        CHECK(r.components == 2);
        CHECK(r.size_a == r.size_b);
    }
    CHECK_THROWS_AS(verify_two_components(TorusSpec{3, 4, 1}), InvalidSpec);
}

TEST_CASE("ladder and flux criterion matches components") {
    for (TorusSpec s : {TorusSpec{3, 4, 1}, TorusSpec{4, 4, 2}, TorusSpec{4, 4, 4}}) {
        const Torus t(s);
        const auto store = TilingStore::enumerate(t);
        const FlipGraph g(t, store);
        const HomologyBasis b(t);
        for (std::size_t i = 0; i < store.size(); i += 3)
            for (std::size_t j = 0; j < store.size(); j += 5)
                CHECK(same_component_criterion(b, store.tiling(i), store.tiling(j)) ==
                      (g.component_of(i) == g.component_of(j)));
    }
}

TEST_CASE("ladders of an isolated tiling cover it") {
    const Torus t(TorusSpec{4, 4, 4});
    const auto store = TilingStore::enumerate(t);
    const FlipGraph g(t, store);
    for (std::size_t i = 0; i < store.size(); ++i) {
        if (!g.components()[g.component_of(i)].singleton()) continue;
        EdgeSet covered(t.edge_count());
        for (const auto& l : find_ladders(t, store.tiling(i))) {
            CHECK(l.dominoes.size() >= 2);
            for (int e : l.dominoes) covered.set(e);
        }
        CHECK(covered == store.tiling(i));
    }
}

TEST_CASE("automorphism from the dual swaps the two matchings") {
    const Torus t(TorusSpec{4, 3, 1});
    const auto setup = two_component_setup(t);
    CHECK(setup.via_dual);
    CHECK(is_perfect_matching(t, setup.m1));
    CHECK(setup.automorphism.apply(setup.m1) == setup.m2);
}
