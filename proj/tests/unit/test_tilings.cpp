#include <doctest.h>

#include <functional>
#include <unordered_map>
#include <utility>

#include "toroflip/tilings.hpp"

using namespace toroflip;

namespace {

// Perfect matchings counted from coordinates alone, memoised on the set of
// covered squares.
std::size_t reference_count(int n, int m, int r) {
    const int vertices = n * m;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            const int v = i * m + j;
            edges.emplace_back(v, i * m + (j + 1) % m);
            edges.emplace_back(v, i + 1 < n ? (i + 1) * m + j : (j + r) % m);
        }
    std::vector<std::vector<int>> at(vertices);
    for (const auto& [a, b] : edges) {
        if (a == b) continue;
        at[a].push_back(b);
        at[b].push_back(a);
    }
    std::unordered_map<std::uint64_t, std::size_t> memo;
    const std::uint64_t full = vertices == 64 ? ~0ULL : (1ULL << vertices) - 1;
    std::function<std::size_t(std::uint64_t)> go = [&](std::uint64_t covered) -> std::size_t {
        if (covered == full) return 1;
        if (auto it = memo.find(covered); it != memo.end()) return it->second;
        const int v = std::countr_one(covered);
        std::size_t total = 0;
        for (int u : at[v])
            if (!(covered >> u & 1)) total += go(covered | 1ULL << v | 1ULL << u);
        memo[covered] = total;
        return total;
    };
    return go(0);
}

}  // namespace

TEST_CASE("golden tiling counts") {
    CHECK(TilingStore::enumerate(Torus(TorusSpec{3, 4, 1})).size() == 80);
    CHECK(TilingStore::enumerate(Torus(TorusSpec{4, 4, 2})).size() == 260);
    CHECK(TilingStore::enumerate(Torus(TorusSpec{4, 4, 4})).size() == 272);
    CHECK(TilingStore::enumerate(Torus(TorusSpec{3, 10, 1})).size() == 18656);
}

TEST_CASE("enumeration matches a coordinate-level reference count") {
    for (int n = 1; n <= 4; ++n)
        for (int m = 2; m <= 6; ++m)
            for (int r = 1; r <= m; ++r) {
                const Torus t(TorusSpec{n, m, r});
                CHECK_MESSAGE(TilingStore::enumerate(t).size() == reference_count(n, m, r), t.spec().to_string());
            }
}

TEST_CASE("store contents are distinct perfect matchings") {
    const Torus t(TorusSpec{4, 4, 2});
    const auto store = TilingStore::enumerate(t);
    for (std::size_t i = 0; i < store.size(); ++i) {
        const Tiling x = store.tiling(i);
        CHECK(is_perfect_matching(t, x));
        CHECK(store.find(x) == i);
    }
    EdgeSet none(t.edge_count());
    CHECK_FALSE(store.find(none).has_value());
}

TEST_CASE("store overflow and constrained counting") {
    const Torus t(TorusSpec{3, 4, 1});
    CHECK_THROWS_AS(TilingStore::enumerate(t, 79), StoreOverflow);
    CHECK(count_completions(t, EdgeSet(t.edge_count()), 1000) == 80);
    CHECK(count_completions(t, EdgeSet(t.edge_count()), 5) == 5);
    const Tiling base = base_tiling(t);
    CHECK(count_completions(t, base, 10) == 1);
}

TEST_CASE("untileable tori have no tilings") {
    CHECK(TilingStore::enumerate(Torus(TorusSpec{3, 5, 2})).size() == 0);
}

TEST_CASE("canonical horizontal matchings") {
    const Torus t(TorusSpec{3, 6, 2});
    const auto [m1, m2] = canonical_horizontal(t);
    CHECK(is_perfect_matching(t, m1));
    CHECK(is_perfect_matching(t, m2));
    CHECK(phi(t, m1) == m2);
    CHECK_THROWS_AS(canonical_horizontal(Torus(TorusSpec{2, 5, 1})), InvalidSpec);
}
