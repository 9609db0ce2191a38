#include <doctest.h>

#include "toroflip/flipgraph.hpp"
#include "toroflip/forcing.hpp"

#include <algorithm>
#include <numeric>

using namespace toroflip;

TEST_CASE("solver equals subset-growth oracle") {
    for (TorusSpec s : {TorusSpec{3, 4, 1}, TorusSpec{3, 4, 2}, TorusSpec{2, 4, 1}, TorusSpec{4, 4, 4},
                        TorusSpec{2, 6, 2}, TorusSpec{1, 8, 2}}) {
        CAPTURE(s.to_string());
        const Torus t(s);
        const auto store = TilingStore::enumerate(t);
        const auto numbers = forcing_numbers(t, store, 1);
        for (std::size_t i = 0; i < store.size(); ++i)
            CHECK(numbers[i] == brute_force_forcing_number(t, store.tiling(i)));
    }
}

TEST_CASE("witnesses force their tiling and are minimal") {
    const Torus t(TorusSpec{4, 4, 2});
    const auto store = TilingStore::enumerate(t);
    for (std::size_t i = 0; i < store.size(); i += 11) {
        const Tiling x = store.tiling(i);
        const ForcingResult r = forcing_number(t, x, store);
        CHECK(r.tiling_index == i);
        CHECK(static_cast<int>(r.witness.size()) == r.number);
        CHECK(std::is_sorted(r.witness.begin(), r.witness.end()));
        EdgeSet w(t.edge_count());
        for (int e : r.witness) w.set(e);
        CHECK(w.is_subset_of(x));
        CHECK(count_completions(t, w, 2) == 1);
        CHECK(r.number == brute_force_forcing_number(t, x));
    }
}

TEST_CASE("witness is the lexicographically smallest minimum set") {
    const Torus t(TorusSpec{3, 4, 1});
    const auto store = TilingStore::enumerate(t);
    for (std::size_t i = 0; i < store.size(); ++i) {
        const Tiling x = store.tiling(i);
        const auto dominoes = x.members();
        const auto r = forcing_number(t, x, store);
        // first forcing subset of the right size in lexicographic order
        std::vector<int> pick(r.number);
        std::iota(pick.begin(), pick.end(), 0);
        std::vector<int> first;
        const int k = static_cast<int>(dominoes.size());
        while (first.empty()) {
            EdgeSet s(t.edge_count());
            for (int p : pick) s.set(dominoes[p]);
            if (count_completions(t, s, 2) == 1)
                for (int p : pick) first.push_back(dominoes[p]);
            int pos = r.number - 1;
            while (pos >= 0 && pick[pos] == k - r.number + pos) --pos;
            if (pos < 0) break;
            ++pick[pos];
            for (int q = pos + 1; q < r.number; ++q) pick[q] = pick[q - 1] + 1;
        }
        CHECK(r.witness == first);
    }
}

TEST_CASE("unknown tiling is rejected") {
    const Torus t(TorusSpec{3, 4, 1});
    const auto store = TilingStore::enumerate(t);
    CHECK_THROWS_AS(forcing_number(t, EdgeSet(t.edge_count()), store), std::invalid_argument);
}

TEST_CASE("forcing numbers change by at most one across a flip") {
    for (TorusSpec s : {TorusSpec{4, 4, 2}, TorusSpec{3, 6, 2}}) {
        const Torus t(s);
        const auto store = TilingStore::enumerate(t);
        const FlipGraph g(t, store, true);
        const auto f = forcing_numbers(t, store, 1);
        for (std::size_t i = 0; i < store.size(); ++i)
            for (auto j : g.neighbors(i)) CHECK(std::abs(int(f[i]) - int(f[j])) <= 1);
    }
}

TEST_CASE("spectrum of T(3,10,1)") {
    const Spectrum s = forcing_spectrum(Torus(TorusSpec{3, 10, 1}), default_store_cap, 1);
    CHECK(s.tilings() == 18656);
    CHECK(s.values() == std::vector<int>{3, 5, 6, 7, 8});
    CHECK(s.gaps() == std::vector<int>{4});
    CHECK_FALSE(is_integer_interval(s));
}

TEST_CASE("integer intervals") {
    Spectrum s;
    CHECK_THROWS_AS(is_integer_interval(s), std::invalid_argument);
    s.counts = {{2, 1}, {3, 1}, {4, 1}};
    CHECK(is_integer_interval(s));
    s.counts = {{7, 3}};
    CHECK(is_integer_interval(s));
    s.counts = {{3, 1}, {5, 1}, {6, 1}, {7, 1}, {8, 1}};
    CHECK_FALSE(is_integer_interval(s));
}
