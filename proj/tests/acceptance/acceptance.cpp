// One line per acceptance criterion; exit status 0 iff every criterion passes.
// Usage: acceptance [criterion numbers...]

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "toroflip/families.hpp"
#include "toroflip/flipgraph.hpp"
#include "toroflip/forcing.hpp"
#include "toroflip/homology.hpp"
#include "toroflip/tilings.hpp"
#include "toroflip/torus.hpp"

using namespace toroflip;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;

    void fail(const std::string& why) {
        if (passed) detail = why;
        passed = false;
    }
};

const std::vector<TorusSpec> golden_specs{{3, 4, 1}, {4, 4, 2}, {4, 4, 4}};

// All tileable specs with n <= 6, 2 <= m <= 8, 1 <= r <= m.
std::vector<TorusSpec> sweep(const std::function<bool(const TorusSpec&)>& keep) {
    std::vector<TorusSpec> out;
    for (int n = 1; n <= 6; ++n)
        for (int m = 2; m <= 8; ++m)
            for (int r = 1; r <= m; ++r) {
                const TorusSpec s{n, m, r};
                if ((n * m) % 2 == 0 && keep(s)) out.push_back(s);
            }
    return out;
}

bool simple_non_bipartite(const TorusSpec& s) { return !is_bipartite(s) && is_simple(s); }

Outcome golden_counts() {
    Outcome o;
    const std::map<TorusSpec, std::array<std::size_t, 3>> expected{
        {{3, 4, 1}, {80, 12, 8}}, {{4, 4, 2}, {260, 11, 4}}, {{4, 4, 4}, {272, 17, 12}}};
    std::ostringstream got;
    for (const auto& s : golden_specs) {
        const Torus t(s);
        const auto store = TilingStore::enumerate(t);
        const FlipGraph g(t, store);
        const std::array<std::size_t, 3> have{store.size(), g.component_count(), g.singleton_count()};
        got << s.to_string() << "=" << have[0] << "/" << have[1] << "/" << have[2] << " ";
        if (have != expected.at(s)) o.fail(s.to_string() + " gave " + std::to_string(have[0]) + "/" +
                                           std::to_string(have[1]) + "/" + std::to_string(have[2]));
    }
    if (o.passed) o.detail = got.str() + "(tilings/components/singletons)";
    return o;
}

Outcome two_components() {
    Outcome o;
    std::size_t checked = 0, untileable = 0;
    for (int n = 1; n <= 6; ++n)
        for (int m = 2; m <= 8; ++m)
            for (int r = 1; r <= m; ++r)
                if (simple_non_bipartite({n, m, r}) && (n * m) % 2 != 0) ++untileable;
    for (const auto& s : sweep(simple_non_bipartite)) {
        try {
            const auto r = verify_two_components(s);
            if (!r.passed()) o.fail(s.to_string() + ": two-component report not satisfied");
            ++checked;
        } catch (const std::exception& e) {
            o.fail(s.to_string() + ": " + e.what());
        }
    }
    if (o.passed)
        o.detail = std::to_string(checked) + " simple non-bipartite instances, each 2 equal components swapped by an "
                   "automorphism; " + std::to_string(untileable) + " untileable (nm odd) excluded";
    return o;
}

Outcome flux_goldens() {
    Outcome o;
    auto expect = [&](const Torus& t, const Tiling& x, FluxClass want, const std::string& name) {
        const FluxClass got = flux(t, x, base_tiling(t));
        if (!(got == want))
            o.fail(t.spec().to_string() + " " + name + ": " + got.to_string() + " expected " + want.to_string());
    };
    {
        const TorusSpec s{4, 4, 4};
        const Torus t(s);
        const auto h = horizontal_flux_family(s).at(0);
        const auto v = vertical_flux_family(s).at(0);
        expect(t, base_tiling(t), {0, 0}, "base");
        expect(t, h.t_prime, {1, 0}, "t'_0");
        expect(t, h.t, {-1, 0}, "t_0");
        expect(t, v.t_prime, {0, -1}, "t'^0");
        expect(t, v.t, {0, 1}, "t^0");
    }
    int members = 0;
    for (TorusSpec s : {TorusSpec{7, 4, 1}, TorusSpec{8, 6, 2}}) {
        const Torus t(s);
        for (const auto& m : horizontal_flux_family(s)) {
            expect(t, m.t, {-(m.k + 1), 0}, "t_" + std::to_string(m.k));
            expect(t, m.t_prime, {m.k + 1, 0}, "t'_" + std::to_string(m.k));
            members += 2;
        }
    }
    {
        const TorusSpec s{4, 8, 8};
        const Torus t(s);
        for (const auto& m : vertical_flux_family(s)) {
            expect(t, m.t, {0, m.k + 1}, "t^" + std::to_string(m.k));
            expect(t, m.t_prime, {0, -(m.k + 1)}, "t'^" + std::to_string(m.k));
            members += 2;
        }
    }
    if (o.passed)
        o.detail = "five T(4,4,4) fluxes and " + std::to_string(members) + " family members on T(7,4,1), T(8,6,2), T(4,8,8)";
    return o;
}

Outcome flux_conservation() {
    Outcome o;
    std::size_t flips = 0;
    for (const auto& s : golden_specs) {
        const Torus t(s);
        const auto store = TilingStore::enumerate(t);
        const FlipGraph g(t, store, true);
        const HomologyBasis b(t);
        const Tiling base = base_tiling(t);
        std::vector<FluxClass> f(store.size());
        for (std::size_t i = 0; i < store.size(); ++i) f[i] = flux(b, store.tiling(i), base);
        for (std::size_t i = 0; i < store.size(); ++i)
            for (auto j : g.neighbors(i)) {
                ++flips;
                if (!(f[i] == f[j])) o.fail(s.to_string() + ": flip changes flux at tiling " + store.tiling(i).to_hex());
            }
        for (std::size_t i = 0; i < store.size(); ++i)
            for (std::size_t j = i + 1; j < store.size(); ++j)
                if (!(f[i] == f[j]) && g.component_of(i) == g.component_of(j))
                    o.fail(s.to_string() + ": different fluxes in one component");
    }
    if (o.passed)
        o.detail = std::to_string(flips / 2) + " flip edges preserve flux; flux inequality always separates components";
    return o;
}

Outcome ladder_criterion() {
    Outcome o;
    std::size_t pairs = 0;
    for (const auto& s : golden_specs) {
        const Torus t(s);
        const auto store = TilingStore::enumerate(t);
        const FlipGraph g(t, store);
        const HomologyBasis b(t);
        const Tiling base = base_tiling(t);
        std::vector<FluxClass> f(store.size());
        std::vector<LadderSet> l(store.size());
        for (std::size_t i = 0; i < store.size(); ++i) {
            f[i] = flux(b, store.tiling(i), base);
            l[i] = ladder_set(t, store.tiling(i));
        }
        for (std::size_t i = 0; i < store.size(); ++i)
            for (std::size_t j = 0; j < store.size(); ++j) {
                ++pairs;
                const bool same = g.component_of(i) == g.component_of(j);
                if (same != (f[i] == f[j] && l[i] == l[j]))
                    o.fail(s.to_string() + ": tilings " + store.tiling(i).to_hex() + " and " + store.tiling(j).to_hex());
            }
    }
    if (o.passed) o.detail = std::to_string(pairs) + " ordered pairs agree with component membership";
    return o;
}

Outcome lower_bounds() {
    Outcome o;
    std::size_t four = 0, fam8 = 0, fam9 = 0;
    for (const auto& s : sweep([](const TorusSpec& s) { return is_bipartite(s) && s.n >= 3 && s.m >= 3; })) {
        const Torus t(s);
        std::set<Tiling> distinct;
        for (const auto& nt : four_singletons(s)) {
            if (!is_perfect_matching(t, nt.tiling) || !flips_of(t, nt.tiling).empty())
                o.fail(s.to_string() + " " + nt.name + " is not an isolated tiling");
            distinct.insert(nt.tiling);
        }
        if (distinct.size() != 4) o.fail(s.to_string() + ": four singletons not distinct");
        ++four;
    }
    {
        const Torus t(TorusSpec{4, 4, 4});
        const auto store = TilingStore::enumerate(t);
        const FlipGraph g(t, store);
        const auto diag = diagonal_singletons(2);
        const std::set<Tiling> distinct(diag.begin(), diag.end());
        for (const auto& d : diag)
            if (!is_perfect_matching(t, d) || !flips_of(t, d).empty())
                o.fail("diagonal tiling " + d.to_hex() + " is not isolated");
        if (diag.size() != 12 || distinct.size() != 12 || g.singleton_count() != 12)
            o.fail("T(4,4,4) diagonal family is not the 12 singletons");
        if (g.component_count() - g.singleton_count() != 5) o.fail("T(4,4,4) does not have 5 non-singleton components");
    }
    // distinct fluxes certify distinct components; a flip certifies non-singleton
    auto certify = [&](const Torus& t, const std::vector<Tiling>& tilings, std::size_t bound, const std::string& what) {
        const HomologyBasis b(t);
        const Tiling base = base_tiling(t);
        std::set<FluxClass> fluxes;
        for (const auto& x : tilings) {
            if (!is_perfect_matching(t, x) || flips_of(t, x).empty())
                o.fail(t.spec().to_string() + " " + what + ": tiling " + x.to_hex() + " is isolated or invalid");
            fluxes.insert(flux(b, x, base));
        }
        if (fluxes.size() != tilings.size() || fluxes.size() < bound)
            o.fail(t.spec().to_string() + " " + what + ": " + std::to_string(fluxes.size()) + " fluxes, need " +
                   std::to_string(bound));
    };
    for (const auto& s : sweep([](const TorusSpec& s) { return is_bipartite(s) && s.n >= 4 && s.m >= 4; })) {
        const Torus t(s);
        std::vector<Tiling> h{base_tiling(t)};
        for (const auto& m : horizontal_flux_family(s)) {
            h.push_back(m.t);
            h.push_back(m.t_prime);
        }
        certify(t, h, 2 * (s.n / 2) - 1, "horizontal family");
        ++fam8;
        if (s.n % 2 == 0 && s.r == s.m) {
            for (const auto& m : vertical_flux_family(s)) {
                h.push_back(m.t);
                h.push_back(m.t_prime);
            }
            certify(t, h, static_cast<std::size_t>(s.n + s.m - 3), "both families");
            ++fam9;
        }
    }
    if (o.passed)
        o.detail = "four singletons on " + std::to_string(four) + " bipartite instances; 12 diagonal singletons of "
                   "T(4,4,4); flux bounds on " + std::to_string(fam8) + " (rows) and " + std::to_string(fam9) +
                   " (rows+columns, tight 5 at T(4,4,4)) instances";
    return o;
}

Outcome spectra() {
    Outcome o;
    struct Row {
        TorusSpec spec;
        std::size_t tilings;
        std::vector<int> values;
    };
    std::ostringstream got;
    for (const Row& r : {Row{{3, 10, 1}, 18656, {3, 5, 6, 7, 8}}, Row{{4, 10, 10}, 537636, {4, 6, 7, 8, 9, 10}}}) {
        const Torus t(r.spec);
        const Spectrum s = forcing_spectrum(t);
        std::string vals;
        for (int v : s.values()) vals += (vals.empty() ? "" : ",") + std::to_string(v);
        got << (got.tellp() > 0 ? "; " : "") << r.spec.to_string() << " {" << vals << "} over " << s.tilings();
        if (s.tilings() != r.tilings || s.values() != r.values)
            o.fail(r.spec.to_string() + ": {" + vals + "} over " + std::to_string(s.tilings()) + " tilings");
    }
    if (o.passed) o.detail = got.str();
    return o;
}

Outcome interval_spectra() {
    Outcome o;
    std::size_t instances = 0, flips = 0;
    for (const auto& s : sweep(simple_non_bipartite)) {
        const Torus t(s);
        if (count_completions(t, EdgeSet(t.edge_count()), 100001) > 100000) continue;
        const auto store = TilingStore::enumerate(t);
        const FlipGraph g(t, store, true);
        const auto f = forcing_numbers(t, store);
        const Spectrum sp = spectrum_of(f);
        if (!is_integer_interval(sp)) o.fail(s.to_string() + ": spectrum has gaps");
        for (std::size_t i = 0; i < store.size(); ++i)
            for (auto j : g.neighbors(i)) {
                ++flips;
                if (std::abs(int(f[i]) - int(f[j])) > 1) o.fail(s.to_string() + ": flip changes forcing number by 2+");
            }
        ++instances;
    }
    if (o.passed)
        o.detail = std::to_string(instances) + " instances with integer-interval spectra; " + std::to_string(flips / 2) +
                   " flip edges change the forcing number by at most 1";
    return o;
}

Outcome structure() {
    Outcome o;
    if (dual(TorusSpec{3, 12, 4}) != TorusSpec{4, 9, 6}) o.fail("T*(3,12,4) != T(4,9,6)");
    if (dual(TorusSpec{3, 12, 10}) != TorusSpec{2, 18, 3}) o.fail("T*(3,12,10) != T(2,18,3)");
    std::size_t duals = 0, single_column = 0;
    for (int n = 1; n <= 64; ++n)
        for (int m = 2; m <= 64; ++m)
            for (int r = 1; r <= m; ++r) {
                const TorusSpec s{n, m, r};
                if (n == 1 && r == m) {
                    ++single_column;  // dual T(m,1,1) is outside the m >= 2 domain
                    continue;
                }
                if (dual(dual(s)) != s) o.fail("dual is not an involution at " + s.to_string());
                ++duals;
            }
    std::size_t cycles = 0;
    for (int m = 1; m <= 64; ++m)
        for (int r = 1; r <= m; ++r) {
            const auto cs = cycle_structure(m, r);
            const int g = std::gcd(m, r);
            std::vector<int> seen(m, 0);
            if (static_cast<int>(cs.size()) != g) o.fail("cycle count at m=" + std::to_string(m) + " r=" + std::to_string(r));
            for (const auto& c : cs) {
                if (static_cast<int>(c.size()) != m / g) o.fail("cycle length at m=" + std::to_string(m));
                for (int j : c) ++seen[j];
            }
            for (int k : seen)
                if (k != 1) o.fail("cycles do not partition Z_" + std::to_string(m));
            ++cycles;
        }
    std::size_t parity = 0;
    for (int n = 1; n <= 12; ++n)
        for (int m = 2; m <= 12; ++m)
            for (int r = 1; r <= m; ++r) {
                const Torus t(TorusSpec{n, m, r});
                if (is_bipartite(t.spec()) == has_odd_cycle(t)) o.fail("parity formula fails at " + t.spec().to_string());
                ++parity;
            }
    if (o.passed)
        o.detail = std::to_string(duals) + " duals involutive (" + std::to_string(single_column) +
                   " T(1,m,m) with one-column duals excluded), both worked duals; " + std::to_string(cycles) +
                   " cycle structures; " + std::to_string(parity) + " parity checks";
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    std::size_t instances = 0, tilings = 0;
    for (const auto& s : sweep([](const TorusSpec&) { return true; })) {
        const Torus t(s);
        if (count_completions(t, EdgeSet(t.edge_count()), 1001) > 1000) continue;
        const auto store = TilingStore::enumerate(t);
        const auto f = forcing_numbers(t, store);
        for (std::size_t i = 0; i < store.size(); ++i)
            if (brute_force_forcing_number(t, store.tiling(i)) != f[i])
                o.fail(s.to_string() + ": tiling " + store.tiling(i).to_hex());
        tilings += store.size();
        ++instances;
    }
    if (o.passed)
        o.detail = std::to_string(tilings) + " tilings on " + std::to_string(instances) + " instances (<= 1000 tilings each)";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"golden counts", golden_counts},
        {"two isomorphic components on non-bipartite tori", two_components},
        {"flux goldens", flux_goldens},
        {"flux conservation and separation", flux_conservation},
        {"ladder/flux criterion vs BFS components", ladder_criterion},
        {"lower bounds on components", lower_bounds},
        {"forcing spectra with gaps", spectra},
        {"interval spectra and flip Lipschitz property", interval_spectra},
        {"dual involution, I-cycles, parity", structure},
        {"hitting-set forcing equals subset-growth oracle", oracle_equivalence},
    };
    std::set<int> only;
    for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (!only.empty() && !only.contains(id)) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %2d: %s  %s: %s [%.1fs]\n", id, o.passed ? "PASS" : "FAIL", criteria[i].first.c_str(),
                    o.detail.c_str(), secs);
        std::fflush(stdout);
        all = all && o.passed;
    }
    return all ? 0 : 1;
}
