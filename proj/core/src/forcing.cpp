#include "toroflip/forcing.hpp"

#include <bit>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

#include "toroflip/flipgraph.hpp"
#include "toroflip/parallel.hpp"

namespace toroflip {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int i) { return Mask{1} << i; }

int lowest(Mask m) { return std::countr_zero(m); }

template <class F>
void for_bits(Mask m, F&& f) {
    while (m) {
        f(lowest(m));
        m &= m - 1;
    }
}

// Alternating-cycle structure of one tiling. Nodes are the tiling's dominoes
// in edge-index order; a cycle is reported as the mask of dominoes it uses.
class CycleProblem {
public:
    CycleProblem(const Torus& torus, const Tiling& t, bool bipartite, const std::vector<int>& black)
        : torus_(torus), t_(t), bipartite_(bipartite), dominoes_(t.members()) {
        k_ = static_cast<int>(dominoes_.size());
        if (k_ > 64)
            throw std::invalid_argument("forcing: tilings with more than 64 dominoes are not supported (" +
                                        torus.spec().to_string() + ")");
        all_ = k_ == 64 ? ~Mask{0} : bit(k_) - 1;
        node_of_vertex_.assign(torus.vertex_count(), -1);
        for (int i = 0; i < k_; ++i) {
            const Edge& e = torus.edge(dominoes_[i]);
            node_of_vertex_[e.tail] = i;
            node_of_vertex_[e.head] = i;
        }
        if (bipartite_) {
            out_.assign(k_, 0);
            in_.assign(k_, 0);
            for (int i = 0; i < k_; ++i) {
                const Edge& e = torus.edge(dominoes_[i]);
                const int white = black[e.tail] ? e.head : e.tail;
                for (int f : torus.incident(white)) {
                    if (t.test(f) || torus.edge(f).is_loop()) continue;
                    const int j = node_of_vertex_[torus.other_end(f, white)];
                    out_[i] |= bit(j);
                    in_[j] |= bit(i);
                }
            }
        }
    }

    int size() const { return k_; }
    Mask all() const { return all_; }
    int domino(int node) const { return dominoes_[node]; }

    // Some alternating cycle using no domino in `removed`, short ones first;
    // 0 if none exists.
    Mask find_cycle(Mask removed) const {
        return bipartite_ ? directed_cycle(all_ & ~removed) : alternating_cycle(all_ & ~removed, removed);
    }

private:
    Mask directed_cycle(Mask alive) const {
        // nodes without an in- or out-arc inside `alive` lie on no cycle
        for (bool changed = true; changed;) {
            changed = false;
            for_bits(alive, [&](int i) {
                if (!(out_[i] & alive) || !(in_[i] & alive)) {
                    alive &= ~bit(i);
                    changed = true;
                }
            });
        }
        if (!alive) return 0;
        Mask found = 0;
        for_bits(alive, [&](int i) {
            if (!found && (out_[i] & bit(i))) found = bit(i);
        });
        if (found) return found;
        for_bits(alive, [&](int i) {
            const Mask both = out_[i] & in_[i] & alive & ~bit(i);
            if (!found && both) found = bit(i) | bit(lowest(both));
        });
        if (found) return found;

        int best_len = 65;
        Mask best = 0;
        Mask layers[65];
        for_bits(alive, [&](int s) {
            if (best_len <= 3) return;
            layers[0] = bit(s);
            Mask visited = bit(s);
            for (int d = 0; d + 1 < best_len; ++d) {
                Mask next = 0;
                for_bits(layers[d], [&](int x) { next |= out_[x]; });
                next &= alive;
                if (next & bit(s)) {
                    Mask cycle = bit(s);
                    int cur = s;
                    for (int e = d; e >= 1; --e) {
                        cur = lowest(layers[e] & in_[cur]);
                        cycle |= bit(cur);
                    }
                    best = cycle;
                    best_len = d + 1;
                    break;
                }
                next &= ~visited;
                if (!next) break;
                visited |= next;
                layers[d + 1] = next;
            }
        });
        return best;
    }

    bool short_cycle(int start, int start_vertex, int exit_vertex, Mask alive, Mask used, int depth,
                     Mask& out) const {
        for (int f : torus_.incident(exit_vertex)) {
            if (t_.test(f) || torus_.edge(f).is_loop()) continue;
            const int x = torus_.other_end(f, exit_vertex);
            const int j = node_of_vertex_[x];
            if (j == start && x == start_vertex) {
                out = used;
                return true;
            }
            if (depth == 0 || j < start || !(alive & bit(j)) || (used & bit(j))) continue;
            const int y = torus_.other_end(dominoes_[j], x);
            if (short_cycle(start, start_vertex, y, alive, used | bit(j), depth - 1, out)) return true;
        }
        return false;
    }

    Mask alternating_cycle(Mask alive, Mask removed) const {
        constexpr int max_short = 4;
        Mask found = 0;
        for (int len = 1; len <= max_short; ++len) {
            for (int i = 0; i < k_ && !found; ++i) {
                if (!(alive & bit(i))) continue;
                const Edge& e = torus_.edge(dominoes_[i]);
                if (short_cycle(i, e.tail, e.head, alive, bit(i), len - 1, found)) break;
                if (short_cycle(i, e.head, e.tail, alive, bit(i), len - 1, found)) break;
            }
            if (found) return found;
        }

        // no short cycle: look for any other tiling containing the removed dominoes
        EdgeSet forced(torus_.edge_count());
        for_bits(removed, [&](int i) { forced.set(dominoes_[i]); });
        std::optional<Tiling> other;
        for_each_matching(torus_, forced, EdgeSet(torus_.edge_count()), [&](const EdgeSet& m) {
            if (m == t_) return true;
            other = m;
            return false;
        });
        if (!other) return 0;

        // split t xor other into cycles, keep the one with fewest dominoes
        const EdgeSet diff = t_ ^ *other;
        std::vector<int> parent(torus_.vertex_count());
        std::iota(parent.begin(), parent.end(), 0);
        auto root = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        for (int e : diff.members()) parent[root(torus_.edge(e).tail)] = root(torus_.edge(e).head);
        std::vector<Mask> by_root(torus_.vertex_count(), 0);
        for (int i = 0; i < k_; ++i)
            if (!other->test(dominoes_[i])) by_root[root(torus_.edge(dominoes_[i]).tail)] |= bit(i);
        Mask best = 0;
        for (Mask m : by_root)
            if (m && (!best || std::popcount(m) < std::popcount(best))) best = m;
        return best;
    }

    const Torus& torus_;
    const Tiling& t_;
    bool bipartite_;
    std::vector<int> dominoes_;
    int k_ = 0;
    Mask all_ = 0;
    std::vector<int> node_of_vertex_;
    std::vector<Mask> out_;
    std::vector<Mask> in_;
};

// Is there a hitting set containing `chosen`, avoiding `banned`, with at
// most `budget` further dominoes?
bool feasible(const CycleProblem& p, Mask chosen, Mask banned, int budget) {
    const Mask cycle = p.find_cycle(chosen);
    if (!cycle) return true;
    if (budget == 0) return false;
    const Mask candidates = cycle & ~banned;
    if (!candidates) return false;

    // vertex-disjoint cycles need distinct dominoes
    int packed = 1;
    for (Mask covered = chosen | cycle;;) {
        const Mask c = p.find_cycle(covered);
        if (!c) break;
        if (!(c & ~banned) || ++packed > budget) return false;
        covered |= c;
    }

    Mask skip = banned;
    for (Mask rest = candidates; rest; rest &= rest - 1) {
        const int x = lowest(rest);
        if (feasible(p, chosen | bit(x), skip, budget - 1)) return true;
        skip |= bit(x);
    }
    return false;
}

int packing_bound(const CycleProblem& p) {
    int packed = 0;
    for (Mask covered = 0;;) {
        const Mask c = p.find_cycle(covered);
        if (!c) return packed;
        ++packed;
        covered |= c;
    }
}

int minimum(const CycleProblem& p) {
    for (int budget = packing_bound(p);; ++budget)
        if (feasible(p, 0, 0, budget)) return budget;
}

}  // namespace

ForcingSolver::ForcingSolver(const Torus& torus) : torus_(&torus), bipartite_(is_bipartite(torus.spec())) {
    if (bipartite_) {
        const auto colors = two_coloring(torus);
        black_.assign(colors.begin(), colors.end());
    }
}

int ForcingSolver::number(const Tiling& t) const {
    const CycleProblem p(*torus_, t, bipartite_, black_);
    return minimum(p);
}

std::vector<int> ForcingSolver::witness(const Tiling& t) const {
    const CycleProblem p(*torus_, t, bipartite_, black_);
    const int f = minimum(p);
    Mask chosen = 0;
    int last = -1;
    for (int placed = 0; placed < f; ++placed) {
        int pick = -1;
        for (int x = last + 1; x < p.size() && pick < 0; ++x) {
            const Mask below = bit(x) - 1;
            if (feasible(p, chosen | bit(x), below & ~chosen, f - placed - 1)) pick = x;
        }
        if (pick < 0) throw std::logic_error("forcing: witness construction failed");
        chosen |= bit(pick);
        last = pick;
    }
    std::vector<int> edges;
    for_bits(chosen, [&](int x) { edges.push_back(p.domino(x)); });
    return edges;
}

ForcingResult forcing_number(const Torus& torus, const Tiling& t, const TilingStore& store) {
    const auto idx = store.find(t);
    if (!idx) throw std::invalid_argument("forcing_number: tiling " + t.to_hex() + " is not in the store");
    const ForcingSolver solver(torus);
    ForcingResult r{*idx, 0, solver.witness(t)};
    r.number = static_cast<int>(r.witness.size());

    EdgeSet forced(torus.edge_count());
    for (int e : r.witness) forced.set(e);
    if (!forced.is_subset_of(t) || count_completions(torus, forced, 2) != 1)
        throw VerificationFailure("forcing_number: witness does not force tiling " + t.to_hex());
    return r;
}

std::vector<std::uint8_t> forcing_numbers(const Torus& torus, const TilingStore& store, unsigned threads) {
    const ForcingSolver solver(torus);
    std::vector<std::uint8_t> out(store.size());
    parallel_for(store.size(), threads, [&](std::size_t begin, std::size_t end, unsigned) {
        for (std::size_t i = begin; i < end; ++i) out[i] = static_cast<std::uint8_t>(solver.number(store.tiling(i)));
    });
    return out;
}

int brute_force_forcing_number(const Torus& torus, const Tiling& t) {
    const std::vector<int> dominoes = t.members();
    const int k = static_cast<int>(dominoes.size());
    for (int size = 0; size <= k; ++size) {
        std::vector<int> pick(size);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            EdgeSet s(torus.edge_count());
            for (int i : pick) s.set(dominoes[i]);
            if (count_completions(torus, s, 2) == 1) return size;
            int pos = size - 1;
            while (pos >= 0 && pick[pos] == k - size + pos) --pos;
            if (pos < 0) break;
            ++pick[pos];
            for (int q = pos + 1; q < size; ++q) pick[q] = pick[q - 1] + 1;
        }
    }
    throw std::logic_error("brute_force_forcing_number: tiling is not a perfect matching");
}

std::vector<int> Spectrum::values() const {
    std::vector<int> v;
    for (const auto& [value, count] : counts) v.push_back(value);
    return v;
}

std::vector<int> Spectrum::gaps() const {
    std::vector<int> g;
    if (counts.empty()) return g;
    for (int v = counts.begin()->first; v < counts.rbegin()->first; ++v)
        if (!counts.contains(v)) g.push_back(v);
    return g;
}

std::size_t Spectrum::tilings() const {
    std::size_t total = 0;
    for (const auto& [value, count] : counts) total += count;
    return total;
}

Spectrum spectrum_of(const std::vector<std::uint8_t>& numbers) {
    Spectrum s;
    for (auto f : numbers) ++s.counts[f];
    return s;
}

Spectrum forcing_spectrum(const Torus& torus, std::size_t cap, unsigned threads) {
    const TilingStore store = TilingStore::enumerate(torus, cap);
    return spectrum_of(forcing_numbers(torus, store, threads));
}

bool is_integer_interval(const Spectrum& s) {
    if (s.empty()) throw std::invalid_argument("is_integer_interval: empty spectrum");
    return s.gaps().empty();
}

}  // namespace toroflip
