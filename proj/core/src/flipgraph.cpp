#include "toroflip/flipgraph.hpp"

#include <algorithm>
#include <numeric>

#include "toroflip/parallel.hpp"
#include "toroflip/symmetry.hpp"

namespace toroflip {

namespace {

bool bit(std::span<const Word> t, int e) { return (t[e >> 6] >> (e & 63)) & 1U; }

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
    }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> size_;
};

}  // namespace

bool face_alternates(const Torus& torus, std::span<const Word> t, int f) {
    if (!torus.face_is_proper(f)) return false;
    const Face& face = torus.face(f);
    const bool top = bit(t, face.top()), bottom = bit(t, face.bottom());
    const bool left = bit(t, face.left()), right = bit(t, face.right());
    return (top && bottom && !left && !right) || (left && right && !top && !bottom);
}

void apply_flip(const Torus& torus, std::span<const Word> t, int f, std::span<Word> out) {
    std::copy(t.begin(), t.end(), out.begin());
    for (int e : torus.face(f).edges) out[e >> 6] ^= Word{1} << (e & 63);
}

std::vector<Flip> flips_of(const Torus& torus, const Tiling& t) {
    std::vector<Flip> out;
    for (int f = 0; f < torus.face_count(); ++f) {
        if (!face_alternates(torus, t.words(), f)) continue;
        Tiling next(torus.edge_count());
        apply_flip(torus, t.words(), f, next.words());
        out.push_back({f, std::move(next)});
    }
    return out;
}

int flip_count(const Torus& torus, std::span<const Word> t) {
    int c = 0;
    for (int f = 0; f < torus.face_count(); ++f) c += face_alternates(torus, t, f);
    return c;
}

FlipGraph::FlipGraph(const Torus& torus, const TilingStore& store, bool with_adjacency, unsigned threads)
    : torus_(&torus), store_(&store) {
    if (torus.face_count() > 0xFFFF) throw std::invalid_argument("FlipGraph: too many faces");
    const std::size_t count = store.size();
    const int stride = store.words_per_tiling();
    threads = resolve_threads(threads);

    // per-worker lists of (lower, higher) flip edges
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> edges(threads);
    std::vector<std::uint32_t> degree(with_adjacency ? count : 0);
    parallel_for(count, threads, [&](std::size_t begin, std::size_t end, unsigned w) {
        std::vector<Word> buf(stride);
        for (std::size_t t = begin; t < end; ++t) {
            auto words = store.words(t);
            for (int f = 0; f < torus.face_count(); ++f) {
                if (!face_alternates(torus, words, f)) continue;
                apply_flip(torus, words, f, buf);
                auto hit = store.find(buf);
                if (!hit) throw std::logic_error("FlipGraph: flip leaves the store; store is incomplete");
                if (with_adjacency) ++degree[t];
                if (*hit > t) edges[w].emplace_back(static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(*hit));
            }
        }
    });

    UnionFind uf(count);
    for (const auto& list : edges) {
        edge_count_ += list.size();
        for (auto [a, b] : list) uf.unite(a, b);
    }

    component_.assign(count, 0);
    std::vector<std::uint32_t> root_id(count, UINT32_MAX);
    for (std::size_t t = 0; t < count; ++t) {
        std::uint32_t root = uf.find(static_cast<std::uint32_t>(t));
        if (root_id[root] == UINT32_MAX) {
            root_id[root] = static_cast<std::uint32_t>(components_.size());
            components_.push_back({0, t});
        }
        component_[t] = root_id[root];
        ++components_[root_id[root]].size;
    }

    if (with_adjacency) {
        offsets_.assign(count + 1, 0);
        for (std::size_t t = 0; t < count; ++t) offsets_[t + 1] = offsets_[t] + degree[t];
        adjacency_.resize(offsets_[count]);
        adjacency_faces_.resize(offsets_[count]);
        parallel_for(count, threads, [&](std::size_t begin, std::size_t end, unsigned) {
            std::vector<Word> buf(stride);
            for (std::size_t t = begin; t < end; ++t) {
                auto words = store.words(t);
                std::size_t pos = offsets_[t];
                for (int f = 0; f < torus.face_count(); ++f) {
                    if (!face_alternates(torus, words, f)) continue;
                    apply_flip(torus, words, f, buf);
                    adjacency_[pos] = static_cast<std::uint32_t>(*store.find(buf));
                    adjacency_faces_[pos] = static_cast<std::uint16_t>(f);
                    ++pos;
                }
            }
        });
    }
}

std::size_t FlipGraph::singleton_count() const {
    return static_cast<std::size_t>(
        std::count_if(components_.begin(), components_.end(), [](const ComponentSummary& c) { return c.singleton(); }));
}

std::vector<std::size_t> FlipGraph::sorted_component_sizes() const {
    std::vector<std::size_t> sizes;
    sizes.reserve(components_.size());
    for (const auto& c : components_) sizes.push_back(c.size);
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    return sizes;
}

std::span<const std::uint32_t> FlipGraph::neighbors(std::size_t t) const {
    if (!has_adjacency()) throw std::logic_error("FlipGraph: adjacency was not materialized");
    return {adjacency_.data() + offsets_[t], offsets_[t + 1] - offsets_[t]};
}

std::span<const std::uint16_t> FlipGraph::neighbor_faces(std::size_t t) const {
    if (!has_adjacency()) throw std::logic_error("FlipGraph: adjacency was not materialized");
    return {adjacency_faces_.data() + offsets_[t], offsets_[t + 1] - offsets_[t]};
}

FlipGraph build_flip_graph(const Torus& torus, const TilingStore& store, bool with_adjacency, unsigned threads) {
    return FlipGraph(torus, store, with_adjacency, threads);
}

TwoComponentReport check_two_components(const FlipGraph& graph) {
    const Torus& torus = graph.torus();
    const TilingStore& store = graph.store();
    const auto setup = two_component_setup(torus);

    TwoComponentReport rep;
    rep.spec = torus.spec();
    rep.tilings = graph.tiling_count();
    rep.components = graph.component_count();
    if (rep.components != 2) return rep;
    rep.size_a = graph.components()[0].size;
    rep.size_b = graph.components()[1].size;

    auto i1 = store.find(setup.m1), i2 = store.find(setup.m2);
    rep.m1_m2_separated = i1 && i2 && graph.component_of(*i1) != graph.component_of(*i2);

    // image of every tiling under the swapping automorphism
    const std::size_t count = store.size();
    std::vector<std::uint32_t> image(count);
    std::vector<Word> buf(store.words_per_tiling());
    rep.phi_bijective = true;
    for (std::size_t t = 0; t < count && rep.phi_bijective; ++t) {
        std::fill(buf.begin(), buf.end(), 0);
        auto words = store.words(t);
        for (int e = 0; e < torus.edge_count(); ++e)
            if (bit(words, e)) buf[setup.automorphism.edge[e] >> 6] |= Word{1} << (setup.automorphism.edge[e] & 63);
        auto hit = store.find(buf);
        if (!hit || graph.component_of(*hit) == graph.component_of(t)) rep.phi_bijective = false;
        else image[t] = static_cast<std::uint32_t>(*hit);
    }
    if (rep.phi_bijective) {
        std::vector<bool> hit(count, false);
        for (auto x : image) hit[x] = true;
        rep.phi_bijective = std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    }
    if (rep.phi_bijective && graph.has_adjacency()) {
        rep.phi_preserves_flips = true;
        for (std::size_t t = 0; t < count && rep.phi_preserves_flips; ++t) {
            auto nb = graph.neighbors(t);
            auto image_nb = graph.neighbors(image[t]);
            if (nb.size() != image_nb.size()) {
                rep.phi_preserves_flips = false;
                break;
            }
            for (auto u : nb) {
                if (std::find(image_nb.begin(), image_nb.end(), image[u]) == image_nb.end()) {
                    rep.phi_preserves_flips = false;
                    break;
                }
            }
        }
    }
    return rep;
}

TwoComponentReport verify_two_components(const TorusSpec& spec, std::size_t cap) {
    if (is_bipartite(spec)) throw InvalidSpec("verify_two_components: " + spec.to_string() + " is bipartite");
    Torus torus(spec);
    if (!torus.is_simple()) throw InvalidSpec("verify_two_components: " + spec.to_string() + " is not simple");
    auto store = TilingStore::enumerate(torus, cap);
    FlipGraph graph(torus, store, true);
    auto rep = check_two_components(graph);
    if (!rep.passed()) {
        std::string why = rep.components != 2 ? "component count " + std::to_string(rep.components) + " != 2"
                          : rep.size_a != rep.size_b ? "component sizes differ"
                          : !rep.m1_m2_separated     ? "M1 and M2 share a component"
                          : !rep.phi_bijective       ? "automorphism does not swap the components"
                                                     : "automorphism does not preserve flips";
        throw VerificationFailure("two-component check failed on " + spec.to_string() + ": " + why);
    }
    return rep;
}

// Ladder detection --------------------------------------------------------

namespace {

// For each chain kind, the square adjacent to the current domino where the
// next domino sits, and the side of that next domino it must occupy.
bool next_in_chain(const Torus& torus, const Tiling& t, const std::vector<int>& match, LadderKind kind, int e,
                   int& next) {
    const Edge& ed = torus.edge(e);
    int square = -1;
    bool want_tail = true;
    switch (kind) {
        case LadderKind::horizontal_down_right:
            square = torus.below(ed.head);
            want_tail = true;
            break;
        case LadderKind::horizontal_down_left:
            square = torus.below(ed.tail);
            want_tail = false;
            break;
        case LadderKind::vertical_right_down:
            square = torus.right_of(ed.head);
            want_tail = true;
            break;
        case LadderKind::vertical_right_up:
            square = torus.right_of(ed.tail);
            want_tail = false;
            break;
    }
    const int candidate = match[square];
    const Edge& c = torus.edge(candidate);
    if (c.kind != ed.kind || c.is_loop() || !t.test(candidate)) return false;
    if ((want_tail ? c.tail : c.head) != square) return false;
    next = candidate;
    return true;
}

}  // namespace

std::vector<Ladder> find_ladders(const Torus& torus, const Tiling& t) {
    std::vector<int> match(torus.vertex_count(), -1);
    for (int e : t.members()) {
        match[torus.edge(e).tail] = e;
        match[torus.edge(e).head] = e;
    }
    std::vector<Ladder> out;
    std::set<std::vector<int>> seen;
    const LadderKind kinds[] = {LadderKind::horizontal_down_right, LadderKind::horizontal_down_left,
                                LadderKind::vertical_right_down, LadderKind::vertical_right_up};
    for (LadderKind kind : kinds) {
        const EdgeKind domino_kind = (kind == LadderKind::horizontal_down_right || kind == LadderKind::horizontal_down_left)
                                         ? EdgeKind::horizontal
                                         : EdgeKind::vertical;
        std::vector<bool> used(torus.edge_count(), false);
        for (int start : t.members()) {
            if (torus.edge(start).kind != domino_kind || used[start]) continue;
            std::vector<int> chain{start};
            int cur = start, next = -1;
            bool closed = false;
            while (next_in_chain(torus, t, match, kind, cur, next)) {
                if (next == start) {
                    closed = true;
                    break;
                }
                if (static_cast<int>(chain.size()) > torus.vertex_count()) break;
                chain.push_back(next);
                cur = next;
            }
            if (!closed || chain.size() < 2) continue;
            for (int e : chain) used[e] = true;
            std::vector<int> key = chain;
            std::sort(key.begin(), key.end());
            if (seen.insert(key).second) out.push_back({kind, std::move(chain)});
        }
    }
    return out;
}

LadderSet ladder_set(const Torus& torus, const Tiling& t) {
    LadderSet out;
    for (auto& l : find_ladders(torus, t)) {
        std::sort(l.dominoes.begin(), l.dominoes.end());
        out.insert(std::move(l.dominoes));
    }
    return out;
}

bool same_component_criterion(const HomologyBasis& basis, const Tiling& t1, const Tiling& t2) {
    const Torus& torus = basis.torus();
    if (!is_bipartite(torus.spec()))
        throw NotBipartite("same_component_criterion: " + torus.spec().to_string() + " is not bipartite");
    if (basis.homology_class(tiling_chain(torus, t1) - tiling_chain(torus, t2)) != FluxClass{}) return false;
    return ladder_set(torus, t1) == ladder_set(torus, t2);
}

}  // namespace toroflip
