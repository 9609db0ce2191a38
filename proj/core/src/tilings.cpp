#include "toroflip/tilings.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace toroflip {

bool is_perfect_matching(const Torus& torus, const EdgeSet& edges) {
    if (edges.size() != torus.edge_count()) return false;
    std::vector<int> cover(torus.vertex_count(), 0);
    for (int e : edges.members()) {
        const Edge& ed = torus.edge(e);
        if (ed.is_loop()) return false;
        ++cover[ed.tail];
        ++cover[ed.head];
    }
    return std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
}

namespace {

class MatchingSearch {
public:
    MatchingSearch(const Torus& torus, const EdgeSet& forbidden,
                   const std::function<bool(const EdgeSet&)>& visit)
        : torus_(torus), forbidden_(forbidden), visit_(visit), covered_(torus.vertex_count(), 0),
          current_(torus.edge_count()) {}

    bool preselect(const EdgeSet& forced) {
        for (int e : forced.members()) {
            const Edge& ed = torus_.edge(e);
            if (ed.is_loop() || covered_[ed.tail] || covered_[ed.head]) return false;
            covered_[ed.tail] = covered_[ed.head] = 1;
            current_.set(e);
        }
        return true;
    }

    std::size_t run() {
        search(0);
        return visited_;
    }

private:
    // returns false when the visitor asked to stop
    bool search(int from) {
        int v = from;
        const int nv = torus_.vertex_count();
        while (v < nv && covered_[v]) ++v;
        if (v == nv) {
            ++visited_;
            return visit_(current_);
        }
        covered_[v] = 1;
        const auto& inc = torus_.incident(v);
        for (std::size_t k = 0; k < inc.size(); ++k) {
            int e = inc[k];
            if (k > 0 && inc[k - 1] == e) continue;  // loop listed twice
            const Edge& ed = torus_.edge(e);
            if (ed.is_loop() || forbidden_.test(e)) continue;
            int w = ed.tail == v ? ed.head : ed.tail;
            if (covered_[w]) continue;
            covered_[w] = 1;
            current_.set(e);
            bool go_on = search(v + 1);
            current_.reset(e);
            covered_[w] = 0;
            if (!go_on) {
                covered_[v] = 0;
                return false;
            }
        }
        covered_[v] = 0;
        return true;
    }

    const Torus& torus_;
    const EdgeSet& forbidden_;
    const std::function<bool(const EdgeSet&)>& visit_;
    std::vector<char> covered_;
    EdgeSet current_;
    std::size_t visited_ = 0;
};

std::uint64_t mix(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

}  // namespace

std::size_t for_each_matching(const Torus& torus, const EdgeSet& forced, const EdgeSet& forbidden,
                              const std::function<bool(const EdgeSet&)>& visit) {
    MatchingSearch search(torus, forbidden, visit);
    if (!search.preselect(forced)) return 0;
    return search.run();
}

std::size_t count_completions(const Torus& torus, const EdgeSet& forced, std::size_t limit) {
    std::size_t found = 0;
    EdgeSet none(torus.edge_count());
    for_each_matching(torus, forced, none, [&](const EdgeSet&) { return ++found < limit; });
    return found;
}

TilingStore::TilingStore(TorusSpec spec, int edge_count)
    : spec_(spec), edge_count_(edge_count), stride_(words_for(edge_count)) {
    rehash(1024);
}

TilingStore TilingStore::enumerate(const Torus& torus, std::size_t cap) {
    TilingStore store(torus.spec(), torus.edge_count());
    EdgeSet none(torus.edge_count());
    for_each_matching(torus, none, none, [&](const EdgeSet& t) {
        if (store.size() >= cap)
            throw StoreOverflow(torus.spec().to_string() + " has more than " + std::to_string(cap) +
                                " tilings");
        store.insert(t.words());
        return true;
    });
    return store;
}

std::uint64_t TilingStore::hash(std::span<const Word> key) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (Word w : key) h = mix(h ^ w) + 0x9e3779b97f4a7c15ULL;
    return h;
}

bool TilingStore::equals(std::size_t idx, std::span<const Word> key) const {
    return std::equal(key.begin(), key.end(), data_.begin() + idx * stride_);
}

void TilingStore::rehash(std::size_t capacity) {
    slots_.assign(capacity, 0);
    const std::size_t maskv = capacity - 1;
    for (std::size_t idx = 0; idx < count_; ++idx) {
        std::size_t s = hash(words(idx)) & maskv;
        while (slots_[s]) s = (s + 1) & maskv;
        slots_[s] = static_cast<std::uint32_t>(idx + 1);
    }
}

std::optional<std::size_t> TilingStore::find(std::span<const Word> key) const {
    const std::size_t maskv = slots_.size() - 1;
    std::size_t s = hash(key) & maskv;
    while (std::uint32_t slot = slots_[s]) {
        if (equals(slot - 1, key)) return slot - 1;
        s = (s + 1) & maskv;
    }
    return std::nullopt;
}

std::pair<std::size_t, bool> TilingStore::insert(std::span<const Word> key) {
    if (static_cast<int>(key.size()) != stride_) throw std::invalid_argument("TilingStore::insert: bad width");
    if (auto hit = find(key)) return {*hit, false};
    if (count_ >= 0xFFFFFFFEULL) throw StoreOverflow("TilingStore: index space exhausted");
    if (2 * (count_ + 1) > slots_.size()) rehash(slots_.size() * 2);
    data_.insert(data_.end(), key.begin(), key.end());
    const std::size_t idx = count_++;
    const std::size_t maskv = slots_.size() - 1;
    std::size_t s = hash(key) & maskv;
    while (slots_[s]) s = (s + 1) & maskv;
    slots_[s] = static_cast<std::uint32_t>(idx + 1);
    return {idx, true};
}

Tiling phi(const Torus& torus, const Tiling& t) {
    Tiling out(torus.edge_count());
    for (int e : t.members()) out.set(torus.shift_edge(e));
    return out;
}

std::pair<Tiling, Tiling> canonical_horizontal(const Torus& torus) {
    const auto& s = torus.spec();
    if (s.m % 2 != 0) throw InvalidSpec("canonical_horizontal: m must be even for " + s.to_string());
    Tiling m1(torus.edge_count()), m2(torus.edge_count());
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.m; ++j) (j % 2 == 0 ? m1 : m2).set(torus.horizontal_edge(i, j));
    return {std::move(m1), std::move(m2)};
}

Tiling base_tiling(const Torus& torus) { return canonical_horizontal(torus).first; }

}  // namespace toroflip
