#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace toroflip {

using Word = std::uint64_t;

inline int words_for(int bits) { return (bits + 63) / 64; }

// Fixed-width bit set over edge indices. A tiling is an EdgeSet that covers
// every vertex exactly once.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(int size) : size_(size), words_(words_for(size), 0) {}
    EdgeSet(int size, std::span<const Word> words);

    int size() const { return size_; }
    std::span<const Word> words() const { return words_; }
    std::span<Word> words() { return words_; }

    bool test(int e) const { return (words_[e >> 6] >> (e & 63)) & 1U; }
    void set(int e) { words_[e >> 6] |= Word{1} << (e & 63); }
    void reset(int e) { words_[e >> 6] &= ~(Word{1} << (e & 63)); }
    void flip(int e) { words_[e >> 6] ^= Word{1} << (e & 63); }

    int count() const;
    bool empty() const { return count() == 0; }
    std::vector<int> members() const;

    EdgeSet& operator|=(const EdgeSet& o);
    EdgeSet& operator&=(const EdgeSet& o);
    EdgeSet& operator^=(const EdgeSet& o);
    friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
    friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }
    friend EdgeSet operator^(EdgeSet a, const EdgeSet& b) { return a ^= b; }
    bool is_subset_of(const EdgeSet& o) const;

    friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
    friend std::strong_ordering operator<=>(const EdgeSet& a, const EdgeSet& b);

    // Big-endian hex of the bit vector, most significant edge first, padded
    // to ceil(size / 4) digits. Edge 0 is the least significant bit.
    std::string to_hex() const;
    static EdgeSet from_hex(int size, std::string_view hex);

private:
    int size_ = 0;
    std::vector<Word> words_;
};

using Tiling = EdgeSet;

}  // namespace toroflip
