#include "toroflip/edge_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace toroflip {

EdgeSet::EdgeSet(int size, std::span<const Word> words) : size_(size), words_(words.begin(), words.end()) {
    if (static_cast<int>(words_.size()) != words_for(size))
        throw std::invalid_argument("EdgeSet: word count does not match size");
}

int EdgeSet::count() const {
    int c = 0;
    for (Word w : words_) c += std::popcount(w);
    return c;
}

std::vector<int> EdgeSet::members() const {
    std::vector<int> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
        Word w = words_[k];
        while (w) {
            out.push_back(static_cast<int>(k * 64) + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

EdgeSet& EdgeSet::operator|=(const EdgeSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
}

EdgeSet& EdgeSet::operator&=(const EdgeSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
}

EdgeSet& EdgeSet::operator^=(const EdgeSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
    return *this;
}

bool EdgeSet::is_subset_of(const EdgeSet& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
        if (words_[k] & ~o.words_[k]) return false;
    return true;
}

std::strong_ordering operator<=>(const EdgeSet& a, const EdgeSet& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.words_.begin(), a.words_.end(), b.words_.begin(),
                                                  b.words_.end());
}

std::string EdgeSet::to_hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    const int nibbles = std::max(1, (size_ + 3) / 4);
    std::string out(nibbles, '0');
    for (int k = 0; k < nibbles; ++k) {
        int bit = 4 * k;
        Word w = words_.empty() ? 0 : words_[bit >> 6];
        out[nibbles - 1 - k] = digits[(w >> (bit & 63)) & 0xF];
    }
    return out;
}

EdgeSet EdgeSet::from_hex(int size, std::string_view hex) {
    if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
    EdgeSet s(size);
    int bit = 0;
    for (auto it = hex.rbegin(); it != hex.rend(); ++it, bit += 4) {
        char c = *it;
        int v;
        if (c >= '0' && c <= '9') v = c - '0';
        else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
        else throw std::invalid_argument("EdgeSet::from_hex: bad digit '" + std::string(1, c) + "'");
        for (int b = 0; b < 4; ++b) {
            if (!((v >> b) & 1)) continue;
            if (bit + b >= size) throw std::invalid_argument("EdgeSet::from_hex: value wider than edge count");
            s.set(bit + b);
        }
    }
    return s;
}

}  // namespace toroflip
