#pragma once

#include <cstdint>
#include <vector>
#include <cassert>

namespace indsat {

// dynamic bitset sized once; rows of an adjacency matrix
struct BitRow {
    int nbits = 0;
    std::vector<uint64_t> w;

    BitRow() = default;
    explicit BitRow(int n) : nbits(n), w((n + 63) / 64, 0) {}

    void set(int i) { w[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(int i) { w[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (uint64_t x : w) c += __builtin_popcountll(x);
        return c;
    }
    bool any() const {
        for (uint64_t x : w) if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    void clear() { for (auto& x : w) x = 0; }

    BitRow& operator&=(const BitRow& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
        return *this;
    }
    BitRow& operator|=(const BitRow& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
        return *this;
    }
    BitRow& operator^=(const BitRow& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] ^= o.w[i];
        return *this;
    }
    // this &= ~o
    BitRow& andnot(const BitRow& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] &= ~o.w[i];
        return *this;
    }

    friend BitRow operator&(BitRow a, const BitRow& b) { a &= b; return a; }
    friend BitRow operator|(BitRow a, const BitRow& b) { a |= b; return a; }

    bool operator==(const BitRow& o) const { return nbits == o.nbits && w == o.w; }

    bool intersects(const BitRow& o) const {
        for (size_t i = 0; i < w.size(); ++i) if (w[i] & o.w[i]) return true;
        return false;
    }

    // least set bit >= from, or -1
    int next(int from = 0) const {
        if (from >= nbits) return -1;
        int blk = from >> 6;
        uint64_t cur = w[blk] & (~uint64_t{0} << (from & 63));
        while (true) {
            if (cur) {
                int b = (blk << 6) + __builtin_ctzll(cur);
                return b < nbits ? b : -1;
            }
            if (++blk >= (int)w.size()) return -1;
            cur = w[blk];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int i = next(0); i >= 0; i = next(i + 1)) out.push_back(i);
        return out;
    }
};

#define INDSAT_FOR_BITS(var, row) \
    for (int var = (row).next(0); var >= 0; var = (row).next(var + 1))

} // namespace indsat
