#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

namespace zerosum {

// Fixed-width set of residues mod n, one bit per residue. The rotate-or is
// the inner kernel of every subset-sum DP here: adding a constant s to every
// element of a residue set is a cyclic shift of the bit pattern.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(uint32_t n) : n_(n), words_((n + 63) / 64, 0) {}

    uint32_t width() const { return n_; }

    bool test(uint32_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(uint32_t i) { words_[i >> 6] |= uint64_t(1) << (i & 63); }
    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    bool any() const {
        for (uint64_t w : words_)
            if (w) return true;
        return false;
    }

    uint32_t count() const {
        uint32_t c = 0;
        for (uint64_t w : words_) c += static_cast<uint32_t>(__builtin_popcountll(w));
        return c;
    }

    Bitset& operator|=(const Bitset& o) {
        assert(o.n_ == n_);
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    bool operator==(const Bitset&) const = default;

    // this |= { (t + s) mod n : t in src }.  src must not alias this.
    void or_rotated(const Bitset& src, uint32_t s) {
        assert(&src != this && src.n_ == n_);
        s %= n_;
        if (s == 0) {
            *this |= src;
            return;
        }
        const uint32_t W = static_cast<uint32_t>(words_.size());
        const uint64_t top_mask =
            (n_ & 63) ? ((uint64_t(1) << (n_ & 63)) - 1) : ~uint64_t(0);
        // non-wrapping part: t -> t+s with t+s < n
        {
            const uint32_t wq = s >> 6, br = s & 63;
            for (uint32_t i = W; i-- > wq;) {
                uint64_t w = src.words_[i - wq] << br;
                if (br && i - wq > 0) w |= src.words_[i - wq - 1] >> (64 - br);
                if (i == W - 1) w &= top_mask;
                words_[i] |= w;
            }
        }
        // wrapping part: t -> t-(n-s) with t >= n-s
        {
            const uint32_t d = n_ - s, wq = d >> 6, br = d & 63;
            for (uint32_t i = 0; i + wq < W; ++i) {
                uint64_t w = src.words_[i + wq] >> br;
                if (br && i + wq + 1 < W) w |= src.words_[i + wq + 1] << (64 - br);
                words_[i] |= w;
            }
        }
    }

    std::vector<uint32_t> to_values() const {
        std::vector<uint32_t> out;
        for (uint32_t v = 0; v < n_; ++v)
            if (test(v)) out.push_back(v);
        return out;
    }

private:
    uint32_t n_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace zerosum
