// Open-addressing hash multiset of fixed-width int64 keys.
// A key is W words; slot word 1 (a reduced denominator, always >= 1) is 0 for empty slots.
#ifndef XRATIO_KEYTABLE_H
#define XRATIO_KEYTABLE_H

#include <cstdint>
#include <cstring>
#include <vector>

namespace xratio {

static inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

static inline uint64_t hash_words(const int64_t* k, int w) {
    uint64_t h = 0x243f6a8885a308d3ULL;
    for (int i = 0; i < w; ++i) h = mix64(h ^ (uint64_t)k[i]);
    return h;
}

// Partition selector; uses bits disjoint from the slot index bits.
static inline int64_t key_pass(const int64_t* k, int w, int64_t passes) {
    if (passes <= 1) return 0;
    return (int64_t)((hash_words(k, w) >> 40) % (uint64_t)passes);
}

static inline int64_t gcd64(int64_t a, int64_t b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Reduce num/den (den != 0) to lowest terms with den > 0, written to out[0..1].
static inline void reduce_frac(int64_t num, int64_t den, int64_t* out) {
    int64_t g = gcd64(num, den);
    if (den < 0) g = -g;
    out[0] = num / g;
    out[1] = den / g;
}

class KeyTable {
  public:
    explicit KeyTable(int width = 2) : w_(width), size_(0), mask_(0) { rehash(1024); }

    // Insert one occurrence of key; returns true when the key is new.
    bool add(const int64_t* key) {
        if ((size_ + 1) * 2 > cap()) rehash(cap() * 2);
        uint64_t i = hash_words(key, w_) & mask_;
        for (;;) {
            int64_t* slot = &keys_[i * w_];
            if (slot[1] == 0) {
                std::memcpy(slot, key, sizeof(int64_t) * w_);
                counts_[i] = 1;
                ++size_;
                return true;
            }
            if (std::memcmp(slot, key, sizeof(int64_t) * w_) == 0) {
                ++counts_[i];
                return false;
            }
            i = (i + 1) & mask_;
        }
    }

    int64_t size() const { return (int64_t)size_; }
    int width() const { return w_; }

    // Sum over distinct keys of multiplicity squared.
    int64_t sum_sq() const {
        int64_t s = 0;
        for (uint64_t i = 0; i < cap(); ++i)
            if (keys_[i * w_ + 1] != 0) s += counts_[i] * counts_[i];
        return s;
    }

    int64_t total() const {
        int64_t s = 0;
        for (uint64_t i = 0; i < cap(); ++i)
            if (keys_[i * w_ + 1] != 0) s += counts_[i];
        return s;
    }

    // Copy distinct keys (row-major, size() x width) and optionally their counts.
    void dump(int64_t* out_keys, int64_t* out_counts) const {
        int64_t row = 0;
        for (uint64_t i = 0; i < cap(); ++i) {
            if (keys_[i * w_ + 1] == 0) continue;
            std::memcpy(out_keys + row * w_, &keys_[i * w_], sizeof(int64_t) * w_);
            if (out_counts) out_counts[row] = counts_[i];
            ++row;
        }
    }

  private:
    uint64_t cap() const { return mask_ + 1; }

    void rehash(uint64_t new_cap) {
        std::vector<int64_t> old_keys;
        std::vector<int64_t> old_counts;
        old_keys.swap(keys_);
        old_counts.swap(counts_);
        uint64_t old_cap = old_counts.size();
        keys_.assign(new_cap * w_, 0);
        counts_.assign(new_cap, 0);
        mask_ = new_cap - 1;
        for (uint64_t j = 0; j < old_cap; ++j) {
            const int64_t* k = &old_keys[j * w_];
            if (k[1] == 0) continue;
            uint64_t i = hash_words(k, w_) & mask_;
            while (keys_[i * w_ + 1] != 0) i = (i + 1) & mask_;
            std::memcpy(&keys_[i * w_], k, sizeof(int64_t) * w_);
            counts_[i] = old_counts[j];
        }
    }

    int w_;
    uint64_t size_;
    uint64_t mask_;
    std::vector<int64_t> keys_;
    std::vector<int64_t> counts_;
};

}  // namespace xratio

#endif
