#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "core/error.hpp"

namespace kset {

// Subset of group elements, bit-indexed over 0..universe-1.
class ElementSet {
public:
    ElementSet() : universe_(0) {}

    explicit ElementSet(int32_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {
        if (universe < 0) throw Error(ErrorKind::Range, "negative universe");
    }

    static ElementSet single(int32_t universe, int32_t i) {
        ElementSet s(universe);
        s.insert(i);
        return s;
    }

    // Low 'universe' bits of 'mask' become the members (universe <= 32).
    static ElementSet from_mask(int32_t universe, uint32_t mask) {
        ElementSet s(universe);
        while (mask) {
            s.insert(std::countr_zero(mask));
            mask &= mask - 1;
        }
        return s;
    }

    int32_t universe() const { return universe_; }

    void insert(int32_t i) {
        check(i);
        words_[i >> 6] |= uint64_t(1) << (i & 63);
    }

    bool contains(int32_t i) const {
        check(i);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    int32_t size() const {
        int32_t n = 0;
        for (uint64_t w : words_) n += std::popcount(w);
        return n;
    }

    bool empty() const {
        for (uint64_t w : words_)
            if (w) return false;
        return true;
    }

    std::vector<int32_t> to_vector() const {
        std::vector<int32_t> out;
        out.reserve(size());
        for (size_t wi = 0; wi < words_.size(); ++wi) {
            uint64_t w = words_[wi];
            while (w) {
                out.push_back(int32_t(wi * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    bool is_subset_of(const ElementSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const ElementSet& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    void unite(const ElementSet& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    }

    friend bool operator==(const ElementSet& a, const ElementSet& b) {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }

private:
    void check(int32_t i) const {
        if (i < 0 || i >= universe_) throw Error(ErrorKind::Range, "element index out of range");
    }

    int32_t universe_;
    std::vector<uint64_t> words_;
};

} // namespace kset
