#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace cluco {

using VertexId = int;

/// Fixed-capacity set of vertex identities backed by 64-bit words.
/// All binary operations require both operands to share a capacity.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int capacity)
        : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

    static VertexSet of(int capacity, std::initializer_list<VertexId> ids) {
        VertexSet s(capacity);
        for (VertexId v : ids) s.set(v);
        return s;
    }

    static VertexSet full(int capacity) {
        VertexSet s(capacity);
        for (int v = 0; v < capacity; ++v) s.set(v);
        return s;
    }

    int capacity() const { return capacity_; }

    bool test(VertexId v) const {
        assert(v >= 0 && v < capacity_);
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }

    void set(VertexId v) {
        assert(v >= 0 && v < capacity_);
        words_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void reset(VertexId v) {
        assert(v >= 0 && v < capacity_);
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    /// Smallest member, or -1 when empty.
    VertexId first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    /// Smallest member strictly greater than v, or -1.
    VertexId next(VertexId v) const {
        int i = (v + 1) >> 6;
        if (i >= static_cast<int>(words_.size())) return -1;
        std::uint64_t w = words_[i] & ~((std::uint64_t{1} << ((v + 1) & 63)) - 1);
        if ((v + 1) % 64 == 0) w = words_[i];
        while (true) {
            if (w) return i * 64 + std::countr_zero(w);
            if (++i >= static_cast<int>(words_.size())) return -1;
            w = words_[i];
        }
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                f(static_cast<VertexId>(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<VertexId> to_vector() const {
        std::vector<VertexId> out;
        out.reserve(count());
        for_each([&](VertexId v) { out.push_back(v); });
        return out;
    }

    bool intersects(const VertexSet& o) const {
        assert(capacity_ == o.capacity_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        assert(capacity_ == o.capacity_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    VertexSet& operator&=(const VertexSet& o) {
        assert(capacity_ == o.capacity_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    VertexSet& operator|=(const VertexSet& o) {
        assert(capacity_ == o.capacity_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        assert(capacity_ == o.capacity_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet& o) const {
        return capacity_ == o.capacity_ && words_ == o.words_;
    }

private:
    int capacity_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace cluco
