#pragma once

#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace eds {

// Dense bitset over vertex ids 0..n-1. All iteration is in ascending id order,
// which the rest of the code relies on for deterministic output.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : n_(universe), words_((universe + 63) / 64, 0) {}

    static VertexSet of(std::size_t universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.insert(v);
        return s;
    }

    std::size_t universe() const { return n_; }

    bool contains(int v) const {
        assert(v >= 0 && static_cast<std::size_t>(v) < n_);
        return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
    }

    void insert(int v) {
        assert(v >= 0 && static_cast<std::size_t>(v) < n_);
        words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    }

    void erase(int v) {
        assert(v >= 0 && static_cast<std::size_t>(v) < n_);
        words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    VertexSet& operator-=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && words_ == o.words_; }

    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + static_cast<std::size_t>(__builtin_ctzll(words_[i])));
        return -1;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                int v = static_cast<int>(i * 64 + static_cast<std::size_t>(__builtin_ctzll(w)));
                f(v);
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace eds
