#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ecdlab {

// Fixed-universe bit set over vertex labels 0..n-1.
// Membership, union, intersection and emptiness checks are word operations.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe) : n_(universe) {
        if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
        words_.assign(word_count(universe), 0);
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.add(v);
        return s;
    }

    static VertexSet of(int universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.add(v);
        return s;
    }

    static VertexSet from_vector(int universe, const std::vector<int>& vs) {
        VertexSet s(universe);
        for (int v : vs) s.add(v);
        return s;
    }

    int universe() const { return n_; }

    bool contains(int v) const {
        check(v);
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }

    void add(int v) {
        check(v);
        words_[v >> 6] |= std::uint64_t(1) << (v & 63);
    }

    void remove(int v) {
        check(v);
        words_[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
    }

    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }

    bool intersects(const VertexSet& o) const {
        same(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        same(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& o) {
        same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    VertexSet& operator-=(const VertexSet& o) {
        same(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    VertexSet complement() const {
        VertexSet r(n_);
        for (int v = 0; v < n_; ++v)
            if (!contains(v)) r.add(v);
        return r;
    }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && words_ == o.words_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    // first member, or -1 when empty
    int first() const { return next(-1); }

    // smallest member greater than v, or -1
    int next(int v) const {
        int start = v + 1;
        if (start >= n_) return -1;
        std::size_t wi = std::size_t(start) >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t(0) << (start & 63));
        while (true) {
            if (w) {
                int r = int(wi * 64) + __builtin_ctzll(w);
                return r < n_ ? r : -1;
            }
            if (++wi >= words_.size()) return -1;
            w = words_[wi];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> r;
        r.reserve(count());
        for (int v = first(); v >= 0; v = next(v)) r.push_back(v);
        return r;
    }

    // lexicographic order of the sorted member sequences
    bool operator<(const VertexSet& o) const {
        int a = first(), b = o.first();
        while (a >= 0 && b >= 0) {
            if (a != b) return a < b;
            a = next(a);
            b = o.next(b);
        }
        return a < 0 && b >= 0;
    }

    std::string to_string() const {
        std::string s = "{";
        bool sep = false;
        for (int v = first(); v >= 0; v = next(v)) {
            if (sep) s += ",";
            s += std::to_string(v);
            sep = true;
        }
        return s + "}";
    }

private:
    static std::size_t word_count(int n) { return std::size_t(n + 63) / 64; }

    void check(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("VertexSet: vertex " + std::to_string(v) + " outside universe of size " + std::to_string(n_));
    }

    void same(const VertexSet& o) const {
        if (n_ != o.n_) throw std::invalid_argument("VertexSet: universe mismatch");
    }

    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace ecdlab
