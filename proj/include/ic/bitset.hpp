#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ic {

// Dense vertex set over ids 0..127. Two inline words, no allocation;
// the toolkit's configured vertex cap never exceeds this.
class VertexSet {
public:
    static constexpr int capacity = 128;

    VertexSet() = default;

    static VertexSet range(int n) {
        VertexSet s;
        for (int i = 0; i < n; ++i) s.add(i);
        return s;
    }

    static VertexSet single(int v) {
        VertexSet s;
        s.add(v);
        return s;
    }

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    void add(int v) { w_[word(v)] |= bit(v); }
    void remove(int v) { w_[word(v)] &= ~bit(v); }
    bool contains(int v) const { return (w_[word(v)] & bit(v)) != 0; }

    int count() const {
        return std::popcount(w_[0]) + std::popcount(w_[1]);
    }
    bool empty() const { return w_[0] == 0 && w_[1] == 0; }

    // Smallest member; -1 when empty. Id order is the total order on vertices.
    int min() const {
        if (w_[0]) return std::countr_zero(w_[0]);
        if (w_[1]) return 64 + std::countr_zero(w_[1]);
        return -1;
    }
    int max() const {
        if (w_[1]) return 127 - std::countl_zero(w_[1]);
        if (w_[0]) return 63 - std::countl_zero(w_[0]);
        return -1;
    }

    bool subset_of(const VertexSet& o) const {
        return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
    }
    bool intersects(const VertexSet& o) const {
        return (w_[0] & o.w_[0]) != 0 || (w_[1] & o.w_[1]) != 0;
    }

    VertexSet& operator|=(const VertexSet& o) { w_[0] |= o.w_[0]; w_[1] |= o.w_[1]; return *this; }
    VertexSet& operator&=(const VertexSet& o) { w_[0] &= o.w_[0]; w_[1] &= o.w_[1]; return *this; }
    VertexSet& operator-=(const VertexSet& o) { w_[0] &= ~o.w_[0]; w_[1] &= ~o.w_[1]; return *this; }
    VertexSet& operator^=(const VertexSet& o) { w_[0] ^= o.w_[0]; w_[1] ^= o.w_[1]; return *this; }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) = default;

    template <typename F>
    void for_each(F&& f) const {
        for (int wi = 0; wi < 2; ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                int b = std::countr_zero(w);
                f(wi * 64 + b);
                w &= w - 1;
            }
        }
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    bool any_above(int v) const {
        if (v < 63) {
            if (w_[0] >> (v + 1)) return true;
            return w_[1] != 0;
        }
        if (v == 63) return w_[1] != 0;
        if (v < 127) return (w_[1] >> ((v & 63) + 1)) != 0;
        return false;
    }

    // Members sorted ascending, compared lexicographically: the vertex order
    // lifted to sets. A proper sorted prefix precedes its extensions.
    static int compare(const VertexSet& a, const VertexSet& b) {
        if (a == b) return 0;
        int m = (a ^ b).min();
        if (a.contains(m)) return b.any_above(m) ? -1 : 1;
        return a.any_above(m) ? 1 : -1;
    }
    friend bool operator<(const VertexSet& a, const VertexSet& b) { return compare(a, b) < 0; }

    std::uint64_t word0() const { return w_[0]; }
    std::uint64_t word1() const { return w_[1]; }

    std::size_t hash() const {
        std::uint64_t h = w_[0] * 0x9e3779b97f4a7c15ULL;
        h ^= w_[1] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }

    std::string str() const {
        std::string s = "{";
        bool first = true;
        for_each([&](int v) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        });
        s += "}";
        return s;
    }

private:
    static int word(int v) { return v >> 6; }
    static std::uint64_t bit(int v) { return 1ULL << (v & 63); }

    std::array<std::uint64_t, 2> w_{0, 0};
};

}  // namespace ic

template <>
struct std::hash<ic::VertexSet> {
    std::size_t operator()(const ic::VertexSet& s) const { return s.hash(); }
};
