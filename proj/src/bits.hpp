#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

namespace bcast::detail {

// Fixed-width vertex set, W 64-bit words.
template <int W>
struct Bits {
    std::array<std::uint64_t, W> w{};

    void set(int i) { w[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w[static_cast<std::size_t>(i >> 6)] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }
    bool any() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bits operator&(const Bits& o) const {
        Bits r;
        for (int i = 0; i < W; ++i) r.w[i] = w[i] & o.w[i];
        return r;
    }
    Bits operator|(const Bits& o) const {
        Bits r;
        for (int i = 0; i < W; ++i) r.w[i] = w[i] | o.w[i];
        return r;
    }
    Bits without(const Bits& o) const {
        Bits r;
        for (int i = 0; i < W; ++i) r.w[i] = w[i] & ~o.w[i];
        return r;
    }
    Bits& operator|=(const Bits& o) {
        for (int i = 0; i < W; ++i) w[i] |= o.w[i];
        return *this;
    }
    bool intersects(const Bits& o) const {
        for (int i = 0; i < W; ++i)
            if (w[i] & o.w[i]) return true;
        return false;
    }
    bool operator==(const Bits&) const = default;

    template <class F>
    void for_each(F&& f) const {
        for (int i = 0; i < W; ++i) {
            std::uint64_t x = w[i];
            while (x) {
                int b = std::countr_zero(x);
                f(i * 64 + b);
                x &= x - 1;
            }
        }
    }

    std::size_t hash() const {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (auto x : w) h = (h ^ x) * 0x100000001b3ULL + (h >> 29);
        return h;
    }
};

// Dinic max-flow on a small dense network.
class MaxFlow {
public:
    explicit MaxFlow(int n) : head_(static_cast<std::size_t>(n), -1), level_(static_cast<std::size_t>(n)), it_(static_cast<std::size_t>(n)) {}

    void add(int a, int b, long long cap) {
        edges_.push_back({b, head_[static_cast<std::size_t>(a)], cap});
        head_[static_cast<std::size_t>(a)] = static_cast<int>(edges_.size()) - 1;
        edges_.push_back({a, head_[static_cast<std::size_t>(b)], 0});
        head_[static_cast<std::size_t>(b)] = static_cast<int>(edges_.size()) - 1;
    }

    long long run(int s, int t) {
        long long total = 0;
        while (bfs(s, t)) {
            it_ = head_;
            while (long long f = push(s, t, std::numeric_limits<long long>::max())) total += f;
        }
        return total;
    }

private:
    struct Edge {
        int to;
        int next;
        long long cap;
    };

    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::vector<int> queue{s};
        level_[static_cast<std::size_t>(s)] = 0;
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (int e = head_[static_cast<std::size_t>(queue[i])]; e >= 0; e = edges_[static_cast<std::size_t>(e)].next) {
                const Edge& ed = edges_[static_cast<std::size_t>(e)];
                if (ed.cap > 0 && level_[static_cast<std::size_t>(ed.to)] < 0) {
                    level_[static_cast<std::size_t>(ed.to)] = level_[static_cast<std::size_t>(queue[i])] + 1;
                    queue.push_back(ed.to);
                }
            }
        return level_[static_cast<std::size_t>(t)] >= 0;
    }

    long long push(int v, int t, long long limit) {
        if (v == t) return limit;
        for (int& e = it_[static_cast<std::size_t>(v)]; e >= 0; e = edges_[static_cast<std::size_t>(e)].next) {
            Edge& ed = edges_[static_cast<std::size_t>(e)];
            if (ed.cap <= 0 || level_[static_cast<std::size_t>(ed.to)] != level_[static_cast<std::size_t>(v)] + 1) continue;
            if (long long f = push(ed.to, t, std::min(limit, ed.cap))) {
                ed.cap -= f;
                edges_[static_cast<std::size_t>(e ^ 1)].cap += f;
                return f;
            }
        }
        return 0;
    }

    std::vector<int> head_;
    std::vector<int> level_;
    std::vector<int> it_;
    std::vector<Edge> edges_;
};

}  // namespace bcast::detail
