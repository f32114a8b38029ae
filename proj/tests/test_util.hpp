#ifndef DEGEMBED_TEST_UTIL_HPP
#define DEGEMBED_TEST_UTIL_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "degembed/graph.hpp"

// Brute-force reference implementations for the tests. Everything here is
// deliberately dumb and independent of the library's search paths.
namespace test_util {

/// Degree multisets (sorted ascending) of all labeled graphs on n vertices.
inline std::set<std::vector<int>> graphic_multisets(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    std::set<std::vector<int>> out;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::vector<int> deg(n, 0);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (mask >> i & 1) {
                ++deg[pairs[i].first];
                ++deg[pairs[i].second];
            }
        }
        std::sort(deg.begin(), deg.end());
        out.insert(std::move(deg));
    }
    return out;
}

/// Exhaustive search: does any simple graph have exactly these degrees?
/// Satisfies the lowest open vertex by pairing it with subsets of the
/// higher open vertices.
inline bool degrees_realizable(std::vector<int> residual) {
    int u = -1;
    const int n = static_cast<int>(residual.size());
    for (int v = 0; v < n; ++v) {
        if (residual[v] < 0) return false;
        if (residual[v] > 0 && u == -1) u = v;
    }
    if (u == -1) return true;
    std::vector<int> open;
    for (int w = u + 1; w < n; ++w) {
        if (residual[w] > 0) open.push_back(w);
    }
    const int need = residual[u];
    if (static_cast<int>(open.size()) < need) return false;
    std::vector<int> pick;
    std::function<bool(int, int)> choose = [&](int depth, int from) -> bool {
        if (depth == need) {
            std::vector<int> next = residual;
            next[u] = 0;
            for (int w : pick) --next[w];
            return degrees_realizable(std::move(next));
        }
        for (int i = from; i < static_cast<int>(open.size()); ++i) {
            pick.push_back(open[i]);
            if (choose(depth + 1, i + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    return choose(0, 0);
}

/// Every multiset of length n over [0, max_value], ascending.
inline void for_each_multiset(int n, int max_value,
                              const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> cur(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int low) {
        if (pos == n) {
            fn(cur);
            return;
        }
        for (int v = low; v <= max_value; ++v) {
            cur[pos] = v;
            rec(pos + 1, v);
        }
    };
    rec(0, 0);
}

/// Plain injection enumeration: tries every assignment of pattern vertices to
/// distinct host vertices in natural order. No ordering heuristics, no
/// pruning beyond edge validity.
inline bool brute_embeds(const degembed::SimpleGraph& pattern, const degembed::SimpleGraph& host) {
    const int k = pattern.num_vertices();
    const int n = host.num_vertices();
    if (k > n) return false;
    std::vector<int> image(k, -1);
    std::vector<char> used(n, 0);
    std::function<bool(int)> rec = [&](int v) -> bool {
        if (v == k) return true;
        for (int c = 0; c < n; ++c) {
            if (used[c]) continue;
            bool ok = true;
            for (int w : pattern.neighbors(v)) {
                if (w < v && !host.has_edge(c, image[w])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[v] = c;
            used[c] = 1;
            if (rec(v + 1)) return true;
            image[v] = -1;
            used[c] = 0;
        }
        return false;
    };
    return rec(0);
}

/// Random graph from raw 64-bit state; small linear congruential stream kept
/// separate from the library generator on purpose.
struct TinyRand {
    std::uint64_t state;
    explicit TinyRand(std::uint64_t s) : state(s ^ 0x9E3779B97F4A7C15ULL) {}
    std::uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 16;
    }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
    bool coin(double p) { return (next() % 1000000) < p * 1000000; }
};

inline degembed::SimpleGraph random_graph(int n, double p, std::uint64_t seed) {
    degembed::SimpleGraph g(n);
    TinyRand rng(seed);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.coin(p)) g.add_edge(u, v);
        }
    }
    return g;
}

}  // namespace test_util

#endif  // DEGEMBED_TEST_UTIL_HPP
