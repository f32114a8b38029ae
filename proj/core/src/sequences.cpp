#include "degembed/sequences.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "degembed/errors.hpp"

namespace degembed {

int DegreeSequence::max_degree() const {
    int best = 0;
    for (int d : degrees) best = std::max(best, d);
    return best;
}

long long DegreeSequence::sum() const {
    return std::accumulate(degrees.begin(), degrees.end(), 0LL);
}

long long BipartiteDemand::sum_a() const {
    return std::accumulate(side_a.begin(), side_a.end(), 0LL);
}

long long BipartiteDemand::sum_b() const {
    return std::accumulate(side_b.begin(), side_b.end(), 0LL);
}

int BipartiteDemand::max_entry() const {
    int best = 0;
    for (int x : side_a) best = std::max(best, x);
    for (int x : side_b) best = std::max(best, x);
    return best;
}

long long IntSequence::sum() const {
    return std::accumulate(values.begin(), values.end(), 0LL);
}

bool is_graphic(const DegreeSequence& seq) {
    const int n = seq.size();
    if (n == 0) return true;
    std::vector<long long> d(seq.degrees.begin(), seq.degrees.end());
    for (long long x : d) {
        if (x < 0 || x >= n) return false;
    }
    std::sort(d.begin(), d.end(), std::greater<>());
    long long total = std::accumulate(d.begin(), d.end(), 0LL);
    if (total % 2 != 0) return false;

    // Erdos-Gallai: sum of the k largest <= k(k-1) + sum_{i>k} min(d_i, k).
    std::vector<long long> prefix(n + 1, 0);
    for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + d[i];
    for (int k = 1; k <= n; ++k) {
        long long rhs = static_cast<long long>(k) * (k - 1);
        for (int i = k; i < n; ++i) rhs += std::min<long long>(d[i], k);
        if (prefix[k] > rhs) return false;
    }
    return true;
}

SimpleGraph realize_graphic(const DegreeSequence& seq) {
    if (!is_graphic(seq)) {
        throw NotGraphicError("sequence is not graphic");
    }
    const int n = seq.size();
    SimpleGraph g(n);
    std::vector<int> residual = seq.degrees;

    for (int round = 0; round < n; ++round) {
        int v = -1;
        for (int u = 0; u < n; ++u) {
            if (residual[u] > 0 && (v == -1 || residual[u] > residual[v])) v = u;
        }
        if (v == -1) break;

        std::vector<int> targets;
        for (int u = 0; u < n; ++u) {
            if (u != v && residual[u] > 0) targets.push_back(u);
        }
        std::stable_sort(targets.begin(), targets.end(),
                         [&](int a, int b) { return residual[a] > residual[b]; });
        if (static_cast<int>(targets.size()) < residual[v]) {
            throw NotGraphicError("sequence is not graphic");
        }
        const int need = residual[v];
        for (int i = 0; i < need; ++i) {
            g.add_edge(v, targets[i]);
            --residual[targets[i]];
        }
        residual[v] = 0;
    }
    return g;
}

bool ffactor_condition_holds(const BipartiteDemand& demand) {
    const int s = static_cast<int>(demand.side_a.size());
    const int t = static_cast<int>(demand.side_b.size());
    if (s + t > 22) {
        throw BudgetExceededError("subset-pair scan over 2^" + std::to_string(s + t) +
                                  " pairs exceeds the 2^22 budget");
    }
    // Without equal sums no subgraph can meet the demand on both sides.
    if (demand.sum_a() != demand.sum_b()) return false;

    const long long f_b = demand.sum_b();
    std::vector<long long> sum_a(1ULL << s, 0), sum_b(1ULL << t, 0);
    for (unsigned mask = 1; mask < (1u << s); ++mask) {
        const int low = __builtin_ctz(mask);
        sum_a[mask] = sum_a[mask & (mask - 1)] + demand.side_a[low];
    }
    for (unsigned mask = 1; mask < (1u << t); ++mask) {
        const int low = __builtin_ctz(mask);
        sum_b[mask] = sum_b[mask & (mask - 1)] + demand.side_b[low];
    }
    for (unsigned x = 0; x < (1u << s); ++x) {
        const long long fx = sum_a[x];
        const long long xs = __builtin_popcount(x);
        for (unsigned y = 0; y < (1u << t); ++y) {
            const long long ys = __builtin_popcount(y);
            if (fx > xs * ys + (f_b - sum_b[y])) return false;
        }
    }
    return true;
}

namespace {

// Dinic max-flow on a small unit-ish network; deterministic edge order.
class FlowNetwork {
public:
    explicit FlowNetwork(int n) : head_(n, -1), level_(n), iter_(n) {}

    int add_edge(int from, int to, int cap) {
        const int id = static_cast<int>(to_.size());
        to_.push_back(to);
        cap_.push_back(cap);
        next_.push_back(head_[from]);
        head_[from] = id;
        to_.push_back(from);
        cap_.push_back(0);
        next_.push_back(head_[to]);
        head_[to] = id + 1;
        return id;
    }

    long long max_flow(int source, int sink) {
        long long flow = 0;
        while (bfs(source, sink)) {
            iter_ = head_;
            while (long long pushed = dfs(source, sink, INT64_MAX)) flow += pushed;
        }
        return flow;
    }

    int flow_on(int edge_id) const { return cap_[edge_id ^ 1]; }

private:
    bool bfs(int source, int sink) {
        std::fill(level_.begin(), level_.end(), -1);
        std::vector<int> queue = {source};
        level_[source] = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int e = head_[v]; e != -1; e = next_[e]) {
                if (cap_[e] > 0 && level_[to_[e]] == -1) {
                    level_[to_[e]] = level_[v] + 1;
                    queue.push_back(to_[e]);
                }
            }
        }
        return level_[sink] != -1;
    }

    long long dfs(int v, int sink, long long limit) {
        if (v == sink) return limit;
        for (int& e = iter_[v]; e != -1; e = next_[e]) {
            if (cap_[e] > 0 && level_[to_[e]] == level_[v] + 1) {
                long long pushed = dfs(to_[e], sink, std::min<long long>(limit, cap_[e]));
                if (pushed > 0) {
                    cap_[e] -= static_cast<int>(pushed);
                    cap_[e ^ 1] += static_cast<int>(pushed);
                    return pushed;
                }
            }
        }
        return 0;
    }

    std::vector<int> head_, next_, to_, cap_, level_, iter_;
};

}  // namespace

BipartiteRealization realize_bipartite(const BipartiteDemand& demand) {
    const int s = static_cast<int>(demand.side_a.size());
    const int t = static_cast<int>(demand.side_b.size());
    for (int x : demand.side_a) {
        if (x < 0) throw NotBigraphicError("negative demand entry");
    }
    for (int x : demand.side_b) {
        if (x < 0) throw NotBigraphicError("negative demand entry");
    }
    if (demand.sum_a() != demand.sum_b()) {
        throw NotBigraphicError("side sums differ: " + std::to_string(demand.sum_a()) + " vs " +
                                std::to_string(demand.sum_b()));
    }

    const int source = 0, sink = s + t + 1;
    FlowNetwork net(s + t + 2);
    for (int i = 0; i < s; ++i) net.add_edge(source, 1 + i, demand.side_a[i]);
    std::vector<std::vector<int>> pair_edge(s, std::vector<int>(t));
    for (int i = 0; i < s; ++i) {
        for (int j = 0; j < t; ++j) pair_edge[i][j] = net.add_edge(1 + i, 1 + s + j, 1);
    }
    for (int j = 0; j < t; ++j) net.add_edge(1 + s + j, sink, demand.side_b[j]);

    if (net.max_flow(source, sink) != demand.sum_a()) {
        throw NotBigraphicError("demand admits no bipartite realization");
    }

    BipartiteRealization out;
    out.graph = SimpleGraph(s + t);
    out.left_size = s;
    for (int i = 0; i < s; ++i) {
        for (int j = 0; j < t; ++j) {
            if (net.flow_on(pair_edge[i][j]) > 0) out.graph.add_edge(i, s + j);
        }
    }
    return out;
}

namespace {

// Nonempty subset of `values` (local indices) with zero sum, or empty if none.
// Exhaustive subset-sum DP over the attainable range.
std::vector<int> find_zero_sum_subset(const std::vector<int>& values) {
    const int m = static_cast<int>(values.size());
    if (m == 0) return {};
    long long neg = 0, pos = 0;
    for (int v : values) {
        if (v < 0) neg += -v;
        else pos += v;
    }
    const long long range = neg + pos;
    if (static_cast<long long>(m + 1) * (range + 1) > (1LL << 28)) {
        throw BudgetExceededError("zero-sum subset DP table too large");
    }
    const int offset = static_cast<int>(neg);
    const int width = static_cast<int>(range) + 1;
    // reach[i][s] = nonempty subset of the first i items sums to s-offset.
    std::vector<std::vector<char>> reach(m + 1, std::vector<char>(width, 0));
    for (int i = 1; i <= m; ++i) {
        const int v = values[i - 1];
        for (int sft = 0; sft < width; ++sft) {
            char ok = reach[i - 1][sft];
            if (!ok && sft - v >= 0 && sft - v < width && reach[i - 1][sft - v]) ok = 1;
            if (!ok && sft - offset == v) ok = 1;
            reach[i][sft] = ok;
        }
        if (reach[i][offset]) {
            // Walk back to recover the subset, mirroring the forward cases.
            std::vector<int> picked;
            int sft = offset;
            int j = i;
            while (j >= 1) {
                if (reach[j - 1][sft]) {
                    --j;
                    continue;
                }
                const int v2 = values[j - 1];
                picked.push_back(j - 1);
                if (sft - v2 >= 0 && sft - v2 < width && reach[j - 1][sft - v2]) {
                    sft -= v2;
                    --j;
                    continue;
                }
                break;  // singleton start: {j-1} alone reaches sft
            }
            std::sort(picked.begin(), picked.end());
            return picked;
        }
    }
    return {};
}

void split_recursive(const std::vector<int>& values, std::vector<int> part,
                     std::vector<std::vector<int>>& groups) {
    if (part.size() <= 1) {
        groups.push_back(std::move(part));
        return;
    }
    // A proper nonempty zero-sum subsequence exists iff one avoiding the first
    // element exists: the complement of a zero-sum set is zero-sum as well.
    std::vector<int> tail_values;
    tail_values.reserve(part.size() - 1);
    for (std::size_t i = 1; i < part.size(); ++i) tail_values.push_back(values[part[i]]);
    std::vector<int> local = find_zero_sum_subset(tail_values);
    if (local.empty()) {
        groups.push_back(std::move(part));
        return;
    }
    std::vector<char> taken(part.size(), 0);
    for (int idx : local) taken[idx + 1] = 1;
    std::vector<int> inside, outside;
    for (std::size_t i = 0; i < part.size(); ++i) {
        (taken[i] ? inside : outside).push_back(part[i]);
    }
    split_recursive(values, std::move(inside), groups);
    split_recursive(values, std::move(outside), groups);
}

}  // namespace

std::vector<std::vector<int>> zero_sum_split(const IntSequence& seq) {
    for (int v : seq.values) {
        if (v > seq.bound || v < -seq.bound) {
            throw Error("value " + std::to_string(v) + " exceeds bound " + std::to_string(seq.bound));
        }
    }
    if (seq.sum() != 0) {
        throw NotZeroSumError("sequence sums to " + std::to_string(seq.sum()));
    }
    if (seq.values.empty()) return {};

    std::vector<int> all(seq.values.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    std::vector<std::vector<int>> groups;
    split_recursive(seq.values, std::move(all), groups);
    std::sort(groups.begin(), groups.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return groups;
}

}  // namespace degembed
