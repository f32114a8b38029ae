#include "degembed/unbalanced.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "degembed/errors.hpp"

namespace degembed {

int UnbalancedBipartiteSeq::max_degree() const {
    int best = 0;
    for (int x : side_s) best = std::max(best, x);
    for (int x : side_t) best = std::max(best, x);
    return best;
}

long long UnbalancedBipartiteSeq::sum_s() const {
    return std::accumulate(side_s.begin(), side_s.end(), 0LL);
}

long long UnbalancedBipartiteSeq::sum_t() const {
    return std::accumulate(side_t.begin(), side_t.end(), 0LL);
}

int UnbalancedBipartiteSeq::degree_at(int label) const {
    const int s = static_cast<int>(side_s.size());
    return label < s ? side_s[label] : side_t[label - s];
}

int tuple_bias(const Tuple& t, const UnbalancedBipartiteSeq& seq) {
    int bias = -seq.side_s[t.s_vertex];
    for (int v : t.t_vertices) bias += seq.side_t[v];
    return bias;
}

std::vector<Tuple> form_tuples(const UnbalancedBipartiteSeq& seq, int max_degree) {
    const int n_s = static_cast<int>(seq.side_s.size());
    const int n_t = static_cast<int>(seq.side_t.size());
    const int q = seq.q;
    int cap = max_degree == 0 ? seq.max_degree() : max_degree;
    if (n_s == 0) {
        if (n_t == 0) return {};
        throw BadShapeError("T-vertices present but S is empty");
    }
    if (q < 1) throw Error("q must be at least 1");
    if (static_cast<long long>(q) * n_s > n_t || static_cast<long long>(cap) * n_s < n_t) {
        throw BadShapeError("need q|S| <= |T| <= D|S|: q=" + std::to_string(q) + " |S|=" +
                            std::to_string(n_s) + " |T|=" + std::to_string(n_t) + " D=" +
                            std::to_string(cap));
    }

    // h = min(D, remaining_T - q*(remaining_S - 1)) keeps every suffix feasible.
    std::vector<Tuple> tuples;
    tuples.reserve(n_s);
    int rem_t = n_t;
    int next_t = 0;
    for (int s = 0; s < n_s; ++s) {
        const int rem_s_after = n_s - s - 1;
        const int h = std::min(cap, rem_t - q * rem_s_after);
        Tuple t;
        t.s_vertex = s;
        for (int j = 0; j < h; ++j) t.t_vertices.push_back(next_t + j);
        next_t += h;
        rem_t -= h;
        tuples.push_back(std::move(t));
    }
    return tuples;
}

namespace {

struct Group {
    std::vector<int> tuple_indices;
    int s_count = 0;
    int t_count = 0;
    int max_deg = 0;
};

Group merge(const Group& a, const Group& b) {
    Group out = a;
    out.tuple_indices.insert(out.tuple_indices.end(), b.tuple_indices.begin(),
                             b.tuple_indices.end());
    out.s_count += b.s_count;
    out.t_count += b.t_count;
    out.max_deg = std::max(a.max_deg, b.max_deg);
    return out;
}

PatternComponent realize_group(const Group& group, const std::vector<Tuple>& tuples,
                               const UnbalancedBipartiteSeq& seq) {
    const int s_offset = static_cast<int>(seq.side_s.size());
    BipartiteDemand demand;
    std::vector<int> globals;
    for (int ti : group.tuple_indices) {
        demand.side_a.push_back(seq.side_s[tuples[ti].s_vertex]);
        globals.push_back(tuples[ti].s_vertex);
    }
    for (int ti : group.tuple_indices) {
        for (int tv : tuples[ti].t_vertices) {
            demand.side_b.push_back(seq.side_t[tv]);
            globals.push_back(s_offset + tv);
        }
    }
    BipartiteRealization real = realize_bipartite(demand);

    PatternComponent comp;
    comp.graph = std::move(real.graph);
    comp.global_labels = std::move(globals);
    comp.bipartite = true;
    comp.side.assign(comp.graph.num_vertices(), 1);
    for (int i = 0; i < real.left_size; ++i) comp.side[i] = 0;
    return comp;
}

}  // namespace

ComponentList decompose_unbalanced(const UnbalancedBipartiteSeq& seq, int max_degree) {
    const int actual_max = seq.max_degree();
    const int cap = max_degree == 0 ? actual_max : max_degree;
    if (cap < actual_max) {
        throw Error("max degree " + std::to_string(actual_max) + " exceeds bound " +
                    std::to_string(cap));
    }
    for (int x : seq.side_s) {
        if (x < 1) throw Error("S-side entries must be positive");
    }
    for (int x : seq.side_t) {
        if (x < 1) throw Error("T-side entries must be positive");
    }
    if (seq.sum_s() != seq.sum_t()) {
        throw NotRealizableError("side sums differ: " + std::to_string(seq.sum_s()) + " vs " +
                                 std::to_string(seq.sum_t()));
    }
    ComponentList out;
    if (seq.side_s.empty() && seq.side_t.empty()) return out;

    const std::vector<Tuple> tuples = form_tuples(seq, cap);
    IntSequence biases;
    biases.bound = cap * cap;
    for (const Tuple& t : tuples) biases.values.push_back(tuple_bias(t, seq));
    const auto index_groups = zero_sum_split(biases);

    std::vector<Group> groups;
    for (const auto& idxs : index_groups) {
        Group g;
        g.tuple_indices = idxs;
        for (int ti : idxs) {
            g.s_count += 1;
            g.t_count += static_cast<int>(tuples[ti].t_vertices.size());
            g.max_deg = std::max(g.max_deg, seq.side_s[tuples[ti].s_vertex]);
            for (int tv : tuples[ti].t_vertices) {
                g.max_deg = std::max(g.max_deg, seq.side_t[tv]);
            }
        }
        groups.push_back(std::move(g));
    }

    // Keep components as small as possible: each zero-bias group is realized
    // directly when the flow admits it, and groups are merged ascending by
    // size only when a realization is missing. Merging cannot run forever:
    // once both class sizes pass twice the squared maximum degree of the
    // merged group, the demand is guaranteed bigraphic.
    std::stable_sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) {
        return a.s_count + a.t_count < b.s_count + b.t_count;
    });
    std::vector<Group> merged;
    Group pending;
    for (const Group& g : groups) {
        Group candidate = pending.tuple_indices.empty() ? g : merge(pending, g);
        try {
            PatternComponent comp = realize_group(candidate, tuples, seq);
            out.components.push_back(std::move(comp));
            merged.push_back(std::move(candidate));
            pending = Group{};
        } catch (const NotBigraphicError&) {
            pending = std::move(candidate);
        }
    }
    if (!pending.tuple_indices.empty()) {
        // Fold the leftovers into the last realized group, or collapse to the
        // whole demand, which is realizable by precondition.
        bool placed = false;
        if (!merged.empty()) {
            Group widened = merge(merged.back(), pending);
            try {
                PatternComponent comp = realize_group(widened, tuples, seq);
                out.components.back() = std::move(comp);
                placed = true;
            } catch (const NotBigraphicError&) {
            }
        }
        if (!placed) {
            out.components.clear();
            Group whole;
            for (std::size_t i = 0; i < tuples.size(); ++i) {
                whole.tuple_indices.push_back(static_cast<int>(i));
            }
            out.components.push_back(realize_group(whole, tuples, seq));
        }
    }
    return out;
}

}  // namespace degembed
