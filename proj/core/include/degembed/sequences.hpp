#ifndef DEGEMBED_SEQUENCES_HPP
#define DEGEMBED_SEQUENCES_HPP

#include <vector>

#include "degembed/graph.hpp"

namespace degembed {

/// Prescribed degrees indexed by vertex label.
struct DegreeSequence {
    std::vector<int> degrees;

    DegreeSequence() = default;
    DegreeSequence(std::initializer_list<int> init) : degrees(init) {}
    explicit DegreeSequence(std::vector<int> d) : degrees(std::move(d)) {}

    int size() const { return static_cast<int>(degrees.size()); }
    int operator[](int v) const { return degrees[v]; }
    int max_degree() const;
    long long sum() const;
};

/// Two-sided degree demand for a bipartite graph.
struct BipartiteDemand {
    std::vector<int> side_a;
    std::vector<int> side_b;

    long long sum_a() const;
    long long sum_b() const;
    int max_entry() const;
};

/// Bounded integers, used for bias bookkeeping. Entries must lie in [-bound, bound].
struct IntSequence {
    std::vector<int> values;
    int bound = 1;

    long long sum() const;
};

/// Bipartite graph together with its class split: vertices [0, left_size)
/// form one class, the rest the other.
struct BipartiteRealization {
    SimpleGraph graph;
    int left_size = 0;

    int right_size() const { return graph.num_vertices() - left_size; }
};

/// Erdos-Gallai test on the sorted sequence. Total: returns false on negative
/// entries or degrees >= n. Empty and all-zero sequences are graphic.
bool is_graphic(const DegreeSequence& seq);

/// Havel-Hakimi realizer; vertex v ends with degree seq[v] exactly.
/// Ties between equal degrees break toward the lowest vertex label.
/// Throws NotGraphicError when no realization exists.
SimpleGraph realize_graphic(const DegreeSequence& seq);

/// Degree-constrained-subgraph condition evaluated on the complete bipartite
/// host: for every X subset of A and Y subset of B,
///     f(X) <= |X||Y| + f(B - Y).
/// Exhaustive over all subset pairs; throws BudgetExceededError when
/// 2^(s+t) exceeds 2^22 pairs. Requires equal side sums.
bool ffactor_condition_holds(const BipartiteDemand& demand);

/// Realizes a bipartite demand exactly, via max-flow feasibility.
/// Throws NotBigraphicError when no realization exists.
BipartiteRealization realize_bipartite(const BipartiteDemand& demand);

/// Splits a zero-sum sequence into index groups, each group zero-sum with at
/// most 2*bound elements. Recursively extracts proper nonempty zero-sum
/// subsequences (subset-sum DP) until no part admits one; a part without a
/// proper zero-sum subsequence has fewer than 2*bound elements.
/// Throws NotZeroSumError when the total is nonzero.
std::vector<std::vector<int>> zero_sum_split(const IntSequence& seq);

}  // namespace degembed

#endif  // DEGEMBED_SEQUENCES_HPP
