#ifndef DEGEMBED_UNBALANCED_HPP
#define DEGEMBED_UNBALANCED_HPP

#include <vector>

#include "degembed/components.hpp"
#include "degembed/sequences.hpp"

namespace degembed {

/// Degree demand already split into a small class S and a large class T
/// with q|S| <= |T|. Global pattern labels: S occupies [0, |S|), T occupies
/// [|S|, |S|+|T|).
struct UnbalancedBipartiteSeq {
    std::vector<int> side_s;
    std::vector<int> side_t;
    int q = 1;

    int size() const { return static_cast<int>(side_s.size() + side_t.size()); }
    int max_degree() const;
    long long sum_s() const;
    long long sum_t() const;
    /// Degree at a global pattern label.
    int degree_at(int label) const;
};

/// One S-vertex with between q and D T-partners.
struct Tuple {
    int s_vertex = -1;            // index into side_s
    std::vector<int> t_vertices;  // indices into side_t
};

/// sum of the T-degrees minus the S-degree; lies in [-D, D^2].
int tuple_bias(const Tuple& t, const UnbalancedBipartiteSeq& seq);

/// Partitions S and T into vertex-disjoint tuples, each with h in [q, D]
/// T-vertices; h is chosen greedily so the remainder stays feasible.
/// max_degree 0 means "use the sequence's maximum".
/// Throws BadShapeError when |T| < q|S| or |T| > D|S|.
std::vector<Tuple> form_tuples(const UnbalancedBipartiteSeq& seq, int max_degree = 0);

/// Realizes the demand as a disjoint union of bounded bipartite pieces:
/// tuples are grouped by zero-sum bias splitting (bound D^2), each zero-bias
/// group is realized by max-flow, and groups are merged smallest-first only
/// when a realization is missing (once both class sizes reach twice the
/// squared maximum degree of the merged group, a realization is guaranteed).
/// Every component is q-unbalanced and realizes its slice of the demand
/// positionally. Throws NotRealizableError when side sums differ.
ComponentList decompose_unbalanced(const UnbalancedBipartiteSeq& seq, int max_degree);

}  // namespace degembed

#endif  // DEGEMBED_UNBALANCED_HPP
