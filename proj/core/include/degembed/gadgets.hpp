#ifndef DEGEMBED_GADGETS_HPP
#define DEGEMBED_GADGETS_HPP

#include <utility>
#include <vector>

#include "degembed/graph.hpp"
#include "degembed/sequences.hpp"

namespace degembed {

/// Realization of a bounded-degree sequence as small structured components:
/// balanced complete bipartite blocks, a matching on the odd residue, and
/// rewired blocks absorbed into the set A.
struct GadgetRealization {
    SimpleGraph graph;
    /// Surviving (un-rewired) balanced complete bipartite components.
    std::vector<std::vector<int>> type1_components;
    /// Union of all rewired structures, sorted.
    std::vector<int> set_a;
    /// Matching edges added on the odd-degree residue.
    std::vector<std::pair<int, int>> residual_matching;
};

/// Structure certificate: one flag per checked property, never throws.
struct StructureReport {
    bool a_size_ok = false;        // |A| <= 5 * max_degree^3
    bool components_ok = false;    // outside A: balanced complete bipartite, <= 2 * max_degree vertices
    bool chromatic_ok = false;     // chi(graph[A]) <= 3, by exact search
    bool separation_ok = false;    // no edge between A and its complement
    bool degrees_ok = false;       // degree multiset equals the sequence's
    int max_rewired_size = 0;      // largest component inside A

    bool all_ok() const {
        return a_size_ok && components_ok && chromatic_ok && separation_ok && degrees_ok;
    }
};

/// Builds the structured realization:
///  1. while 2i unsatisfied degrees of value i remain (i scanned from the
///     maximum down to 1), realize them as a K_{i,i};
///  2. pair all remaining odd degrees with a matching (sorted by degree
///     descending, adjacent pairs);
///  3. for each still-deficient vertex v, consume unmarked K_{i,i} blocks:
///     delete a canonical matching edge xy, add vx and vy, until v is full.
/// Zero-degree vertices stay isolated. Requires is_graphic(seq).
/// Throws InsufficientGadgetsError when step 3 runs out of blocks (possible
/// for short sequences); callers may fall back to realize_graphic.
GadgetRealization build_bounded_realization(const DegreeSequence& seq);

/// Checks all certificate properties from scratch; trusts nothing in `r`.
StructureReport verify_bounded_structure(const GadgetRealization& r, const DegreeSequence& seq);

/// Exact 3-colorability test by backtracking; exposed for the certificate.
bool is_three_colorable(const SimpleGraph& g);

}  // namespace degembed

#endif  // DEGEMBED_GADGETS_HPP
