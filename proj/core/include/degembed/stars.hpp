#ifndef DEGEMBED_STARS_HPP
#define DEGEMBED_STARS_HPP

#include <vector>

#include "degembed/graph.hpp"

namespace degembed {

struct Star {
    int center = -1;
    std::vector<int> leaves;

    int size() const { return 1 + static_cast<int>(leaves.size()); }
};

/// Partition of all vertices into vertex-disjoint stars, each with 1..max_leaves
/// leaves; every leaf is adjacent to its center in the host graph.
struct StarDecomposition {
    std::vector<Star> stars;
    int max_leaves = 1;

    int covered_count() const;
    /// star index containing each vertex, or -1.
    std::vector<int> star_of(int num_vertices) const;
    bool valid_for(const SimpleGraph& g) const;
};

/// Decomposes g into vertex-disjoint stars with at most q leaves. Greedy
/// maximal 1-star seeding over lexicographic edges, then augmentation around
/// each uncovered vertex: grow a 1-star to a 2-star, extend a star below q
/// leaves through its center, or split a leaf off as a new 1-star. For q = 1
/// a pair of uncovered vertices may trade a 1-star between them. Throws
/// StuckError with the uncovered witness when no move applies — expected on
/// hosts whose minimum degree is below v(g)/(q+1).
StarDecomposition star_decompose(const SimpleGraph& g, int q);

}  // namespace degembed

#endif  // DEGEMBED_STARS_HPP
