#ifndef DEGEMBED_COMPONENTS_HPP
#define DEGEMBED_COMPONENTS_HPP

#include <cstdint>
#include <vector>

#include "degembed/graph.hpp"

namespace degembed {

/// One piece of a realization, carried with the labels it occupies in the
/// full pattern so that a disjoint union reproduces the sequence positionally.
struct PatternComponent {
    SimpleGraph graph;               // local labels 0..k-1
    std::vector<int> global_labels;  // local label -> pattern position
    bool bipartite = false;
    std::vector<std::uint8_t> side;  // when bipartite: 0 = small class, 1 = large class

    int size() const { return graph.num_vertices(); }
    int small_class_size() const;
    int large_class_size() const;
};

struct ComponentList {
    std::vector<PatternComponent> components;

    int total_vertices() const;
    /// Disjoint union on the global labels; length = max label + 1.
    SimpleGraph assemble() const;
};

}  // namespace degembed

#endif  // DEGEMBED_COMPONENTS_HPP
