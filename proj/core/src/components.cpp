#include "degembed/components.hpp"

#include <algorithm>

namespace degembed {

int PatternComponent::small_class_size() const {
    int count = 0;
    for (auto s : side) count += s == 0;
    return count;
}

int PatternComponent::large_class_size() const {
    return static_cast<int>(side.size()) - small_class_size();
}

int ComponentList::total_vertices() const {
    int total = 0;
    for (const auto& c : components) total += c.size();
    return total;
}

SimpleGraph ComponentList::assemble() const {
    int n = 0;
    for (const auto& c : components) {
        for (int label : c.global_labels) n = std::max(n, label + 1);
    }
    SimpleGraph g(n);
    for (const auto& c : components) {
        for (auto [u, v] : c.graph.edges()) {
            g.add_edge(c.global_labels[u], c.global_labels[v]);
        }
    }
    return g;
}

}  // namespace degembed
