#ifndef DEGEMBED_GRAPH_HPP
#define DEGEMBED_GRAPH_HPP

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace degembed {

/// Undirected simple graph with adjacency sets and vertex labels 0..n-1.
/// Ordered sets keep every iteration deterministic.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n) : adj_(n) {}

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    int num_edges() const { return edge_count_; }

    /// Appends an isolated vertex and returns its label.
    int add_vertex() {
        adj_.emplace_back();
        return num_vertices() - 1;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[u].count(v) != 0;
    }

    /// Inserts {u, v}; inserting an existing edge is a no-op. Self-loops are rejected.
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    const std::set<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adj_[v].size());
    }

    int min_degree() const;
    int max_degree() const;
    std::vector<int> degrees() const;

    /// Number of neighbors of v inside the given vertex set.
    int degree_into(int v, const std::vector<int>& vertex_set) const;

    /// Edges as sorted (u, v) pairs with u < v.
    std::vector<std::pair<int, int>> edges() const;

    /// Edge count between two disjoint vertex sets.
    long long edges_between(const std::vector<int>& xs, const std::vector<int>& ys) const;

    /// Vertex sets of connected components, each sorted, ordered by smallest member.
    std::vector<std::vector<int>> connected_components() const;

    /// Subgraph induced by the given vertices, relabeled 0..k-1 in the given order.
    SimpleGraph induced(const std::vector<int>& vertices) const;

    /// Two-coloring of a bipartite graph: color[v] in {0, 1}, or empty if an odd cycle exists.
    std::vector<std::uint8_t> bipartition() const;

    bool operator==(const SimpleGraph& other) const { return adj_ == other.adj_; }

    static SimpleGraph complete(int n);
    static SimpleGraph complete_bipartite(int a, int b);
    static SimpleGraph cycle(int n);
    static SimpleGraph path(int n);
    static SimpleGraph disjoint_union(const SimpleGraph& g, const SimpleGraph& h);

private:
    void check_vertex(int v) const;

    std::vector<std::set<int>> adj_;
    int edge_count_ = 0;
};

/// Injective map from pattern vertices to host vertices; -1 marks unmapped.
struct EmbeddingMap {
    std::vector<int> image;

    EmbeddingMap() = default;
    explicit EmbeddingMap(int pattern_size) : image(pattern_size, -1) {}

    int operator[](int pattern_vertex) const { return image[pattern_vertex]; }
    int size() const { return static_cast<int>(image.size()); }
    bool complete() const;
};

/// Independent validity check: injectivity plus edge preservation.
bool is_valid_embedding(const SimpleGraph& pattern, const SimpleGraph& host, const EmbeddingMap& map);

}  // namespace degembed

#endif  // DEGEMBED_GRAPH_HPP
