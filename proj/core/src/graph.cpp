#include "degembed/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <string>

namespace degembed {

void SimpleGraph::check_vertex(int v) const {
    if (v < 0 || v >= num_vertices()) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range [0, " +
                                std::to_string(num_vertices()) + ")");
    }
}

void SimpleGraph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
        throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    if (adj_[u].insert(v).second) {
        adj_[v].insert(u);
        ++edge_count_;
    }
}

void SimpleGraph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (adj_[u].erase(v) > 0) {
        adj_[v].erase(u);
        --edge_count_;
    }
}

int SimpleGraph::min_degree() const {
    int best = num_vertices() == 0 ? 0 : num_vertices();
    for (const auto& nbrs : adj_) best = std::min(best, static_cast<int>(nbrs.size()));
    return best;
}

int SimpleGraph::max_degree() const {
    int best = 0;
    for (const auto& nbrs : adj_) best = std::max(best, static_cast<int>(nbrs.size()));
    return best;
}

std::vector<int> SimpleGraph::degrees() const {
    std::vector<int> d(num_vertices());
    for (int v = 0; v < num_vertices(); ++v) d[v] = static_cast<int>(adj_[v].size());
    return d;
}

int SimpleGraph::degree_into(int v, const std::vector<int>& vertex_set) const {
    check_vertex(v);
    int count = 0;
    for (int u : vertex_set) {
        if (adj_[v].count(u)) ++count;
    }
    return count;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < num_vertices(); ++u) {
        for (int v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

long long SimpleGraph::edges_between(const std::vector<int>& xs, const std::vector<int>& ys) const {
    long long count = 0;
    for (int x : xs) count += degree_into(x, ys);
    return count;
}

std::vector<std::vector<int>> SimpleGraph::connected_components() const {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(num_vertices(), 0);
    for (int start = 0; start < num_vertices(); ++start) {
        if (seen[start]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(start);
        seen[start] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.push_back(v);
            for (int u : adj_[v]) {
                if (!seen[u]) {
                    seen[u] = 1;
                    q.push(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

SimpleGraph SimpleGraph::induced(const std::vector<int>& vertices) const {
    SimpleGraph g(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (has_edge(vertices[i], vertices[j])) {
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
            }
        }
    }
    return g;
}

std::vector<std::uint8_t> SimpleGraph::bipartition() const {
    std::vector<int> color(num_vertices(), -1);
    for (int start = 0; start < num_vertices(); ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : adj_[v]) {
                if (color[u] == -1) {
                    color[u] = 1 - color[v];
                    q.push(u);
                } else if (color[u] == color[v]) {
                    return {};
                }
            }
        }
    }
    return std::vector<std::uint8_t>(color.begin(), color.end());
}

SimpleGraph SimpleGraph::complete(int n) {
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    }
    return g;
}

SimpleGraph SimpleGraph::complete_bipartite(int a, int b) {
    SimpleGraph g(a + b);
    for (int u = 0; u < a; ++u) {
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    }
    return g;
}

SimpleGraph SimpleGraph::cycle(int n) {
    SimpleGraph g(n);
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

SimpleGraph SimpleGraph::path(int n) {
    SimpleGraph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

SimpleGraph SimpleGraph::disjoint_union(const SimpleGraph& g, const SimpleGraph& h) {
    SimpleGraph out(g.num_vertices() + h.num_vertices());
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    const int offset = g.num_vertices();
    for (auto [u, v] : h.edges()) out.add_edge(u + offset, v + offset);
    return out;
}

bool EmbeddingMap::complete() const {
    for (int x : image) {
        if (x < 0) return false;
    }
    return true;
}

bool is_valid_embedding(const SimpleGraph& pattern, const SimpleGraph& host, const EmbeddingMap& map) {
    if (map.size() != pattern.num_vertices()) return false;
    std::vector<char> used(host.num_vertices(), 0);
    for (int v = 0; v < pattern.num_vertices(); ++v) {
        int img = map[v];
        if (img < 0 || img >= host.num_vertices()) return false;
        if (used[img]) return false;
        used[img] = 1;
    }
    for (auto [u, v] : pattern.edges()) {
        if (!host.has_edge(map[u], map[v])) return false;
    }
    return true;
}

}  // namespace degembed
