#include "degembed/gadgets.hpp"

#include <algorithm>
#include <functional>

#include "degembed/errors.hpp"

namespace degembed {

namespace {

struct Block {
    std::vector<int> xs, ys;  // the two classes of a K_{i,i}
    int next_edge = 0;        // consumed prefix of the canonical matching
    bool marked = false;
    int user = -1;  // a residue vertex that drained from this block

    bool exhausted() const { return next_edge >= static_cast<int>(xs.size()); }
};

}  // namespace

GadgetRealization build_bounded_realization(const DegreeSequence& seq) {
    if (!is_graphic(seq)) {
        throw NotGraphicError("sequence is not graphic");
    }
    const int n = seq.size();
    const int max_deg = seq.max_degree();

    GadgetRealization out;
    out.graph = SimpleGraph(n);
    std::vector<char> active(n, 0);
    for (int v = 0; v < n; ++v) active[v] = seq[v] > 0;

    // Step 1: extract K_{i,i} blocks, large degrees first, lowest labels first.
    std::vector<Block> blocks;
    for (int i = max_deg; i >= 1; --i) {
        std::vector<int> pool;
        for (int v = 0; v < n; ++v) {
            if (active[v] && seq[v] == i) pool.push_back(v);
        }
        std::size_t consumed = 0;
        while (pool.size() - consumed >= static_cast<std::size_t>(2 * i)) {
            Block block;
            for (int j = 0; j < i; ++j) block.xs.push_back(pool[consumed + j]);
            for (int j = 0; j < i; ++j) block.ys.push_back(pool[consumed + i + j]);
            for (int x : block.xs) {
                for (int y : block.ys) out.graph.add_edge(x, y);
            }
            for (int j = 0; j < 2 * i; ++j) active[pool[consumed + j]] = 0;
            consumed += 2 * i;
            blocks.push_back(std::move(block));
        }
    }

    // Step 2: perfect matching on the odd residue, paired by descending degree.
    std::vector<int> odd;
    std::vector<int> partner(n, -1);
    for (int v = 0; v < n; ++v) {
        if (active[v] && seq[v] % 2 == 1) odd.push_back(v);
    }
    std::stable_sort(odd.begin(), odd.end(), [&](int a, int b) { return seq[a] > seq[b]; });
    for (std::size_t i = 0; i + 1 < odd.size(); i += 2) {
        out.graph.add_edge(odd[i], odd[i + 1]);
        out.residual_matching.emplace_back(odd[i], odd[i + 1]);
        partner[odd[i]] = odd[i + 1];
        partner[odd[i + 1]] = odd[i];
    }

    // Step 3: rewire block matching edges through each deficient residue
    // vertex, blocks in creation order. Several residue vertices may drain
    // one block, which keeps short supplies workable, but matched partners
    // never share a block chain: residues on a common block are forced onto
    // the same color, and partners are adjacent.
    std::vector<char> rewired(n, 0);
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int v = 0; v < n; ++v) {
        if (!active[v]) continue;
        int deficiency = seq[v] - out.graph.degree(v);
        while (deficiency > 0) {
            int pick = -1;
            for (std::size_t b = 0; b < blocks.size(); ++b) {
                if (blocks[b].exhausted()) continue;
                if (partner[v] != -1 && blocks[b].user != -1 &&
                    find(blocks[b].user) == find(partner[v])) {
                    continue;
                }
                pick = static_cast<int>(b);
                break;
            }
            if (pick == -1) {
                throw InsufficientGadgetsError("ran out of usable blocks while rewiring vertex " +
                                               std::to_string(v));
            }
            Block& block = blocks[pick];
            block.marked = true;
            if (block.user != -1) parent[find(v)] = find(block.user);
            block.user = v;
            const int x = block.xs[block.next_edge];
            const int y = block.ys[block.next_edge];
            ++block.next_edge;
            out.graph.remove_edge(x, y);
            out.graph.add_edge(v, x);
            out.graph.add_edge(v, y);
            rewired[v] = rewired[x] = rewired[y] = 1;
            deficiency -= 2;
        }
    }

    for (const Block& block : blocks) {
        if (block.marked) continue;
        std::vector<int> vertices = block.xs;
        vertices.insert(vertices.end(), block.ys.begin(), block.ys.end());
        std::sort(vertices.begin(), vertices.end());
        out.type1_components.push_back(std::move(vertices));
    }

    // A = union of components touched by any rewiring.
    for (const auto& comp : out.graph.connected_components()) {
        bool touched = false;
        for (int v : comp) {
            if (rewired[v]) {
                touched = true;
                break;
            }
        }
        if (touched) out.set_a.insert(out.set_a.end(), comp.begin(), comp.end());
    }
    std::sort(out.set_a.begin(), out.set_a.end());
    return out;
}

bool is_three_colorable(const SimpleGraph& g) {
    const int n = g.num_vertices();
    if (n == 0) return true;
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });

    std::vector<int> color(n, -1);
    std::function<bool(int, int)> assign = [&](int pos, int used) {
        if (pos == n) return true;
        const int v = order[pos];
        const int limit = std::min(3, used + 1);  // palette symmetry
        for (int c = 0; c < limit; ++c) {
            bool ok = true;
            for (int u : g.neighbors(v)) {
                if (color[u] == c) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            color[v] = c;
            if (assign(pos + 1, std::max(used, c + 1))) return true;
            color[v] = -1;
        }
        return false;
    };
    return assign(0, 0);
}

namespace {

bool is_balanced_complete_bipartite(const SimpleGraph& comp) {
    const int n = comp.num_vertices();
    if (n % 2 != 0 || n == 0) return false;
    auto side = comp.bipartition();
    if (side.empty()) return false;
    int left = 0;
    for (auto s : side) left += s == 0;
    if (2 * left != n) return false;
    return comp.num_edges() == (n / 2) * (n / 2);
}

}  // namespace

StructureReport verify_bounded_structure(const GadgetRealization& r, const DegreeSequence& seq) {
    StructureReport report;
    const SimpleGraph& g = r.graph;
    const int n = g.num_vertices();
    const long long max_deg = seq.max_degree();

    std::vector<int> got = g.degrees();
    std::vector<int> want = seq.degrees;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    report.degrees_ok = n == seq.size() && got == want;

    std::vector<char> in_a(n, 0);
    bool a_valid = true;
    for (int v : r.set_a) {
        if (v < 0 || v >= n) {
            a_valid = false;
            break;
        }
        in_a[v] = 1;
    }
    if (!a_valid) return report;

    report.a_size_ok = static_cast<long long>(r.set_a.size()) <= 5 * max_deg * max_deg * max_deg;

    report.separation_ok = true;
    for (auto [u, v] : g.edges()) {
        if (in_a[u] != in_a[v]) {
            report.separation_ok = false;
            break;
        }
    }

    std::vector<int> outside;
    for (int v = 0; v < n; ++v) {
        if (!in_a[v]) outside.push_back(v);
    }
    SimpleGraph rest = g.induced(outside);
    report.components_ok = true;
    for (const auto& comp : rest.connected_components()) {
        if (comp.size() == 1) {
            // Isolated appendix vertices are fine when the sequence says degree zero.
            const int global = outside[comp[0]];
            if (rest.degree(comp[0]) == 0 && global < seq.size() && seq[global] == 0) continue;
        }
        if (static_cast<long long>(comp.size()) > 2 * max_deg ||
            !is_balanced_complete_bipartite(rest.induced(comp))) {
            report.components_ok = false;
            break;
        }
    }

    SimpleGraph inside = g.induced(r.set_a);
    report.chromatic_ok = is_three_colorable(inside);
    for (const auto& comp : inside.connected_components()) {
        report.max_rewired_size = std::max(report.max_rewired_size, static_cast<int>(comp.size()));
    }
    return report;
}

}  // namespace degembed
