#include "degembed/stars.hpp"

#include <algorithm>
#include <string>

#include "degembed/errors.hpp"

namespace degembed {

int StarDecomposition::covered_count() const {
    int total = 0;
    for (const Star& s : stars) total += s.size();
    return total;
}

std::vector<int> StarDecomposition::star_of(int num_vertices) const {
    std::vector<int> owner(num_vertices, -1);
    for (std::size_t i = 0; i < stars.size(); ++i) {
        owner[stars[i].center] = static_cast<int>(i);
        for (int leaf : stars[i].leaves) owner[leaf] = static_cast<int>(i);
    }
    return owner;
}

bool StarDecomposition::valid_for(const SimpleGraph& g) const {
    std::vector<char> seen(g.num_vertices(), 0);
    int covered = 0;
    for (const Star& s : stars) {
        if (s.leaves.empty() || static_cast<int>(s.leaves.size()) > max_leaves) return false;
        if (seen[s.center]) return false;
        seen[s.center] = 1;
        ++covered;
        for (int leaf : s.leaves) {
            if (seen[leaf] || !g.has_edge(s.center, leaf)) return false;
            seen[leaf] = 1;
            ++covered;
        }
    }
    return covered == g.num_vertices();
}

namespace {

enum Role : char { kNone = 0, kCenter = 1, kLeaf = 2 };

struct State {
    std::vector<Star> stars;
    std::vector<int> owner;
    std::vector<char> role;

    explicit State(int n) : owner(n, -1), role(n, kNone) {}

    void make_star(int center, int leaf) {
        const int id = static_cast<int>(stars.size());
        stars.push_back(Star{center, {leaf}});
        owner[center] = owner[leaf] = id;
        role[center] = kCenter;
        role[leaf] = kLeaf;
    }
};

}  // namespace

StarDecomposition star_decompose(const SimpleGraph& g, int q) {
    if (q < 1) throw Error("q must be at least 1");
    const int n = g.num_vertices();
    State st(n);

    // Maximal partial decomposition: every edge in lexicographic order becomes
    // a 1-star when both endpoints are free; the lower endpoint is the center.
    for (auto [u, v] : g.edges()) {
        if (st.owner[u] == -1 && st.owner[v] == -1) st.make_star(u, v);
    }

    for (int v = 0; v < n; ++v) {
        if (st.owner[v] != -1) continue;

        bool done = false;
        // An uncovered neighbor would contradict maximality, but stay safe.
        for (int u : g.neighbors(v)) {
            if (st.owner[u] == -1) {
                st.make_star(std::min(u, v), std::max(u, v));
                done = true;
                break;
            }
        }

        // Case a: neighbor inside a 1-star; regrow it as a 2-star around u.
        if (!done && q >= 2) {
            for (int u : g.neighbors(v)) {
                const int id = st.owner[u];
                if (id == -1 || st.stars[id].size() != 2) continue;
                Star& s = st.stars[id];
                const int other = (s.center == u) ? s.leaves[0] : s.center;
                s.center = u;
                s.leaves = {other, v};
                st.role[u] = kCenter;
                st.role[other] = kLeaf;
                st.owner[v] = id;
                st.role[v] = kLeaf;
                done = true;
                break;
            }
        }

        // Case b: neighbor is the center of a star below the leaf cap.
        if (!done) {
            for (int u : g.neighbors(v)) {
                const int id = st.owner[u];
                if (id == -1 || st.role[u] != kCenter) continue;
                Star& s = st.stars[id];
                if (static_cast<int>(s.leaves.size()) >= q) continue;
                s.leaves.push_back(v);
                st.owner[v] = id;
                st.role[v] = kLeaf;
                done = true;
                break;
            }
        }

        // Case c: neighbor is a leaf of a star with at least 2 leaves; split it off.
        if (!done) {
            for (int u : g.neighbors(v)) {
                const int id = st.owner[u];
                if (id == -1 || st.role[u] != kLeaf) continue;
                Star& s = st.stars[id];
                if (static_cast<int>(s.leaves.size()) < 2) continue;
                s.leaves.erase(std::find(s.leaves.begin(), s.leaves.end(), u));
                st.make_star(u, v);
                done = true;
                break;
            }
        }

        // Case d: every usable neighbor centers a full star. Trade one of its
        // leaves to a second uncovered vertex; covers v and x at once.
        if (!done) {
            for (int x = 0; x < n && !done; ++x) {
                if (x == v || st.owner[x] != -1) continue;
                for (int u : g.neighbors(v)) {
                    const int id = st.owner[u];
                    if (id == -1) continue;
                    Star& s = st.stars[id];
                    if (static_cast<int>(s.leaves.size()) != q) continue;
                    int center = s.center;
                    // A 1-star's center is arbitrary; re-root it at u if needed.
                    if (center != u) {
                        if (q != 1) continue;
                        s.center = u;
                        s.leaves = {center};
                        st.role[u] = kCenter;
                        st.role[center] = kLeaf;
                        center = u;
                    }
                    int traded = -1;
                    for (int leaf : s.leaves) {
                        if (g.has_edge(leaf, x)) {
                            traded = leaf;
                            break;
                        }
                    }
                    if (traded == -1) continue;
                    s.leaves.erase(std::find(s.leaves.begin(), s.leaves.end(), traded));
                    s.leaves.push_back(v);
                    st.owner[v] = id;
                    st.role[v] = kLeaf;
                    st.make_star(traded, x);
                    done = true;
                    break;
                }
            }
        }

        if (!done) {
            throw StuckError(v, "no augmentation covers vertex " + std::to_string(v));
        }
    }

    StarDecomposition out;
    out.stars = std::move(st.stars);
    out.max_leaves = q;
    return out;
}

}  // namespace degembed
