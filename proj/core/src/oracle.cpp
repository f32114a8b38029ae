#include "degembed/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>

#include "degembed/errors.hpp"

namespace degembed {

const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::Absent: return "absent";
        case SearchStatus::Timeout: return "timeout";
    }
    return "?";
}

namespace {

bool graphs_isomorphic(const SimpleGraph& a, const SimpleGraph& b, long long budget) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
    // An injective edge-preserving map between graphs of equal order and size
    // is an isomorphism.
    return embed_backtracking(a, b, budget).found();
}

class Searcher {
public:
    struct Component {
        std::vector<int> vertices;
        int order_begin = 0, order_end = 0;
        bool single_edge = false;
        bool same_as_prev = false;
    };

    Searcher(const SimpleGraph& pattern, const SimpleGraph& host, long long budget,
             const std::vector<std::pair<int, int>>& pins)
        : pattern_(pattern), host_(host), budget_(budget), pins_(pins) {}

    EmbedResult run() {
        EmbedResult result;
        if (pattern_.num_vertices() > host_.num_vertices()) {
            result.status = SearchStatus::Absent;
            return result;
        }
        if (!degree_profile_fits()) {
            result.status = SearchStatus::Absent;
            return result;
        }
        prepare();
        image_.assign(pattern_.num_vertices(), -1);
        used_.assign(host_.num_vertices(), 0);
        residual_ = host_.degrees();
        if (!apply_pins()) {
            result.status = SearchStatus::Absent;
            return result;
        }

        const bool found = dfs(0);
        result.nodes = nodes_;
        if (found) {
            fill_isolated();
            result.map.image = image_;
            result.status = SearchStatus::Found;
        } else {
            result.status = timeout_ ? SearchStatus::Timeout : SearchStatus::Absent;
        }
        return result;
    }

private:
    // Necessary condition: the k-th largest host degree must dominate the
    // k-th largest pattern degree.
    bool degree_profile_fits() const {
        std::vector<int> pd = pattern_.degrees();
        std::vector<int> hd = host_.degrees();
        std::sort(pd.begin(), pd.end(), std::greater<>());
        std::sort(hd.begin(), hd.end(), std::greater<>());
        for (std::size_t i = 0; i < pd.size(); ++i) {
            if (hd[i] < pd[i]) return false;
        }
        return true;
    }

    bool apply_pins() {
        for (auto [u, c] : pins_) {
            if (u < 0 || u >= pattern_.num_vertices() || c < 0 || c >= host_.num_vertices()) {
                return false;
            }
            if (image_[u] == c) continue;
            if (image_[u] != -1 || used_[c]) return false;
            if (host_.degree(c) < pattern_.degree(u)) return false;
            place(u, c);
        }
        // Edges between two pinned vertices are never re-examined by the
        // search; verify them here.
        for (auto [u, c] : pins_) {
            for (int w : pattern_.neighbors(u)) {
                if (image_[w] != -1 && !host_.has_edge(image_[u], image_[w])) return false;
            }
        }
        return true;
    }

    void prepare() {
        allow_symmetry_ = pins_.empty();
        auto comps = pattern_.connected_components();
        std::vector<std::vector<int>> nontrivial;
        for (auto& comp : comps) {
            if (comp.size() == 1 && pattern_.degree(comp[0]) == 0) {
                isolated_.push_back(comp[0]);
            } else {
                nontrivial.push_back(std::move(comp));
            }
        }
        // Most constrained first; a degree signature keeps likely-isomorphic
        // components adjacent so the repetition pruning can chain them.
        std::vector<std::pair<std::vector<int>, int>> keyed;
        for (std::size_t i = 0; i < nontrivial.size(); ++i) {
            SimpleGraph local = pattern_.induced(nontrivial[i]);
            std::vector<int> key = local.degrees();
            std::sort(key.begin(), key.end(), std::greater<>());
            key.insert(key.begin(), {-local.num_edges(), -local.num_vertices()});
            keyed.emplace_back(std::move(key), static_cast<int>(i));
        }
        std::sort(keyed.begin(), keyed.end());

        for (std::size_t k = 0; k < keyed.size(); ++k) {
            const auto& comp = nontrivial[keyed[k].second];
            Component c;
            c.vertices = comp;
            c.single_edge = comp.size() == 2;
            c.order_begin = static_cast<int>(order_.size());
            append_component_order(comp, c.single_edge);
            c.order_end = static_cast<int>(order_.size());
            if (allow_symmetry_ && k > 0 && keyed[k].first == keyed[k - 1].first) {
                const auto& prev = components_.back();
                SimpleGraph a = pattern_.induced(prev.vertices);
                SimpleGraph b = pattern_.induced(comp);
                if (c.single_edge || graphs_isomorphic(a, b, 100'000)) {
                    c.same_as_prev = true;
                }
            }
            components_.push_back(std::move(c));
        }
        comp_of_pos_.assign(order_.size(), -1);
        for (std::size_t k = 0; k < components_.size(); ++k) {
            for (int pos = components_[k].order_begin; pos < components_[k].order_end; ++pos) {
                comp_of_pos_[pos] = static_cast<int>(k);
            }
        }
    }

    void append_component_order(const std::vector<int>& comp, bool single_edge) {
        if (single_edge) {
            order_.push_back(std::min(comp[0], comp[1]));
            order_.push_back(std::max(comp[0], comp[1]));
            return;
        }
        std::vector<char> placed(pattern_.num_vertices(), 0);
        int start = comp[0];
        for (int v : comp) {
            if (pattern_.degree(v) > pattern_.degree(start)) start = v;
        }
        order_.push_back(start);
        placed[start] = 1;
        for (std::size_t step = 1; step < comp.size(); ++step) {
            int best = -1, best_anchored = -1;
            for (int v : comp) {
                if (placed[v]) continue;
                int anchored = 0;
                for (int u : pattern_.neighbors(v)) anchored += placed[u];
                if (anchored > best_anchored ||
                    (anchored == best_anchored && best != -1 &&
                     pattern_.degree(v) > pattern_.degree(best))) {
                    best = v;
                    best_anchored = anchored;
                }
            }
            order_.push_back(best);
            placed[best] = 1;
        }
    }

    int min_image(const Component& c) const {
        int best = host_.num_vertices();
        for (int v : c.vertices) best = std::min(best, image_[v]);
        return best;
    }

    bool dfs(int pos) {
        if (--budget_ < 0) {
            timeout_ = true;
            return false;
        }
        ++nodes_;
        if (pos == static_cast<int>(order_.size())) return true;

        const int u = order_[pos];
        if (image_[u] != -1) return dfs(pos + 1);  // pinned
        const int comp_idx = comp_of_pos_[pos];
        const Component& comp = components_[comp_idx];
        const bool is_root = pos == comp.order_begin;

        // Floor on candidate labels from the symmetry constraints.
        int floor_label = -1;
        if (allow_symmetry_ && is_root && comp.same_as_prev && comp.single_edge) {
            floor_label = min_image(components_[comp_idx - 1]);
        }
        if (allow_symmetry_ && comp.single_edge && !is_root) {
            floor_label = std::max(floor_label, image_[order_[pos - 1]]);
        }

        std::vector<int> candidates;
        int anchor = -1;
        for (int w : pattern_.neighbors(u)) {
            if (image_[w] == -1) continue;
            if (anchor == -1 || host_.degree(image_[w]) < host_.degree(image_[anchor])) anchor = w;
        }
        const int want = pattern_.degree(u);
        if (anchor != -1) {
            for (int c : host_.neighbors(image_[anchor])) {
                if (!used_[c] && c > floor_label && host_.degree(c) >= want) candidates.push_back(c);
            }
        } else {
            for (int c = floor_label + 1; c < host_.num_vertices(); ++c) {
                if (!used_[c] && host_.degree(c) >= want) candidates.push_back(c);
            }
        }
        std::stable_sort(candidates.begin(), candidates.end(),
                         [&](int a, int b) { return residual_[a] < residual_[b]; });

        const bool completes = pos + 1 == comp.order_end && comp.same_as_prev && !comp.single_edge;
        for (int c : candidates) {
            bool ok = true;
            for (int w : pattern_.neighbors(u)) {
                if (image_[w] != -1 && !host_.has_edge(c, image_[w])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            place(u, c);
            if (!completes || min_image(comp) > min_image(components_[comp_idx - 1])) {
                if (dfs(pos + 1)) return true;
            }
            unplace(u, c);
            if (timeout_) return false;
        }
        return false;
    }

    void place(int u, int c) {
        image_[u] = c;
        used_[c] = 1;
        for (int w : host_.neighbors(c)) --residual_[w];
    }

    void unplace(int u, int c) {
        image_[u] = -1;
        used_[c] = 0;
        for (int w : host_.neighbors(c)) ++residual_[w];
    }

    void fill_isolated() {
        int cursor = 0;
        for (int v : isolated_) {
            if (image_[v] != -1) continue;  // pinned
            while (used_[cursor]) ++cursor;
            image_[v] = cursor;
            used_[cursor] = 1;
        }
    }

    const SimpleGraph& pattern_;
    const SimpleGraph& host_;
    long long budget_;
    const std::vector<std::pair<int, int>>& pins_;
    long long nodes_ = 0;
    bool timeout_ = false;
    bool allow_symmetry_ = true;

    std::vector<Component> components_;
    std::vector<int> isolated_;
    std::vector<int> order_;
    std::vector<int> comp_of_pos_;
    std::vector<int> image_;
    std::vector<char> used_;
    std::vector<int> residual_;
};

}  // namespace

EmbedResult embed_backtracking(const SimpleGraph& pattern, const SimpleGraph& host,
                               long long node_budget) {
    static const std::vector<std::pair<int, int>> kNoPins;
    Searcher searcher(pattern, host, node_budget, kNoPins);
    return searcher.run();
}

EmbedResult embed_backtracking_pinned(const SimpleGraph& pattern, const SimpleGraph& host,
                                      const std::vector<std::pair<int, int>>& pins,
                                      long long node_budget) {
    Searcher searcher(pattern, host, node_budget, pins);
    return searcher.run();
}

namespace {

// Enumerates every labeled graph with the given degrees: repeatedly satisfy
// the lowest open vertex, choosing its partners among higher open vertices.
// Each labeled graph is produced exactly once.
class RealizationEnumerator {
public:
    RealizationEnumerator(const DegreeSequence& seq, int max_patterns, long long budget)
        : seq_(seq), max_patterns_(max_patterns), budget_(budget) {}

    RealizationEnumeration run() {
        RealizationEnumeration out;
        if (!is_graphic(seq_)) {
            out.complete = true;
            return out;
        }
        const int n = seq_.size();
        residual_ = seq_.degrees;
        work_ = SimpleGraph(n);
        aborted_ = false;
        dfs();
        out.patterns = std::move(unique_);
        out.complete = !aborted_;
        out.nodes = nodes_;
        return out;
    }

private:
    void dfs() {
        if (aborted_) return;
        if (--budget_ < 0) {
            aborted_ = true;
            return;
        }
        ++nodes_;
        int u = -1;
        for (int v = 0; v < seq_.size(); ++v) {
            if (residual_[v] > 0) {
                u = v;
                break;
            }
        }
        if (u == -1) {
            emit();
            return;
        }
        std::vector<int> open;
        for (int w = u + 1; w < seq_.size(); ++w) {
            if (residual_[w] > 0) open.push_back(w);
        }
        const int need = residual_[u];
        if (static_cast<int>(open.size()) < need) return;
        std::vector<int> pick(need);
        choose(u, open, pick, 0, 0);
    }

    void choose(int u, const std::vector<int>& open, std::vector<int>& pick, int depth, int from) {
        if (aborted_) return;
        if (depth == static_cast<int>(pick.size())) {
            residual_[u] = 0;
            for (int w : pick) {
                --residual_[w];
                work_.add_edge(u, w);
            }
            dfs();
            residual_[u] = static_cast<int>(pick.size());
            for (int w : pick) {
                ++residual_[w];
                work_.remove_edge(u, w);
            }
            return;
        }
        for (int i = from; i < static_cast<int>(open.size()); ++i) {
            pick[depth] = open[i];
            choose(u, open, pick, depth + 1, i + 1);
            if (aborted_) return;
        }
    }

    void emit() {
        if (static_cast<int>(unique_.size()) >= max_patterns_) {
            aborted_ = true;
            return;
        }
        std::vector<int> key = signature(work_);
        auto& bucket = buckets_[key];
        for (int idx : bucket) {
            if (graphs_isomorphic(work_, unique_[idx], 100'000)) return;
        }
        bucket.push_back(static_cast<int>(unique_.size()));
        unique_.push_back(work_);
    }

    static std::vector<int> signature(const SimpleGraph& g) {
        std::vector<std::vector<int>> per_vertex;
        for (int v = 0; v < g.num_vertices(); ++v) {
            std::vector<int> s;
            for (int u : g.neighbors(v)) s.push_back(g.degree(u));
            std::sort(s.begin(), s.end());
            s.insert(s.begin(), g.degree(v));
            per_vertex.push_back(std::move(s));
        }
        std::sort(per_vertex.begin(), per_vertex.end());
        std::vector<int> flat;
        for (const auto& s : per_vertex) {
            flat.push_back(-1);
            flat.insert(flat.end(), s.begin(), s.end());
        }
        return flat;
    }

    const DegreeSequence& seq_;
    int max_patterns_;
    long long budget_;
    long long nodes_ = 0;
    bool aborted_ = false;
    std::vector<int> residual_;
    SimpleGraph work_;
    std::vector<SimpleGraph> unique_;
    std::map<std::vector<int>, std::vector<int>> buckets_;
};

}  // namespace

RealizationEnumeration enumerate_realizations(const DegreeSequence& seq, int max_patterns,
                                              long long node_budget) {
    RealizationEnumerator e(seq, max_patterns, node_budget);
    return e.run();
}

SequenceEmbedResult embed_sequence(const DegreeSequence& seq, const SimpleGraph& host,
                                   long long node_budget, int max_patterns) {
    SequenceEmbedResult out;
    if (seq.size() > host.num_vertices()) {
        out.status = SearchStatus::Absent;
        return out;
    }
    if (!is_graphic(seq)) {
        out.status = SearchStatus::Absent;
        return out;
    }
    RealizationEnumeration enumeration = enumerate_realizations(seq, max_patterns, node_budget);
    long long remaining = node_budget - enumeration.nodes;
    out.nodes = enumeration.nodes;
    bool unresolved = !enumeration.complete;
    for (const SimpleGraph& pattern : enumeration.patterns) {
        if (remaining <= 0) {
            unresolved = true;
            break;
        }
        EmbedResult r = embed_backtracking(pattern, host, remaining);
        remaining -= r.nodes;
        out.nodes += r.nodes;
        if (r.found()) {
            out.status = SearchStatus::Found;
            out.map = std::move(r.map);
            out.realization = pattern;
            return out;
        }
        if (r.status == SearchStatus::Timeout) unresolved = true;
    }
    out.status = unresolved ? SearchStatus::Timeout : SearchStatus::Absent;
    return out;
}

bool parity_obstruction(const DegreeSequence& seq, const SimpleGraph& host) {
    if (seq.size() == 0) return false;
    for (int d : seq.degrees) {
        if (d % 2 == 0) return false;
    }
    for (const auto& comp : host.connected_components()) {
        if (comp.size() % 2 == 1) return true;
    }
    return false;
}

EditSearchResult embed_with_edits(const SimpleGraph& host, const DegreeSequence& seq, int q,
                                  int edit_budget, long long node_budget) {
    if (q < 1) throw Error("q must be at least 1");
    if (host.num_vertices() > 14 || edit_budget > 2) {
        throw BudgetExceededError("edit search supports hosts up to 14 vertices and 2 edits");
    }
    if (edit_budget < 0) throw Error("edit budget must be nonnegative");

    EditSearchResult out;
    RealizationEnumeration enumeration = enumerate_realizations(seq, 20000, node_budget);
    long long remaining = node_budget - enumeration.nodes;
    bool unresolved = !enumeration.complete;

    const int n = host.num_vertices();
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }

    std::vector<std::vector<int>> edit_sets = {{}};
    for (int k = 1; k <= edit_budget; ++k) {
        std::vector<int> idx(k);
        std::function<void(int, int)> gen = [&](int depth, int from) {
            if (depth == k) {
                edit_sets.push_back(idx);
                return;
            }
            for (int i = from; i < static_cast<int>(pairs.size()); ++i) {
                idx[depth] = i;
                gen(depth + 1, i + 1);
            }
        };
        gen(0, 0);
    }

    for (const auto& set : edit_sets) {
        SimpleGraph edited = host;
        std::vector<EdgeEdit> edits;
        for (int i : set) {
            auto [u, v] = pairs[i];
            if (edited.has_edge(u, v)) {
                edited.remove_edge(u, v);
                edits.push_back({u, v, false});
            } else {
                edited.add_edge(u, v);
                edits.push_back({u, v, true});
            }
        }
        for (const SimpleGraph& pattern : enumeration.patterns) {
            if (remaining <= 0) {
                unresolved = true;
                break;
            }
            EmbedResult r = embed_backtracking(pattern, edited, remaining);
            remaining -= r.nodes;
            if (r.found()) {
                out.status = SearchStatus::Found;
                out.edited_host = std::move(edited);
                out.edits = std::move(edits);
                out.map = std::move(r.map);
                out.realization = pattern;
                return out;
            }
            if (r.status == SearchStatus::Timeout) unresolved = true;
        }
        if (remaining <= 0) break;
    }
    out.status = unresolved ? SearchStatus::Timeout : SearchStatus::Absent;
    return out;
}

}  // namespace degembed
