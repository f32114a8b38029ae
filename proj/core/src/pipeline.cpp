#include "degembed/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "degembed/errors.hpp"
#include "degembed/gadgets.hpp"
#include "degembed/oracle.hpp"
#include "degembed/rng.hpp"

namespace degembed {

const char* to_string(PipelineStage stage) {
    switch (stage) {
        case PipelineStage::Realize: return "realize";
        case PipelineStage::OraclePlace: return "oracle_place";
        case PipelineStage::ClusterGraph: return "cluster_graph";
        case PipelineStage::Stars: return "stars";
        case PipelineStage::SuperRegularize: return "super_regularize";
        case PipelineStage::Assign: return "assign";
        case PipelineStage::Phase1: return "phase1";
        case PipelineStage::Distribute: return "distribute";
        case PipelineStage::Phase2: return "phase2";
        case PipelineStage::Validate: return "validate";
    }
    return "?";
}

ClusterPartition build_cluster_graph(const SimpleGraph& host, int m, double d, std::uint64_t seed,
                                     int max_clusters) {
    if (m < 4) throw DegenerateInputError("cluster size must be at least 4");
    if (host.num_vertices() < 2 * m) {
        throw DegenerateInputError("host has " + std::to_string(host.num_vertices()) +
                                   " vertices, need at least " + std::to_string(2 * m));
    }
    ClusterPartition p;
    p.host = host;
    p.density_threshold = d;
    p.cluster_size = m;

    // Shuffle within each connected component and concatenate, so that a
    // disconnected host yields pure clusters with zero cross density.
    Rng rng(mix_seed(seed, 0xC1));
    std::vector<int> ordered;
    ordered.reserve(host.num_vertices());
    for (const auto& comp : host.connected_components()) {
        std::vector<int> block = comp;
        rng.shuffle(block);
        ordered.insert(ordered.end(), block.begin(), block.end());
    }

    int ell = host.num_vertices() / m;
    if (max_clusters > 0) ell = std::min(ell, max_clusters);
    for (int i = 0; i < ell; ++i) {
        std::vector<int> cluster(ordered.begin() + static_cast<std::ptrdiff_t>(i) * m,
                                 ordered.begin() + static_cast<std::ptrdiff_t>(i + 1) * m);
        std::sort(cluster.begin(), cluster.end());
        p.clusters.push_back(std::move(cluster));
    }
    p.exceptional.assign(ordered.begin() + static_cast<std::ptrdiff_t>(ell) * m, ordered.end());
    std::sort(p.exceptional.begin(), p.exceptional.end());

    p.cluster_graph = SimpleGraph(ell);
    for (int i = 0; i < ell; ++i) {
        for (int j = i + 1; j < ell; ++j) {
            const double density =
                static_cast<double>(host.edges_between(p.clusters[i], p.clusters[j])) / (1.0 * m * m);
            if (density >= d - 1e-12) p.cluster_graph.add_edge(i, j);
        }
    }
    return p;
}

void super_regularize(ClusterPartition& p, const StarDecomposition& stars, double d) {
    const double threshold = 2.0 * d * p.cluster_size / 3.0;
    auto discard_low = [&](int from, int opposite) {
        std::vector<int> keep;
        for (int v : p.clusters[from]) {
            if (p.host.degree_into(v, p.clusters[opposite]) <= threshold + 1e-12) {
                p.exceptional.push_back(v);
            } else {
                keep.push_back(v);
            }
        }
        p.clusters[from] = std::move(keep);
    };
    for (const Star& s : stars.stars) {
        for (int leaf : s.leaves) {
            discard_low(s.center, leaf);
            discard_low(leaf, s.center);
        }
    }

    int new_m = p.cluster_size;
    for (const auto& cluster : p.clusters) {
        new_m = std::min(new_m, static_cast<int>(cluster.size()));
    }
    if (new_m <= 0) {
        throw DegenerateInputError("a cluster was emptied while enforcing minimum cross degrees");
    }
    for (auto& cluster : p.clusters) {
        while (static_cast<int>(cluster.size()) > new_m) {
            p.exceptional.push_back(cluster.back());
            cluster.pop_back();
        }
    }
    std::sort(p.exceptional.begin(), p.exceptional.end());
    p.cluster_size = new_m;
}

Assignment assign_leftovers(const ClusterPartition& p, const StarDecomposition& stars, double eta,
                            double d, std::uint64_t seed) {
    (void)seed;  // the least-loaded rule is deterministic
    const int ell = static_cast<int>(p.clusters.size());
    const int m = p.cluster_size;
    const double need = eta * m / 4.0;
    const double cap = std::sqrt(d) * m;

    Assignment out;
    out.per_cluster.resize(ell);
    std::vector<int> load(ell, 0);

    for (int v : p.exceptional) {
        std::vector<AssignmentEntry> permitted;
        for (const Star& s : stars.stars) {
            int best_leaf = -1, best_deg = -1;
            for (int leaf : s.leaves) {
                const int deg = p.host.degree_into(v, p.clusters[leaf]);
                if (deg >= need - 1e-9 && deg > best_deg) {
                    best_deg = deg;
                    best_leaf = leaf;
                }
            }
            if (best_leaf != -1) permitted.push_back({v, s.center, best_leaf, true});
            if (static_cast<int>(s.leaves.size()) < stars.max_leaves) {
                const int deg = p.host.degree_into(v, p.clusters[s.center]);
                if (deg >= need - 1e-9) {
                    for (int leaf : s.leaves) permitted.push_back({v, leaf, s.center, false});
                }
            }
        }
        if (permitted.empty()) {
            throw UnassignableError(v, "exceptional vertex " + std::to_string(v) +
                                           " has no permitted cluster");
        }
        const AssignmentEntry* best = &permitted.front();
        for (const auto& e : permitted) {
            if (load[e.cluster] < load[best->cluster] ||
                (load[e.cluster] == load[best->cluster] && e.cluster < best->cluster)) {
                best = &e;
            }
        }
        if (load[best->cluster] + 1 > cap + 1e-9) {
            throw OverloadError("cluster " + std::to_string(best->cluster) +
                                " would exceed its sqrt(d)m assignment cap");
        }
        ++load[best->cluster];
        out.per_cluster[best->cluster].push_back(v);
        out.entries.push_back(*best);
    }
    return out;
}

namespace {

// Split the clusters of one star into halves, redrawing until every relevant
// vertex keeps more than a third of its cross degree in both halves.
void draw_halving(const ClusterPartition& p, const Star& star, const Assignment& assignment,
                  Rng& rng, Halving& out) {
    std::vector<int> members = {star.center};
    members.insert(members.end(), star.leaves.begin(), star.leaves.end());

    std::vector<std::pair<int, int>> pairs;  // (cluster, opposite) within the star
    for (int leaf : star.leaves) {
        pairs.emplace_back(star.center, leaf);
        pairs.emplace_back(leaf, star.center);
    }

    double best_score = -1e18;
    std::vector<std::vector<int>> best_primed(members.size()), best_doubled(members.size());
    for (int attempt = 0; attempt < 10; ++attempt) {
        std::vector<std::vector<int>> primed(members.size()), doubled(members.size());
        for (std::size_t k = 0; k < members.size(); ++k) {
            for (int v : p.clusters[members[k]]) {
                (rng.bernoulli(0.5) ? primed[k] : doubled[k]).push_back(v);
            }
            if (primed[k].empty() && !doubled[k].empty()) {
                primed[k].push_back(doubled[k].back());
                doubled[k].pop_back();
            } else if (doubled[k].empty() && !primed[k].empty()) {
                doubled[k].push_back(primed[k].back());
                primed[k].pop_back();
            }
        }
        auto half_of = [&](int cluster) {
            const auto it = std::find(members.begin(), members.end(), cluster);
            return static_cast<std::size_t>(it - members.begin());
        };
        // Score: min over vertices of 3*min(deg', deg'') - deg; >= 1 passes.
        double score = 1e18;
        auto account = [&](int v, int opposite) {
            const int total = p.host.degree_into(v, p.clusters[opposite]);
            if (total == 0) return;
            const std::size_t k = half_of(opposite);
            const int dp = p.host.degree_into(v, primed[k]);
            const int dd = p.host.degree_into(v, doubled[k]);
            score = std::min(score, static_cast<double>(3 * std::min(dp, dd) - total));
        };
        for (auto [a, b] : pairs) {
            for (int v : p.clusters[a]) account(v, b);
        }
        for (const auto& e : assignment.entries) {
            if (std::find(members.begin(), members.end(), e.cluster) != members.end()) {
                account(e.vertex, e.partner);
            }
        }
        if (score > best_score) {
            best_score = score;
            best_primed = primed;
            best_doubled = doubled;
        }
        if (best_score >= 1) break;
    }
    for (std::size_t k = 0; k < members.size(); ++k) {
        out.primed[members[k]] = std::move(best_primed[k]);
        out.doubled[members[k]] = std::move(best_doubled[k]);
    }
}

struct Walk {
    std::vector<std::pair<int, int>> placements;  // (pattern global label, host vertex)
};

// Common-neighborhood chain placement of one bipartite component across a
// cluster pair. chain_hosts supplies candidates for the chain class (the
// first chain vertex may be pinned to `seed_vertex`), pool_hosts the running
// neighborhood for the opposite class.
bool chain_place(const SimpleGraph& host, const PatternComponent& comp, std::uint8_t chain_side,
                 int seed_vertex, const std::vector<int>& chain_hosts,
                 const std::vector<int>& pool_hosts, const std::vector<char>& used, double d,
                 Walk& out) {
    std::vector<int> chain_locals, other_locals;
    for (int v = 0; v < comp.size(); ++v) {
        (comp.side[v] == chain_side ? chain_locals : other_locals).push_back(v);
    }
    if (chain_locals.empty()) return false;

    std::vector<char> taken(host.num_vertices(), 0);
    std::vector<int> pool;
    for (int w : pool_hosts) {
        if (!used[w]) pool.push_back(w);
    }

    std::size_t next = 0;
    if (seed_vertex >= 0) {
        out.placements.emplace_back(comp.global_labels[chain_locals[0]], seed_vertex);
        taken[seed_vertex] = 1;
        std::vector<int> filtered;
        for (int w : pool) {
            if (host.has_edge(seed_vertex, w)) filtered.push_back(w);
        }
        pool = std::move(filtered);
        next = 1;
    }
    for (; next < chain_locals.size(); ++next) {
        const double need = d * static_cast<double>(pool.size()) / 3.0;
        int best = -1, best_deg = -1;
        for (int c : chain_hosts) {
            if (used[c] || taken[c]) continue;
            const int deg = host.degree_into(c, pool);
            if (deg + 1e-9 < need) continue;
            if (deg > best_deg) {
                best_deg = deg;
                best = c;
            }
        }
        if (best == -1) return false;
        out.placements.emplace_back(comp.global_labels[chain_locals[next]], best);
        taken[best] = 1;
        std::vector<int> filtered;
        for (int w : pool) {
            if (host.has_edge(best, w)) filtered.push_back(w);
        }
        pool = std::move(filtered);
    }
    if (pool.size() < other_locals.size()) return false;
    for (std::size_t i = 0; i < other_locals.size(); ++i) {
        out.placements.emplace_back(comp.global_labels[other_locals[i]], pool[i]);
    }
    return true;
}

}  // namespace

Phase1Result phase1_cover(const ClusterPartition& p, const StarDecomposition& stars,
                          const Assignment& assignment, const ComponentList& components,
                          double eta, double d, std::uint64_t seed, long long fallback_budget) {
    (void)eta;  // the degree floor is certified by the assignment itself
    int pattern_n = 0;
    for (const auto& c : components.components) {
        for (int label : c.global_labels) pattern_n = std::max(pattern_n, label + 1);
    }
    Phase1Result res;
    res.partial = EmbeddingMap(pattern_n);
    res.host_used.assign(p.host.num_vertices(), 0);
    res.component_used.assign(components.components.size(), 0);
    res.halving.primed.resize(p.clusters.size());
    res.halving.doubled.resize(p.clusters.size());

    Rng rng(mix_seed(seed, 0xF1));
    for (const Star& s : stars.stars) draw_halving(p, s, assignment, rng, res.halving);

    // Components tried smallest-first: covering burns one component per vertex.
    std::vector<int> by_size(components.components.size());
    std::iota(by_size.begin(), by_size.end(), 0);
    std::stable_sort(by_size.begin(), by_size.end(), [&](int a, int b) {
        return components.components[a].size() < components.components[b].size();
    });

    auto commit = [&](const Walk& walk, int comp_idx) {
        for (auto [label, hostv] : walk.placements) {
            res.partial.image[label] = hostv;
            res.host_used[hostv] = 1;
        }
        res.component_used[comp_idx] = 1;
    };

    for (const AssignmentEntry& e : assignment.entries) {
        const std::uint8_t chain_side = e.to_center ? 0 : 1;
        bool covered = false;
        for (int comp_idx : by_size) {
            if (res.component_used[comp_idx]) continue;
            const PatternComponent& comp = components.components[comp_idx];
            if (!comp.bipartite) continue;
            // The prescribed orientation first; the flipped one still yields a
            // valid placement when the assigned vertex has too few neighbors
            // to play its nominal class.
            for (std::uint8_t side : {chain_side, static_cast<std::uint8_t>(1 - chain_side)}) {
                Walk walk;
                if (chain_place(p.host, comp, side, e.vertex, res.halving.primed[e.cluster],
                                res.halving.primed[e.partner], res.host_used, d, walk)) {
                    commit(walk, comp_idx);
                    covered = true;
                    break;
                }
            }
            break;  // one dedicated component per vertex; fall back on failure
        }
        if (!covered && fallback_budget > 0) {
            // Exact pinned search over the vacant vertices of the whole star.
            std::vector<int> sub = {e.vertex};
            for (const Star& s : stars.stars) {
                bool member = s.center == e.cluster;
                for (int leaf : s.leaves) member = member || leaf == e.cluster;
                if (!member) continue;
                for (int w : p.clusters[s.center]) {
                    if (!res.host_used[w]) sub.push_back(w);
                }
                for (int leaf : s.leaves) {
                    for (int w : p.clusters[leaf]) {
                        if (!res.host_used[w]) sub.push_back(w);
                    }
                }
                break;
            }
            SimpleGraph sub_host = p.host.induced(sub);
            for (int comp_idx : by_size) {
                if (res.component_used[comp_idx]) continue;
                const PatternComponent& comp = components.components[comp_idx];
                if (!comp.bipartite) continue;
                // Chain-side locals first, then any pattern vertex.
                std::vector<int> locals;
                for (int v = 0; v < comp.size(); ++v) {
                    if (comp.side[v] == chain_side) locals.push_back(v);
                }
                for (int v = 0; v < comp.size(); ++v) {
                    if (comp.side[v] != chain_side) locals.push_back(v);
                }
                for (int local : locals) {
                    EmbedResult r = embed_backtracking_pinned(comp.graph, sub_host, {{local, 0}},
                                                              fallback_budget);
                    if (r.found()) {
                        Walk walk;
                        for (int v = 0; v < comp.size(); ++v) {
                            walk.placements.emplace_back(comp.global_labels[v], sub[r.map[v]]);
                        }
                        commit(walk, comp_idx);
                        covered = true;
                        break;
                    }
                }
                if (covered) break;
            }
        }
        if (!covered) {
            throw CoverFailedError(e.vertex, "no component covers assigned vertex " +
                                                 std::to_string(e.vertex));
        }
    }
    return res;
}

DistributeResult distribute_components(const ComponentList& components, StarVacancies star, int D,
                                       int q) {
    if (star.h < 1 || star.h > q) throw Error("star ratio h must lie in [1, q]");
    if (star.center > star.leaves || star.leaves > static_cast<long long>(star.h) * star.center) {
        throw Error("need center <= leaves <= h * center vacancies");
    }
    DistributeResult out;
    long long a = star.center, b = star.leaves;
    for (const PatternComponent& comp : components.components) {
        if (!comp.bipartite) throw Error("side assignment expects bipartite components");
        const int small = comp.small_class_size();
        const int large = comp.large_class_size();
        const bool larger_to_center = static_cast<long long>(star.h) * a - b > 0;
        const int to_a = larger_to_center ? large : small;
        const int to_b = larger_to_center ? small : large;
        if (a < to_a || b < to_b) {
            throw InfeasibleError("component does not fit (center=" + std::to_string(a) +
                                  ", leaves=" + std::to_string(b) + "); stop bounds: center < " +
                                  std::to_string(4LL * D * D) + ", leaves < " +
                                  std::to_string((2LL * q + 1) * 2 * D * D));
        }
        a -= to_a;
        b -= to_b;
        out.larger_to_center.push_back(larger_to_center ? 1 : 0);
        out.trace.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    out.final_center = static_cast<int>(a);
    out.final_leaves = static_cast<int>(b);
    return out;
}

namespace {

PatternComponent make_component(const SimpleGraph& whole, const std::vector<int>& vertices) {
    PatternComponent c;
    c.graph = whole.induced(vertices);
    c.global_labels = vertices;
    if (c.graph.num_edges() > 0) {
        auto side = c.graph.bipartition();
        if (!side.empty()) {
            int zeros = 0;
            for (auto s : side) zeros += s == 0;
            if (2 * zeros > c.graph.num_vertices()) {
                for (auto& s : side) s = 1 - s;
            }
            c.bipartite = true;
            c.side = std::move(side);
        }
    }
    return c;
}

struct PlacedStar {
    int star_idx = -1;
    std::vector<int> comp_indices;
    std::vector<std::uint8_t> larger_to_center;
    bool oracle_only = false;  // skip structured walks, search the star directly
};

class PipelineRun {
public:
    PipelineRun(const SimpleGraph& host, ComponentList comps, int pattern_n, int q,
                const PipelineParams& params, PipelineResult&& res)
        : host_(host),
          comps_(std::move(comps)),
          pattern_n_(pattern_n),
          q_(q),
          params_(params),
          res_(std::move(res)) {}

    PipelineResult run() {
        global_map_ = EmbeddingMap(pattern_n_);
        host_used_.assign(host_.num_vertices(), 0);
        classify();

        if (!place_nonbipartite()) return std::move(res_);
        if (!bip_comps_.empty()) {
            if (!cluster_stages()) return std::move(res_);
        } else {
            skip_cluster_stages();
        }
        fill_isolated();
        validate();
        return std::move(res_);
    }

private:
    void done(PipelineStage s) { res_.completed.push_back(s); }

    void fail(PipelineStage s, const std::string& detail) {
        res_.failed_stage = s;
        res_.detail = detail;
    }

    void classify() {
        for (std::size_t i = 0; i < comps_.components.size(); ++i) {
            const auto& c = comps_.components[i];
            if (c.size() == 1 && c.graph.num_edges() == 0) {
                isolated_comps_.push_back(static_cast<int>(i));
            } else if (c.bipartite) {
                bip_comps_.push_back(static_cast<int>(i));
            } else {
                oracle_comps_.push_back(static_cast<int>(i));
            }
        }
    }

    void commit(int pattern_label, int host_vertex) {
        global_map_.image[pattern_label] = host_vertex;
        host_used_[host_vertex] = 1;
    }

    // Non-bipartite pieces go through the exact search on the whole host,
    // in one call so the search can backtrack across them.
    bool place_nonbipartite() {
        if (oracle_comps_.empty()) {
            done(PipelineStage::OraclePlace);
            return true;
        }
        SimpleGraph pattern;
        std::vector<int> label_of_local;
        for (int idx : oracle_comps_) {
            const auto& c = comps_.components[idx];
            pattern = SimpleGraph::disjoint_union(pattern, c.graph);
            label_of_local.insert(label_of_local.end(), c.global_labels.begin(),
                                  c.global_labels.end());
        }
        EmbedResult r = embed_backtracking(pattern, host_, params_.place_budget);
        if (!r.found()) {
            fail(PipelineStage::OraclePlace,
                 std::string("non-bipartite placement: ") + to_string(r.status));
            return false;
        }
        for (int v = 0; v < pattern.num_vertices(); ++v) commit(label_of_local[v], r.map[v]);
        done(PipelineStage::OraclePlace);
        return true;
    }

    void skip_cluster_stages() {
        done(PipelineStage::ClusterGraph);
        done(PipelineStage::Stars);
        done(PipelineStage::SuperRegularize);
        done(PipelineStage::Assign);
        done(PipelineStage::Phase1);
        done(PipelineStage::Distribute);
        done(PipelineStage::Phase2);
    }

    bool cluster_stages() {
        for (int v = 0; v < host_.num_vertices(); ++v) {
            if (!host_used_[v]) free_.push_back(v);
        }
        SimpleGraph local_host = host_.induced(free_);

        ClusterPartition p;
        try {
            // Soak the remainder into the clusters: fix the cluster count at
            // the configured size (even for single-leaf stars), then grow the
            // cluster size so fewer than ell vertices stay exceptional.
            const int rem = local_host.num_vertices();
            int ell = rem / params_.cluster_size;
            if (q_ == 1) ell -= ell % 2;
            if (ell < 2) throw DegenerateInputError("too few vertices for two clusters");
            p = build_cluster_graph(local_host, rem / ell, params_.density, params_.seed, ell);
        } catch (const Error& e) {
            fail(PipelineStage::ClusterGraph, e.what());
            return false;
        }
        done(PipelineStage::ClusterGraph);

        StarDecomposition stars;
        try {
            stars = star_decompose(p.cluster_graph, q_);
        } catch (const StuckError& e) {
            fail(PipelineStage::Stars, e.what());
            return false;
        }
        done(PipelineStage::Stars);

        try {
            super_regularize(p, stars, params_.density);
        } catch (const Error& e) {
            fail(PipelineStage::SuperRegularize, e.what());
            return false;
        }
        done(PipelineStage::SuperRegularize);

        Assignment assignment;
        try {
            assignment = assign_leftovers(p, stars, params_.eta, params_.density, params_.seed);
        } catch (const Error& e) {
            fail(PipelineStage::Assign, e.what());
            return false;
        }
        done(PipelineStage::Assign);

        ComponentList bip_list;
        for (int idx : bip_comps_) bip_list.components.push_back(comps_.components[idx]);

        Phase1Result ph1;
        try {
            ph1 = phase1_cover(p, stars, assignment, bip_list, params_.eta, params_.density,
                               params_.seed);
        } catch (const Error& e) {
            fail(PipelineStage::Phase1, e.what());
            return false;
        }
        done(PipelineStage::Phase1);
        local_used_ = ph1.host_used;
        for (int label = 0; label < ph1.partial.size(); ++label) {
            if (ph1.partial[label] != -1) commit(label, free_[ph1.partial[label]]);
        }

        std::vector<int> remaining;
        for (std::size_t i = 0; i < bip_list.components.size(); ++i) {
            if (!ph1.component_used[i]) remaining.push_back(static_cast<int>(i));
        }

        std::vector<PlacedStar> plans;
        if (!pack_stars(p, stars, bip_list, remaining, plans)) return false;
        done(PipelineStage::Distribute);

        if (!place_stars(p, stars, bip_list, plans)) return false;
        done(PipelineStage::Phase2);
        return true;
    }

    std::vector<int> vacant_of(const ClusterPartition& p, int cluster) const {
        std::vector<int> out;
        for (int v : p.clusters[cluster]) {
            if (!local_used_[v]) out.push_back(v);
        }
        return out;
    }

    // Component -> star packing. Spanning instances need exact fills, found
    // by a two-dimensional subset DP per star; otherwise first-fit decreasing
    // with the larger-class rule fixing each component's orientation.
    bool pack_stars(const ClusterPartition& p, const StarDecomposition& stars,
                    const ComponentList& bip_list, std::vector<int> remaining,
                    std::vector<PlacedStar>& plans) {
        const bool spanning = pattern_n_ == host_.num_vertices();
        std::vector<std::pair<int, int>> caps;  // (center, leaves) per star
        for (const Star& s : stars.stars) {
            int a = static_cast<int>(vacant_of(p, s.center).size());
            int b = 0;
            for (int leaf : s.leaves) b += static_cast<int>(vacant_of(p, leaf).size());
            caps.emplace_back(a, b);
        }

        if (spanning) {
            for (std::size_t k = 0; k < stars.stars.size(); ++k) {
                PlacedStar plan;
                plan.star_idx = static_cast<int>(k);
                if (exact_fill(bip_list, remaining, caps[k].first, caps[k].second, plan)) {
                    plans.push_back(std::move(plan));
                    continue;
                }
                // No side-respecting fill; try any subset with the right
                // total and hand the star to the exact search.
                plan.oracle_only = true;
                if (total_fill(bip_list, remaining, caps[k].first + caps[k].second, plan)) {
                    plans.push_back(std::move(plan));
                    continue;
                }
                // Per-star planning is stuck; everything left goes to one
                // whole-remainder search.
                break;
            }
            global_rest_ = std::move(remaining);
            remaining.clear();
        } else {
            plans.resize(stars.stars.size());
            for (std::size_t k = 0; k < stars.stars.size(); ++k) {
                plans[k].star_idx = static_cast<int>(k);
            }
            std::stable_sort(remaining.begin(), remaining.end(), [&](int x, int y) {
                return bip_list.components[x].size() > bip_list.components[y].size();
            });
            for (int idx : remaining) {
                const auto& comp = bip_list.components[idx];
                const int small = comp.small_class_size();
                const int large = comp.large_class_size();
                int best = -1;
                bool best_orient = false;
                for (std::size_t k = 0; k < stars.stars.size(); ++k) {
                    const int h = static_cast<int>(stars.stars[k].leaves.size());
                    auto [a, b] = caps[k];
                    const bool larger_to_center = static_cast<long long>(h) * a - b > 0;
                    const int to_a = larger_to_center ? large : small;
                    const int to_b = larger_to_center ? small : large;
                    if (a < to_a || b < to_b) continue;
                    if (best == -1 || a + b > caps[best].first + caps[best].second) {
                        best = static_cast<int>(k);
                        best_orient = larger_to_center;
                    }
                }
                if (best == -1) {
                    global_rest_.push_back(idx);
                    continue;
                }
                caps[best].first -= best_orient ? large : small;
                caps[best].second -= best_orient ? small : large;
                plans[best].comp_indices.push_back(idx);
                plans[best].larger_to_center.push_back(best_orient ? 1 : 0);
            }
        }
        return true;
    }

    // Subset of `remaining` whose total size is exactly `target`.
    bool total_fill(const ComponentList& bip_list, std::vector<int>& remaining, int target,
                    PlacedStar& plan) {
        const int k = static_cast<int>(remaining.size());
        std::vector<char> reach(target + 1, 0);
        std::vector<int> par_state(target + 1, -1);
        std::vector<short> par_item(target + 1, -1);
        reach[0] = 1;
        for (int j = 0; j < k; ++j) {
            const int size = bip_list.components[remaining[j]].size();
            for (int x = target; x >= size; --x) {
                if (!reach[x] && reach[x - size]) {
                    reach[x] = 1;
                    par_state[x] = x - size;
                    par_item[x] = static_cast<short>(j);
                }
            }
        }
        if (!reach[target]) return false;
        std::vector<char> chosen(k, 0);
        for (int x = target; x != 0; x = par_state[x]) chosen[par_item[x]] = 1;
        for (int j = 0; j < k; ++j) {
            if (chosen[j]) {
                plan.comp_indices.push_back(remaining[j]);
                plan.larger_to_center.push_back(0);
            }
        }
        std::vector<int> rest;
        for (int j = 0; j < k; ++j) {
            if (!chosen[j]) rest.push_back(remaining[j]);
        }
        remaining = std::move(rest);
        return true;
    }

    // Subset of `remaining` with per-component orientations hitting (a, b)
    // exactly; chosen components are removed from `remaining`.
    bool exact_fill(const ComponentList& bip_list, std::vector<int>& remaining, int a, int b,
                    PlacedStar& plan) {
        const int k = static_cast<int>(remaining.size());
        const int width = b + 1;
        // first-reach parents: item index, orientation, previous state
        std::vector<std::vector<int>> from(static_cast<std::size_t>(k) + 1);
        std::vector<char> reach(static_cast<std::size_t>(a + 1) * width, 0);
        std::vector<int> par_state(static_cast<std::size_t>(a + 1) * width, -1);
        std::vector<short> par_item(static_cast<std::size_t>(a + 1) * width, -1);
        std::vector<char> par_orient(static_cast<std::size_t>(a + 1) * width, 0);
        auto at = [&](int x, int y) { return static_cast<std::size_t>(x) * width + y; };
        reach[at(0, 0)] = 1;

        for (int j = 0; j < k; ++j) {
            const auto& comp = bip_list.components[remaining[j]];
            const int small = comp.small_class_size();
            const int large = comp.large_class_size();
            // Iterate states downward so each item is used at most once.
            for (int x = a; x >= 0; --x) {
                for (int y = b; y >= 0; --y) {
                    if (!reach[at(x, y)]) continue;
                    const int options[2][2] = {{large, small}, {small, large}};
                    for (int o = 0; o < 2; ++o) {
                        const int nx = x + options[o][0];
                        const int ny = y + options[o][1];
                        if (nx > a || ny > b || reach[at(nx, ny)]) continue;
                        reach[at(nx, ny)] = 1;
                        par_state[at(nx, ny)] = static_cast<int>(at(x, y));
                        par_item[at(nx, ny)] = static_cast<short>(j);
                        par_orient[at(nx, ny)] = static_cast<char>(o);
                    }
                }
            }
        }
        if (!reach[at(a, b)]) return false;
        std::vector<char> chosen(k, 0);
        int state = static_cast<int>(at(a, b));
        while (state != static_cast<int>(at(0, 0))) {
            const int j = par_item[state];
            chosen[j] = 1;
            plan.comp_indices.push_back(remaining[j]);
            plan.larger_to_center.push_back(par_orient[state] == 0 ? 1 : 0);
            state = par_state[state];
        }
        std::vector<int> rest;
        for (int j = 0; j < k; ++j) {
            if (!chosen[j]) rest.push_back(remaining[j]);
        }
        remaining = std::move(rest);
        return true;
    }

    bool place_stars(const ClusterPartition& p, const StarDecomposition& stars,
                     const ComponentList& bip_list, const std::vector<PlacedStar>& plans) {
        for (const PlacedStar& plan : plans) {
            const Star& star = stars.stars[plan.star_idx];
            std::vector<int> fallback;
            if (plan.oracle_only) {
                fallback = plan.comp_indices;
            } else {
                for (std::size_t i = 0; i < plan.comp_indices.size(); ++i) {
                    const auto& comp = bip_list.components[plan.comp_indices[i]];
                    const std::uint8_t center_side = plan.larger_to_center[i] ? 1 : 0;
                    int leaf = -1, leaf_room = -1;
                    for (int cand : star.leaves) {
                        const int room = static_cast<int>(vacant_of(p, cand).size());
                        if (room > leaf_room) {
                            leaf_room = room;
                            leaf = cand;
                        }
                    }
                    Walk walk;
                    bool ok = leaf != -1 &&
                              chain_place(p.host, comp, center_side, -1, vacant_of(p, star.center),
                                          vacant_of(p, leaf), local_used_, params_.density, walk);
                    if (ok) {
                        for (auto [label, hostv] : walk.placements) {
                            local_used_[hostv] = 1;
                            commit(label, free_[hostv]);
                        }
                    } else {
                        fallback.push_back(plan.comp_indices[i]);
                    }
                }
            }
            if (!fallback.empty()) {
                std::vector<int> sub = vacant_of(p, star.center);
                for (int leaf : star.leaves) {
                    const auto v = vacant_of(p, leaf);
                    sub.insert(sub.end(), v.begin(), v.end());
                }
                if (!oracle_place_local(p, sub, bip_list, fallback, params_.star_oracle_budget,
                                        nullptr)) {
                    // The star cannot host its share; retry across all stars.
                    global_rest_.insert(global_rest_.end(), fallback.begin(), fallback.end());
                }
            }
        }
        if (!global_rest_.empty()) {
            std::vector<int> sub;
            for (std::size_t c = 0; c < p.clusters.size(); ++c) {
                const auto v = vacant_of(p, static_cast<int>(c));
                sub.insert(sub.end(), v.begin(), v.end());
            }
            if (!oracle_place_local(p, sub, bip_list, global_rest_,
                                    4 * params_.star_oracle_budget, "whole-remainder placement")) {
                return false;
            }
        }
        return true;
    }

    // Places the listed components onto the given local vertices by exact
    // search; `what` non-null makes a miss a recorded pipeline failure.
    bool oracle_place_local(const ClusterPartition& p, const std::vector<int>& sub,
                            const ComponentList& bip_list, const std::vector<int>& comp_idxs,
                            long long budget, const char* what) {
        SimpleGraph sub_host = p.host.induced(sub);
        SimpleGraph pattern;
        std::vector<int> label_of_local;
        for (int idx : comp_idxs) {
            const auto& c = bip_list.components[idx];
            pattern = SimpleGraph::disjoint_union(pattern, c.graph);
            label_of_local.insert(label_of_local.end(), c.global_labels.begin(),
                                  c.global_labels.end());
        }
        EmbedResult r = embed_backtracking(pattern, sub_host, budget);
        if (!r.found()) {
            if (what != nullptr) {
                fail(PipelineStage::Phase2, std::string(what) + ": " + to_string(r.status));
            }
            return false;
        }
        for (int v = 0; v < pattern.num_vertices(); ++v) {
            const int local = sub[r.map[v]];
            local_used_[local] = 1;
            commit(label_of_local[v], free_[local]);
        }
        return true;
    }

    void fill_isolated() {
        int cursor = 0;
        for (int idx : isolated_comps_) {
            while (cursor < host_.num_vertices() && host_used_[cursor]) ++cursor;
            if (cursor >= host_.num_vertices()) return;  // caught by validation
            commit(comps_.components[idx].global_labels[0], cursor);
        }
    }

    void validate() {
        for (int v = 0; v < pattern_n_; ++v) {
            if (global_map_[v] == -1) {
                fail(PipelineStage::Validate, "pattern vertex " + std::to_string(v) + " unmapped");
                return;
            }
        }
        if (!is_valid_embedding(res_.realization, host_, global_map_)) {
            fail(PipelineStage::Validate, "produced map fails the validity check");
            return;
        }
        done(PipelineStage::Validate);
        res_.map = std::move(global_map_);
        res_.success = true;
    }

    const SimpleGraph& host_;
    ComponentList comps_;
    int pattern_n_;
    int q_;
    const PipelineParams& params_;
    PipelineResult res_;

    EmbeddingMap global_map_;
    std::vector<char> host_used_;    // global host labels
    std::vector<int> free_;          // local -> global host label
    std::vector<char> local_used_;   // local host labels
    std::vector<int> isolated_comps_, oracle_comps_, bip_comps_;
    std::vector<int> global_rest_;   // components handed to the whole-remainder search
};

ComponentList split_into_components(const SimpleGraph& realization) {
    ComponentList comps;
    for (const auto& comp : realization.connected_components()) {
        comps.components.push_back(make_component(realization, comp));
    }
    return comps;
}

}  // namespace

PipelineResult embed_pipeline(const SimpleGraph& host, const DegreeSequence& seq, int q,
                              const PipelineParams& params) {
    if (q < 1) throw Error("q must be at least 1");
    if (seq.size() > host.num_vertices()) {
        throw Error("sequence longer than the host");
    }
    PipelineResult res;
    SimpleGraph realization;
    try {
        try {
            realization = build_bounded_realization(seq).graph;
        } catch (const InsufficientGadgetsError&) {
            realization = realize_graphic(seq);
        }
    } catch (const Error& e) {
        res.failed_stage = PipelineStage::Realize;
        res.detail = e.what();
        return res;
    }
    res.realization = realization;
    res.completed.push_back(PipelineStage::Realize);
    PipelineRun run(host, split_into_components(realization), seq.size(), q, params,
                    std::move(res));
    return run.run();
}

PipelineResult embed_pipeline(const SimpleGraph& host, const UnbalancedBipartiteSeq& seq, int q,
                              const PipelineParams& params) {
    if (q != seq.q) throw Error("q parameter must match the sequence's q");
    if (seq.size() > host.num_vertices()) {
        throw Error("sequence longer than the host");
    }
    PipelineResult res;
    ComponentList comps;
    try {
        comps = decompose_unbalanced(seq, params.max_degree);
    } catch (const Error& e) {
        res.failed_stage = PipelineStage::Realize;
        res.detail = e.what();
        return res;
    }
    SimpleGraph realization(seq.size());
    for (const auto& c : comps.components) {
        for (auto [u, v] : c.graph.edges()) {
            realization.add_edge(c.global_labels[u], c.global_labels[v]);
        }
    }
    res.realization = std::move(realization);
    res.completed.push_back(PipelineStage::Realize);
    PipelineRun run(host, std::move(comps), seq.size(), q, params, std::move(res));
    return run.run();
}

}  // namespace degembed
