#ifndef DEGEMBED_PIPELINE_HPP
#define DEGEMBED_PIPELINE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "degembed/components.hpp"
#include "degembed/graph.hpp"
#include "degembed/sequences.hpp"
#include "degembed/stars.hpp"
#include "degembed/unbalanced.hpp"

namespace degembed {

/// Equitable vertex partition of a host with a density-threshold cluster
/// graph on top. No regularity certificates anywhere: an edge only records
/// that the pairwise density clears the threshold.
struct ClusterPartition {
    SimpleGraph host;  // private copy; all later stages read adjacency from it
    std::vector<std::vector<int>> clusters;
    std::vector<int> exceptional;  // leftover vertices, sorted
    SimpleGraph cluster_graph;     // one vertex per cluster
    double density_threshold = 0.0;
    int cluster_size = 0;
};

/// Seeded equitable partition into floor(n/m) clusters of size m (capped at
/// max_clusters when positive), leftovers into the exceptional set. Vertices
/// are grouped by host connected component before chunking, so disconnected
/// hosts get pure clusters and zero cross densities. Cluster-graph edges
/// require density >= d. Throws DegenerateInputError when v(host) < 2m.
ClusterPartition build_cluster_graph(const SimpleGraph& host, int m, double d, std::uint64_t seed,
                                     int max_clusters = 0);

/// Within every star edge, discards vertices with at most 2dm/3 neighbors in
/// the opposite cluster into the exceptional set, then trims all clusters to
/// a common size again. Cluster-graph edges are kept as built.
void super_regularize(ClusterPartition& p, const StarDecomposition& stars, double d);

struct AssignmentEntry {
    int vertex = -1;         // exceptional host vertex
    int cluster = -1;        // receiving cluster
    int partner = -1;        // opposite cluster witnessing the degree rule
    bool to_center = false;  // receiving cluster is its star's center
};

struct Assignment {
    std::vector<AssignmentEntry> entries;
    std::vector<std::vector<int>> per_cluster;

    bool empty() const { return entries.empty(); }
};

/// Sends every exceptional vertex to a permitted cluster: to a star center
/// when the vertex has at least eta*m/4 neighbors in some leaf, or to a leaf
/// of a star below the leaf cap when it has that many neighbors in the
/// center. Least-loaded cluster first; per-cluster load is capped at
/// sqrt(d)*m. Throws UnassignableError / OverloadError.
Assignment assign_leftovers(const ClusterPartition& p, const StarDecomposition& stars, double eta,
                            double d, std::uint64_t seed);

/// Random halves of each cluster, drawn per star for the covering walks.
struct Halving {
    std::vector<std::vector<int>> primed;   // per cluster
    std::vector<std::vector<int>> doubled;  // per cluster
};

struct Phase1Result {
    EmbeddingMap partial;              // pattern label -> host vertex, -1 unset
    std::vector<char> host_used;       // per host vertex
    std::vector<char> component_used;  // per component
    Halving halving;
};

/// Covers every assigned vertex with a dedicated bipartite component, walking
/// a common-neighborhood chain through the primed halves: each next vertex
/// must keep at least d|N|/3 neighbors inside the running neighborhood, and
/// the opposite class lands inside the final neighborhood. Halves are redrawn
/// up to 10 times per star until every vertex keeps more than a third of its
/// cross degree in each half. When a walk collapses, an exact pinned search
/// over the two clusters retries that cover (disabled by fallback_budget 0).
/// Throws CoverFailedError.
Phase1Result phase1_cover(const ClusterPartition& p, const StarDecomposition& stars,
                          const Assignment& assignment, const ComponentList& components,
                          double eta, double d, std::uint64_t seed,
                          long long fallback_budget = 200'000);

/// Vacancy counts of one star: a on the center side, b across the leaves.
struct StarVacancies {
    int center = 0;
    int leaves = 0;
    int h = 1;
};

struct DistributeResult {
    /// Per component: true when its larger class went to the center side.
    std::vector<std::uint8_t> larger_to_center;
    /// (center, leaves) vacancies after each placement.
    std::vector<std::pair<int, int>> trace;
    int final_center = 0;
    int final_leaves = 0;
};

/// Assigns component classes to the sides of one star: while h*a_k - b_k > 0
/// the larger class goes to the center side, otherwise to the leaf side.
/// Throws InfeasibleError when a component no longer fits.
DistributeResult distribute_components(const ComponentList& components, StarVacancies star, int D,
                                       int q);

enum class PipelineStage {
    Realize,
    OraclePlace,
    ClusterGraph,
    Stars,
    SuperRegularize,
    Assign,
    Phase1,
    Distribute,
    Phase2,
    Validate,
};

const char* to_string(PipelineStage stage);

struct PipelineParams {
    int cluster_size = 8;
    double density = 0.3;
    double eta = 0.1;
    std::uint64_t seed = 0;
    int max_degree = 0;                        // 0: derive from the sequence
    long long star_oracle_budget = 1'000'000;  // backtracking fallback per star
    long long place_budget = 10'000'000;       // whole-host placement of non-bipartite pieces
};

struct PipelineResult {
    bool success = false;
    EmbeddingMap map;  // complete and validated iff success
    SimpleGraph realization;
    std::vector<PipelineStage> completed;  // prefix of the stage list above
    std::optional<PipelineStage> failed_stage;
    std::string detail;
};

/// Full pipeline for a plain bounded-degree sequence: structured realization
/// (plain realizer as fallback), non-bipartite pieces placed by the exact
/// search, the bipartite rest through clusters, stars, assignment, covering
/// and per-star placement. The returned map is validated before success is
/// reported.
PipelineResult embed_pipeline(const SimpleGraph& host, const DegreeSequence& seq, int q,
                              const PipelineParams& params);

/// Same pipeline driven by an unbalanced two-sided demand; q must match seq.q.
PipelineResult embed_pipeline(const SimpleGraph& host, const UnbalancedBipartiteSeq& seq, int q,
                              const PipelineParams& params);

}  // namespace degembed

#endif  // DEGEMBED_PIPELINE_HPP
