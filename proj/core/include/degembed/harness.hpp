#ifndef DEGEMBED_HARNESS_HPP
#define DEGEMBED_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "degembed/graph.hpp"
#include "degembed/pipeline.hpp"
#include "degembed/sequences.hpp"
#include "degembed/unbalanced.hpp"

namespace degembed {

/// One experiment campaign. Numeric fields must be positive, eta and d in
/// (0,1), and mode one of: thm13, thm15, sharpness, parity, edits.
struct ExperimentConfig {
    std::string mode = "thm13";
    int n = 36;
    int q = 1;
    int max_degree = 3;  // "D"
    double eta = 0.1;
    double density = 0.3;  // "d"
    int cluster_size = 6;  // "m"
    int trials = 10;
    std::uint64_t seed = 0;
    int slack = 4;  // sequence-length shortfall for thm15 runs
    int edits = 1;  // edit budget for edits runs

    void validate() const;  // throws Error on any bad field
};

struct TrialRecord {
    int trial = 0;
    std::uint64_t seed = 0;
    int host_n = 0;
    int host_min_degree = 0;
    double host_density = 0.0;
    int seq_len = 0;
    int seq_max_degree = 0;
    std::string stages_completed;  // '>'-joined prefix of the pipeline stage list
    std::string failed_stage;      // empty when the pipeline succeeded
    bool pipeline_success = false;
    std::string oracle_verdict;  // found | absent | timeout | skipped
    bool map_valid = false;
    double wall_ms = 0.0;  // reported in the summary; never serialized

    bool operator==(const TrialRecord& other) const;  // ignores wall_ms
};

/// Random graph with minimum degree at least ceil(min_frac*n): G(n, p) at
/// p = min_frac + 0.1, then edges added at deficient vertices, partners
/// uniform among non-neighbors.
SimpleGraph gen_host_min_degree(int n, double min_frac, std::uint64_t seed);

/// Complete bipartite graph with classes n/2-1 and n/2+1.
/// Throws BadParityError for odd n; requires n >= 4.
SimpleGraph gen_sharpness_host(int n);

/// Graphic sequence with entries in [1, max_degree]; rejection-sampled.
/// Throws Error when no graphic sample exists within the attempt budget.
DegreeSequence gen_bounded_graphic_seq(int n, int max_degree, std::uint64_t seed);

/// Two-sided demand read off a randomly built bipartite graph with the given
/// class sizes, so the demand is realizable by construction. Entries lie in
/// [1, max_degree]. Requires q*s_size <= t_size <= max_degree*s_size.
UnbalancedBipartiteSeq gen_unbalanced_seq(int s_size, int t_size, int q, int max_degree,
                                          std::uint64_t seed);

// Edge-list format: header "n <vertex count>", then one "u v" line per edge,
// 0-indexed. Writers emit edges sorted; parsers reject malformed input.
std::string graph_to_edge_list(const SimpleGraph& g);
SimpleGraph graph_from_edge_list(const std::string& text);

// Vertex maps: one "pattern host" pair per line.
std::string map_to_text(const EmbeddingMap& map);
EmbeddingMap map_from_text(const std::string& text);

// Degree sequences are JSON arrays; two-sided demands are JSON objects with
// "side_s", "side_t" and "q".
std::string sequence_to_json(const DegreeSequence& seq);
DegreeSequence sequence_from_json(const std::string& text);
std::string unbalanced_to_json(const UnbalancedBipartiteSeq& seq);
UnbalancedBipartiteSeq unbalanced_from_json(const std::string& text);

/// Parses a config from JSON; unknown keys and unknown modes are rejected.
ExperimentConfig config_from_json(const std::string& text);

// Fixed CSV columns, one row per trial, emitted in trial order:
// mode,trial,seed,host_n,host_min_degree,host_density,seq_len,seq_max_degree,
// stages_completed,failed_stage,pipeline_success,oracle_verdict,map_valid
std::string records_to_csv(const std::string& mode, const std::vector<TrialRecord>& records);
std::vector<TrialRecord> records_from_csv(const std::string& csv, std::string* mode_out = nullptr);

struct ExperimentOutcome {
    std::vector<TrialRecord> records;
    std::string csv;
    std::string summary;  // human-readable rates and timing
};

/// Runs the configured campaign. Trials are independent and seeded from the
/// config seed plus the trial index; rows are emitted in trial order.
ExperimentOutcome run_experiment(const ExperimentConfig& cfg);

// File helpers; I/O failures raise Error with the path in the message.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace degembed

#endif  // DEGEMBED_HARNESS_HPP
