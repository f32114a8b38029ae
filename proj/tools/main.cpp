#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "degembed/errors.hpp"
#include "degembed/gadgets.hpp"
#include "degembed/harness.hpp"
#include "degembed/oracle.hpp"
#include "degembed/pipeline.hpp"
#include "degembed/stars.hpp"
#include "degembed/unbalanced.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // proven absence or an obstruction
constexpr int kExitInvalid = 2;
constexpr int kExitTimeout = 3;

using namespace degembed;

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::fputs(content.c_str(), stdout);
    } else {
        write_file(out_path, content);
    }
}

bool looks_like_two_sided(const std::string& text) {
    for (char c : text) {
        if (c == '[') return false;
        if (c == '{') return true;
    }
    return false;
}

int cmd_realize(const std::string& seq_path, std::string mode, int max_degree, int q,
                const std::string& out_path) {
    const std::string text = read_file(seq_path);
    if (mode.empty()) mode = looks_like_two_sided(text) ? "unbalanced" : "gadget";

    if (mode == "unbalanced") {
        UnbalancedBipartiteSeq seq = unbalanced_from_json(text);
        if (q > 0) seq.q = q;
        ComponentList comps = decompose_unbalanced(seq, max_degree);
        SimpleGraph whole(seq.size());
        int max_size = 0;
        bool all_unbalanced = true;
        for (const auto& c : comps.components) {
            max_size = std::max(max_size, c.size());
            all_unbalanced = all_unbalanced &&
                             seq.q * c.small_class_size() <= c.large_class_size();
            for (auto [u, v] : c.graph.edges()) {
                whole.add_edge(c.global_labels[u], c.global_labels[v]);
            }
        }
        const int cap = max_degree == 0 ? seq.max_degree() : max_degree;
        std::printf("components: %zu\n", comps.components.size());
        std::printf("max_component_size: %d (bound 4D^2 = %d)\n", max_size, 4 * cap * cap);
        std::printf("all_q_unbalanced: %s\n", all_unbalanced ? "true" : "false");
        emit(out_path, graph_to_edge_list(whole));
        return kExitOk;
    }

    DegreeSequence seq = sequence_from_json(text);
    SimpleGraph graph;
    if (mode == "plain") {
        graph = realize_graphic(seq);
        std::printf("realized %d vertices, %d edges\n", graph.num_vertices(), graph.num_edges());
    } else if (mode == "gadget") {
        try {
            GadgetRealization r = build_bounded_realization(seq);
            StructureReport report = verify_bounded_structure(r, seq);
            std::printf("set_a_size: %zu (ok: %s)\n", r.set_a.size(),
                        report.a_size_ok ? "true" : "false");
            std::printf("outside_components_ok: %s\n", report.components_ok ? "true" : "false");
            std::printf("three_colorable: %s\n", report.chromatic_ok ? "true" : "false");
            std::printf("separated: %s\n", report.separation_ok ? "true" : "false");
            std::printf("degrees_ok: %s\n", report.degrees_ok ? "true" : "false");
            graph = r.graph;
        } catch (const InsufficientGadgetsError& e) {
            std::fprintf(stderr, "note: %s; falling back to the plain realizer\n", e.what());
            graph = realize_graphic(seq);
        }
    } else {
        throw Error("unknown realize mode: " + mode);
    }
    emit(out_path, graph_to_edge_list(graph));
    return kExitOk;
}

int cmd_stars(const std::string& graph_path, int q, const std::string& out_path) {
    SimpleGraph g = graph_from_edge_list(read_file(graph_path));
    try {
        StarDecomposition s = star_decompose(g, q);
        std::string text;
        for (const Star& star : s.stars) {
            text += std::to_string(star.center) + ":";
            for (int leaf : star.leaves) text += " " + std::to_string(leaf);
            text += "\n";
        }
        emit(out_path, text);
        std::fprintf(stderr, "%zu stars cover %d vertices\n", s.stars.size(), s.covered_count());
        return kExitOk;
    } catch (const StuckError& e) {
        std::printf("stuck: vertex %d cannot be covered\n", e.vertex);
        return kExitNegative;
    }
}

int cmd_embed(const std::string& seq_path, const std::string& host_path, int q,
              const PipelineParams& params, long long oracle_budget, const std::string& out_path,
              const std::string& pattern_path) {
    const std::string text = read_file(seq_path);
    SimpleGraph host = graph_from_edge_list(read_file(host_path));

    PipelineResult res;
    if (looks_like_two_sided(text)) {
        UnbalancedBipartiteSeq seq = unbalanced_from_json(text);
        res = embed_pipeline(host, seq, seq.q, params);
    } else {
        DegreeSequence seq = sequence_from_json(text);
        if (seq.size() == host.num_vertices() && parity_obstruction(seq, host)) {
            std::printf("obstruction: all degrees odd and the host has an odd component\n");
            return kExitNegative;
        }
        res = embed_pipeline(host, seq, q, params);
    }

    if (!pattern_path.empty()) write_file(pattern_path, graph_to_edge_list(res.realization));
    if (res.success) {
        std::printf("pipeline: success (%zu stages)\n", res.completed.size());
        emit(out_path, map_to_text(res.map));
        return kExitOk;
    }
    std::printf("pipeline: failed at %s (%s)\n",
                res.failed_stage ? to_string(*res.failed_stage) : "?", res.detail.c_str());
    EmbedResult oracle = embed_backtracking(res.realization, host, oracle_budget);
    std::printf("oracle: %s\n", to_string(oracle.status));
    if (oracle.found()) {
        emit(out_path, map_to_text(oracle.map));
        return kExitOk;
    }
    return oracle.status == SearchStatus::Absent ? kExitNegative : kExitTimeout;
}

int cmd_check(const std::string& pattern_path, const std::string& host_path,
              const std::string& map_path) {
    SimpleGraph pattern = graph_from_edge_list(read_file(pattern_path));
    SimpleGraph host = graph_from_edge_list(read_file(host_path));
    EmbeddingMap map = map_from_text(read_file(map_path));
    if (map.size() < pattern.num_vertices()) map.image.resize(pattern.num_vertices(), -1);
    if (is_valid_embedding(pattern, host, map)) {
        std::printf("valid\n");
        return kExitOk;
    }
    std::printf("invalid\n");
    return kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"degree-sequence realization and embedding toolkit"};
    app.require_subcommand(1);

    std::string seq_path, graph_path, host_path, map_path, pattern_path, out_path;
    std::string mode, config_path;
    int q = 1;
    int max_degree = 0;
    double eta = 0.1, density = 0.3;
    int cluster_size = 8;
    std::uint64_t seed = 0;
    long long oracle_budget = 10000000;
    int trials = -1, n = -1, slack = -1, edits = -1;

    auto* realize = app.add_subcommand("realize", "realize a sequence as a structured graph");
    realize->add_option("--seq", seq_path, "sequence JSON file")->required();
    realize->add_option("--mode", mode, "gadget | plain | unbalanced (inferred by default)");
    realize->add_option("--max-degree", max_degree, "degree bound D");
    realize->add_option("--q", q, "unbalance ratio");
    realize->add_option("--out", out_path, "edge-list output path (stdout by default)");

    auto* stars = app.add_subcommand("stars", "decompose a graph into bounded stars");
    stars->add_option("--graph", graph_path, "edge-list file")->required();
    stars->add_option("--q", q, "leaf cap")->required();
    stars->add_option("--out", out_path, "output path (stdout by default)");

    auto* embed = app.add_subcommand("embed", "embed a sequence into a host graph");
    embed->add_option("--seq", seq_path, "sequence JSON file")->required();
    embed->add_option("--host", host_path, "host edge-list file")->required();
    embed->add_option("--q", q, "unbalance ratio");
    embed->add_option("--eta", eta, "degree margin");
    embed->add_option("--density", density, "cluster edge threshold");
    embed->add_option("--cluster-size", cluster_size, "cluster size m");
    embed->add_option("--max-degree", max_degree, "degree bound D");
    embed->add_option("--seed", seed, "random seed");
    embed->add_option("--oracle-budget", oracle_budget, "fallback search node budget");
    embed->add_option("--out", out_path, "map output path (stdout by default)");
    embed->add_option("--out-pattern", pattern_path, "write the realized pattern here");

    auto* check = app.add_subcommand("check", "verify a vertex map");
    check->add_option("--pattern", pattern_path, "pattern edge-list file")->required();
    check->add_option("--host", host_path, "host edge-list file")->required();
    check->add_option("--map", map_path, "map file (pattern host per line)")->required();

    auto* experiment = app.add_subcommand("experiment", "run a seeded campaign and write CSV");
    experiment->add_option("--config", config_path, "config JSON file");
    experiment->add_option("--mode", mode, "thm13 | thm15 | sharpness | parity | edits");
    experiment->add_option("--n", n, "host size");
    experiment->add_option("--q", q, "unbalance ratio");
    experiment->add_option("--max-degree", max_degree, "degree bound D");
    experiment->add_option("--eta", eta, "degree margin");
    experiment->add_option("--density", density, "cluster edge threshold");
    experiment->add_option("--cluster-size", cluster_size, "cluster size m");
    experiment->add_option("--trials", trials, "trial count");
    experiment->add_option("--seed", seed, "campaign seed");
    experiment->add_option("--slack", slack, "sequence-length shortfall");
    experiment->add_option("--edits", edits, "edit budget");
    experiment->add_option("--out", out_path, "CSV output path (stdout by default)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (realize->parsed()) {
            return cmd_realize(seq_path, mode, max_degree, realize->count("--q") ? q : 0, out_path);
        }
        if (stars->parsed()) {
            return cmd_stars(graph_path, q, out_path);
        }
        if (embed->parsed()) {
            PipelineParams params;
            params.cluster_size = cluster_size;
            params.density = density;
            params.eta = eta;
            params.seed = seed;
            params.max_degree = max_degree;
            return cmd_embed(seq_path, host_path, q, params, oracle_budget, out_path,
                             pattern_path);
        }
        if (check->parsed()) {
            return cmd_check(pattern_path, host_path, map_path);
        }
        if (experiment->parsed()) {
            ExperimentConfig cfg;
            if (!config_path.empty()) cfg = config_from_json(read_file(config_path));
            if (experiment->count("--mode")) cfg.mode = mode;
            if (n >= 0) cfg.n = n;
            if (experiment->count("--q")) cfg.q = q;
            if (experiment->count("--max-degree")) cfg.max_degree = max_degree;
            if (experiment->count("--eta")) cfg.eta = eta;
            if (experiment->count("--density")) cfg.density = density;
            if (experiment->count("--cluster-size")) cfg.cluster_size = cluster_size;
            if (trials >= 0) cfg.trials = trials;
            if (experiment->count("--seed")) cfg.seed = seed;
            if (slack >= 0) cfg.slack = slack;
            if (edits >= 0) cfg.edits = edits;
            cfg.validate();
            ExperimentOutcome out = run_experiment(cfg);
            emit(out_path, out.csv);
            std::fputs(out.summary.c_str(), stderr);
            return kExitOk;
        }
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitInvalid;
    }
    return kExitInvalid;
}
