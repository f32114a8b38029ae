#include "degembed/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "degembed/errors.hpp"
#include "degembed/oracle.hpp"
#include "degembed/rng.hpp"
#include "json.hpp"

namespace degembed {

namespace {

const std::set<std::string> kModes = {"thm13", "thm15", "sharpness", "parity", "edits"};

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return buf;
}

double graph_density(const SimpleGraph& g) {
    const long long n = g.num_vertices();
    if (n < 2) return 0.0;
    return 2.0 * g.num_edges() / (static_cast<double>(n) * (n - 1));
}

}  // namespace

void ExperimentConfig::validate() const {
    if (!kModes.count(mode)) throw Error("unknown mode: " + mode);
    if (n <= 0 || q <= 0 || max_degree <= 0 || trials < 0 || cluster_size <= 0) {
        throw Error("n, q, D, m must be positive and trials nonnegative");
    }
    if (eta <= 0.0 || eta >= 1.0) throw Error("eta must lie in (0,1)");
    if (density <= 0.0 || density >= 1.0) throw Error("d must lie in (0,1)");
    if (slack < 0 || slack >= n) throw Error("slack must lie in [0, n)");
    if (edits < 0) throw Error("edits must be nonnegative");
    if (mode == "edits" && n > 14) throw Error("edits mode supports n <= 14");
}

bool TrialRecord::operator==(const TrialRecord& other) const {
    return trial == other.trial && seed == other.seed && host_n == other.host_n &&
           host_min_degree == other.host_min_degree &&
           format_double(host_density) == format_double(other.host_density) &&
           seq_len == other.seq_len && seq_max_degree == other.seq_max_degree &&
           stages_completed == other.stages_completed && failed_stage == other.failed_stage &&
           pipeline_success == other.pipeline_success && oracle_verdict == other.oracle_verdict &&
           map_valid == other.map_valid;
}

SimpleGraph gen_host_min_degree(int n, double min_frac, std::uint64_t seed) {
    const int bound = static_cast<int>(std::ceil(min_frac * n - 1e-9));
    if (bound > n - 1) throw Error("min_frac*n exceeds n-1");
    Rng rng(mix_seed(seed, 0x605));
    SimpleGraph g(n);
    const double p = std::min(min_frac + 0.1, 1.0);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.bernoulli(p)) g.add_edge(u, v);
        }
    }
    for (int v = 0; v < n; ++v) {
        while (g.degree(v) < bound) {
            std::vector<int> non_neighbors;
            for (int u = 0; u < n; ++u) {
                if (u != v && !g.has_edge(u, v)) non_neighbors.push_back(u);
            }
            g.add_edge(v, non_neighbors[rng.uniform_index(non_neighbors.size())]);
        }
    }
    return g;
}

SimpleGraph gen_sharpness_host(int n) {
    if (n % 2 != 0) throw BadParityError("sharpness host needs even n");
    if (n < 4) throw Error("sharpness host needs n >= 4");
    return SimpleGraph::complete_bipartite(n / 2 - 1, n / 2 + 1);
}

DegreeSequence gen_bounded_graphic_seq(int n, int max_degree, std::uint64_t seed) {
    const int cap = std::min(max_degree, n - 1);
    if (n <= 0 || cap < 1) throw Error("infeasible sequence parameters");
    Rng rng(mix_seed(seed, 0x609));
    for (int attempt = 0; attempt < 200; ++attempt) {
        DegreeSequence seq;
        seq.degrees.resize(n);
        for (int& d : seq.degrees) d = rng.uniform_int(1, cap);
        if (seq.sum() % 2 != 0) {
            bool fixed = false;
            for (int& d : seq.degrees) {
                if (d < cap) {
                    ++d;
                    fixed = true;
                    break;
                }
            }
            if (!fixed) {
                for (int& d : seq.degrees) {
                    if (d > 1) {
                        --d;
                        fixed = true;
                        break;
                    }
                }
            }
            if (!fixed) continue;  // all entries pinned at 1 = cap with odd n
        }
        if (is_graphic(seq)) return seq;
    }
    throw Error("could not sample a graphic sequence with n=" + std::to_string(n) +
                " D=" + std::to_string(max_degree));
}

UnbalancedBipartiteSeq gen_unbalanced_seq(int s_size, int t_size, int q, int max_degree,
                                          std::uint64_t seed) {
    if (s_size < 0 || t_size < 0 || q < 1 || max_degree < 1) throw Error("infeasible parameters");
    if (s_size == 0 && t_size == 0) return UnbalancedBipartiteSeq{{}, {}, q};
    if (static_cast<long long>(q) * s_size > t_size ||
        static_cast<long long>(max_degree) * s_size < t_size) {
        throw Error("need q*s <= t <= D*s");
    }
    Rng rng(mix_seed(seed, 0x60B));
    // Build an actual bipartite graph: first a system of distinct
    // representatives so every vertex has degree >= 1, then random extras.
    std::vector<std::set<int>> adj(s_size);  // s -> set of t
    std::vector<int> s_deg(s_size, 0), t_deg(t_size, 0);
    for (int t = 0; t < t_size; ++t) {
        if (t < s_size) {
            adj[t].insert(t);
            ++s_deg[t];
            ++t_deg[t];
            continue;
        }
        std::vector<int> open;
        for (int s = 0; s < s_size; ++s) {
            if (s_deg[s] < max_degree) open.push_back(s);
        }
        const int s = open[rng.uniform_index(open.size())];
        adj[s].insert(t);
        ++s_deg[s];
        ++t_deg[t];
    }
    for (int s = 0; s < s_size; ++s) {
        for (int t = 0; t < t_size; ++t) {
            if (adj[s].count(t) || s_deg[s] >= max_degree || t_deg[t] >= max_degree) continue;
            if (rng.bernoulli(0.3)) {
                adj[s].insert(t);
                ++s_deg[s];
                ++t_deg[t];
            }
        }
    }
    UnbalancedBipartiteSeq out;
    out.q = q;
    out.side_s = s_deg;
    out.side_t = t_deg;
    return out;
}

std::string graph_to_edge_list(const SimpleGraph& g) {
    std::ostringstream out;
    out << "n " << g.num_vertices() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

SimpleGraph graph_from_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string tag;
    int n = -1;
    if (!(in >> tag >> n) || tag != "n" || n < 0) {
        throw Error("edge list must start with a 'n <count>' header");
    }
    SimpleGraph g(n);
    int u, v;
    while (in >> u) {
        if (!(in >> v)) throw Error("edge list has a dangling endpoint");
        if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
            throw Error("bad edge " + std::to_string(u) + " " + std::to_string(v));
        }
        g.add_edge(u, v);
    }
    if (!in.eof() && in.fail()) {
        in.clear();
        std::string rest;
        in >> rest;
        if (!rest.empty()) throw Error("unexpected token in edge list: " + rest);
    }
    return g;
}

std::string map_to_text(const EmbeddingMap& map) {
    std::ostringstream out;
    for (int v = 0; v < map.size(); ++v) out << v << " " << map[v] << "\n";
    return out.str();
}

EmbeddingMap map_from_text(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::pair<int, int>> pairs;
    int p, h;
    int max_p = -1;
    while (in >> p >> h) {
        pairs.emplace_back(p, h);
        max_p = std::max(max_p, p);
    }
    EmbeddingMap map(max_p + 1);
    for (auto [pv, hv] : pairs) map.image[pv] = hv;
    return map;
}

std::string sequence_to_json(const DegreeSequence& seq) {
    return nlohmann::json(seq.degrees).dump();
}

DegreeSequence sequence_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    if (!j.is_array()) throw Error("degree sequence JSON must be an array");
    return DegreeSequence(j.get<std::vector<int>>());
}

std::string unbalanced_to_json(const UnbalancedBipartiteSeq& seq) {
    nlohmann::json j;
    j["side_s"] = seq.side_s;
    j["side_t"] = seq.side_t;
    j["q"] = seq.q;
    return j.dump();
}

UnbalancedBipartiteSeq unbalanced_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    if (!j.is_object() || !j.contains("side_s") || !j.contains("side_t") || !j.contains("q")) {
        throw Error("two-sided demand JSON needs side_s, side_t, q");
    }
    UnbalancedBipartiteSeq out;
    out.side_s = j.at("side_s").get<std::vector<int>>();
    out.side_t = j.at("side_t").get<std::vector<int>>();
    out.q = j.at("q").get<int>();
    return out;
}

ExperimentConfig config_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    if (!j.is_object()) throw Error("config must be a JSON object");
    ExperimentConfig cfg;
    for (const auto& [key, value] : j.items()) {
        if (key == "mode") cfg.mode = value.get<std::string>();
        else if (key == "n") cfg.n = value.get<int>();
        else if (key == "q") cfg.q = value.get<int>();
        else if (key == "D") cfg.max_degree = value.get<int>();
        else if (key == "eta") cfg.eta = value.get<double>();
        else if (key == "d") cfg.density = value.get<double>();
        else if (key == "m") cfg.cluster_size = value.get<int>();
        else if (key == "trials") cfg.trials = value.get<int>();
        else if (key == "seed") cfg.seed = value.get<std::uint64_t>();
        else if (key == "slack") cfg.slack = value.get<int>();
        else if (key == "edits") cfg.edits = value.get<int>();
        else throw Error("unknown config key: " + key);
    }
    cfg.validate();
    return cfg;
}

namespace {

std::string join_stages(const std::vector<PipelineStage>& stages) {
    std::string out;
    for (const auto s : stages) {
        if (!out.empty()) out += '>';
        out += to_string(s);
    }
    return out;
}

}  // namespace

std::string records_to_csv(const std::string& mode, const std::vector<TrialRecord>& records) {
    std::ostringstream out;
    out << "mode,trial,seed,host_n,host_min_degree,host_density,seq_len,seq_max_degree,"
           "stages_completed,failed_stage,pipeline_success,oracle_verdict,map_valid\n";
    for (const TrialRecord& r : records) {
        out << mode << ',' << r.trial << ',' << r.seed << ',' << r.host_n << ','
            << r.host_min_degree << ',' << format_double(r.host_density) << ',' << r.seq_len << ','
            << r.seq_max_degree << ',' << r.stages_completed << ',' << r.failed_stage << ','
            << (r.pipeline_success ? 1 : 0) << ',' << r.oracle_verdict << ','
            << (r.map_valid ? 1 : 0) << "\n";
    }
    return out.str();
}

std::vector<TrialRecord> records_from_csv(const std::string& csv, std::string* mode_out) {
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line)) throw Error("empty CSV");
    std::vector<TrialRecord> out;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) fields.push_back(field);
        while (fields.size() < 13) fields.emplace_back();
        TrialRecord r;
        if (mode_out) *mode_out = fields[0];
        r.trial = std::stoi(fields[1]);
        r.seed = std::stoull(fields[2]);
        r.host_n = std::stoi(fields[3]);
        r.host_min_degree = std::stoi(fields[4]);
        r.host_density = std::stod(fields[5]);
        r.seq_len = std::stoi(fields[6]);
        r.seq_max_degree = std::stoi(fields[7]);
        r.stages_completed = fields[8];
        r.failed_stage = fields[9];
        r.pipeline_success = fields[10] == "1";
        r.oracle_verdict = fields[11];
        r.map_valid = fields[12] == "1";
        out.push_back(std::move(r));
    }
    return out;
}

namespace {

void fill_host_stats(TrialRecord& r, const SimpleGraph& host) {
    r.host_n = host.num_vertices();
    r.host_min_degree = host.min_degree();
    r.host_density = graph_density(host);
}

void fill_pipeline_outcome(TrialRecord& r, const PipelineResult& res, const SimpleGraph& host) {
    r.stages_completed = join_stages(res.completed);
    r.pipeline_success = res.success;
    r.failed_stage = res.failed_stage ? to_string(*res.failed_stage) : "";
    r.map_valid = res.success && is_valid_embedding(res.realization, host, res.map);
}

TrialRecord run_trial(const ExperimentConfig& cfg, int trial) {
    const std::uint64_t tseed = mix_seed(cfg.seed, static_cast<std::uint64_t>(trial) + 1);
    TrialRecord r;
    r.trial = trial;
    r.seed = tseed;
    r.oracle_verdict = "skipped";

    PipelineParams params;
    params.cluster_size = cfg.cluster_size;
    params.density = cfg.density;
    params.eta = cfg.eta;
    params.seed = tseed;
    params.max_degree = cfg.max_degree;

    const auto start = std::chrono::steady_clock::now();
    if (cfg.mode == "thm13") {
        SimpleGraph host = gen_host_min_degree(cfg.n, 0.5 + cfg.eta, mix_seed(tseed, 1));
        DegreeSequence seq = gen_bounded_graphic_seq(cfg.n, cfg.max_degree, mix_seed(tseed, 2));
        fill_host_stats(r, host);
        r.seq_len = seq.size();
        r.seq_max_degree = seq.max_degree();
        PipelineResult res = embed_pipeline(host, seq, cfg.q, params);
        fill_pipeline_outcome(r, res, host);
        if (!res.success) {
            r.oracle_verdict = to_string(embed_backtracking(res.realization, host, 5'000'000).status);
        }
    } else if (cfg.mode == "thm15") {
        // Largest feasible split: q*s <= t <= D*s with s + t = len.
        int len = cfg.n - cfg.slack, s_size = 0;
        for (; len > cfg.q; --len) {
            const int s_lo = (len + cfg.max_degree) / (cfg.max_degree + 1);
            const int s_hi = len / (cfg.q + 1);
            if (s_lo <= s_hi) {
                s_size = s_hi;
                break;
            }
        }
        if (s_size == 0) throw Error("no feasible class split for the configured n, q, D");
        const int t_size = len - s_size;
        SimpleGraph host =
            gen_host_min_degree(cfg.n, 1.0 / (cfg.q + 1) + cfg.eta, mix_seed(tseed, 1));
        UnbalancedBipartiteSeq seq =
            gen_unbalanced_seq(s_size, t_size, cfg.q, cfg.max_degree, mix_seed(tseed, 2));
        fill_host_stats(r, host);
        r.seq_len = seq.size();
        r.seq_max_degree = seq.max_degree();
        PipelineResult res = embed_pipeline(host, seq, cfg.q, params);
        fill_pipeline_outcome(r, res, host);
        if (!res.success) {
            r.oracle_verdict = to_string(embed_backtracking(res.realization, host, 5'000'000).status);
        }
    } else if (cfg.mode == "sharpness") {
        SimpleGraph host = gen_sharpness_host(cfg.n);
        DegreeSequence seq(std::vector<int>(cfg.n, 1));
        fill_host_stats(r, host);
        r.seq_len = seq.size();
        r.seq_max_degree = 1;
        params.cluster_size = std::max(4, cfg.cluster_size);
        PipelineResult res = embed_pipeline(host, seq, 1, params);
        fill_pipeline_outcome(r, res, host);
        r.oracle_verdict = to_string(embed_backtracking(res.realization, host, 5'000'000).status);
    } else if (cfg.mode == "parity") {
        int odd_part = cfg.n / 2;
        if (odd_part % 2 == 0) odd_part = std::max(1, odd_part - 1);
        SimpleGraph host = SimpleGraph::disjoint_union(SimpleGraph::complete(odd_part),
                                                       SimpleGraph::complete(cfg.n - odd_part));
        DegreeSequence seq(std::vector<int>(cfg.n, 1));
        fill_host_stats(r, host);
        r.seq_len = seq.size();
        r.seq_max_degree = 1;
        const bool obstructed = parity_obstruction(seq, host);
        r.failed_stage = obstructed ? "parity_obstruction" : "";
        r.oracle_verdict = to_string(embed_sequence(seq, host, 5'000'000).status);
    } else {  // edits
        SimpleGraph host = SimpleGraph::complete(cfg.n - 1);
        host.add_vertex();
        DegreeSequence seq(std::vector<int>(cfg.n, 1));
        fill_host_stats(r, host);
        r.seq_len = seq.size();
        r.seq_max_degree = 1;
        EditSearchResult res = embed_with_edits(host, seq, cfg.q, cfg.edits, 5'000'000);
        r.oracle_verdict = to_string(res.status);
        r.pipeline_success = res.status == SearchStatus::Found;
        r.map_valid = res.status == SearchStatus::Found &&
                      is_valid_embedding(res.realization, res.edited_host, res.map);
    }
    const auto stop = std::chrono::steady_clock::now();
    r.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return r;
}

}  // namespace

ExperimentOutcome run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    ExperimentOutcome out;
    for (int trial = 0; trial < cfg.trials; ++trial) {
        out.records.push_back(run_trial(cfg, trial));
    }
    out.csv = records_to_csv(cfg.mode, out.records);

    int successes = 0, valid = 0, absents = 0, founds = 0, timeouts = 0;
    double total_ms = 0.0;
    for (const TrialRecord& r : out.records) {
        successes += r.pipeline_success;
        valid += r.map_valid;
        absents += r.oracle_verdict == "absent";
        founds += r.oracle_verdict == "found";
        timeouts += r.oracle_verdict == "timeout";
        total_ms += r.wall_ms;
    }
    std::ostringstream s;
    s << "mode=" << cfg.mode << " trials=" << cfg.trials << " pipeline_success=" << successes
      << " valid_maps=" << valid << " oracle_found=" << founds << " oracle_absent=" << absents
      << " oracle_timeout=" << timeouts << " wall_ms=" << format_double(total_ms) << "\n";
    out.summary = s.str();
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
    if (!out) throw Error("write failed for " + path);
}

}  // namespace degembed
