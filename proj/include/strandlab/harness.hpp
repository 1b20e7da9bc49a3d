#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "strandlab/analysis.hpp"
#include "strandlab/betti.hpp"
#include "strandlab/graph.hpp"

namespace strandlab {

/// Random graph corpus parameters.
///
/// The generator is std::mt19937_64 seeded with `seed` (its output sequence
/// is fixed by the C++ standard). Instances are drawn one after another from
/// that single stream: first n = n_min + (draw mod (n_max - n_min + 1)),
/// then one draw per vertex pair {u < v} in lexicographic order, keeping the
/// edge iff draw < floor(p * 2^64) (every edge when p >= 1).
struct CorpusSpec {
    std::uint64_t seed = 42;
    int n_min = 4;
    int n_max = 9;
    std::string edge_probability = "0.4";
    std::size_t count = 200;
};

std::vector<Graph> random_graph_corpus(const CorpusSpec& spec);

/// Every labelled graph on n vertices; graph k has edge e (in lexicographic
/// pair order) iff bit e of k is set.
std::vector<Graph> all_graphs(int n);

struct RunConfig {
    std::string command = "fuzz";
    FieldSpec field = FieldSpec::gf(2);
    int cap = default_cap();
    CorpusSpec corpus;
    /// When positive, the corpus is all_graphs(exhaustive_n) instead.
    int exhaustive_n = 0;
    /// Instances with index % stride == 0 are cross-checked against the
    /// Eagon-Reiner oracle; 0 disables cross-checking.
    std::size_t cross_check_stride = 1;
    unsigned workers = 1;
    std::string output_format = "json";
    std::string output_path;
};

struct InstanceResult {
    std::size_t index = 0;
    Graph graph;
    std::optional<BettiTable> table;
    TVector t;
    bool cross_checked = false;
    bool oracles_agree = true;
    StrandTheoremReport strands;
    SubadditivityReport subadditivity;  // b <= 3, proved
    SubadditivityReport all_pairs;      // open conjecture
    std::vector<std::pair<int, int>> corner_violations;
    std::vector<std::pair<int, int>> taylor_violations;
    bool first_strand_monotone = true;
    /// Proved-property failures; any entry is an implementation bug.
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

/// Runs every property on one graph. Exceptions from the homology layer
/// (Euler or chain-condition violations) are recorded as failures.
InstanceResult check_instance(const Graph& g, std::size_t index, const FieldSpec& field, int cap, bool cross_check);

struct HarnessReport {
    RunConfig config;
    std::vector<InstanceResult> instances;

    bool passed() const;
    /// Indices of instances with proved-property failures.
    std::vector<std::size_t> failing() const;
    /// Total open-conjecture (all-pairs subadditivity) violations.
    std::size_t findings() const;
};

std::vector<Graph> corpus_for(const RunConfig& config);

/// Instances run in parallel; results are stored by instance index so the
/// report does not depend on the worker count.
HarnessReport run_harness(const RunConfig& config);

nlohmann::json config_to_json(const RunConfig& config);
RunConfig config_from_json(const nlohmann::json& j);

/// Canonical report: sorted keys, integers only, no timestamps.
nlohmann::json report_to_json(const HarnessReport& report);

/// Self-contained record of one instance for `recheck`.
nlohmann::json replay_bundle(const HarnessReport& report, std::size_t instance);

/// Re-runs a replay bundle; returns the fresh instance result.
InstanceResult replay(const nlohmann::json& bundle);

nlohmann::json instance_to_json(const InstanceResult& r);

} // namespace strandlab
