#include "strandlab/harness.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "strandlab/complex.hpp"
#include "strandlab/io.hpp"
#include "strandlab/parallel.hpp"

namespace strandlab {

using nlohmann::json;

namespace {

constexpr const char* version = "strandlab 1.0.0";

std::uint64_t edge_threshold(const std::string& probability)
{
    double p = 0;
    try {
        std::size_t used = 0;
        p = std::stod(probability, &used);
        if (used != probability.size())
            throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw std::invalid_argument("edge probability '" + probability + "' is not a number");
    }
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("edge probability must lie in [0, 1]");
    if (p >= 1.0)
        return std::numeric_limits<std::uint64_t>::max();
    return static_cast<std::uint64_t>(std::ldexp(p, 64));
}

} // namespace

std::vector<Graph> random_graph_corpus(const CorpusSpec& spec)
{
    if (spec.n_min < 1 || spec.n_max < spec.n_min)
        throw std::invalid_argument("corpus: need 1 <= n_min <= n_max");
    const std::uint64_t threshold = edge_threshold(spec.edge_probability);
    const bool always = threshold == std::numeric_limits<std::uint64_t>::max();
    std::mt19937_64 rng(spec.seed);
    const auto span = static_cast<std::uint64_t>(spec.n_max - spec.n_min + 1);
    std::vector<Graph> out;
    out.reserve(spec.count);
    for (std::size_t k = 0; k < spec.count; ++k) {
        const int n = spec.n_min + static_cast<int>(rng() % span);
        std::vector<Graph::Edge> edges;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (const auto draw = rng(); always || draw < threshold)
                    edges.emplace_back(u, v);
        out.emplace_back(n, std::move(edges));
    }
    return out;
}

std::vector<Graph> all_graphs(int n)
{
    std::vector<Graph::Edge> pairs;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            pairs.emplace_back(u, v);
    if (pairs.size() > 24)
        throw std::invalid_argument("all_graphs: too many graphs on " + std::to_string(n) + " vertices");
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<Graph::Edge> edges;
        for (std::size_t e = 0; e < pairs.size(); ++e)
            if ((mask >> e) & 1)
                edges.push_back(pairs[e]);
        out.emplace_back(n, std::move(edges));
    }
    return out;
}

InstanceResult check_instance(const Graph& g, std::size_t index, const FieldSpec& field, int cap, bool cross_check)
{
    InstanceResult r;
    r.index = index;
    r.graph = g;
    try {
        const auto d = independence_complex(g);
        const BettiOptions options{cap, 1};
        BettiTable table = hochster_table(d, field, options);
        if (cross_check) {
            r.cross_checked = true;
            r.oracles_agree = eagon_reiner_table(d, field, options) == table;
            if (!r.oracles_agree)
                r.failures.push_back("Hochster and Eagon-Reiner tables differ");
        }
        r.t = t_vector(table);

        if (table.ideal(0, 2) != g.edges().size())
            r.failures.push_back("beta_{0,2} differs from the number of edges");
        for (const auto& [key, value] : table.entries())
            if (key.first == 0 && key.second != 2)
                r.failures.push_back("generator of degree " + std::to_string(key.second));

        r.strands = check_strand_theorem(table);
        if (!r.strands.strand2.connected)
            r.failures.push_back("strand 2 disconnected");
        if (!r.strands.strand3.connected)
            r.failures.push_back("strand 3 disconnected");

        r.subadditivity = check_subadditivity(r.t, SubadditivityMode::b_at_most_3);
        for (const auto& v : r.subadditivity.violations)
            r.failures.push_back("subadditivity fails for a=" + std::to_string(v.a) + ", b=" + std::to_string(v.b));
        r.all_pairs = check_subadditivity(r.t, SubadditivityMode::all_pairs);

        r.corner_violations = corner_lemma_violations(table);
        if (!r.corner_violations.empty())
            r.failures.push_back("corner lemma violated");
        r.taylor_violations = taylor_bound_violations(table);
        if (!r.taylor_violations.empty())
            r.failures.push_back("Taylor bounds violated");
        for (int i = 1; i < r.t.length(); ++i)
            if (auto ti = r.t.at(i); ti && (*ti < i + 1 || *ti > 2 * i))
                r.failures.push_back("t_" + std::to_string(i) + " outside [i+1, 2i]");
        r.first_strand_monotone = first_strand_monotone(table);
        if (!r.first_strand_monotone)
            r.failures.push_back("first strand not monotone");
        r.table = std::move(table);
    } catch (const PreconditionError& e) {
        r.failures.push_back(std::string("precondition: ") + e.what());
    } catch (const std::logic_error& e) {
        r.failures.push_back(std::string("internal check: ") + e.what());
    }
    return r;
}

bool HarnessReport::passed() const
{
    return failing().empty();
}

std::vector<std::size_t> HarnessReport::failing() const
{
    std::vector<std::size_t> out;
    for (const auto& r : instances)
        if (!r.passed())
            out.push_back(r.index);
    return out;
}

std::size_t HarnessReport::findings() const
{
    std::size_t total = 0;
    for (const auto& r : instances)
        total += r.all_pairs.violations.size();
    return total;
}

std::vector<Graph> corpus_for(const RunConfig& config)
{
    return config.exhaustive_n > 0 ? all_graphs(config.exhaustive_n) : random_graph_corpus(config.corpus);
}

HarnessReport run_harness(const RunConfig& config)
{
    const auto corpus = corpus_for(config);
    HarnessReport report;
    report.config = config;
    report.instances.resize(corpus.size());
    parallel_for(corpus.size(), config.workers, [&](unsigned, std::size_t k) {
        const bool cross = config.cross_check_stride > 0 && k % config.cross_check_stride == 0;
        report.instances[k] = check_instance(corpus[k], k, config.field, config.cap, cross);
    });
    return report;
}

json config_to_json(const RunConfig& config)
{
    return json{{"command", config.command},
                {"field", config.field.name()},
                {"cap", config.cap},
                {"seed", config.corpus.seed},
                {"n_min", config.corpus.n_min},
                {"n_max", config.corpus.n_max},
                {"edge_probability", config.corpus.edge_probability},
                {"instances", config.corpus.count},
                {"exhaustive_n", config.exhaustive_n},
                {"cross_check_stride", config.cross_check_stride}};
}

RunConfig config_from_json(const json& j)
{
    RunConfig c;
    try {
        c.command = j.at("command").get<std::string>();
        c.field = FieldSpec::parse(j.at("field").get<std::string>());
        c.cap = j.at("cap").get<int>();
        c.corpus.seed = j.at("seed").get<std::uint64_t>();
        c.corpus.n_min = j.at("n_min").get<int>();
        c.corpus.n_max = j.at("n_max").get<int>();
        c.corpus.edge_probability = j.at("edge_probability").get<std::string>();
        c.corpus.count = j.at("instances").get<std::size_t>();
        c.exhaustive_n = j.at("exhaustive_n").get<int>();
        c.cross_check_stride = j.at("cross_check_stride").get<std::size_t>();
    } catch (const json::exception& e) {
        throw InputError(std::string("bad run config: ") + e.what());
    }
    return c;
}

namespace {

json pairs_to_json(const std::vector<std::pair<int, int>>& v)
{
    json out = json::array();
    for (const auto& [a, b] : v)
        out.push_back({a, b});
    return out;
}

} // namespace

json instance_to_json(const InstanceResult& r)
{
    json out{{"index", r.index},
             {"graph", graph_to_json(r.graph)},
             {"t", tvector_to_json(r.t)},
             {"cross_checked", r.cross_checked},
             {"oracles_agree", r.oracles_agree},
             {"strand2", strand_to_json(r.strands.strand2)},
             {"strand3", strand_to_json(r.strands.strand3)},
             {"subadditivity_checked", r.subadditivity.checked.size()},
             {"subadditivity_violations", subadditivity_to_json(r.subadditivity).at("violations")},
             {"findings", subadditivity_to_json(r.all_pairs).at("violations")},
             {"corner_violations", pairs_to_json(r.corner_violations)},
             {"taylor_violations", pairs_to_json(r.taylor_violations)},
             {"first_strand_monotone", r.first_strand_monotone},
             {"failures", r.failures},
             {"passed", r.passed()}};
    out["betti"] = r.table ? betti_to_json(*r.table, Convention::ideal).at("entries") : json(nullptr);
    return out;
}

json report_to_json(const HarnessReport& report)
{
    json instances = json::array();
    for (const auto& r : report.instances)
        instances.push_back(instance_to_json(r));
    return json{{"config", config_to_json(report.config)},
                {"provenance", {{"version", version}}},
                {"instances", instances},
                {"summary",
                 {{"instances", report.instances.size()},
                  {"passed", report.passed()},
                  {"failing", report.failing()},
                  {"findings", report.findings()}}}};
}

json replay_bundle(const HarnessReport& report, std::size_t instance)
{
    const auto& r = report.instances.at(instance);
    return json{{"kind", "replay_bundle"},
                {"config", config_to_json(report.config)},
                {"provenance", {{"version", version}}},
                {"instance", {{"index", r.index}, {"graph", graph_to_json(r.graph)}}},
                {"result", instance_to_json(r)}};
}

InstanceResult replay(const json& bundle)
{
    if (!bundle.is_object() || bundle.value("kind", "") != "replay_bundle")
        throw InputError("not a replay bundle");
    const auto config = config_from_json(bundle.at("config"));
    const auto& inst = bundle.at("instance");
    const Graph g = parse_graph_json(inst.at("graph"));
    return check_instance(g, inst.at("index").get<std::size_t>(), config.field, config.cap, true);
}

} // namespace strandlab
