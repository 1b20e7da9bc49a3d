// strandlab: Betti tables, strand connectivity and subadditivity of edge ideals.
//
// Exit codes: 0 pass, 1 property violation or failed certification,
// 2 usage or input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "strandlab/analysis.hpp"
#include "strandlab/betti.hpp"
#include "strandlab/constructions.hpp"
#include "strandlab/harness.hpp"
#include "strandlab/homology.hpp"
#include "strandlab/io.hpp"

using namespace strandlab;
using nlohmann::json;

namespace {

constexpr int exit_pass = 0;
constexpr int exit_violation = 1;
constexpr int exit_usage = 2;

struct Common {
    std::string field = "gf2";
    int cap = default_cap();
    unsigned workers = 1;
    std::string format = "text";
    std::string output;
    std::string kind;
    bool chain_checks = false;
};

void add_common(CLI::App* app, Common& c, bool with_kind = true)
{
    app->add_option("--field", c.field, "Coefficient field: gf2, gf<p> or q")->capture_default_str();
    app->add_option("--cap", c.cap, "Largest ground set for full subset enumeration")->capture_default_str();
    app->add_option("--workers", c.workers, "Worker threads")->capture_default_str();
    app->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app->add_option("-o,--output", c.output, "Write output to this file instead of stdout");
    app->add_flag("--check-chains", c.chain_checks, "Verify that boundary maps compose to zero");
    if (with_kind)
        app->add_option("--kind", c.kind, "Input kind (default: detect)")
            ->check(CLI::IsMember({"graph", "ideal", "complex"}));
}

void emit(const Common& c, const std::string& text)
{
    if (c.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(c.output, std::ios::binary);
    if (!out)
        throw InputError("cannot write " + c.output);
    out << text;
}

void write_json(const std::filesystem::path& path, const json& j)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

LoadedInput load(const std::string& path, const Common& c)
{
    auto input = load_input(path, c.kind.empty() ? std::nullopt : parse_input_kind(c.kind));
    if (input.notice)
        std::cerr << "notice: " << *input.notice << '\n';
    return input;
}

BettiOptions options_of(const Common& c)
{
    return BettiOptions{c.cap, c.workers};
}

bool generated_in_degree_two(const BettiTable& table)
{
    for (const auto& [key, value] : table.entries())
        if (key.first == 0 && key.second != 2)
            return false;
    return true;
}

std::vector<int> parse_int_list(const std::string& s)
{
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(std::stoi(item));
    return out;
}

int cmd_betti(const std::string& path, const Common& c, const std::string& oracle, const std::string& convention_name,
              const std::string& view)
{
    const auto input = load(path, c);
    const auto field = FieldSpec::parse(c.field);
    const auto options = options_of(c);
    const Convention convention = convention_name == "ideal" ? Convention::ideal : Convention::quotient;

    std::optional<BettiTable> primary, dual;
    if (oracle != "dual")
        primary = hochster_table(input.complex, field, options);
    if (oracle != "hochster")
        dual = eagon_reiner_table(input.complex, field, options);
    if (primary && dual && !(*primary == *dual)) {
        std::cerr << "oracle disagreement\nHochster:\n"
                  << betti_to_text(*primary, convention) << "Eagon-Reiner:\n"
                  << betti_to_text(*dual, convention);
        return exit_violation;
    }
    const BettiTable& table = primary ? *primary : *dual;
    if (c.format == "json") {
        json out = betti_to_json(table, convention);
        out["oracle"] = oracle;
        emit(c, out.dump(2) + "\n");
    } else if (c.format == "csv") {
        emit(c, betti_to_csv(table, convention));
    } else if (view == "vanishing") {
        emit(c, vanishing_table(table));
    } else {
        emit(c, betti_to_text(table, convention));
    }
    return exit_pass;
}

int cmd_strands(const std::string& path, const Common& c, const std::string& expect)
{
    const auto input = load(path, c);
    const auto field = FieldSpec::parse(c.field);
    const auto table = hochster_table(input.complex, field, options_of(c));
    const auto expected = parse_int_list(expect);
    if (!expected.empty() && !generated_in_degree_two(table))
        throw PreconditionError("--expect-connected requires an ideal generated in degree 2");

    std::vector<StrandReport> reports;
    int low = 0, high = 0;
    for (const auto& [key, value] : table.entries()) {
        low = low == 0 ? key.second - key.first : std::min(low, key.second - key.first);
        high = std::max(high, key.second - key.first);
    }
    for (int j = std::max(1, low); j <= high && low > 0; ++j)
        reports.push_back(strand(table, j));

    int status = exit_pass;
    std::vector<std::string> broken;
    for (int j : expected) {
        if (j < 1)
            throw InputError("strand indices start at 1");
        if (!strand(table, j).connected) {
            status = exit_violation;
            broken.push_back(std::to_string(j));
        }
    }

    if (c.format == "json") {
        json out{{"vanishing_table", vanishing_table(table)}, {"expectations_met", status == exit_pass}};
        out["strands"] = json::array();
        for (const auto& r : reports)
            out["strands"].push_back(strand_to_json(r));
        out["expected_connected"] = expected;
        emit(c, out.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << vanishing_table(table);
        for (const auto& r : reports) {
            out << "strand " << r.j << ":";
            for (auto v : r.values)
                out << ' ' << v;
            out << (r.connected ? "  connected" : "  DISCONNECTED");
            if (r.gap_witness)
                out << " (gap between i=" << r.gap_witness->first << " and i=" << r.gap_witness->second << ")";
            out << '\n';
        }
        emit(c, out.str());
    }
    for (const auto& j : broken)
        std::cerr << "expectation failed: strand " << j << " is disconnected\n";
    return status;
}

int cmd_subadd(const std::string& path, const Common& c, int b_max, bool all_pairs)
{
    if (b_max < 1 || b_max > 3)
        throw InputError("--b-max must be 1, 2 or 3");
    const auto input = load(path, c);
    const auto field = FieldSpec::parse(c.field);
    const auto table = hochster_table(input.complex, field, options_of(c));
    const auto t = t_vector(table);
    const bool proved_case = generated_in_degree_two(table);

    auto proved = check_subadditivity(t, SubadditivityMode::b_at_most_3);
    std::erase_if(proved.checked, [b_max](const auto& ab) { return ab.second > b_max; });
    std::erase_if(proved.violations, [b_max](const auto& v) { return v.b > b_max; });
    std::optional<SubadditivityReport> conjecture;
    if (all_pairs)
        conjecture = check_subadditivity(t, SubadditivityMode::all_pairs);
    const auto stats = derived_stats(t);

    if (c.format == "json") {
        json out{{"t", tvector_to_json(t)},
                 {"b_max", b_max},
                 {"edge_ideal", proved_case},
                 {"proved", subadditivity_to_json(proved)},
                 {"projective_dimension", stats.projective_dimension},
                 {"regularity", stats.regularity}};
        out["all_pairs"] = conjecture ? subadditivity_to_json(*conjecture) : json(nullptr);
        emit(c, out.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << "t =";
        for (const auto& v : t.values)
            out << ' ' << (v ? std::to_string(*v) : "-");
        out << "\npd = " << stats.projective_dimension << ", reg = " << stats.regularity << '\n';
        out << "b <= " << b_max << ": " << proved.checked.size() << " pairs checked, " << proved.violations.size()
            << " violations\n";
        for (const auto& v : proved.violations)
            out << "  t_" << v.a + v.b << " = " << v.t_sum_index << " > t_" << v.a << " + t_" << v.b << " = "
                << v.t_a_plus_t_b << '\n';
        if (conjecture)
            out << "all pairs: " << conjecture->checked.size() << " pairs checked, "
                << conjecture->violations.size() << " findings\n";
        emit(c, out.str());
    }
    if (conjecture)
        for (const auto& v : conjecture->violations)
            std::cerr << "FINDING: t_" << v.a + v.b << " = " << v.t_sum_index << " > t_" << v.a << " + t_" << v.b
                      << " = " << v.t_a_plus_t_b << '\n';
    if (!proved.ok()) {
        if (proved_case) {
            std::cerr << "subadditivity violated for an edge ideal with b <= " << b_max
                      << "; this contradicts a proved result and indicates a bug\n";
            return exit_violation;
        }
        for (const auto& v : proved.violations)
            std::cerr << "FINDING (not an edge ideal): a=" << v.a << " b=" << v.b << '\n';
    }
    return exit_pass;
}

json remark_certificate(const RemarkVerification& r, const FieldSpec& field)
{
    return json{{"kind", "remark_certificate"},
                {"j", r.j},
                {"field", field.name()},
                {"strand", strand_to_json(r.strand)},
                {"expected_support", {r.expected_support.first, r.expected_support.second}},
                {"confirmed", r.confirmed}};
}

int cmd_construct_remark(int j, bool verify, const std::string& out_dir, const Common& c)
{
    const auto d = remark_complex(j);
    std::filesystem::create_directories(out_dir);
    const auto base = std::filesystem::path(out_dir) / ("remark_j" + std::to_string(j));
    write_json(base.string() + ".json", complex_to_json(d));
    std::cout << "remark complex j=" << j << ": " << d.ground_size() << " vertices, " << d.facets().size()
              << " facets, flag=" << (is_flag(d).flag ? "yes" : "no") << "\n";
    if (!verify)
        return exit_pass;
    const auto field = FieldSpec::parse(c.field);
    const auto r = verify_remark(j, field, options_of(c));
    write_json(base.string() + ".cert.json", remark_certificate(r, field));
    std::cout << "strand " << j << " of I:";
    for (auto v : r.strand.values)
        std::cout << ' ' << v;
    std::cout << (r.confirmed ? "  disconnected as expected" : "  NOT as expected") << '\n';
    return r.confirmed ? exit_pass : exit_violation;
}

void print_checks(const CertificateChecks& k)
{
    std::cout << "field " << k.field.name() << ": flag=" << k.flag << " min_distance=" << k.min_distance
              << " betti(complex)=" << k.betti_complex << " betti(core)=" << k.betti_core
              << " sum betti(complex - x)=" << k.gap_value << '\n';
    std::cout << "strand " << k.strand << ": nonzero at i=" << k.low_index << " and i=" << k.high_index
              << ", zero at i=" << k.gap_index << (k.strand_disconnected ? " -> disconnected" : "") << '\n';
    std::cout << (k.valid ? "certificate VALID" : "certificate INVALID: " + k.failure) << '\n';
}

int cmd_construct_counterexample(int i, int k, int max_k, bool large, bool verify, const std::string& out_dir,
                                 const Common& c)
{
    CounterexampleOptions options{max_k, large};
    auto cert = build_counterexample(i, k, options);
    std::cout << "counterexample i=" << i << ": sphere after " << cert.subdivisions << " subdivisions, "
              << cert.complex.ground_size() << " vertices; A =";
    for (Vertex v : cert.spread)
        std::cout << ' ' << v;
    std::cout << '\n';
    if (verify) {
        cert = verify_counterexample(cert, FieldSpec::parse(c.field), c.workers);
        print_checks(*cert.checks);
    }
    std::filesystem::create_directories(out_dir);
    const auto base = std::filesystem::path(out_dir) / ("counterexample_i" + std::to_string(i));
    write_json(base.string() + ".json", complex_to_json(cert.complex));
    write_json(base.string() + ".cert.json", certificate_to_json(cert));
    return !verify || cert.checks->valid ? exit_pass : exit_violation;
}

int cmd_recheck(const std::string& path, const Common& c)
{
    json doc;
    try {
        doc = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
    const std::string kind = doc.is_object() ? doc.value("kind", "") : "";
    if (kind == "counterexample_certificate") {
        const auto stored = certificate_from_json(doc);
        const FieldSpec field = stored.checks ? stored.checks->field : FieldSpec::parse(c.field);
        const auto fresh = verify_counterexample(stored, field, c.workers);
        print_checks(*fresh.checks);
        if (stored.checks) {
            json a = certificate_to_json(stored), b = certificate_to_json(fresh);
            const bool same = a == b;
            std::cout << (same ? "same verdict and values as stored" : "DIFFERS from stored certificate") << '\n';
            if (!same)
                return exit_violation;
        }
        return fresh.checks->valid ? exit_pass : exit_violation;
    }
    if (kind == "remark_certificate") {
        const FieldSpec field = FieldSpec::parse(doc.at("field").get<std::string>());
        const auto r = verify_remark(doc.at("j").get<int>(), field, options_of(c));
        const bool same = remark_certificate(r, field) == doc;
        std::cout << "strand " << r.j << ":";
        for (auto v : r.strand.values)
            std::cout << ' ' << v;
        std::cout << '\n' << (same ? "same verdict and values as stored" : "DIFFERS from stored certificate") << '\n';
        return same && r.confirmed ? exit_pass : exit_violation;
    }
    if (kind == "replay_bundle") {
        const auto r = replay(doc);
        const bool same = instance_to_json(r) == doc.at("result");
        for (const auto& f : r.failures)
            std::cout << "failure: " << f << '\n';
        std::cout << (same ? "reproduces the stored result" : "DIFFERS from the stored result") << '\n';
        return r.passed() && same ? exit_pass : exit_violation;
    }
    throw InputError("unrecognized document kind '" + kind + "'");
}

int cmd_fuzz(RunConfig config, const Common& c)
{
    config.field = FieldSpec::parse(c.field);
    config.cap = c.cap;
    config.workers = c.workers;
    const auto report = run_harness(config);
    const json canonical = report_to_json(report);
    if (c.format == "json") {
        emit(c, canonical.dump(2) + "\n");
    } else {
        std::ostringstream out;
        out << report.instances.size() << " instances, " << report.failing().size() << " failing, "
            << report.findings() << " findings\n";
        for (const auto& r : report.instances)
            for (const auto& f : r.failures)
                out << "instance " << r.index << ": " << f << '\n';
        emit(c, out.str());
    }
    for (const auto& r : report.instances)
        for (const auto& v : r.all_pairs.violations)
            std::cerr << "FINDING: instance " << r.index << " t_" << v.a + v.b << " > t_" << v.a << " + t_" << v.b
                      << '\n';
    if (report.passed())
        return exit_pass;
    const std::string stem = c.output.empty() ? std::string("strandlab") : c.output;
    for (std::size_t idx : report.failing()) {
        const std::string bundle = stem + ".replay-" + std::to_string(idx) + ".json";
        write_json(bundle, replay_bundle(report, idx));
        std::cerr << "proved property failed on instance " << idx << "; replay bundle: " << bundle << '\n';
    }
    return exit_violation;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"strandlab: Betti tables and strand connectivity of monomial ideals"};
    app.require_subcommand(1);
    Common common;

    std::string input, oracle = "hochster", convention = "quotient", view = "numeric";
    auto* betti = app.add_subcommand("betti", "Compute a graded Betti table");
    betti->add_option("input", input, "Graph, ideal or complex file")->required();
    betti->add_option("--oracle", oracle, "hochster, dual or both")
        ->check(CLI::IsMember({"hochster", "dual", "both"}))
        ->capture_default_str();
    betti->add_option("--convention", convention, "quotient (S/I) or ideal (I)")
        ->check(CLI::IsMember({"quotient", "ideal"}))
        ->capture_default_str();
    betti->add_option("--view", view, "numeric or vanishing (X/0)")
        ->check(CLI::IsMember({"numeric", "vanishing"}))
        ->capture_default_str();
    add_common(betti, common);

    std::string expect;
    auto* strands = app.add_subcommand("strands", "Report strand connectivity and the vanishing table");
    strands->add_option("input", input)->required();
    strands->add_option("--expect-connected", expect, "Comma-separated strands that must be connected");
    add_common(strands, common);

    int b_max = 3;
    bool all_pairs = false;
    auto* subadd = app.add_subcommand("subadd", "Check subadditivity of maximal shifts");
    subadd->add_option("input", input)->required();
    subadd->add_option("--b-max", b_max, "Largest b checked as a proved case")->capture_default_str();
    subadd->add_flag("--all-pairs", all_pairs, "Also check every pair (a, b) and report findings");
    add_common(subadd, common);

    std::string kind, out_dir = ".";
    int j = 3, i = 2, k = 2, max_k = 4;
    bool verify = false, large = false;
    auto* construct = app.add_subcommand("construct", "Build the disconnected-strand examples");
    construct->add_option("kind", kind, "remark or counterexample")
        ->required()
        ->check(CLI::IsMember({"remark", "counterexample"}));
    construct->add_option("--j", j, "Strand index for the remark complex")->capture_default_str();
    construct->add_option("--i", i, "Homological degree of the counterexample")->capture_default_str();
    construct->add_option("--subdivisions", k, "Initial barycentric subdivisions")->capture_default_str();
    construct->add_option("--max-subdivisions", max_k, "Escalation limit")->capture_default_str();
    construct->add_flag("--large", large, "Allow i > 2");
    construct->add_flag("--verify", verify, "Certify the construction");
    construct->add_option("--out-dir", out_dir, "Directory for the facet and certificate files")->capture_default_str();
    add_common(construct, common, false);

    std::string recheck_path;
    auto* recheck = app.add_subcommand("recheck", "Re-verify a certificate or replay bundle");
    recheck->add_option("file", recheck_path)->required();
    add_common(recheck, common, false);

    RunConfig fuzz_config;
    auto* fuzz = app.add_subcommand("fuzz", "Property harness over random or exhaustive graph corpora");
    fuzz->add_option("--seed", fuzz_config.corpus.seed)->capture_default_str();
    fuzz->add_option("--n-min", fuzz_config.corpus.n_min)->capture_default_str();
    fuzz->add_option("--n-max", fuzz_config.corpus.n_max)->capture_default_str();
    fuzz->add_option("--p", fuzz_config.corpus.edge_probability, "Edge probability")->capture_default_str();
    fuzz->add_option("--instances", fuzz_config.corpus.count)->capture_default_str();
    fuzz->add_option("--exhaustive", fuzz_config.exhaustive_n, "Use every graph on this many vertices");
    fuzz->add_option("--cross-check-stride", fuzz_config.cross_check_stride,
                     "Cross-check every k-th instance with the dual oracle (0: never)")
        ->capture_default_str();
    add_common(fuzz, common, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_pass : exit_usage;
    }

    try {
        if (common.chain_checks)
            set_chain_checks(true);
        if (*betti)
            return cmd_betti(input, common, oracle, convention, view);
        if (*strands)
            return cmd_strands(input, common, expect);
        if (*subadd)
            return cmd_subadd(input, common, b_max, all_pairs);
        if (*construct)
            return kind == "remark" ? cmd_construct_remark(j, verify, out_dir, common)
                                    : cmd_construct_counterexample(i, k, max_k, large, verify, out_dir, common);
        if (*recheck)
            return cmd_recheck(recheck_path, common);
        if (*fuzz)
            return cmd_fuzz(fuzz_config, common);
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << " (raise with --cap or STRANDLAB_CAP)\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal check failed: " << e.what() << '\n';
        return exit_violation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_violation;
    }
    return exit_usage;
}
