#include "strandlab/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <tuple>
#include <sstream>

namespace strandlab {

using nlohmann::json;

namespace {

std::string trim(std::string_view s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

std::string strip_comment(std::string_view line)
{
    return trim(line.substr(0, line.find('#')));
}

std::vector<std::string> lines_of(std::string_view text)
{
    std::vector<std::string> out;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line))
        out.push_back(line);
    return out;
}

int to_int(std::string_view s, int line, const char* what)
{
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw InputError(std::string("expected ") + what + ", got '" + std::string(s) + "'", line);
    return v;
}

template <class T>
T json_get(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw InputError(std::string("missing key '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw InputError(std::string("bad value for '") + key + "': " + e.what());
    }
}

} // namespace

std::optional<InputKind> parse_input_kind(std::string_view name)
{
    if (name == "graph")
        return InputKind::graph;
    if (name == "ideal")
        return InputKind::ideal;
    if (name == "complex")
        return InputKind::complex;
    return std::nullopt;
}

Graph parse_graph_text(std::string_view text)
{
    const auto lines = lines_of(text);
    std::size_t k = 0;
    auto next_content = [&]() -> std::optional<std::pair<int, std::string>> {
        while (k < lines.size()) {
            std::string s = strip_comment(lines[k]);
            ++k;
            if (!s.empty())
                return std::pair(static_cast<int>(k), s);
        }
        return std::nullopt;
    };
    auto header = next_content();
    if (!header)
        throw InputError("empty graph file");
    std::istringstream hs(header->second);
    std::string ns, ms, extra;
    if (!(hs >> ns >> ms) || (hs >> extra))
        throw InputError("expected header 'n m'", header->first);
    const int n = to_int(ns, header->first, "vertex count");
    const int m = to_int(ms, header->first, "edge count");
    if (n < 0 || m < 0)
        throw InputError("negative count in header", header->first);
    std::vector<Graph::Edge> edges;
    for (int e = 0; e < m; ++e) {
        auto row = next_content();
        if (!row)
            throw InputError("expected " + std::to_string(m) + " edges, found " + std::to_string(e),
                             static_cast<int>(lines.size()));
        std::istringstream rs(row->second);
        std::string us, vs;
        if (!(rs >> us >> vs) || (rs >> extra))
            throw InputError("expected edge 'u v'", row->first);
        const int u = to_int(us, row->first, "vertex");
        const int v = to_int(vs, row->first, "vertex");
        try {
            Graph(n, {{u, v}});
        } catch (const std::invalid_argument& err) {
            throw InputError(err.what(), row->first);
        }
        if (std::find(edges.begin(), edges.end(), Graph::Edge(std::min(u, v), std::max(u, v))) != edges.end())
            throw InputError("duplicate edge", row->first);
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    if (auto trailing = next_content())
        throw InputError("unexpected content after " + std::to_string(m) + " edges", trailing->first);
    return Graph(n, std::move(edges));
}

Graph parse_graph_json(const json& j)
{
    const int n = json_get<int>(j, "n");
    auto raw = json_get<std::vector<std::vector<int>>>(j, "edges");
    std::vector<Graph::Edge> edges;
    for (const auto& e : raw) {
        if (e.size() != 2)
            throw InputError("edge must have two endpoints");
        edges.emplace_back(e[0], e[1]);
    }
    try {
        return Graph(n, std::move(edges));
    } catch (const std::invalid_argument& err) {
        throw InputError(err.what());
    }
}

SimplicialComplex parse_complex_json(const json& j)
{
    const int n = json_get<int>(j, "n");
    auto facets = json_get<std::vector<Face>>(j, "facets");
    try {
        return SimplicialComplex::from_facets(n, std::move(facets));
    } catch (const std::invalid_argument& err) {
        throw InputError(err.what());
    }
}

MonomialIdeal parse_ideal_text(std::string_view text)
{
    const auto lines = lines_of(text);
    std::vector<std::pair<int, std::vector<std::pair<int, int>>>> terms; // line, (var, exp)
    int n = 0;
    for (std::size_t k = 0; k < lines.size(); ++k) {
        const int line = static_cast<int>(k) + 1;
        std::string s = strip_comment(lines[k]);
        s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
        if (!s.empty() && s.back() == ',')
            s.pop_back();
        if (s.empty())
            continue;
        std::vector<std::pair<int, int>> factors;
        std::stringstream ss(s);
        std::string factor;
        while (std::getline(ss, factor, '*')) {
            if (factor.size() < 2 || (factor[0] != 'x' && factor[0] != 'X'))
                throw InputError("expected a factor like x3 or x3^2, got '" + factor + "'", line);
            const auto caret = factor.find('^');
            const int var = to_int(std::string_view(factor).substr(1, caret - 1), line, "variable index");
            const int exp =
                caret == std::string::npos ? 1 : to_int(std::string_view(factor).substr(caret + 1), line, "exponent");
            if (var < 1)
                throw InputError("variable indices start at 1", line);
            if (exp < 0)
                throw InputError("negative exponent", line);
            n = std::max(n, var);
            factors.emplace_back(var, exp);
        }
        terms.emplace_back(line, std::move(factors));
    }
    if (terms.empty())
        throw InputError("no generators");
    std::vector<Exponents> gens;
    for (const auto& [line, factors] : terms) {
        Exponents e(n, 0);
        for (const auto& [var, exp] : factors)
            e[var - 1] += exp;
        gens.push_back(std::move(e));
    }
    return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal parse_ideal_json(const json& j)
{
    const int n = json_get<int>(j, "n");
    auto gens = json_get<std::vector<Exponents>>(j, "generators");
    try {
        return MonomialIdeal(n, std::move(gens));
    } catch (const std::invalid_argument& err) {
        throw InputError(err.what());
    }
}

LoadedInput parse_input(std::string_view text, std::optional<InputKind> kind)
{
    const std::string body = trim(text);
    LoadedInput out;
    std::optional<json> doc;
    if (!body.empty() && body.front() == '{') {
        try {
            doc = json::parse(body);
        } catch (const json::parse_error& e) {
            throw InputError(std::string("invalid JSON: ") + e.what());
        }
        if (!kind) {
            if (doc->contains("edges"))
                kind = InputKind::graph;
            else if (doc->contains("facets"))
                kind = InputKind::complex;
            else if (doc->contains("generators"))
                kind = InputKind::ideal;
            else
                throw InputError("JSON input needs one of 'edges', 'facets', 'generators'");
        }
    } else if (!kind) {
        kind = body.find_first_of("xX") != std::string::npos ? InputKind::ideal : InputKind::graph;
    }
    out.kind = *kind;
    switch (*kind) {
    case InputKind::graph:
        out.graph = doc ? parse_graph_json(*doc) : parse_graph_text(body);
        out.complex = independence_complex(*out.graph);
        break;
    case InputKind::complex:
        if (!doc)
            throw InputError("complexes are read from JSON {\"n\": ..., \"facets\": [...]}");
        out.complex = parse_complex_json(*doc);
        break;
    case InputKind::ideal: {
        out.ideal = doc ? parse_ideal_json(*doc) : parse_ideal_text(body);
        if (out.ideal->is_squarefree()) {
            out.complex = complex_of_squarefree_ideal(*out.ideal);
        } else {
            auto polar = polarize(*out.ideal);
            out.notice = "ideal is not squarefree; analysing its polarization in " +
                         std::to_string(polar.ideal.variable_count()) + " variables";
            out.complex = complex_of_squarefree_ideal(polar.ideal);
        }
        break;
    }
    }
    return out;
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

LoadedInput load_input(const std::filesystem::path& path, std::optional<InputKind> kind)
{
    return parse_input(read_file(path), kind);
}

json complex_to_json(const SimplicialComplex& d)
{
    return json{{"n", d.ground_size()}, {"facets", d.facets()}};
}

json graph_to_json(const Graph& g)
{
    json edges = json::array();
    for (const auto& [u, v] : g.edges())
        edges.push_back({u, v});
    return json{{"n", g.vertex_count()}, {"edges", edges}};
}

namespace {

// (i, j, value) triples in the requested convention.
std::vector<std::tuple<int, int, std::uint64_t>> convention_entries(const BettiTable& t, Convention c)
{
    std::vector<std::tuple<int, int, std::uint64_t>> out;
    if (c == Convention::quotient)
        out.emplace_back(0, 0, 1);
    for (const auto& [key, value] : t.entries())
        out.emplace_back(key.first + (c == Convention::quotient ? 1 : 0), key.second, value);
    return out;
}

} // namespace

json betti_to_json(const BettiTable& table, Convention convention)
{
    json entries = json::array();
    for (const auto& [i, j, v] : convention_entries(table, convention))
        entries.push_back({i, j, v});
    return json{{"convention", convention == Convention::ideal ? "ideal" : "quotient"},
                {"entries", entries},
                {"field", table.field().name()},
                {"n", table.variable_count()}};
}

BettiTable betti_from_json(const json& j)
{
    const auto convention = json_get<std::string>(j, "convention");
    if (convention != "ideal" && convention != "quotient")
        throw InputError("unknown convention '" + convention + "'");
    BettiTable table(json_get<int>(j, "n"), FieldSpec::parse(json_get<std::string>(j, "field")));
    for (const auto& e : json_get<std::vector<std::vector<std::int64_t>>>(j, "entries")) {
        if (e.size() != 3 || e[2] < 0)
            throw InputError("betti entry must be [i, j, value]");
        int i = static_cast<int>(e[0]);
        if (convention == "quotient") {
            if (i == 0)
                continue;
            --i;
        }
        table.add(i, static_cast<int>(e[1]), static_cast<std::uint64_t>(e[2]));
    }
    return table;
}

std::string betti_to_text(const BettiTable& table, Convention convention)
{
    const auto entries = convention_entries(table, convention);
    if (entries.empty())
        return "0\n";
    int max_i = 0, min_row = std::numeric_limits<int>::max(), max_row = 0;
    std::map<std::pair<int, int>, std::uint64_t> grid; // (row, i)
    std::map<int, std::uint64_t> totals;
    for (const auto& [i, j, v] : entries) {
        max_i = std::max(max_i, i);
        min_row = std::min(min_row, j - i);
        max_row = std::max(max_row, j - i);
        grid[{j - i, i}] = v;
        totals[i] += v;
    }
    std::size_t width = 1;
    for (const auto& [i, v] : totals)
        width = std::max(width, std::to_string(v).size());
    width = std::max(width, std::to_string(max_i).size());
    std::size_t label = std::max<std::size_t>(6, std::to_string(max_row).size() + 1);

    std::ostringstream out;
    out << std::string(label + 1, ' ');
    for (int i = 0; i <= max_i; ++i)
        out << std::setw(static_cast<int>(width)) << i << (i < max_i ? " " : "\n");
    out << std::setw(static_cast<int>(label)) << "total:" << ' ';
    for (int i = 0; i <= max_i; ++i)
        out << std::setw(static_cast<int>(width)) << totals[i] << (i < max_i ? " " : "\n");
    for (int r = min_row; r <= max_row; ++r) {
        out << std::setw(static_cast<int>(label)) << (std::to_string(r) + ":") << ' ';
        for (int i = 0; i <= max_i; ++i) {
            auto it = grid.find({r, i});
            std::string cell = it == grid.end() ? "." : std::to_string(it->second);
            out << std::setw(static_cast<int>(width)) << cell << (i < max_i ? " " : "\n");
        }
    }
    return out.str();
}

std::string betti_to_csv(const BettiTable& table, Convention convention)
{
    std::ostringstream out;
    out << "i,j,value\n";
    for (const auto& [i, j, v] : convention_entries(table, convention))
        out << i << ',' << j << ',' << v << '\n';
    return out.str();
}

json tvector_to_json(const TVector& t)
{
    json out = json::array();
    for (const auto& v : t.values)
        out.push_back(v ? json(*v) : json(nullptr));
    return out;
}

json strand_to_json(const StrandReport& s)
{
    json out{{"j", s.j}, {"values", s.values}, {"connected", s.connected}};
    out["gap_witness"] = s.gap_witness ? json{s.gap_witness->first, s.gap_witness->second} : json(nullptr);
    return out;
}

json subadditivity_to_json(const SubadditivityReport& r)
{
    json violations = json::array();
    for (const auto& v : r.violations)
        violations.push_back({{"a", v.a}, {"b", v.b}, {"t_a_plus_b", v.t_sum_index}, {"t_a_plus_t_b", v.t_a_plus_t_b}});
    json checked = json::array();
    for (const auto& [a, b] : r.checked)
        checked.push_back({a, b});
    return json{{"t", tvector_to_json(r.t)},
                {"mode", r.mode == SubadditivityMode::b_at_most_3 ? "b<=3" : "all-pairs"},
                {"checked", checked},
                {"violations", violations},
                {"ok", r.ok()}};
}

json certificate_to_json(const CounterexampleCertificate& c)
{
    json out{{"kind", "counterexample_certificate"},
             {"dimension", c.dimension},
             {"subdivisions", c.subdivisions},
             {"sphere", complex_to_json(c.sphere)},
             {"octahedral", complex_to_json(c.octahedral)},
             {"complex", complex_to_json(c.complex)},
             {"spread", c.spread},
             {"antipodal", {c.antipodal.first, c.antipodal.second}}};
    json pairing = json::array();
    for (const auto& [a, b] : c.pairing)
        pairing.push_back({a, b});
    out["pairing"] = pairing;
    if (c.checks) {
        const auto& k = *c.checks;
        out["checks"] = json{{"field", k.field.name()},
                             {"flag", k.flag},
                             {"flag_witness", k.flag_witness ? json(*k.flag_witness) : json(nullptr)},
                             {"min_distance", k.min_distance},
                             {"distance_ok", k.distance_ok},
                             {"betti_complex", k.betti_complex},
                             {"betti_core", k.betti_core},
                             {"betti_deleted", k.betti_deleted},
                             {"valid", k.valid},
                             {"failure", k.failure},
                             {"strand",
                              {{"j", k.strand},
                               {"high_index", k.high_index},
                               {"gap_index", k.gap_index},
                               {"gap_value", k.gap_value},
                               {"low_index", k.low_index},
                               {"disconnected", k.strand_disconnected}}}};
    } else {
        out["checks"] = nullptr;
    }
    return out;
}

CounterexampleCertificate certificate_from_json(const json& j)
{
    if (json_get<std::string>(j, "kind") != "counterexample_certificate")
        throw InputError("not a counterexample certificate");
    CounterexampleCertificate c;
    c.dimension = json_get<int>(j, "dimension");
    c.subdivisions = json_get<int>(j, "subdivisions");
    c.sphere = parse_complex_json(j.at("sphere"));
    c.octahedral = parse_complex_json(j.at("octahedral"));
    c.complex = parse_complex_json(j.at("complex"));
    c.spread = json_get<std::vector<Vertex>>(j, "spread");
    for (const auto& p : json_get<std::vector<std::vector<Vertex>>>(j, "pairing")) {
        if (p.size() != 2)
            throw InputError("pairing entries must be pairs");
        c.pairing.emplace_back(p[0], p[1]);
    }
    const auto anti = json_get<std::vector<Vertex>>(j, "antipodal");
    if (anti.size() != 2)
        throw InputError("antipodal must be a pair");
    c.antipodal = {anti[0], anti[1]};
    if (j.contains("checks") && !j.at("checks").is_null()) {
        const auto& k = j.at("checks");
        CertificateChecks checks;
        checks.field = FieldSpec::parse(json_get<std::string>(k, "field"));
        checks.flag = json_get<bool>(k, "flag");
        if (k.contains("flag_witness") && !k.at("flag_witness").is_null())
            checks.flag_witness = k.at("flag_witness").get<Face>();
        checks.min_distance = json_get<int>(k, "min_distance");
        checks.distance_ok = json_get<bool>(k, "distance_ok");
        checks.betti_complex = json_get<std::size_t>(k, "betti_complex");
        checks.betti_core = json_get<std::size_t>(k, "betti_core");
        checks.betti_deleted = json_get<std::vector<std::size_t>>(k, "betti_deleted");
        checks.valid = json_get<bool>(k, "valid");
        checks.failure = json_get<std::string>(k, "failure");
        const auto& s = k.at("strand");
        checks.strand = json_get<int>(s, "j");
        checks.high_index = json_get<int>(s, "high_index");
        checks.gap_index = json_get<int>(s, "gap_index");
        checks.gap_value = json_get<std::uint64_t>(s, "gap_value");
        checks.low_index = json_get<int>(s, "low_index");
        checks.strand_disconnected = json_get<bool>(s, "disconnected");
        c.checks = std::move(checks);
    }
    return c;
}

} // namespace strandlab
