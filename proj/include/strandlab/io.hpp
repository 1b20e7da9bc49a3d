#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "strandlab/analysis.hpp"
#include "strandlab/betti.hpp"
#include "strandlab/complex.hpp"
#include "strandlab/constructions.hpp"
#include "strandlab/graph.hpp"

namespace strandlab {

/// Malformed input; line is 1-based, 0 when not applicable.
class InputError : public std::invalid_argument {
public:
    InputError(const std::string& message, int line = 0)
        : std::invalid_argument(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line)
    {
    }
    int line() const { return line_; }

private:
    int line_;
};

enum class InputKind { graph, ideal, complex };

std::optional<InputKind> parse_input_kind(std::string_view name);

/// Any supported input, resolved to the simplicial complex it describes.
struct LoadedInput {
    InputKind kind = InputKind::complex;
    std::optional<Graph> graph;
    std::optional<MonomialIdeal> ideal;
    SimplicialComplex complex;
    /// Set when a non-squarefree ideal was replaced by its polarization.
    std::optional<std::string> notice;
};

/// "n m" then m lines "u v"; blank lines and '#' comments are skipped.
Graph parse_graph_text(std::string_view text);
/// {"n": int, "edges": [[u, v], ...]}
Graph parse_graph_json(const nlohmann::json& j);
/// {"n": int, "facets": [[v, ...], ...]}
SimplicialComplex parse_complex_json(const nlohmann::json& j);
/// One generator per line: products of x<k> or x<k>^<e> joined by '*'.
MonomialIdeal parse_ideal_text(std::string_view text);
/// {"n": int, "generators": [[e_1, ..., e_n], ...]}
MonomialIdeal parse_ideal_json(const nlohmann::json& j);

/// Detects the kind when not given: JSON by its keys, text ideals by
/// the presence of 'x'. Non-squarefree ideals are polarized.
LoadedInput parse_input(std::string_view text, std::optional<InputKind> kind = std::nullopt);
LoadedInput load_input(const std::filesystem::path& path, std::optional<InputKind> kind = std::nullopt);

nlohmann::json complex_to_json(const SimplicialComplex& d);
nlohmann::json graph_to_json(const Graph& g);

enum class Convention { ideal, quotient };

/// {"convention": "ideal"|"quotient", "entries": [[i, j, v], ...], "field", "n"}
nlohmann::json betti_to_json(const BettiTable& table, Convention convention);
/// Reads the output of betti_to_json back into an ideal-convention table.
BettiTable betti_from_json(const nlohmann::json& j);
/// Grid with rows j - i and columns i, "." for zero, plus a total row.
std::string betti_to_text(const BettiTable& table, Convention convention);
std::string betti_to_csv(const BettiTable& table, Convention convention);

nlohmann::json tvector_to_json(const TVector& t);
nlohmann::json strand_to_json(const StrandReport& s);
nlohmann::json subadditivity_to_json(const SubadditivityReport& r);

nlohmann::json certificate_to_json(const CounterexampleCertificate& c);
CounterexampleCertificate certificate_from_json(const nlohmann::json& j);

std::string read_file(const std::filesystem::path& path);

} // namespace strandlab
