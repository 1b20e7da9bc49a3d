#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "strandlab/betti.hpp"

namespace strandlab {

/// Raised when an input does not satisfy a check's hypothesis.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Strand j of I: values[i] = β_{i,i+j}(I), trailing zeros dropped.
struct StrandReport {
    int j = 0;
    std::vector<std::uint64_t> values;
    bool connected = true;
    /// Homological indices (i, i+k) of two nonzero entries with only zeros
    /// strictly between them; present iff the strand is disconnected.
    std::optional<std::pair<int, int>> gap_witness;
};

StrandReport strand(const BettiTable& table, int j);

/// X/0 grid: one line per strand j ("j: X X 0 0"), columns i = 0..pd(S/I).
/// Rows run from the lowest to the highest nonzero strand; empty for I = 0.
std::string vanishing_table(const BettiTable& table);

struct StrandTheoremReport {
    bool pass = true;
    StrandReport strand2;
    StrandReport strand3;
};

/// Strands 2 and 3 of an ideal generated in degree 2 must be connected.
/// Throws PreconditionError if β_{0,j}(I) != 0 for some j != 2.
StrandTheoremReport check_strand_theorem(const BettiTable& table);

enum class SubadditivityMode { b_at_most_3, all_pairs };

struct SubadditivityViolation {
    int a;
    int b;
    int t_sum_index; // t_{a+b}
    int t_a_plus_t_b;

    friend bool operator==(const SubadditivityViolation&, const SubadditivityViolation&) = default;
};

struct SubadditivityReport {
    TVector t;
    SubadditivityMode mode = SubadditivityMode::b_at_most_3;
    std::vector<std::pair<int, int>> checked;
    std::vector<SubadditivityViolation> violations;

    bool ok() const { return violations.empty(); }
};

/// Checks t_{a+b} <= t_a + t_b for a, b >= 1 with all three defined;
/// b ranges over {1,2,3} or over everything depending on mode.
SubadditivityReport check_subadditivity(const TVector& t, SubadditivityMode mode);

struct DerivedStats {
    int projective_dimension = 0;
    int regularity = 0;
};

DerivedStats derived_stats(const TVector& t);

/// Entries (i, j) of S/I where β_{i,j} = β_{i,j+1} = 0 but β_{i+1,j+2} != 0.
std::vector<std::pair<int, int>> corner_lemma_violations(const BettiTable& table);

/// Entries β_{i,j}(I) != 0 outside i+1 <= j <= 2(i+1).
std::vector<std::pair<int, int>> taylor_bound_violations(const BettiTable& table);

/// True iff strand 2 of I is a nonzero prefix followed by zeros.
bool first_strand_monotone(const BettiTable& table);

} // namespace strandlab
