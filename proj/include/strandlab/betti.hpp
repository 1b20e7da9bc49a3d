#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "strandlab/complex.hpp"
#include "strandlab/field.hpp"
#include "strandlab/graph.hpp"

namespace strandlab {

/// Thrown when a subset enumeration would exceed the configured cap.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(const std::string& what, int cap) : std::runtime_error(what), cap_(cap) {}
    int cap() const { return cap_; }

private:
    int cap_;
};

using Exponents = std::vector<int>;

/// Monomial ideal in n variables given by a minimal set of generators.
class MonomialIdeal {
public:
    /// Drops duplicate and non-minimal generators and sorts the rest.
    /// Throws std::invalid_argument for an empty list, negative exponents or
    /// vectors whose length differs from n.
    MonomialIdeal(int n, std::vector<Exponents> generators);

    int variable_count() const { return n_; }
    const std::vector<Exponents>& generators() const { return generators_; }

    bool is_squarefree() const;
    /// True iff every generator has total degree d.
    bool generated_in_degree(int d) const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    int n_;
    std::vector<Exponents> generators_;
};

MonomialIdeal edge_ideal(const Graph& g);

/// Origin of a polarized variable: the power x_var^level it stands for.
struct PolarizedVariable {
    int var;
    int level;

    friend bool operator==(const PolarizedVariable&, const PolarizedVariable&) = default;
};

struct Polarization {
    MonomialIdeal ideal;
    /// Indexed by new variable - 1. Variables 1..n keep their index (level
    /// 1); higher powers get fresh variables appended after n.
    std::vector<PolarizedVariable> variables;
};

Polarization polarize(const MonomialIdeal& m);

/// The complex whose Stanley-Reisner ideal is m. Throws std::invalid_argument
/// if m is not squarefree.
SimplicialComplex complex_of_squarefree_ideal(const MonomialIdeal& m);

/// Graded Betti numbers of the ideal I (not S/I): entry (i, j) = β_{i,j}(I),
/// always with j >= i + 1. The S/I view is obtained by shifting.
class BettiTable {
public:
    BettiTable(int n, FieldSpec field) : n_(n), field_(field) {}

    int variable_count() const { return n_; }
    const FieldSpec& field() const { return field_; }
    const std::map<std::pair<int, int>, std::uint64_t>& entries() const { return entries_; }

    std::uint64_t ideal(int i, int j) const;
    /// β_{i,j}(S/I): β_{0,0} = 1 and β_{i+1,j}(S/I) = β_{i,j}(I).
    std::uint64_t quotient(int i, int j) const;

    /// Adds to an entry; zero additions are ignored. Throws on j < i + 1.
    void add(int i, int j, std::uint64_t value);
    void merge(const BettiTable& other);

    bool is_zero() const { return entries_.empty(); }
    /// Largest i with a nonzero β_{i,*}(I); -1 for the zero ideal.
    int max_index() const;
    /// Largest j with a nonzero entry; 0 for the zero ideal.
    int max_degree() const;

    friend bool operator==(const BettiTable& a, const BettiTable& b)
    {
        return a.n_ == b.n_ && a.field_ == b.field_ && a.entries_ == b.entries_;
    }

private:
    int n_;
    FieldSpec field_;
    std::map<std::pair<int, int>, std::uint64_t> entries_;
};

/// Maximal shifts of S/I: t[i] = max{ j : β_{i,j}(S/I) != 0 }, t[0] = 0.
struct TVector {
    std::vector<std::optional<int>> values;

    std::optional<int> at(int i) const
    {
        return i >= 0 && i < static_cast<int>(values.size()) ? values[i] : std::nullopt;
    }
    int length() const { return static_cast<int>(values.size()); }

    friend bool operator==(const TVector&, const TVector&) = default;
};

TVector t_vector(const BettiTable& table);

/// Hochster cap from STRANDLAB_CAP if set and valid, else 16.
int default_cap();

struct BettiOptions {
    int cap = default_cap();
    unsigned workers = 1;
};

/// β_{i,j}(I_Δ) = Σ_{|W|=j} β̃_{j-i-2}(Δ[W]) over all W ⊆ [n].
/// Throws CapExceeded if n > cap, std::invalid_argument for a void complex.
BettiTable hochster_table(const SimplicialComplex& d, const FieldSpec& field, const BettiOptions& options = {});

/// One Hochster entry, summing over the C(n, j) subsets of size j only.
/// Refuses (CapExceeded) when C(n, j) > 2^cap.
std::uint64_t betti_entry(const SimplicialComplex& d, int i, int j, const FieldSpec& field,
                          const BettiOptions& options = {});

/// β_{i,j}(I_Δ) = Σ_{F ∈ Δ^∨, |F| = n-j} β̃_{i-1}(lk_{Δ^∨} F).
BettiTable eagon_reiner_table(const SimplicialComplex& d, const FieldSpec& field, const BettiOptions& options = {});

} // namespace strandlab
