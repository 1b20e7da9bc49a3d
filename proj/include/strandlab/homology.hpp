#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "strandlab/complex.hpp"
#include "strandlab/field.hpp"
#include "strandlab/linalg.hpp"

namespace strandlab {

/// Complexes of dimension above this are refused.
inline constexpr int max_homology_dimension = 32;

/// Boundary map from i-faces to (i-1)-faces; i = 0 is the augmentation onto
/// the span of ∅. Rows and columns follow the poset's lexicographic order.
/// Entry for omitting the k-th smallest vertex is (-1)^k, or 1 over GF(2).
SparseMatrix boundary_matrix(const SimplicialComplex& d, int i, const FieldSpec& field);

/// Reduced Betti numbers indexed from -1 up to dim(d).
class ReducedBetti {
public:
    ReducedBetti() = default;
    explicit ReducedBetti(std::vector<std::size_t> from_minus_one) : values_(std::move(from_minus_one)) {}

    /// Zero outside the stored range.
    std::size_t operator[](int i) const
    {
        const int k = i + 1;
        return k >= 0 && k < static_cast<int>(values_.size()) ? values_[k] : 0;
    }
    /// Highest stored degree; -2 when nothing is stored (void complex).
    int top_degree() const { return static_cast<int>(values_.size()) - 2; }
    const std::vector<std::size_t>& values() const { return values_; }
    bool all_zero() const;

    friend bool operator==(const ReducedBetti&, const ReducedBetti&) = default;

private:
    std::vector<std::size_t> values_;
};

/// Every result is checked against the reduced Euler characteristic; a
/// mismatch throws std::logic_error. With chain checks enabled, every
/// computation also verifies that consecutive boundary maps compose to zero.
ReducedBetti all_reduced_betti(const SimplicialComplex& d, const FieldSpec& field);

std::size_t reduced_betti(const SimplicialComplex& d, int i, const FieldSpec& field);

/// Sum over i >= -1 of (-1)^i f_i, with f_{-1} = 1 for a nonvoid complex.
std::int64_t reduced_euler_characteristic(const SimplicialComplex& d);

/// Verifies ∂_{i-1} ∂_i = 0 over the integers for every i; throws
/// std::logic_error otherwise.
void verify_chain_condition(const SimplicialComplex& d);

/// Global switch for chain checks; defaults to on in debug builds.
void set_chain_checks(bool enabled);
bool chain_checks_enabled();

} // namespace strandlab
