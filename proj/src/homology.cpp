#include "strandlab/homology.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>

namespace strandlab {

namespace {

#ifdef NDEBUG
std::atomic<bool> chain_checks{false};
#else
std::atomic<bool> chain_checks{true};
#endif

void check_dimension(const SimplicialComplex& d)
{
    if (d.dimension() > max_homology_dimension)
        throw std::invalid_argument("homology: dimension " + std::to_string(d.dimension()) + " exceeds cap " +
                                    std::to_string(max_homology_dimension));
}

SparseMatrix boundary_with_signs(const FacePoset& poset, int i, bool signed_entries)
{
    const auto cols = poset.faces(i);
    const auto rows = poset.faces(i - 1);
    std::vector<MatrixEntry> entries;
    entries.reserve(cols.size() * static_cast<std::size_t>(i + 1));
    Face sub;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const Face& f = cols[c];
        for (std::size_t k = 0; k < f.size(); ++k) {
            sub.assign(f.begin(), f.end());
            sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(k));
            const auto r = poset.index_of(sub);
            const std::int64_t sign = (signed_entries && (k % 2 == 1)) ? -1 : 1;
            entries.push_back({*r, c, sign});
        }
    }
    return SparseMatrix(rows.size(), cols.size(), std::move(entries));
}

} // namespace

void set_chain_checks(bool enabled)
{
    chain_checks.store(enabled);
}

bool chain_checks_enabled()
{
    return chain_checks.load();
}

bool ReducedBetti::all_zero() const
{
    return std::all_of(values_.begin(), values_.end(), [](std::size_t v) { return v == 0; });
}

SparseMatrix boundary_matrix(const SimplicialComplex& d, int i, const FieldSpec& field)
{
    if (i < 0)
        throw std::invalid_argument("boundary_matrix: negative degree");
    check_dimension(d);
    const bool signed_entries = !(field.kind() == FieldSpec::Kind::prime && field.characteristic() == 2);
    return boundary_with_signs(d.poset(), i, signed_entries);
}

std::int64_t reduced_euler_characteristic(const SimplicialComplex& d)
{
    const auto& poset = d.poset();
    std::int64_t chi = 0;
    for (int i = -1; i <= poset.dimension(); ++i) {
        const auto f = static_cast<std::int64_t>(poset.count(i));
        chi += (i % 2 == 0) ? f : -f;
    }
    return chi;
}

void verify_chain_condition(const SimplicialComplex& d)
{
    const auto& poset = d.poset();
    for (int i = 1; i <= poset.dimension(); ++i) {
        const auto lower = boundary_with_signs(poset, i - 1, true);
        const auto upper = boundary_with_signs(poset, i, true);
        if (!multiply(lower, upper).entries().empty())
            throw std::logic_error("chain condition fails in degree " + std::to_string(i));
    }
}

ReducedBetti all_reduced_betti(const SimplicialComplex& d, const FieldSpec& field)
{
    if (d.is_void())
        return ReducedBetti{};
    check_dimension(d);
    if (chain_checks_enabled())
        verify_chain_condition(d);

    const auto& poset = d.poset();
    const int top = poset.dimension();
    const bool signed_entries = !(field.kind() == FieldSpec::Kind::prime && field.characteristic() == 2);
    // ranks[i] = rank of ∂_i for i = 0..top; ∂_{top+1} = 0.
    std::vector<std::size_t> ranks(top + 2, 0);
    for (int i = 0; i <= top; ++i)
        ranks[i] = rank(boundary_with_signs(poset, i, signed_entries), field);

    std::vector<std::size_t> betti(top + 2, 0);
    std::int64_t alternating = 0;
    for (int i = -1; i <= top; ++i) {
        const std::size_t cycles = poset.count(i) - (i >= 0 ? ranks[i] : 0);
        const std::size_t value = cycles - ranks[i + 1];
        betti[i + 1] = value;
        alternating += (i % 2 == 0) ? static_cast<std::int64_t>(value) : -static_cast<std::int64_t>(value);
    }
    if (alternating != reduced_euler_characteristic(d))
        throw std::logic_error("Euler-Poincare identity violated");
    return ReducedBetti(std::move(betti));
}

std::size_t reduced_betti(const SimplicialComplex& d, int i, const FieldSpec& field)
{
    if (d.is_void() || i < -1 || i > d.dimension())
        return 0;
    check_dimension(d);
    const auto& poset = d.poset();
    const std::size_t rank_here = i >= 0 ? rank(boundary_matrix(d, i, field), field) : 0;
    const std::size_t rank_above = rank(boundary_matrix(d, i + 1, field), field);
    return poset.count(i) - rank_here - rank_above;
}

} // namespace strandlab
