#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "strandlab/analysis.hpp"
#include "strandlab/betti.hpp"
#include "strandlab/complex.hpp"

namespace strandlab {

/// Join of ∂Δ^{j-1} with its barycentric subdivision; j >= 3.
SimplicialComplex remark_complex(int j);

struct RemarkVerification {
    int j = 0;
    BettiTable table;
    StrandReport strand;
    /// Homological indices where strand j is expected to be nonzero: 0 for
    /// the simplex-boundary factor and (vertices of the subdivision) - j.
    std::pair<int, int> expected_support;
    /// Strand j disconnected with nonzeros exactly at expected_support.
    bool confirmed = false;
};

/// Full Hochster table of remark_complex(j); needs cap >= j + |sd|.
RemarkVerification verify_remark(int j, const FieldSpec& field, const BettiOptions& options = {});

struct CertificateChecks {
    FieldSpec field = FieldSpec::gf(2);
    bool flag = false;
    std::optional<Face> flag_witness;
    /// Smallest pairwise distance in the sphere's 1-skeleton; -1 if some
    /// pair lies in different components.
    int min_distance = -1;
    bool distance_ok = false;
    std::size_t betti_complex = 0;           // β̃_i(Δ)
    std::size_t betti_core = 0;              // β̃_i(Δ[A - {a,b}])
    std::vector<std::size_t> betti_deleted;  // β̃_i(Δ - x) for x = 1..n
    bool valid = false;
    std::string failure;

    // Strand i+2 of I_Δ read off the targeted evaluations.
    int strand = 0;
    int high_index = 0;           // β_{n-i-2, n}(I) = β̃_i(Δ)
    std::uint64_t gap_value = 0;  // β_{n-i-3, n-1}(I) = Σ_x β̃_i(Δ - x)
    int gap_index = 0;
    int low_index = 0;            // β_{i, 2i+2}(I) >= β̃_i(Δ[A - {a,b}])
    bool strand_disconnected = false;
};

struct CounterexampleCertificate {
    int dimension = 2;      // i
    int subdivisions = 0;   // k
    SimplicialComplex sphere;
    SimplicialComplex octahedral;
    SimplicialComplex complex;
    std::vector<Vertex> spread;  // A, in selection order
    std::vector<std::pair<Vertex, Vertex>> pairing;
    std::pair<Vertex, Vertex> antipodal{0, 0};
    std::optional<CertificateChecks> checks;
};

struct CounterexampleOptions {
    int max_subdivisions = 4;
    /// i > 2 is refused unless set.
    bool allow_large = false;
};

/// Seeds with the boundary of the (i+1)-cross-polytope, subdivides k times
/// and keeps subdividing until 2i+4 vertices pairwise at distance >= 3 are
/// found. Throws std::runtime_error if max_subdivisions is reached first.
CounterexampleCertificate build_counterexample(int i, int subdivisions, const CounterexampleOptions& options = {});

/// Runs every check by direct homology computation and returns the
/// certificate with `checks` filled in.
CounterexampleCertificate verify_counterexample(const CounterexampleCertificate& certificate, const FieldSpec& field,
                                                unsigned workers = 1);

} // namespace strandlab
