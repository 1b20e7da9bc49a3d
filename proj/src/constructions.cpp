#include "strandlab/constructions.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "strandlab/homology.hpp"
#include "strandlab/parallel.hpp"

namespace strandlab {

SimplicialComplex remark_complex(int j)
{
    if (j < 3)
        throw std::invalid_argument("remark_complex: j must be at least 3");
    const auto boundary = boundary_of_simplex(j - 1);
    return join(boundary, barycentric_subdivision(boundary));
}

RemarkVerification verify_remark(int j, const FieldSpec& field, const BettiOptions& options)
{
    const auto d = remark_complex(j);
    const int subdivision_vertices = d.ground_size() - j;
    RemarkVerification out{j, hochster_table(d, field, options), {}, {0, subdivision_vertices - j}, false};
    out.strand = strand(out.table, j);

    bool support_ok = !out.strand.connected;
    for (int i = 0; i < static_cast<int>(out.strand.values.size()); ++i) {
        const bool expected = i == out.expected_support.first || i == out.expected_support.second;
        support_ok = support_ok && ((out.strand.values[i] != 0) == expected);
    }
    out.confirmed = support_ok && static_cast<int>(out.strand.values.size()) > out.expected_support.second;
    return out;
}

CounterexampleCertificate build_counterexample(int i, int subdivisions, const CounterexampleOptions& options)
{
    if (i < 2)
        throw std::invalid_argument("build_counterexample: i must be at least 2");
    if (i > 2 && !options.allow_large)
        throw std::invalid_argument("build_counterexample: i > 2 is expensive; enable the large option");
    if (subdivisions < 0)
        throw std::invalid_argument("build_counterexample: negative subdivision count");

    std::vector<std::pair<Vertex, Vertex>> seed_pairs;
    for (int t = 0; t <= i; ++t)
        seed_pairs.emplace_back(2 * t + 1, 2 * t + 2);
    SimplicialComplex sphere = octahedral_sphere(i, seed_pairs);
    for (int t = 0; t < subdivisions; ++t)
        sphere = barycentric_subdivision(sphere);

    const int wanted = 2 * i + 4;
    int k = subdivisions;
    std::optional<std::vector<Vertex>> spread;
    while (!(spread = spread_subset(one_skeleton(sphere), wanted, 3))) {
        if (k >= options.max_subdivisions)
            throw std::runtime_error("build_counterexample: no " + std::to_string(wanted) +
                                     " vertices at pairwise distance >= 3 after " + std::to_string(k) +
                                     " subdivisions");
        sphere = barycentric_subdivision(sphere);
        ++k;
    }

    CounterexampleCertificate c;
    c.dimension = i;
    c.subdivisions = k;
    c.sphere = sphere;
    c.spread = *spread;
    for (std::size_t t = 0; t + 1 < c.spread.size(); t += 2)
        c.pairing.emplace_back(c.spread[t], c.spread[t + 1]);
    c.antipodal = c.pairing.front();
    c.octahedral = octahedral_sphere(i + 1, c.pairing, sphere.ground_size());
    std::vector<Face> facets = sphere.facets();
    facets.insert(facets.end(), c.octahedral.facets().begin(), c.octahedral.facets().end());
    c.complex = SimplicialComplex::from_facets(sphere.ground_size(), std::move(facets));
    return c;
}

CounterexampleCertificate verify_counterexample(const CounterexampleCertificate& certificate, const FieldSpec& field,
                                                unsigned workers)
{
    const int i = certificate.dimension;
    const auto& delta = certificate.complex;
    const int n = delta.ground_size();
    if (static_cast<int>(certificate.spread.size()) != 2 * i + 4)
        throw std::invalid_argument("certificate: |A| must be 2i+4");

    CertificateChecks checks;
    checks.field = field;

    const auto flag = is_flag(delta);
    checks.flag = flag.flag;
    checks.flag_witness = flag.witness;

    const Graph skeleton = one_skeleton(certificate.sphere);
    checks.min_distance = std::numeric_limits<int>::max();
    for (std::size_t s = 0; s < certificate.spread.size(); ++s) {
        const auto dist = distances_from(skeleton, certificate.spread[s]);
        for (std::size_t t = s + 1; t < certificate.spread.size(); ++t) {
            const int d = dist[certificate.spread[t] - 1];
            if (d >= 0)
                checks.min_distance = std::min(checks.min_distance, d);
        }
    }
    if (checks.min_distance == std::numeric_limits<int>::max())
        checks.min_distance = -1;
    checks.distance_ok = checks.min_distance < 0 || checks.min_distance >= 3;

    std::vector<Vertex> core;
    for (Vertex v : certificate.spread)
        if (v != certificate.antipodal.first && v != certificate.antipodal.second)
            core.push_back(v);

    // Job 0 is Δ itself, job x is Δ - x.
    std::vector<std::size_t> results(n + 1, 0);
    parallel_for(static_cast<std::size_t>(n) + 1, workers, [&](unsigned, std::size_t job) {
        if (job == 0)
            results[0] = reduced_betti(delta, i, field);
        else
            results[job] = reduced_betti(delete_vertex(delta, static_cast<Vertex>(job)), i, field);
    });
    checks.betti_complex = results[0];
    checks.betti_deleted.assign(results.begin() + 1, results.end());
    checks.betti_core = reduced_betti(induced(delta, core), i, field);

    checks.strand = i + 2;
    checks.high_index = n - i - 2;
    checks.gap_index = n - i - 3;
    checks.gap_value = std::accumulate(checks.betti_deleted.begin(), checks.betti_deleted.end(), std::uint64_t{0});
    checks.low_index = i;
    checks.strand_disconnected =
        checks.betti_complex != 0 && checks.betti_core != 0 && checks.gap_value == 0 && checks.gap_index > i;

    if (!checks.flag)
        checks.failure = "complex is not flag";
    else if (!checks.distance_ok)
        checks.failure = "spread vertices closer than 3 in the sphere";
    else if (checks.betti_complex == 0)
        checks.failure = "top homology of the complex vanishes";
    else if (checks.betti_core == 0)
        checks.failure = "homology of the induced octahedral core vanishes";
    else if (checks.gap_value != 0) {
        auto it = std::find_if(checks.betti_deleted.begin(), checks.betti_deleted.end(),
                               [](std::size_t b) { return b != 0; });
        checks.failure = "homology survives deleting vertex " + std::to_string(it - checks.betti_deleted.begin() + 1);
    }
    checks.valid = checks.failure.empty();

    CounterexampleCertificate out = certificate;
    out.checks = std::move(checks);
    return out;
}

} // namespace strandlab
