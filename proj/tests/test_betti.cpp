#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "oracle/brute.hpp"
#include "strandlab/betti.hpp"

using namespace strandlab;

namespace {

using Table = std::map<std::pair<int, int>, std::uint64_t>;

const std::vector<FieldSpec> fields{FieldSpec::gf(2), FieldSpec::gf(3), FieldSpec::rationals()};

Graph cycle(int n)
{
    std::vector<Graph::Edge> e;
    for (int v = 1; v <= n; ++v)
        e.emplace_back(v, v % n + 1);
    return Graph(n, e);
}

Graph random_graph(std::mt19937_64& rng, int n, double p)
{
    std::bernoulli_distribution keep(p);
    std::vector<Graph::Edge> e;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (keep(rng))
                e.emplace_back(u, v);
    return Graph(n, e);
}

SimplicialComplex random_complex(std::mt19937_64& rng, int n)
{
    std::vector<Face> facets;
    const int count = 1 + static_cast<int>(rng() % 6);
    for (int k = 0; k < count; ++k) {
        Face f;
        for (int v = 1; v <= n; ++v)
            if (rng() % 2)
                f.push_back(v);
        facets.push_back(f);
    }
    return SimplicialComplex::from_facets(n, facets);
}

std::int64_t oracle_char(const FieldSpec& f) { return f.is_rationals() ? 0 : f.characteristic(); }

Table brute_table(const SimplicialComplex& d, const FieldSpec& f)
{
    const auto facets = d.facets();
    return oracle::hochster(d.ground_size(), [&](oracle::Mask s) {
        for (const auto& g : facets) {
            oracle::Mask m = 0;
            for (Vertex v : g)
                m |= oracle::Mask{1} << (v - 1);
            if ((s & ~m) == 0)
                return true;
        }
        return false;
    }, oracle_char(f));
}

Table brute_graph_table(const Graph& g, const FieldSpec& f)
{
    const auto edges = g.edges();
    return oracle::hochster(g.vertex_count(), [&](oracle::Mask s) { return oracle::independent(s, edges); },
                            oracle_char(f));
}

} // namespace

TEST_CASE("known tables")
{
    const Graph k3(3, {{1, 2}, {1, 3}, {2, 3}});
    const Table k3_expected{{{0, 2}, 3}, {{1, 3}, 2}};
    const Table c5_expected{{{0, 2}, 5}, {{1, 3}, 5}, {{2, 5}, 1}};
    for (const auto& f : fields) {
        CHECK(brute_graph_table(k3, f) == k3_expected);
        CHECK(brute_graph_table(cycle(5), f) == c5_expected);

        const auto t = hochster_table(independence_complex(k3), f);
        CHECK(t.entries() == k3_expected);
        CHECK(eagon_reiner_table(independence_complex(k3), f).entries() == k3_expected);
        const auto c5 = hochster_table(independence_complex(cycle(5)), f);
        CHECK(c5.entries() == c5_expected);
        CHECK(eagon_reiner_table(independence_complex(cycle(5)), f) == c5);
        CHECK(c5.quotient(0, 0) == 1);
        CHECK(c5.quotient(1, 2) == 5);
        CHECK(c5.quotient(3, 5) == 1);

        CHECK(hochster_table(SimplicialComplex::full_simplex(4), f).is_zero());
        CHECK(eagon_reiner_table(SimplicialComplex::full_simplex(4), f).is_zero());
    }
}

TEST_CASE("t-vectors")
{
    const Graph k3(3, {{1, 2}, {1, 3}, {2, 3}});
    const auto f = FieldSpec::gf(2);
    CHECK(t_vector(hochster_table(independence_complex(k3), f)) == TVector{{0, 2, 3}});
    CHECK(t_vector(hochster_table(independence_complex(cycle(5)), f)) == TVector{{0, 2, 3, 5}});
    CHECK(t_vector(BettiTable(3, f)) == TVector{{0}});
}

TEST_CASE("both formulas match the brute-force oracle on random graphs")
{
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const auto g = random_graph(rng, n, 0.45);
        if (g.edges().empty())
            continue;
        const auto d = independence_complex(g);
        for (const auto& f : fields) {
            const auto expected = brute_graph_table(g, f);
            CHECK(hochster_table(d, f).entries() == expected);
            CHECK(eagon_reiner_table(d, f).entries() == expected);
        }
    }
}

TEST_CASE("both formulas match the brute-force oracle on random complexes")
{
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 60; ++trial) {
        const auto d = random_complex(rng, 2 + static_cast<int>(rng() % 7));
        for (const auto& f : fields) {
            const auto expected = brute_table(d, f);
            CHECK(hochster_table(d, f).entries() == expected);
            CHECK(eagon_reiner_table(d, f).entries() == expected);
        }
    }
}

TEST_CASE("worker count does not change tables")
{
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 10; ++trial) {
        const auto d = independence_complex(random_graph(rng, 9, 0.4));
        BettiOptions one{16, 1}, four{16, 4};
        CHECK(hochster_table(d, FieldSpec::rationals(), one) == hochster_table(d, FieldSpec::rationals(), four));
        CHECK(eagon_reiner_table(d, FieldSpec::gf(2), one) == eagon_reiner_table(d, FieldSpec::gf(2), four));
    }
}

TEST_CASE("single entries match the table")
{
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 10; ++trial) {
        const auto d = independence_complex(random_graph(rng, 7, 0.4));
        const auto t = hochster_table(d, FieldSpec::gf(3));
        for (int j = 1; j <= 7; ++j)
            for (int i = 0; i < j; ++i)
                CHECK(betti_entry(d, i, j, FieldSpec::gf(3)) == t.ideal(i, j));
    }
}

TEST_CASE("cap is enforced")
{
    const auto d = SimplicialComplex::full_simplex(10);
    try {
        (void)hochster_table(d, FieldSpec::gf(2), BettiOptions{8, 1});
        FAIL("expected refusal");
    } catch (const CapExceeded& e) {
        CHECK(e.cap() == 8);
        CHECK(std::string(e.what()).find('8') != std::string::npos);
    }
    CHECK_THROWS_AS(eagon_reiner_table(d, FieldSpec::gf(2), BettiOptions{8, 1}), CapExceeded);
    CHECK_NOTHROW(hochster_table(d, FieldSpec::gf(2), BettiOptions{10, 1}));
    CHECK_THROWS_AS(hochster_table(SimplicialComplex::void_complex(3), FieldSpec::gf(2)), std::invalid_argument);
}

TEST_CASE("table bookkeeping")
{
    BettiTable t(4, FieldSpec::gf(2));
    CHECK(t.max_index() == -1);
    t.add(0, 2, 3);
    t.add(1, 3, 2);
    t.add(0, 2, 1);
    CHECK(t.ideal(0, 2) == 4);
    CHECK(t.quotient(1, 2) == 4);
    CHECK(t.quotient(0, 0) == 1);
    CHECK(t.quotient(0, 1) == 0);
    CHECK(t.max_index() == 1);
    CHECK(t.max_degree() == 3);
    t.add(2, 4, 0);
    CHECK(t.entries().size() == 2);
    CHECK_THROWS(t.add(2, 2, 1));
}

TEST_CASE("monomial ideals and polarization")
{
    const MonomialIdeal sq(3, {{1, 1, 0}, {0, 1, 1}});
    CHECK(sq.is_squarefree());
    CHECK(sq.generated_in_degree(2));
    const auto p0 = polarize(sq);
    CHECK(p0.ideal == sq);
    CHECK(p0.variables == std::vector<PolarizedVariable>{{1, 1}, {2, 1}, {3, 1}});

    const auto p1 = polarize(MonomialIdeal(1, {{2}}));
    CHECK(p1.ideal == MonomialIdeal(2, {{1, 1}}));
    CHECK(p1.variables == std::vector<PolarizedVariable>{{1, 1}, {1, 2}});

    const auto p2 = polarize(MonomialIdeal(2, {{2, 0}, {1, 1}}));
    CHECK(p2.ideal == MonomialIdeal(3, {{1, 0, 1}, {1, 1, 0}}));
    CHECK(p2.ideal.is_squarefree());
    // x1^2, x1x2 has a linear resolution of length 1
    const auto t = hochster_table(complex_of_squarefree_ideal(p2.ideal), FieldSpec::rationals());
    CHECK(t.entries() == Table{{{0, 2}, 2}, {{1, 3}, 1}});

    // non-minimal generators are dropped
    const MonomialIdeal red(2, {{1, 0}, {1, 1}});
    CHECK(red.generators().size() == 1);
    CHECK_THROWS(MonomialIdeal(2, {}));
    CHECK_THROWS(MonomialIdeal(2, {{1}}));
}

TEST_CASE("squarefree ideals and complexes correspond")
{
    CHECK(complex_of_squarefree_ideal(MonomialIdeal(3, {{1, 1, 1}})) == boundary_of_simplex(2));
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 30; ++trial) {
        const auto g = random_graph(rng, 2 + static_cast<int>(rng() % 7), 0.5);
        if (g.edges().empty())
            continue;
        CHECK(complex_of_squarefree_ideal(edge_ideal(g)) == independence_complex(g));
    }
    CHECK_THROWS(complex_of_squarefree_ideal(MonomialIdeal(1, {{2}})));
    CHECK_THROWS(edge_ideal(Graph(3, {})));
}
