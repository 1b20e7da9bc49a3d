#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>

#include "strandlab/analysis.hpp"

using namespace strandlab;

namespace {

Graph cycle(int n)
{
    std::vector<Graph::Edge> e;
    for (int v = 1; v <= n; ++v)
        e.emplace_back(v, v % n + 1);
    return Graph(n, e);
}

BettiTable table_of(const Graph& g, const FieldSpec& f = FieldSpec::gf(2))
{
    return hochster_table(independence_complex(g), f);
}

// Connectivity by string shape: after trimming zeros at both ends, a
// connected strand has no zero left.
bool connected_by_pattern(const std::vector<std::uint64_t>& values)
{
    std::string s;
    for (auto v : values)
        s += v ? 'X' : '0';
    const auto first = s.find('X');
    if (first == std::string::npos)
        return true;
    const auto last = s.rfind('X');
    return s.substr(first, last - first + 1).find('0') == std::string::npos;
}

} // namespace

TEST_CASE("strand examples")
{
    const auto c5 = table_of(cycle(5));
    const auto s2 = strand(c5, 2);
    CHECK(s2.values == std::vector<std::uint64_t>{5, 5});
    CHECK(s2.connected);
    CHECK_FALSE(s2.gap_witness);
    CHECK(strand(c5, 3).values == std::vector<std::uint64_t>{0, 0, 1});

    BettiTable gap(9, FieldSpec::gf(2));
    gap.add(0, 3, 1);
    gap.add(3, 6, 1);
    const auto s3 = strand(gap, 3);
    CHECK(s3.values == std::vector<std::uint64_t>{1, 0, 0, 1});
    CHECK_FALSE(s3.connected);
    REQUIRE(s3.gap_witness);
    CHECK(*s3.gap_witness == std::pair(0, 3));

    const auto empty = strand(BettiTable(3, FieldSpec::gf(2)), 4);
    CHECK(empty.values.empty());
    CHECK(empty.connected);
}

TEST_CASE("strand connectivity agrees with a pattern scan")
{
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 500; ++trial) {
        BettiTable t(12, FieldSpec::gf(2));
        for (int i = 0; i < 8; ++i)
            for (int j = 1; j <= 4; ++j)
                if (rng() % 3 == 0)
                    t.add(i, i + j, 1 + rng() % 4);
        for (int j = 1; j <= 4; ++j) {
            const auto s = strand(t, j);
            CHECK(s.connected == connected_by_pattern(s.values));
            if (!s.values.empty())
                CHECK(s.values.back() != 0);
        }
    }
}

TEST_CASE("vanishing table")
{
    CHECK(vanishing_table(BettiTable(3, FieldSpec::gf(2))).empty());
    CHECK(vanishing_table(table_of(cycle(5))) == "2: X X 0 0\n3: 0 0 X 0\n");
}

TEST_CASE("strand theorem check")
{
    CHECK(check_strand_theorem(table_of(cycle(5))).pass);
    CHECK(check_strand_theorem(table_of(cycle(7))).pass);

    BettiTable cubic(3, FieldSpec::gf(2));
    cubic.add(0, 3, 1);
    CHECK_THROWS_AS(check_strand_theorem(cubic), PreconditionError);

    BettiTable broken(9, FieldSpec::gf(2));
    broken.add(0, 2, 1);
    broken.add(2, 5, 1);
    broken.add(4, 7, 1);
    const auto r = check_strand_theorem(broken);
    CHECK_FALSE(r.pass);
    CHECK(r.strand2.connected);
    CHECK_FALSE(r.strand3.connected);
}

TEST_CASE("subadditivity")
{
    const auto c5 = check_subadditivity(TVector{{0, 2, 3, 5}}, SubadditivityMode::b_at_most_3);
    CHECK(c5.ok());
    CHECK(c5.checked == std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}});
    const auto& t = c5.t;
    CHECK(*t.at(3) == *t.at(1) + *t.at(2));

    CHECK(check_subadditivity(TVector{{0, 2, 3}}, SubadditivityMode::all_pairs).ok());
    const auto zero = check_subadditivity(TVector{{0}}, SubadditivityMode::all_pairs);
    CHECK(zero.ok());
    CHECK(zero.checked.empty());

    const auto bad = check_subadditivity(TVector{{0, 2, 5}}, SubadditivityMode::b_at_most_3);
    REQUIRE(bad.violations.size() == 1);
    CHECK(bad.violations[0] == SubadditivityViolation{1, 1, 5, 4});

    // b = 4 pairs only appear in all-pairs mode
    const TVector long_t{{0, 2, 3, 4, 5, 7, 8, 9, 11}};
    CHECK(check_subadditivity(long_t, SubadditivityMode::b_at_most_3).ok());
    const auto all = check_subadditivity(long_t, SubadditivityMode::all_pairs);
    REQUIRE(all.violations.size() == 1);
    CHECK(all.violations[0].a == 4);
    CHECK(all.violations[0].b == 4);
}

TEST_CASE("derived statistics")
{
    const auto c5 = derived_stats(TVector{{0, 2, 3, 5}});
    CHECK(c5.projective_dimension == 3);
    CHECK(c5.regularity == 2);
    const auto k3 = derived_stats(TVector{{0, 2, 3}});
    CHECK(k3.projective_dimension == 2);
    CHECK(k3.regularity == 1);
    const auto z = derived_stats(TVector{{0}});
    CHECK(z.projective_dimension == 0);
    CHECK(z.regularity == 0);
}

TEST_CASE("structural properties on random edge ideals")
{
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 7);
        std::bernoulli_distribution keep(0.2 + 0.1 * (trial % 5));
        std::vector<Graph::Edge> e;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (keep(rng))
                    e.emplace_back(u, v);
        if (e.empty())
            continue;
        const auto t = table_of(Graph(n, e), trial % 2 ? FieldSpec::rationals() : FieldSpec::gf(2));
        CHECK(check_strand_theorem(t).pass);
        CHECK(check_subadditivity(t_vector(t), SubadditivityMode::b_at_most_3).ok());
        CHECK(check_subadditivity(t_vector(t), SubadditivityMode::all_pairs).ok());
        CHECK(corner_lemma_violations(t).empty());
        CHECK(taylor_bound_violations(t).empty());
        CHECK(first_strand_monotone(t));
    }
}

TEST_CASE("property checks detect planted defects")
{
    BettiTable taylor(6, FieldSpec::gf(2));
    taylor.add(0, 2, 1);
    taylor.add(1, 5, 1);
    CHECK(taylor_bound_violations(taylor) == std::vector<std::pair<int, int>>{{1, 5}});

    BettiTable mono(6, FieldSpec::gf(2));
    mono.add(0, 2, 3);
    mono.add(1, 4, 1);
    mono.add(2, 4, 1);
    CHECK_FALSE(first_strand_monotone(mono));

    BettiTable corner(6, FieldSpec::gf(2));
    corner.add(0, 2, 2);
    corner.add(1, 5, 1); // S/I (2,5) with (1,3) and (1,4) zero
    CHECK_FALSE(corner_lemma_violations(corner).empty());
}
