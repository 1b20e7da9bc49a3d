#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "oracle/brute.hpp"
#include "strandlab/complex.hpp"

using namespace strandlab;

namespace {

using Facets = std::vector<Face>;

oracle::Mask mask_of(const Face& f)
{
    oracle::Mask m = 0;
    for (Vertex v : f)
        m |= oracle::Mask{1} << (v - 1);
    return m;
}

std::set<oracle::Mask> face_masks(const SimplicialComplex& d)
{
    std::set<oracle::Mask> out;
    const auto& p = d.poset();
    for (int dim = -1; dim <= p.dimension(); ++dim)
        for (const auto& f : p.faces(dim))
            out.insert(mask_of(f));
    return out;
}

std::set<oracle::Mask> brute_faces(int n, const oracle::FacePredicate& pred)
{
    std::set<oracle::Mask> out;
    for (oracle::Mask s = 0; s < (oracle::Mask{1} << n); ++s)
        if (pred(s))
            out.insert(s);
    return out;
}

Graph cycle(int n)
{
    std::vector<Graph::Edge> e;
    for (int v = 1; v <= n; ++v)
        e.emplace_back(v, v % n + 1);
    return Graph(n, e);
}

SimplicialComplex cycle_complex(int n)
{
    Facets f;
    for (int v = 1; v <= n; ++v)
        f.push_back({std::min(v, v % n + 1), std::max(v, v % n + 1)});
    return SimplicialComplex::from_facets(n, f);
}

SimplicialComplex octahedron()
{
    const std::vector<std::pair<Vertex, Vertex>> pairs{{1, 2}, {3, 4}, {5, 6}};
    return octahedral_sphere(2, pairs);
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
    Facets facets;
    const int count = 1 + static_cast<int>(rng() % 5);
    for (int k = 0; k < count; ++k) {
        Face f;
        for (int v = 1; v <= n; ++v)
            if (rng() % 2)
                f.push_back(v);
        facets.push_back(f);
    }
    return SimplicialComplex::from_facets(n, facets);
}

std::uint64_t binom(int n, int k)
{
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace

TEST_CASE("from_facets normalizes")
{
    auto a = SimplicialComplex::from_facets(3, {{1, 2}, {2, 3}, {1, 2}});
    CHECK(a.facets() == Facets{{1, 2}, {2, 3}});
    auto b = SimplicialComplex::from_facets(3, {{1, 2, 3}, {1, 2}});
    CHECK(b.facets() == Facets{{1, 2, 3}});
    auto e = SimplicialComplex::from_facets(2, {{}});
    CHECK(e.is_empty_complex());
    CHECK(e.dimension() == -1);
    CHECK_FALSE(e == SimplicialComplex::void_complex(2));
    CHECK(SimplicialComplex::void_complex(2).dimension() == -2);
    CHECK_THROWS_AS(SimplicialComplex::from_facets(2, {{1, 3}}), std::invalid_argument);
}

TEST_CASE("independence complex examples")
{
    auto c5 = independence_complex(cycle(5));
    CHECK(c5.facets() == Facets{{1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}});
    CHECK(independence_complex(Graph(2, {{1, 2}})).facets() == Facets{{1}, {2}});
    CHECK(independence_complex(Graph(3, {})).facets() == Facets{{1, 2, 3}});
}

TEST_CASE("independence complex matches brute-force independent sets")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const auto g = random_graph(rng, n, 0.35);
        const auto edges = g.edges();
        const auto expected = brute_faces(n, [&](oracle::Mask s) { return oracle::independent(s, edges); });
        CHECK(face_masks(independence_complex(g)) == expected);
    }
}

TEST_CASE("minimal nonfaces of an independence complex are the edges")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 8);
        const auto g = random_graph(rng, n, 0.4);
        Facets expected;
        for (auto [u, v] : g.edges())
            expected.push_back({u, v});
        auto got = minimal_nonfaces(independence_complex(g));
        std::sort(got.begin(), got.end());
        std::sort(expected.begin(), expected.end());
        CHECK(got == expected);
    }
    CHECK(minimal_nonfaces(SimplicialComplex::full_simplex(4)).empty());
}

TEST_CASE("induced subcomplexes")
{
    const auto c5 = cycle_complex(5);
    const std::vector<Vertex> three{2, 3, 4};
    CHECK(induced(c5, three).facets() == Facets{{1, 2}, {2, 3}});
    CHECK(induced(c5, std::vector<Vertex>{}).is_empty_complex());
    const std::vector<Vertex> skip{1, 3};
    CHECK(induced(c5, skip).facets() == Facets{{1}, {2}});

    // composition: restricting twice equals restricting to the composite set
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 6);
        const auto d = random_complex(rng, n);
        std::vector<Vertex> w, inner, composite;
        for (int v = 1; v <= n; ++v)
            if (rng() % 3)
                w.push_back(v);
        for (std::size_t k = 0; k < w.size(); ++k)
            if (rng() % 2) {
                inner.push_back(static_cast<Vertex>(k) + 1);
                composite.push_back(w[k]);
            }
        CHECK(induced(induced(d, w), inner) == induced(d, composite));
    }
}

TEST_CASE("links")
{
    const auto tri = boundary_of_simplex(2);
    CHECK(link(tri, {1}).facets() == Facets{{2}, {3}});
    const auto oct = octahedron();
    for (Vertex v = 1; v <= 6; ++v) {
        const auto lk = link(oct, {v});
        CHECK(lk.f_vector() == std::vector<std::size_t>{4, 4});
        for (Vertex u : lk.vertices())
            CHECK(one_skeleton(lk).neighbours(u).size() == 2);
    }
    CHECK(link(tri, {}) == tri);
    CHECK_THROWS_AS(link(tri, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("joins")
{
    const auto c3 = cycle_complex(3);
    const auto c6 = cycle_complex(6);
    const auto j = join(c3, c6);
    CHECK(j.ground_size() == 9);
    CHECK(j.facets().size() == 18);
    CHECK(j.f_vector() == std::vector<std::size_t>{9, 3 + 6 + 18, 3 * 6 + 3 * 6, 3 * 6});

    const auto point = SimplicialComplex::full_simplex(1);
    const auto cone = join(point, c3);
    CHECK(cone.facets() == Facets{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}});

    const auto e = SimplicialComplex::empty_complex(0);
    CHECK(join(e, e).is_empty_complex());
}

TEST_CASE("simplex boundaries")
{
    CHECK(boundary_of_simplex(1).facets() == Facets{{1}, {2}});
    CHECK(boundary_of_simplex(2).facets() == Facets{{1, 2}, {1, 3}, {2, 3}});
    CHECK(boundary_of_simplex(3).facets().size() == 4);
    CHECK(boundary_of_simplex(3).dimension() == 2);
    CHECK_THROWS(boundary_of_simplex(0));
}

TEST_CASE("barycentric subdivision")
{
    const auto sd3 = barycentric_subdivision(boundary_of_simplex(2));
    CHECK(sd3.f_vector() == std::vector<std::size_t>{6, 6});
    CHECK(is_flag(sd3).flag);
    for (Vertex v = 1; v <= 6; ++v)
        CHECK(one_skeleton(sd3).neighbours(v).size() == 2);

    const auto sd_oct = barycentric_subdivision(octahedron());
    CHECK(sd_oct.f_vector() == std::vector<std::size_t>{26, 72, 48});
    const auto sd2_oct = barycentric_subdivision(sd_oct);
    CHECK(sd2_oct.f_vector() == std::vector<std::size_t>{146, 432, 288});

    const auto pt = SimplicialComplex::full_simplex(1);
    CHECK(barycentric_subdivision(pt) == pt);
}

TEST_CASE("subdivision face counts equal chain counts")
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const auto d = random_complex(rng, n);
        if (d.dimension() < 0)
            continue;
        const auto facets = d.facets();
        const auto chains = oracle::chain_counts(n, [&](oracle::Mask s) {
            for (const auto& f : facets)
                if ((s & ~mask_of(f)) == 0)
                    return true;
            return false;
        });
        const auto f = barycentric_subdivision(d).f_vector();
        CHECK(f == std::vector<std::size_t>(chains.begin(), chains.end()));
    }
}

TEST_CASE("subdivisions are flag: every 1-skeleton clique is a face")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const auto d = random_complex(rng, n);
        if (d.dimension() < 1)
            continue;
        const auto sd = barycentric_subdivision(d);
        CHECK(is_flag(sd).flag);
        const auto g = one_skeleton(sd);
        const int m = sd.ground_size();
        REQUIRE(m <= 24);
        // grow cliques vertex by vertex and test each one
        std::vector<Face> frontier{{}};
        while (!frontier.empty()) {
            std::vector<Face> next;
            for (const auto& c : frontier) {
                CHECK(sd.contains(c));
                for (Vertex v = c.empty() ? 1 : c.back() + 1; v <= m; ++v) {
                    bool ok = true;
                    for (Vertex u : c)
                        ok = ok && g.has_edge(u, v);
                    if (ok) {
                        auto e = c;
                        e.push_back(v);
                        next.push_back(e);
                    }
                }
            }
            frontier = std::move(next);
        }
    }
}

TEST_CASE("octahedral spheres")
{
    const std::vector<std::pair<Vertex, Vertex>> two{{1, 3}, {2, 4}};
    const auto square = octahedral_sphere(1, two);
    CHECK(square.facets() == Facets{{1, 2}, {1, 4}, {2, 3}, {3, 4}});

    for (int d = 0; d <= 4; ++d) {
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (int k = 0; k <= d; ++k)
            pairs.emplace_back(2 * k + 1, 2 * k + 2);
        const auto o = octahedral_sphere(d, pairs);
        const auto f = o.f_vector();
        for (int k = 0; k <= d; ++k)
            CHECK(f[k] == (std::uint64_t{1} << (k + 1)) * binom(d + 1, k + 1));
        CHECK(is_flag(o).flag);
        // every pair is a minimal nonface and nothing else is
        auto nf = minimal_nonfaces(o);
        CHECK(nf.size() == pairs.size());
        if (d >= 1) {
            const auto ball = delete_vertex(o, 1);
            CHECK(ball.facets().size() == (std::size_t{1} << d));
            CHECK(ball.dimension() == d);
        }
    }

    const std::vector<std::pair<Vertex, Vertex>> four{{1, 2}, {3, 4}, {5, 6}, {7, 8}};
    const auto o3 = octahedral_sphere(3, four);
    CHECK(o3.facets().size() == 16);
    CHECK(o3.ground_size() == 8);

    const std::vector<std::pair<Vertex, Vertex>> overlap{{1, 2}, {2, 3}};
    CHECK_THROWS(octahedral_sphere(1, overlap));
    CHECK_THROWS(octahedral_sphere(2, two));
}

TEST_CASE("alexander dual by definition")
{
    const auto pts = SimplicialComplex::from_facets(2, {{1}, {2}});
    // the only nonface is {1,2}, whose complement is empty
    CHECK(alexander_dual(pts).is_empty_complex());

    std::mt19937_64 rng(31);
    std::vector<SimplicialComplex> samples{cycle_complex(4), octahedron(), cycle_complex(5)};
    for (int trial = 0; trial < 40; ++trial)
        samples.push_back(random_complex(rng, 2 + static_cast<int>(rng() % 6)));
    for (const auto& d : samples) {
        const int n = d.ground_size();
        const auto faces = face_masks(d);
        const oracle::Mask all = (oracle::Mask{1} << n) - 1;
        const auto expected = brute_faces(n, [&](oracle::Mask s) { return !faces.count(all & ~s); });
        const auto dual = alexander_dual(d);
        CHECK(face_masks(dual) == expected);
        CHECK(alexander_dual(dual) == d);
    }
}

TEST_CASE("flag detection")
{
    const auto c3 = boundary_of_simplex(2);
    const auto r = is_flag(c3);
    CHECK_FALSE(r.flag);
    REQUIRE(r.witness);
    CHECK(*r.witness == Face{1, 2, 3});
    CHECK(is_flag(cycle_complex(6)).flag);

    auto nf = minimal_nonfaces(join(c3, cycle_complex(6)));
    std::size_t big = 0, small = 0;
    for (const auto& f : nf) {
        big += f.size() == 3;
        small += f.size() == 2;
    }
    CHECK(big == 1);
    CHECK(small == 9); // non-adjacent pairs of the 6-cycle
    CHECK(nf.size() == 10);
}

TEST_CASE("graph distances and spread subsets")
{
    Graph path(4, {{1, 2}, {2, 3}, {3, 4}});
    CHECK(graph_distance(path, 1, 4) == 3);
    CHECK(graph_distance(path, 2, 2) == 0);
    Graph split(4, {{1, 2}, {3, 4}});
    CHECK_FALSE(graph_distance(split, 1, 3).has_value());

    const auto c6 = cycle(6);
    const auto s = spread_subset(c6, 2, 3);
    REQUIRE(s);
    REQUIRE(s->size() == 2);
    CHECK(graph_distance(c6, (*s)[0], (*s)[1]) == 3);
    CHECK_FALSE(spread_subset(c6, 3, 3).has_value());

    const auto sk = one_skeleton(barycentric_subdivision(barycentric_subdivision(octahedron())));
    const auto a = spread_subset(sk, 6, 3);
    REQUIRE(a);
    for (std::size_t x = 0; x < a->size(); ++x)
        for (std::size_t y = x + 1; y < a->size(); ++y)
            CHECK(graph_distance(sk, (*a)[x], (*a)[y]).value_or(1000) >= 3);
}
