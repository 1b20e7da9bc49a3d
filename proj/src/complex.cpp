#include "strandlab/complex.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace strandlab {

std::size_t FaceHash::operator()(const Face& f) const noexcept
{
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Vertex v : f) {
        h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

FacePoset::FacePoset(std::vector<std::vector<Face>> by_dimension) : levels_(std::move(by_dimension))
{
    while (!levels_.empty() && levels_.back().empty())
        levels_.pop_back();
    index_.resize(levels_.size());
    for (std::size_t k = 0; k < levels_.size(); ++k) {
        std::sort(levels_[k].begin(), levels_[k].end());
        index_[k].reserve(levels_[k].size());
        for (std::size_t i = 0; i < levels_[k].size(); ++i)
            index_[k].emplace(levels_[k][i], i);
    }
}

std::span<const Face> FacePoset::faces(int dim) const
{
    const int level = dim + 1;
    if (level < 0 || level >= static_cast<int>(levels_.size()))
        return {};
    return levels_[level];
}

std::optional<std::size_t> FacePoset::index_of(const Face& f) const
{
    if (f.size() >= index_.size())
        return std::nullopt;
    const auto& map = index_[f.size()];
    auto it = map.find(f);
    if (it == map.end())
        return std::nullopt;
    return it->second;
}

std::size_t FacePoset::total() const
{
    std::size_t t = 0;
    for (const auto& l : levels_)
        t += l.size();
    return t;
}

namespace detail {
struct PosetCache {
    std::once_flag once;
    FacePoset poset;
};
} // namespace detail

namespace {

bool canonical_less(const Face& a, const Face& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return a < b;
}

Face without(const Face& f, std::size_t pos)
{
    Face g;
    g.reserve(f.size() - 1);
    for (std::size_t k = 0; k < f.size(); ++k)
        if (k != pos)
            g.push_back(f[k]);
    return g;
}

FacePoset build_poset(const std::vector<Face>& facets)
{
    if (facets.empty())
        return FacePoset{};
    std::size_t top = 0;
    for (const auto& f : facets)
        top = std::max(top, f.size());
    std::vector<std::unordered_set<Face, FaceHash>> levels(top + 1);
    for (const auto& f : facets)
        levels[f.size()].insert(f);
    for (std::size_t k = top; k > 0; --k) {
        for (const auto& f : levels[k])
            for (std::size_t pos = 0; pos < f.size(); ++pos)
                levels[k - 1].insert(without(f, pos));
    }
    std::vector<std::vector<Face>> out(top + 1);
    for (std::size_t k = 0; k <= top; ++k)
        out[k].assign(levels[k].begin(), levels[k].end());
    return FacePoset(std::move(out));
}

} // namespace

SimplicialComplex::SimplicialComplex() : cache_(std::make_shared<detail::PosetCache>()) {}

SimplicialComplex::SimplicialComplex(int n, std::vector<Face> canonical_facets)
    : n_(n), facets_(std::move(canonical_facets)), cache_(std::make_shared<detail::PosetCache>())
{
}

std::vector<Face> maximal_faces(std::vector<Face> faces)
{
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        if (a.size() != b.size())
            return a.size() > b.size();
        return a < b;
    });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<Face> kept;
    for (auto& f : faces) {
        bool contained = std::any_of(kept.begin(), kept.end(), [&](const Face& g) {
            return g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end());
        });
        if (!contained)
            kept.push_back(std::move(f));
    }
    std::sort(kept.begin(), kept.end(), canonical_less);
    return kept;
}

SimplicialComplex SimplicialComplex::from_facets(int n, std::vector<Face> facets)
{
    if (n < 0)
        throw std::invalid_argument("complex: negative ground set size");
    for (auto& f : facets) {
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw std::invalid_argument("complex: repeated vertex in a facet");
        for (Vertex v : f)
            if (v < 1 || v > n)
                throw std::invalid_argument("complex: vertex " + std::to_string(v) + " out of range 1.." +
                                            std::to_string(n));
    }
    return SimplicialComplex(n, maximal_faces(std::move(facets)));
}

SimplicialComplex SimplicialComplex::void_complex(int n)
{
    return from_facets(n, {});
}

SimplicialComplex SimplicialComplex::empty_complex(int n)
{
    return from_facets(n, {Face{}});
}

SimplicialComplex SimplicialComplex::full_simplex(int n)
{
    Face all(n);
    std::iota(all.begin(), all.end(), 1);
    return from_facets(n, {all});
}

int SimplicialComplex::dimension() const
{
    if (facets_.empty())
        return -2;
    return static_cast<int>(facets_.back().size()) - 1;
}

bool SimplicialComplex::contains(const Face& f) const
{
    return std::any_of(facets_.begin(), facets_.end(), [&](const Face& g) {
        return g.size() >= f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end());
    });
}

const FacePoset& SimplicialComplex::poset() const
{
    std::call_once(cache_->once, [this] { cache_->poset = build_poset(facets_); });
    return cache_->poset;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const
{
    std::vector<std::size_t> f;
    const auto& p = poset();
    for (int d = 0; d <= p.dimension(); ++d)
        f.push_back(p.count(d));
    return f;
}

std::vector<Vertex> SimplicialComplex::vertices() const
{
    std::vector<Vertex> out;
    for (const auto& f : poset().faces(0))
        out.push_back(f.front());
    return out;
}

SimplicialComplex complex_from_nonfaces(int n, const std::vector<Face>& nonfaces)
{
    std::vector<Face> minimal;
    {
        std::vector<Face> sorted = nonfaces;
        for (auto& f : sorted)
            std::sort(f.begin(), f.end());
        std::sort(sorted.begin(), sorted.end(), canonical_less);
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (auto& f : sorted) {
            bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Face& g) {
                return std::includes(f.begin(), f.end(), g.begin(), g.end());
            });
            if (!redundant)
                minimal.push_back(std::move(f));
        }
    }
    if (!minimal.empty() && minimal.front().empty())
        return SimplicialComplex::void_complex(n);

    Face all(n);
    std::iota(all.begin(), all.end(), 1);
    std::vector<Face> facets{all};
    for (const auto& m : minimal) {
        std::vector<Face> next;
        for (auto& f : facets) {
            if (std::includes(f.begin(), f.end(), m.begin(), m.end())) {
                for (Vertex v : m) {
                    Face g;
                    g.reserve(f.size() - 1);
                    std::copy_if(f.begin(), f.end(), std::back_inserter(g), [v](Vertex u) { return u != v; });
                    next.push_back(std::move(g));
                }
            } else {
                next.push_back(std::move(f));
            }
        }
        facets = maximal_faces(std::move(next));
    }
    return SimplicialComplex::from_facets(n, std::move(facets));
}

SimplicialComplex independence_complex(const Graph& g)
{
    std::vector<Face> edges;
    for (const auto& [u, v] : g.edges())
        edges.push_back({u, v});
    return complex_from_nonfaces(g.vertex_count(), edges);
}

SimplicialComplex induced(const SimplicialComplex& d, std::span<const Vertex> w)
{
    std::vector<Vertex> ws(w.begin(), w.end());
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    std::vector<int> position(d.ground_size() + 1, 0);
    for (std::size_t k = 0; k < ws.size(); ++k) {
        if (ws[k] < 1 || ws[k] > d.ground_size())
            throw std::invalid_argument("induced: vertex " + std::to_string(ws[k]) + " out of range");
        position[ws[k]] = static_cast<int>(k) + 1;
    }
    std::vector<Face> facets;
    facets.reserve(d.facets().size());
    for (const auto& f : d.facets()) {
        Face g;
        for (Vertex v : f)
            if (position[v] != 0)
                g.push_back(position[v]);
        facets.push_back(std::move(g));
    }
    return SimplicialComplex::from_facets(static_cast<int>(ws.size()), std::move(facets));
}

SimplicialComplex delete_vertex(const SimplicialComplex& d, Vertex x)
{
    std::vector<Vertex> rest;
    for (Vertex v = 1; v <= d.ground_size(); ++v)
        if (v != x)
            rest.push_back(v);
    return induced(d, rest);
}

SimplicialComplex link(const SimplicialComplex& d, const Face& f)
{
    if (!d.contains(f))
        throw std::invalid_argument("link: not a face");
    std::vector<Face> facets;
    for (const auto& g : d.facets()) {
        if (!std::includes(g.begin(), g.end(), f.begin(), f.end()))
            continue;
        Face rest;
        std::set_difference(g.begin(), g.end(), f.begin(), f.end(), std::back_inserter(rest));
        facets.push_back(std::move(rest));
    }
    return SimplicialComplex::from_facets(d.ground_size(), std::move(facets));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b)
{
    const int n = a.ground_size() + b.ground_size();
    std::vector<Face> facets;
    for (const auto& f : a.facets()) {
        for (const auto& g : b.facets()) {
            Face h = f;
            for (Vertex v : g)
                h.push_back(v + a.ground_size());
            facets.push_back(std::move(h));
        }
    }
    return SimplicialComplex::from_facets(n, std::move(facets));
}

SimplicialComplex boundary_of_simplex(int d)
{
    if (d < 1)
        throw std::invalid_argument("boundary_of_simplex: dimension must be at least 1");
    Face all(d + 1);
    std::iota(all.begin(), all.end(), 1);
    std::vector<Face> facets;
    for (std::size_t k = 0; k < all.size(); ++k)
        facets.push_back(without(all, k));
    return SimplicialComplex::from_facets(d + 1, std::move(facets));
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& d)
{
    if (d.is_void())
        throw std::invalid_argument("barycentric_subdivision: void complex");
    const auto& poset = d.poset();
    // Vertex ids of the subdivision: nonempty faces by dimension, then lex.
    std::vector<int> offset(poset.dimension() + 2, 0);
    int next_id = 1;
    for (int dim = 0; dim <= poset.dimension(); ++dim) {
        offset[dim] = next_id;
        next_id += static_cast<int>(poset.count(dim));
    }
    const int n = next_id - 1;

    std::vector<Face> chains;
    for (const auto& facet : d.facets()) {
        if (facet.empty())
            continue;
        Face order = facet;
        do {
            Face chain;
            Face prefix;
            for (Vertex v : order) {
                prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), v), v);
                const int dim = static_cast<int>(prefix.size()) - 1;
                chain.push_back(offset[dim] + static_cast<int>(*poset.index_of(prefix)));
            }
            std::sort(chain.begin(), chain.end());
            chains.push_back(std::move(chain));
        } while (std::next_permutation(order.begin(), order.end()));
    }
    if (chains.empty())
        return SimplicialComplex::empty_complex(0);
    return SimplicialComplex::from_facets(n, std::move(chains));
}

SimplicialComplex octahedral_sphere(int dim, std::span<const std::pair<Vertex, Vertex>> pairs, int n)
{
    if (dim < 0 || static_cast<int>(pairs.size()) != dim + 1)
        throw std::invalid_argument("octahedral_sphere: a " + std::to_string(dim) + "-sphere needs " +
                                    std::to_string(dim + 1) + " antipodal pairs");
    std::vector<Vertex> used;
    for (const auto& [a, b] : pairs) {
        used.push_back(a);
        used.push_back(b);
    }
    std::sort(used.begin(), used.end());
    if (used.front() < 1)
        throw std::invalid_argument("octahedral_sphere: vertices must be positive");
    if (std::adjacent_find(used.begin(), used.end()) != used.end())
        throw std::invalid_argument("octahedral_sphere: pairs must be disjoint");
    n = std::max(n, used.back());

    std::vector<Face> facets;
    const std::size_t k = pairs.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        Face f;
        for (std::size_t t = 0; t < k; ++t)
            f.push_back((mask >> t) & 1 ? pairs[t].second : pairs[t].first);
        std::sort(f.begin(), f.end());
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_facets(n, std::move(facets));
}

std::vector<Face> minimal_nonfaces(const SimplicialComplex& d)
{
    if (d.is_void())
        return {Face{}};
    const auto& poset = d.poset();
    const int n = d.ground_size();
    std::vector<Face> out;
    // Every minimal non-face M is F + {max M} for the face F = M - {max M}.
    for (int dim = -1; dim <= poset.dimension(); ++dim) {
        for (const Face& f : poset.faces(dim)) {
            const Vertex start = f.empty() ? 1 : f.back() + 1;
            for (Vertex v = start; v <= n; ++v) {
                Face m = f;
                m.push_back(v);
                if (poset.contains(m))
                    continue;
                bool minimal = true;
                for (std::size_t pos = 0; pos + 1 < m.size() && minimal; ++pos)
                    minimal = poset.contains(without(m, pos));
                if (minimal)
                    out.push_back(std::move(m));
            }
        }
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

SimplicialComplex alexander_dual(const SimplicialComplex& d)
{
    const int n = d.ground_size();
    std::vector<Face> facets;
    for (const auto& m : minimal_nonfaces(d)) {
        Face complement;
        for (Vertex v = 1; v <= n; ++v)
            if (!std::binary_search(m.begin(), m.end(), v))
                complement.push_back(v);
        facets.push_back(std::move(complement));
    }
    return SimplicialComplex::from_facets(n, std::move(facets));
}

FlagCheck is_flag(const SimplicialComplex& d)
{
    for (auto& m : minimal_nonfaces(d)) {
        if (m.size() >= 3)
            return {false, std::move(m)};
    }
    return {};
}

Graph one_skeleton(const SimplicialComplex& d)
{
    std::vector<Graph::Edge> edges;
    for (const auto& e : d.poset().faces(1))
        edges.emplace_back(e[0], e[1]);
    return Graph(d.ground_size(), std::move(edges));
}

} // namespace strandlab
