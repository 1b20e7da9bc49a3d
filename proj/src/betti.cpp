#include "strandlab/betti.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <numeric>

#include "strandlab/homology.hpp"
#include "strandlab/parallel.hpp"

namespace strandlab {

namespace {

bool divides(const Exponents& a, const Exponents& b)
{
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > b[k])
            return false;
    return true;
}

int degree(const Exponents& e)
{
    return std::accumulate(e.begin(), e.end(), 0);
}

// Lexicographic k-subsets of [n], as sorted 1-based vertex lists.
std::vector<std::vector<Vertex>> subsets_of_size(int n, int k)
{
    std::vector<std::vector<Vertex>> out;
    if (k < 0 || k > n)
        return out;
    std::vector<Vertex> current(k);
    std::iota(current.begin(), current.end(), 1);
    while (true) {
        out.push_back(current);
        int pos = k - 1;
        while (pos >= 0 && current[pos] == n - k + pos + 1)
            --pos;
        if (pos < 0)
            break;
        ++current[pos];
        for (int q = pos + 1; q < k; ++q)
            current[q] = current[q - 1] + 1;
    }
    return out;
}

long double binomial(int n, int k)
{
    long double r = 1;
    for (int t = 1; t <= k; ++t)
        r = r * (n - k + t) / t;
    return r;
}

void require_within_cap(const SimplicialComplex& d, const BettiOptions& options)
{
    if (d.ground_size() > options.cap)
        throw CapExceeded("ground set of size " + std::to_string(d.ground_size()) + " exceeds the Hochster cap " +
                              std::to_string(options.cap),
                          options.cap);
    if (d.is_void())
        throw std::invalid_argument("void complex: its Stanley-Reisner ideal is the unit ideal");
}

BettiTable reduce_tables(std::vector<BettiTable>& partial, int n, const FieldSpec& field)
{
    BettiTable total(n, field);
    for (const auto& t : partial)
        total.merge(t);
    return total;
}

} // namespace

MonomialIdeal::MonomialIdeal(int n, std::vector<Exponents> generators) : n_(n)
{
    if (n < 0)
        throw std::invalid_argument("ideal: negative variable count");
    if (generators.empty())
        throw std::invalid_argument("ideal: at least one generator required");
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != n)
            throw std::invalid_argument("ideal: exponent vector of length " + std::to_string(g.size()) +
                                        ", expected " + std::to_string(n));
        if (std::any_of(g.begin(), g.end(), [](int e) { return e < 0; }))
            throw std::invalid_argument("ideal: negative exponent");
    }
    std::sort(generators.begin(), generators.end(), [](const Exponents& a, const Exponents& b) {
        const int da = degree(a), db = degree(b);
        return da != db ? da < db : a > b;
    });
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    for (auto& g : generators) {
        bool redundant = std::any_of(generators_.begin(), generators_.end(),
                                     [&](const Exponents& h) { return divides(h, g); });
        if (!redundant)
            generators_.push_back(std::move(g));
    }
}

bool MonomialIdeal::is_squarefree() const
{
    return std::all_of(generators_.begin(), generators_.end(), [](const Exponents& g) {
        return std::all_of(g.begin(), g.end(), [](int e) { return e <= 1; });
    });
}

bool MonomialIdeal::generated_in_degree(int d) const
{
    return std::all_of(generators_.begin(), generators_.end(), [d](const Exponents& g) { return degree(g) == d; });
}

MonomialIdeal edge_ideal(const Graph& g)
{
    std::vector<Exponents> gens;
    for (const auto& [u, v] : g.edges()) {
        Exponents e(g.vertex_count(), 0);
        e[u - 1] = 1;
        e[v - 1] = 1;
        gens.push_back(std::move(e));
    }
    if (gens.empty())
        throw std::invalid_argument("edge ideal of a graph without edges is the zero ideal");
    return MonomialIdeal(g.vertex_count(), std::move(gens));
}

Polarization polarize(const MonomialIdeal& m)
{
    const int n = m.variable_count();
    std::vector<int> top(n, 1);
    for (const auto& g : m.generators())
        for (int k = 0; k < n; ++k)
            top[k] = std::max(top[k], g[k]);

    std::vector<PolarizedVariable> variables;
    for (int k = 0; k < n; ++k)
        variables.push_back({k + 1, 1});
    // index_of[k][level] for level >= 2
    std::vector<std::vector<int>> index_of(n);
    for (int k = 0; k < n; ++k) {
        index_of[k].assign(top[k] + 1, 0);
        index_of[k][1] = k + 1;
        for (int level = 2; level <= top[k]; ++level) {
            variables.push_back({k + 1, level});
            index_of[k][level] = static_cast<int>(variables.size());
        }
    }
    const int total = static_cast<int>(variables.size());
    std::vector<Exponents> gens;
    for (const auto& g : m.generators()) {
        Exponents e(total, 0);
        for (int k = 0; k < n; ++k)
            for (int level = 1; level <= g[k]; ++level)
                e[index_of[k][level] - 1] = 1;
        gens.push_back(std::move(e));
    }
    return {MonomialIdeal(total, std::move(gens)), std::move(variables)};
}

SimplicialComplex complex_of_squarefree_ideal(const MonomialIdeal& m)
{
    if (!m.is_squarefree())
        throw std::invalid_argument("complex_of_squarefree_ideal: ideal is not squarefree (polarize it first)");
    std::vector<Face> supports;
    for (const auto& g : m.generators()) {
        Face f;
        for (int k = 0; k < m.variable_count(); ++k)
            if (g[k] > 0)
                f.push_back(k + 1);
        supports.push_back(std::move(f));
    }
    return complex_from_nonfaces(m.variable_count(), supports);
}

std::uint64_t BettiTable::ideal(int i, int j) const
{
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

std::uint64_t BettiTable::quotient(int i, int j) const
{
    if (i == 0)
        return j == 0 ? 1 : 0;
    return ideal(i - 1, j);
}

void BettiTable::add(int i, int j, std::uint64_t value)
{
    if (value == 0)
        return;
    if (i < 0 || j < i + 1)
        throw std::invalid_argument("betti table: entry (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") violates j >= i + 1");
    entries_[{i, j}] += value;
}

void BettiTable::merge(const BettiTable& other)
{
    for (const auto& [key, value] : other.entries_)
        add(key.first, key.second, value);
}

int BettiTable::max_index() const
{
    int m = -1;
    for (const auto& [key, value] : entries_)
        m = std::max(m, key.first);
    return m;
}

int BettiTable::max_degree() const
{
    int m = 0;
    for (const auto& [key, value] : entries_)
        m = std::max(m, key.second);
    return m;
}

TVector t_vector(const BettiTable& table)
{
    TVector t;
    t.values.push_back(0);
    for (int i = 1; i <= table.max_index() + 1; ++i)
        t.values.push_back(std::nullopt);
    for (const auto& [key, value] : table.entries()) {
        auto& slot = t.values[key.first + 1];
        slot = std::max(slot.value_or(0), key.second);
    }
    return t;
}

int default_cap()
{
    if (const char* env = std::getenv("STRANDLAB_CAP")) {
        int cap = 0;
        auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), cap);
        if (ec == std::errc() && *ptr == '\0' && cap >= 1 && cap <= 62)
            return cap;
    }
    return 16;
}

BettiTable hochster_table(const SimplicialComplex& d, const FieldSpec& field, const BettiOptions& options)
{
    require_within_cap(d, options);
    const int n = d.ground_size();
    // By size, lexicographic within size.
    std::vector<std::vector<Vertex>> subsets;
    for (int j = 1; j <= n; ++j) {
        auto layer = subsets_of_size(n, j);
        std::move(layer.begin(), layer.end(), std::back_inserter(subsets));
    }
    std::vector<BettiTable> partial(std::max(1u, options.workers), BettiTable(n, field));
    parallel_for(subsets.size(), options.workers, [&](unsigned worker, std::size_t k) {
        const auto& w = subsets[k];
        const int j = static_cast<int>(w.size());
        const auto betti = all_reduced_betti(induced(d, w), field);
        for (int r = -1; r <= betti.top_degree(); ++r) {
            const int i = j - r - 2;
            if (i >= 0)
                partial[worker].add(i, j, betti[r]);
        }
    });
    return reduce_tables(partial, n, field);
}

std::uint64_t betti_entry(const SimplicialComplex& d, int i, int j, const FieldSpec& field,
                          const BettiOptions& options)
{
    const int n = d.ground_size();
    if (j > n)
        throw std::invalid_argument("betti_entry: degree " + std::to_string(j) + " exceeds n = " + std::to_string(n));
    if (d.is_void())
        throw std::invalid_argument("void complex: its Stanley-Reisner ideal is the unit ideal");
    if (i < 0 || j < i + 1)
        return 0;
    if (binomial(n, j) > std::ldexp(1.0L, options.cap))
        throw CapExceeded("C(" + std::to_string(n) + "," + std::to_string(j) + ") subsets exceed 2^" +
                              std::to_string(options.cap),
                          options.cap);
    const auto subsets = subsets_of_size(n, j);
    std::vector<std::uint64_t> partial(std::max(1u, options.workers), 0);
    parallel_for(subsets.size(), options.workers, [&](unsigned worker, std::size_t k) {
        partial[worker] += reduced_betti(induced(d, subsets[k]), j - i - 2, field);
    });
    return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
}

BettiTable eagon_reiner_table(const SimplicialComplex& d, const FieldSpec& field, const BettiOptions& options)
{
    require_within_cap(d, options);
    const int n = d.ground_size();
    const SimplicialComplex dual = alexander_dual(d);
    std::vector<const Face*> faces;
    const auto& poset = dual.poset();
    for (int dim = -1; dim <= poset.dimension(); ++dim)
        for (const Face& f : poset.faces(dim))
            faces.push_back(&f);

    std::vector<BettiTable> partial(std::max(1u, options.workers), BettiTable(n, field));
    parallel_for(faces.size(), options.workers, [&](unsigned worker, std::size_t k) {
        const Face& f = *faces[k];
        const int j = n - static_cast<int>(f.size());
        const auto betti = all_reduced_betti(link(dual, f), field);
        for (int r = -1; r <= betti.top_degree(); ++r) {
            const int i = r + 1;
            if (betti[r] == 0)
                continue;
            if (j < i + 1)
                throw std::logic_error("Eagon-Reiner: nonzero contribution outside j >= i + 1");
            partial[worker].add(i, j, betti[r]);
        }
    });
    return reduce_tables(partial, n, field);
}

} // namespace strandlab
