#include "strandlab/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>

namespace strandlab {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), adjacency_(static_cast<std::size_t>(std::max(n, 0)))
{
    if (n < 0)
        throw std::invalid_argument("graph: negative vertex count");
    for (auto& [u, v] : edges) {
        if (u == v)
            throw std::invalid_argument("graph: loop at vertex " + std::to_string(u));
        if (u < 1 || v < 1 || u > n || v > n)
            throw std::invalid_argument("graph: edge {" + std::to_string(u) + "," + std::to_string(v) +
                                        "} out of range 1.." + std::to_string(n));
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
        throw std::invalid_argument("graph: duplicate edge {" + std::to_string(dup->first) + "," +
                                    std::to_string(dup->second) + "}");
    for (const auto& [u, v] : edges) {
        adjacency_[u - 1].push_back(v);
        adjacency_[v - 1].push_back(u);
    }
    for (auto& nb : adjacency_)
        std::sort(nb.begin(), nb.end());
    edges_ = std::move(edges);
}

bool Graph::has_edge(Vertex u, Vertex v) const
{
    if (u < 1 || u > n_ || v < 1 || v > n_)
        return false;
    const auto& nb = adjacency_[u - 1];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<int> distances_from(const Graph& g, Vertex source)
{
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<Vertex> queue;
    dist[source - 1] = 0;
    queue.push(source);
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop();
        for (Vertex w : g.neighbours(u)) {
            if (dist[w - 1] < 0) {
                dist[w - 1] = dist[u - 1] + 1;
                queue.push(w);
            }
        }
    }
    return dist;
}

std::optional<int> graph_distance(const Graph& g, Vertex u, Vertex v)
{
    if (u < 1 || v < 1 || u > g.vertex_count() || v > g.vertex_count())
        throw std::invalid_argument("graph_distance: vertex out of range");
    int d = distances_from(g, u)[v - 1];
    if (d < 0)
        return std::nullopt;
    return d;
}

std::optional<std::vector<Vertex>> spread_subset(const Graph& g, int k, int min_dist)
{
    if (k < 1)
        throw std::invalid_argument("spread_subset: k must be positive");
    const int n = g.vertex_count();
    if (k > n)
        return std::nullopt;

    constexpr int infinity = std::numeric_limits<int>::max();
    std::vector<int> nearest(n, infinity); // distance to the chosen set
    std::vector<bool> chosen(n, false);
    std::vector<Vertex> picked;
    Vertex next = 1;
    while (true) {
        picked.push_back(next);
        chosen[next - 1] = true;
        auto dist = distances_from(g, next);
        for (int v = 0; v < n; ++v)
            if (dist[v] >= 0)
                nearest[v] = std::min(nearest[v], dist[v]);
        if (static_cast<int>(picked.size()) == k)
            break;
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (!chosen[v] && (best < 0 || nearest[v] > nearest[best]))
                best = v;
        }
        if (nearest[best] < min_dist)
            return std::nullopt;
        next = best + 1;
    }
    return picked;
}

} // namespace strandlab
