#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace strandlab {

using Vertex = int; // 1-based

/// Simple undirected graph on vertices 1..n.
class Graph {
public:
    using Edge = std::pair<Vertex, Vertex>;

    Graph() = default;
    /// Normalizes each edge to (min, max) and sorts. Throws
    /// std::invalid_argument on loops, duplicates or out-of-range endpoints.
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_edge(Vertex u, Vertex v) const;
    /// Sorted neighbours of v.
    const std::vector<Vertex>& neighbours(Vertex v) const { return adjacency_[v - 1]; }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

/// BFS distances from source; -1 marks unreachable vertices. Index v-1.
std::vector<int> distances_from(const Graph& g, Vertex source);

/// Graph metric; nullopt stands for infinity (different components).
std::optional<int> graph_distance(const Graph& g, Vertex u, Vertex v);

/// Greedy farthest-point selection of k vertices starting from vertex 1,
/// each step taking the vertex maximizing the distance to the chosen set
/// (lowest index on ties). Returns the vertices in selection order if they
/// are pairwise at distance >= min_dist, nullopt otherwise.
std::optional<std::vector<Vertex>> spread_subset(const Graph& g, int k, int min_dist);

} // namespace strandlab
