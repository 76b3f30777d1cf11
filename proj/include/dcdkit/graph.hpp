#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dcdkit/subsets.hpp"

namespace dcdkit {

using Edge = std::pair<int, int>;

// Simple undirected graph. Edges are stored with the smaller endpoint first
// and sorted; adjacency lists are sorted. An empty color vector means the
// graph is uncolored.
class Graph {
public:
    Graph() = default;
    Graph(int vertex_count, std::vector<Edge> edges, std::vector<int> colors = {});

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool adjacent(int u, int v) const;

    bool has_coloring() const { return !colors_.empty(); }
    const std::vector<int>& colors() const { return colors_; }
    int color(int v) const { return colors_.empty() ? 0 : colors_[static_cast<std::size_t>(v)]; }

    Graph with_colors(std::vector<int> colors) const { return Graph(n_, edges_, std::move(colors)); }
    Graph without_colors() const { return Graph(n_, edges_); }

    /// Vertex v of this graph becomes vertex perm[v] of the result.
    Graph relabeled(const std::vector<int>& perm) const;

    std::optional<int> regular_degree() const;
    bool is_connected() const;
    /// Two-coloring of a bipartite graph (component roots colored 0), or nullopt.
    std::optional<std::vector<int>> bipartition() const;
    bool is_bipartite() const { return bipartition().has_value(); }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_ && colors_ == other.colors_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> colors_;
};

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int a, int b);

/// Vertices are the k-subsets of {0..m-1} in colex order (see k_subsets);
/// adjacency is disjointness.
Graph kneser_graph(int m, int k);

/// O_n = K(2n-1, n-1).
Graph odd_graph(int n);

/// Lines of the Fano plane: translates of {0,1,3} modulo 7, in translate order.
std::vector<SubsetMask> fano_lines();

/// The 28 non-collinear point triples of the Fano plane in colex order; these
/// label the vertices of coxeter_graph().
std::vector<SubsetMask> coxeter_triples();

/// Disjointness graph on the Fano antiflags (non-collinear triples).
Graph coxeter_graph();

struct KroneckerCover {
    Graph graph;                  ///< vertex (v, layer) has index layer * n + v
    std::vector<int> projection;  ///< covering map onto the base graph
};

/// Tensor product with K2. The cover is colored by layer.
KroneckerCover kronecker_cover(const Graph& g);

/// Shortest cycle length; nullopt for forests.
std::optional<int> girth(const Graph& g);

struct HamiltonOptions {
    std::uint64_t node_budget = 100'000'000;
};

/// Backtracking Hamilton-cycle search. Returns the cycle as a vertex sequence
/// starting at vertex 0 (the closing edge is implied), nullopt when the
/// search proves none exists, and throws Timeout when the budget runs out.
std::optional<std::vector<int>> hamilton_cycle(const Graph& g, const HamiltonOptions& options = {});

bool is_hamilton_cycle(const Graph& g, const std::vector<int>& cycle);

}  // namespace dcdkit
