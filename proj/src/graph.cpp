#include "dcdkit/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

#include "dcdkit/error.hpp"

namespace dcdkit {

Graph::Graph(int vertex_count, std::vector<Edge> edges, std::vector<int> colors)
    : n_(vertex_count), colors_(std::move(colors)) {
    if (n_ < 0) throw Error(ErrorKind::InvalidArgument, "negative vertex count");
    if (!colors_.empty() && static_cast<int>(colors_.size()) != n_) {
        throw Error(ErrorKind::InvalidArgument, "coloring size differs from vertex count");
    }
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_) throw Error(ErrorKind::InvalidArgument, "edge endpoint out of range");
        if (u == v) throw Error(ErrorKind::InvalidArgument, "loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        throw Error(ErrorKind::InvalidArgument, "multi-edge in simple graph");
    }
    edges_ = std::move(edges);
    adj_.assign(static_cast<std::size_t>(n_), {});
    for (const auto& [u, v] : edges_) {
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::adjacent(int u, int v) const {
    const auto& a = neighbors(u);
    return std::binary_search(a.begin(), a.end(), v);
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw Error(ErrorKind::InvalidArgument, "relabeling size mismatch");
    std::vector<Edge> e;
    e.reserve(edges_.size());
    for (const auto& [u, v] : edges_) e.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    std::vector<int> c;
    if (!colors_.empty()) {
        c.assign(colors_.size(), 0);
        for (int v = 0; v < n_; ++v) c[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = colors_[static_cast<std::size_t>(v)];
    }
    return Graph(n_, std::move(e), std::move(c));
}

std::optional<int> Graph::regular_degree() const {
    if (n_ == 0) return 0;
    const int d = degree(0);
    for (int v = 1; v < n_; ++v) {
        if (degree(v) != d) return std::nullopt;
    }
    return d;
}

bool Graph::is_connected() const {
    if (n_ == 0) return true;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : neighbors(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n_;
}

std::optional<std::vector<int>> Graph::bipartition() const {
    std::vector<int> side(static_cast<std::size_t>(n_), -1);
    for (int root = 0; root < n_; ++root) {
        if (side[static_cast<std::size_t>(root)] != -1) continue;
        side[static_cast<std::size_t>(root)] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (int w : neighbors(v)) {
                auto& sw = side[static_cast<std::size_t>(w)];
                if (sw == -1) {
                    sw = 1 - side[static_cast<std::size_t>(v)];
                    queue.push_back(w);
                } else if (sw == side[static_cast<std::size_t>(v)]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

Graph cycle_graph(int n) {
    if (n < 3) throw Error(ErrorKind::InvalidArgument, "cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(e));
}

Graph path_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

Graph complete_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

Graph complete_bipartite_graph(int a, int b) {
    std::vector<Edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph(a + b, std::move(e));
}

namespace {

Graph disjointness_graph(const std::vector<SubsetMask>& sets) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if ((sets[i] & sets[j]) == 0) e.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph(static_cast<int>(sets.size()), std::move(e));
}

}  // namespace

Graph kneser_graph(int m, int k) {
    if (k < 1 || k > m) throw Error(ErrorKind::InvalidArgument, "kneser_graph requires 1 <= k <= m");
    return disjointness_graph(k_subsets(m, k));
}

Graph odd_graph(int n) {
    if (n < 2) throw Error(ErrorKind::InvalidArgument, "odd_graph requires n >= 2");
    return kneser_graph(2 * n - 1, n - 1);
}

std::vector<SubsetMask> fano_lines() {
    std::vector<SubsetMask> lines;
    for (int t = 0; t < 7; ++t) lines.push_back(subset_from_elements({t % 7, (t + 1) % 7, (t + 3) % 7}));
    return lines;
}

std::vector<SubsetMask> coxeter_triples() {
    const auto lines = fano_lines();
    std::vector<SubsetMask> out;
    for (SubsetMask t : k_subsets(7, 3)) {
        if (std::find(lines.begin(), lines.end(), t) == lines.end()) out.push_back(t);
    }
    return out;
}

Graph coxeter_graph() { return disjointness_graph(coxeter_triples()); }

KroneckerCover kronecker_cover(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Edge> e;
    e.reserve(2 * g.edge_count());
    for (const auto& [u, v] : g.edges()) {
        e.emplace_back(u, n + v);
        e.emplace_back(v, n + u);
    }
    std::vector<int> colors(static_cast<std::size_t>(2 * n), 0);
    std::vector<int> proj(static_cast<std::size_t>(2 * n), 0);
    for (int v = 0; v < n; ++v) {
        colors[static_cast<std::size_t>(n + v)] = 1;
        proj[static_cast<std::size_t>(v)] = v;
        proj[static_cast<std::size_t>(n + v)] = v;
    }
    return {Graph(2 * n, std::move(e), std::move(colors)), std::move(proj)};
}

std::optional<int> girth(const Graph& g) {
    const int n = g.vertex_count();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[static_cast<std::size_t>(s)] = 0;
        parent[static_cast<std::size_t>(s)] = -1;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            if (2 * dist[static_cast<std::size_t>(v)] + 1 >= best) break;
            for (int w : g.neighbors(v)) {
                if (dist[static_cast<std::size_t>(w)] == -1) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                    parent[static_cast<std::size_t>(w)] = v;
                    queue.push_back(w);
                } else if (parent[static_cast<std::size_t>(v)] != w) {
                    best = std::min(best, dist[static_cast<std::size_t>(v)] + dist[static_cast<std::size_t>(w)] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

namespace {

class HamiltonSearch {
public:
    HamiltonSearch(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget) {
        const auto n = static_cast<std::size_t>(g.vertex_count());
        visited_.assign(n, 0);
        free_degree_.resize(n);
        for (std::size_t v = 0; v < n; ++v) free_degree_[v] = g.degree(static_cast<int>(v));
    }

    std::optional<std::vector<int>> run() {
        const int n = g_.vertex_count();
        if (n == 0) return std::nullopt;
        if (n < 3) return std::nullopt;
        visit(0);
        path_.push_back(0);
        if (extend(0)) return path_;
        return std::nullopt;
    }

private:
    void visit(int v) {
        visited_[static_cast<std::size_t>(v)] = 1;
        for (int w : g_.neighbors(v)) --free_degree_[static_cast<std::size_t>(w)];
    }
    void unvisit(int v) {
        visited_[static_cast<std::size_t>(v)] = 0;
        for (int w : g_.neighbors(v)) ++free_degree_[static_cast<std::size_t>(w)];
    }

    // Every unvisited vertex must keep two usable neighbors: unvisited ones,
    // the current endpoint, or the start vertex that closes the cycle.
    bool feasible_after_move(int from, int to) const {
        for (int x : g_.neighbors(from)) {
            if (visited_[static_cast<std::size_t>(x)]) continue;
            int usable = free_degree_[static_cast<std::size_t>(x)];
            if (g_.adjacent(x, to)) ++usable;
            if (x != to && g_.adjacent(x, 0)) ++usable;
            if (usable < 2) return false;
        }
        return free_degree_[0] > 0 || static_cast<int>(path_.size()) == g_.vertex_count();
    }

    bool extend(int v) {
        if (++nodes_ > budget_) throw Error(ErrorKind::Timeout, "hamilton search exceeded " + std::to_string(budget_) + " nodes");
        const int n = g_.vertex_count();
        if (static_cast<int>(path_.size()) == n) return g_.adjacent(v, 0);
        std::vector<int> next;
        for (int w : g_.neighbors(v))
            if (!visited_[static_cast<std::size_t>(w)]) next.push_back(w);
        // Warnsdorff order: most constrained successor first.
        std::sort(next.begin(), next.end(), [&](int a, int b) {
            const int fa = free_degree_[static_cast<std::size_t>(a)];
            const int fb = free_degree_[static_cast<std::size_t>(b)];
            return fa != fb ? fa < fb : a < b;
        });
        for (int w : next) {
            visit(w);
            path_.push_back(w);
            if (feasible_after_move(v, w) && extend(w)) return true;
            path_.pop_back();
            unvisit(w);
        }
        return false;
    }

    const Graph& g_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<char> visited_;
    std::vector<int> free_degree_;
    std::vector<int> path_;
};

}  // namespace

std::optional<std::vector<int>> hamilton_cycle(const Graph& g, const HamiltonOptions& options) {
    if (!g.is_connected()) throw Error(ErrorKind::InvalidArgument, "hamilton_cycle needs a connected graph");
    return HamiltonSearch(g, options.node_budget).run();
}

bool is_hamilton_cycle(const Graph& g, const std::vector<int>& cycle) {
    const int n = g.vertex_count();
    if (static_cast<int>(cycle.size()) != n || n < 3) return false;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : cycle) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    for (int i = 0; i < n; ++i) {
        if (!g.adjacent(cycle[static_cast<std::size_t>(i)], cycle[static_cast<std::size_t>((i + 1) % n)])) return false;
    }
    return true;
}

}  // namespace dcdkit
