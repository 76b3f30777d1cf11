#include "dcdkit/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "dcdkit/error.hpp"

namespace dcdkit {

// ---------------------------------------------------------------------------
// Permutation helpers

Permutation identity_permutation(int n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation out(b.size());
    for (std::size_t v = 0; v < b.size(); ++v) out[v] = a[b[v]];
    return out;
}

Permutation inverse(const Permutation& p) {
    Permutation out(p.size());
    for (std::size_t v = 0; v < p.size(); ++v) out[p[v]] = static_cast<int>(v);
    return out;
}

bool is_identity(const Permutation& p) {
    for (std::size_t v = 0; v < p.size(); ++v)
        if (p[v] != static_cast<int>(v)) return false;
    return true;
}

std::vector<int> cycle_type(const Permutation& p) {
    std::vector<char> seen(p.size(), 0);
    std::vector<int> lengths;
    for (std::size_t v = 0; v < p.size(); ++v) {
        if (seen[v]) continue;
        int len = 0;
        for (std::size_t w = v; !seen[w]; w = p[w]) {
            seen[w] = 1;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

std::uint64_t permutation_order(const Permutation& p) {
    std::uint64_t order = 1;
    for (int len : cycle_type(p)) order = std::lcm(order, static_cast<std::uint64_t>(len));
    return order;
}

bool is_isomorphism(const Graph& g1, const Graph& g2, const Permutation& p) {
    const int n = g1.vertex_count();
    if (n != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return false;
    if (static_cast<int>(p.size()) != n) return false;
    std::vector<char> hit(n, 0);
    for (int v : p) {
        if (v < 0 || v >= n || hit[v]) return false;
        hit[v] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (g1.color(v) != g2.color(p[v])) return false;
    for (const auto& [u, v] : g1.edges())
        if (!g2.adjacent(p[u], p[v])) return false;
    return true;
}

bool is_automorphism(const Graph& g, const Permutation& p) { return is_isomorphism(g, g, p); }

std::vector<std::vector<int>> orbits_of(int degree, const std::vector<Permutation>& generators) {
    std::vector<int> parent(degree);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& g : generators)
        for (int v = 0; v < degree; ++v) {
            const int a = find(v), b = find(g[v]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < degree; ++v) groups[find(v)].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    return out;
}

// ---------------------------------------------------------------------------
// Ordered partitions and equitable refinement

namespace {

struct Partition {
    std::vector<int> lab;       // position -> vertex
    std::vector<int> pos;       // vertex -> position
    std::vector<int> start_of;  // position -> start of its cell
    std::vector<int> size_at;   // cell start -> cell size
    int cells = 0;

    int n() const { return static_cast<int>(lab.size()); }
    bool discrete() const { return cells == n(); }
};

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= h >> 31;
    h *= 0xbf58476d1ce4e5b9ULL;
    return h ^ (h >> 29);
}

Partition color_partition(const Graph& g) {
    const int n = g.vertex_count();
    Partition p;
    p.lab.resize(n);
    std::iota(p.lab.begin(), p.lab.end(), 0);
    std::stable_sort(p.lab.begin(), p.lab.end(), [&](int a, int b) { return g.color(a) < g.color(b); });
    p.pos.resize(n);
    p.start_of.resize(n);
    p.size_at.assign(n, 0);
    int start = 0;
    for (int i = 0; i < n; ++i) {
        p.pos[p.lab[i]] = i;
        if (i > 0 && g.color(p.lab[i]) != g.color(p.lab[i - 1])) start = i;
        if (start == i) ++p.cells;
        p.start_of[i] = start;
        ++p.size_at[start];
    }
    return p;
}

class Refiner {
public:
    explicit Refiner(const Graph& g) : g_(g), count_(g.vertex_count(), 0), queued_(g.vertex_count(), 0) {}

    // Splits cells by neighbor counts into splitter cells until the partition
    // is equitable. Every decision depends only on cell positions, so the
    // result commutes with automorphisms; the trace hash summarises it.
    std::uint64_t refine(Partition& p, const std::vector<int>& initial) {
        std::uint64_t trace = 0x51ed27;
        std::deque<int> queue;
        for (int s : initial) {
            if (!queued_[s]) {
                queued_[s] = 1;
                queue.push_back(s);
            }
        }
        std::vector<int> touched;
        std::vector<int> touched_cells;
        std::vector<int> members;
        while (!queue.empty()) {
            const int s = queue.front();
            queue.pop_front();
            queued_[s] = 0;
            members.assign(p.lab.begin() + s, p.lab.begin() + s + p.size_at[s]);
            touched.clear();
            for (int u : members)
                for (int w : g_.neighbors(u))
                    if (count_[w]++ == 0) touched.push_back(w);
            touched_cells.clear();
            for (int w : touched) touched_cells.push_back(p.start_of[p.pos[w]]);
            std::sort(touched_cells.begin(), touched_cells.end());
            touched_cells.erase(std::unique(touched_cells.begin(), touched_cells.end()), touched_cells.end());
            trace = mix(trace, static_cast<std::uint64_t>(s) << 20 | touched_cells.size());
            for (int c : touched_cells) split(p, c, trace, queue);
            for (int w : touched) count_[w] = 0;
        }
        return mix(trace, static_cast<std::uint64_t>(p.cells));
    }

private:
    void split(Partition& p, int c, std::uint64_t& trace, std::deque<int>& queue) {
        const int size = p.size_at[c];
        auto first = p.lab.begin() + c;
        auto last = first + size;
        bool uniform = true;
        for (auto it = first + 1; it != last; ++it)
            if (count_[*it] != count_[*first]) {
                uniform = false;
                break;
            }
        if (uniform) {
            trace = mix(trace, static_cast<std::uint64_t>(c) << 32 | static_cast<std::uint64_t>(count_[*first]));
            return;
        }
        std::sort(first, last, [&](int a, int b) { return count_[a] != count_[b] ? count_[a] < count_[b] : a < b; });
        const bool was_queued = queued_[c] != 0;
        int start = c;
        for (int i = c; i < c + size; ++i) {
            const int v = p.lab[i];
            p.pos[v] = i;
            if (i > c && count_[v] != count_[p.lab[i - 1]]) {
                p.size_at[start] = i - start;
                trace = mix(trace, static_cast<std::uint64_t>(count_[p.lab[i - 1]]) << 32 | static_cast<std::uint64_t>(i - start));
                start = i;
                ++p.cells;
            }
            p.start_of[i] = start;
        }
        p.size_at[start] = c + size - start;
        trace = mix(trace, static_cast<std::uint64_t>(count_[p.lab[c + size - 1]]) << 32 | static_cast<std::uint64_t>(c + size - start));
        for (int i = c; i < c + size; i = i + p.size_at[i]) {
            if (i == c && was_queued) continue;
            if (!queued_[i]) {
                queued_[i] = 1;
                queue.push_back(i);
            }
        }
    }

    const Graph& g_;
    std::vector<int> count_;
    std::vector<char> queued_;
};

std::vector<int> all_cell_starts(const Partition& p) {
    std::vector<int> starts;
    for (int i = 0; i < p.n(); i += p.size_at[i]) starts.push_back(i);
    return starts;
}

// First cell of minimum size among those with at least two vertices.
int target_cell(const Partition& p) {
    int best = -1;
    for (int i = 0; i < p.n(); i += p.size_at[i]) {
        if (p.size_at[i] > 1 && (best == -1 || p.size_at[i] < p.size_at[best])) best = i;
    }
    return best;
}

// Split v off the front of its cell; returns the singleton's position.
int individualize(Partition& p, int v) {
    const int c = p.start_of[p.pos[v]];
    const int size = p.size_at[c];
    const int u = p.lab[c];
    const int pv = p.pos[v];
    p.lab[pv] = u;
    p.pos[u] = pv;
    p.lab[c] = v;
    p.pos[v] = c;
    if (size > 1) {
        p.size_at[c] = 1;
        p.size_at[c + 1] = size - 1;
        for (int i = c + 1; i < c + size; ++i) p.start_of[i] = c + 1;
        ++p.cells;
    }
    return c;
}

struct Node {
    Partition partition;
    std::uint64_t trace = 0;
};

Node child_node(Refiner& refiner, const Partition& parent, int v) {
    Node node{parent, 0};
    const int c = individualize(node.partition, v);
    node.trace = refiner.refine(node.partition, {c});
    return node;
}

// Two-sided backtracking: left side follows the first vertex of each target
// cell, right side tries every vertex of the matching cell.
class MappingSearch {
public:
    MappingSearch(const Graph& g1, const Graph& g2) : g1_(g1), g2_(g2), r1_(g1), r2_(g2) {}

    std::optional<Permutation> run(const Partition& left, const Partition& right) {
        Permutation out(g1_.vertex_count());
        if (dfs(left, right, out)) return out;
        return std::nullopt;
    }

private:
    bool dfs(const Partition& left, const Partition& right, Permutation& out) {
        if (left.discrete()) {
            for (int i = 0; i < left.n(); ++i) out[left.lab[i]] = right.lab[i];
            return is_isomorphism(g1_, g2_, out);
        }
        const int c = target_cell(left);
        if (right.size_at[c] != left.size_at[c] || right.start_of[c] != c) return false;
        const Node lchild = child_node(r1_, left, left.lab[c]);
        for (int j = c; j < c + right.size_at[c]; ++j) {
            const Node rchild = child_node(r2_, right, right.lab[j]);
            if (rchild.trace != lchild.trace || rchild.partition.cells != lchild.partition.cells) continue;
            if (dfs(lchild.partition, rchild.partition, out)) return true;
        }
        return false;
    }

    const Graph& g1_;
    const Graph& g2_;
    Refiner r1_;
    Refiner r2_;
};

struct GroupSearchResult {
    std::vector<Node> path;                        // path[i]: node with base[0..i-1] individualized
    std::vector<int> base;
    std::vector<std::vector<Permutation>> generators_by_level;
};

std::vector<int> orbit_of_point(int point, int degree, const std::vector<const Permutation*>& gens) {
    std::vector<char> seen(degree, 0);
    std::vector<int> orbit{point};
    seen[point] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i)
        for (const Permutation* g : gens) {
            const int y = (*g)[orbit[i]];
            if (!seen[y]) {
                seen[y] = 1;
                orbit.push_back(y);
            }
        }
    return orbit;
}

GroupSearchResult search_group(const Graph& g) {
    const int n = g.vertex_count();
    Refiner refiner(g);
    GroupSearchResult result;
    Node root{color_partition(g), 0};
    root.trace = refiner.refine(root.partition, all_cell_starts(root.partition));
    result.path.push_back(root);
    while (!result.path.back().partition.discrete()) {
        const Partition& p = result.path.back().partition;
        const int v = p.lab[target_cell(p)];
        result.base.push_back(v);
        Node next = child_node(refiner, p, v);
        result.path.push_back(std::move(next));
    }
    const std::size_t depth = result.base.size();
    result.generators_by_level.assign(depth, {});
    MappingSearch search(g, g);
    for (std::size_t level = depth; level-- > 0;) {
        std::vector<const Permutation*> gens;
        for (std::size_t l = level; l < depth; ++l)
            for (const auto& gen : result.generators_by_level[l]) gens.push_back(&gen);
        const Partition& node = result.path[level].partition;
        const Node& left_child = result.path[level + 1];
        std::vector<char> in_orbit(n, 0);
        for (int x : orbit_of_point(result.base[level], n, gens)) in_orbit[x] = 1;
        const int c = node.start_of[node.pos[result.base[level]]];
        std::vector<int> cell(node.lab.begin() + c, node.lab.begin() + c + node.size_at[c]);
        std::sort(cell.begin(), cell.end());
        for (int w : cell) {
            if (in_orbit[w]) continue;
            const Node right = child_node(refiner, node, w);
            if (right.trace != left_child.trace || right.partition.cells != left_child.partition.cells) continue;
            auto found = search.run(left_child.partition, right.partition);
            if (!found) continue;
            result.generators_by_level[level].push_back(std::move(*found));
            gens.clear();
            for (std::size_t l = level; l < depth; ++l)
                for (const auto& gen : result.generators_by_level[l]) gens.push_back(&gen);
            std::fill(in_orbit.begin(), in_orbit.end(), 0);
            for (int x : orbit_of_point(result.base[level], n, gens)) in_orbit[x] = 1;
        }
    }
    return result;
}

PermGroupWitness build_witness(int n, const GroupSearchResult& r) {
    std::vector<Permutation> all;
    for (const auto& level : r.generators_by_level)
        for (const auto& gen : level) all.push_back(gen);
    std::vector<PermGroupWitness::Level> levels;
    const std::size_t depth = r.base.size();
    for (std::size_t level = 0; level < depth; ++level) {
        std::vector<const Permutation*> gens;
        for (std::size_t l = level; l < depth; ++l)
            for (const auto& gen : r.generators_by_level[l]) gens.push_back(&gen);
        PermGroupWitness::Level lv;
        lv.base_point = r.base[level];
        std::vector<int> index(n, -1);
        lv.orbit.push_back(lv.base_point);
        lv.representatives.push_back(identity_permutation(n));
        index[lv.base_point] = 0;
        for (std::size_t i = 0; i < lv.orbit.size(); ++i)
            for (const Permutation* gen : gens) {
                const int y = (*gen)[lv.orbit[i]];
                if (index[y] == -1) {
                    index[y] = static_cast<int>(lv.orbit.size());
                    lv.orbit.push_back(y);
                    lv.representatives.push_back(compose(*gen, lv.representatives[i]));
                }
            }
        levels.push_back(std::move(lv));
    }
    return PermGroupWitness(n, std::move(all), std::move(levels));
}

std::vector<std::uint32_t> leaf_code(const Graph& g, const Partition& p) {
    const auto n = static_cast<std::uint32_t>(g.vertex_count());
    std::vector<std::uint32_t> code;
    code.reserve(g.edge_count());
    for (const auto& [u, v] : g.edges()) {
        auto a = static_cast<std::uint32_t>(p.pos[u]);
        auto b = static_cast<std::uint32_t>(p.pos[v]);
        if (a > b) std::swap(a, b);
        code.push_back(a * n + b);
    }
    std::sort(code.begin(), code.end());
    return code;
}

class CanonicalSearch {
public:
    CanonicalSearch(const Graph& g, const GroupSearchResult& group) : g_(g), group_(group), refiner_(g) {
        const int n = g.vertex_count();
        const std::size_t depth = group.base.size();
        orbit_id_.resize(depth);
        for (std::size_t level = 0; level < depth; ++level) {
            std::vector<Permutation> gens;
            for (std::size_t l = level; l < depth; ++l)
                for (const auto& gen : group.generators_by_level[l]) gens.push_back(gen);
            orbit_id_[level].assign(n, 0);
            for (const auto& orbit : orbits_of(n, gens))
                for (int v : orbit) orbit_id_[level][v] = orbit.front();
        }
    }

    Partition run() {
        dfs(group_.path.front().partition, 0, true);
        return best_;
    }

private:
    void dfs(const Partition& p, std::size_t depth, bool first_path) {
        if (p.discrete()) {
            auto code = leaf_code(g_, p);
            if (!have_best_ || code < best_code_) {
                best_code_ = std::move(code);
                best_ = p;
                have_best_ = true;
            }
            return;
        }
        const int c = target_cell(p);
        std::vector<int> cell(p.lab.begin() + c, p.lab.begin() + c + p.size_at[c]);
        if (first_path) {
            // Stabilizer orbits along the base path let one child stand in for its orbit.
            const int b = group_.base[depth];
            std::stable_partition(cell.begin(), cell.end(), [b](int v) { return v == b; });
            std::vector<char> explored(g_.vertex_count(), 0);
            for (int w : cell) {
                const int id = orbit_id_[depth][w];
                if (explored[id]) continue;
                explored[id] = 1;
                const Node child = child_node(refiner_, p, w);
                dfs(child.partition, depth + 1, w == b);
            }
            return;
        }
        for (int w : cell) {
            const Node child = child_node(refiner_, p, w);
            dfs(child.partition, depth + 1, false);
        }
    }

    const Graph& g_;
    const GroupSearchResult& group_;
    Refiner refiner_;
    std::vector<std::vector<int>> orbit_id_;
    Partition best_;
    std::vector<std::uint32_t> best_code_;
    bool have_best_ = false;
};

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>(v >> shift));
}

}  // namespace

// ---------------------------------------------------------------------------
// PermGroupWitness

PermGroupWitness::PermGroupWitness(int degree, std::vector<Permutation> generators, std::vector<Level> levels)
    : degree_(degree), generators_(std::move(generators)), levels_(std::move(levels)) {}

std::vector<int> PermGroupWitness::base() const {
    std::vector<int> b;
    for (const auto& l : levels_) b.push_back(l.base_point);
    return b;
}

BigInt PermGroupWitness::order() const {
    BigInt order = 1;
    for (const auto& l : levels_) order *= static_cast<unsigned long>(l.orbit.size());
    return order;
}

std::uint64_t PermGroupWitness::for_each_element(const std::function<bool(const Permutation&)>& visit,
                                                 std::uint64_t budget) const {
    std::uint64_t visited = 0;
    bool stop = false;
    std::vector<Permutation> stack(levels_.size() + 1);
    stack[0] = identity_permutation(degree_);
    std::function<void(std::size_t)> rec = [&](std::size_t level) {
        if (stop) return;
        if (level == levels_.size()) {
            if (visited >= budget) {
                stop = true;
                return;
            }
            ++visited;
            if (!visit(stack[level])) stop = true;
            return;
        }
        for (const auto& rep : levels_[level].representatives) {
            stack[level + 1] = compose(stack[level], rep);
            rec(level + 1);
            if (stop) return;
        }
    };
    rec(0);
    return visited;
}

bool PermGroupWitness::contains(const Permutation& p) const {
    if (static_cast<int>(p.size()) != degree_) return false;
    Permutation residue = p;
    for (const auto& l : levels_) {
        const int image = residue[l.base_point];
        const auto it = std::find(l.orbit.begin(), l.orbit.end(), image);
        if (it == l.orbit.end()) return false;
        residue = compose(inverse(l.representatives[it - l.orbit.begin()]), residue);
    }
    return is_identity(residue);
}

std::vector<std::vector<int>> PermGroupWitness::orbits() const { return orbits_of(degree_, generators_); }

// ---------------------------------------------------------------------------
// Public entry points

PermGroupWitness automorphism_group(const Graph& g) {
    return build_witness(g.vertex_count(), search_group(g));
}

Permutation canonical_labeling(const Graph& g) {
    const auto group = search_group(g);
    CanonicalSearch search(g, group);
    return search.run().pos;
}

std::vector<std::uint8_t> canonical_form(const Graph& g) {
    const int n = g.vertex_count();
    const Permutation label = canonical_labeling(g);
    const Permutation inv = inverse(label);
    std::vector<std::uint8_t> out;
    out.reserve(8 + 4 * n + 8 * g.edge_count());
    put_u32(out, static_cast<std::uint32_t>(n));
    put_u32(out, static_cast<std::uint32_t>(g.edge_count()));
    for (int i = 0; i < n; ++i) put_u32(out, static_cast<std::uint32_t>(g.color(inv[i])));
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges()) edges.emplace_back(std::min(label[u], label[v]), std::max(label[u], label[v]));
    std::sort(edges.begin(), edges.end());
    for (const auto& [a, b] : edges) {
        put_u32(out, static_cast<std::uint32_t>(a));
        put_u32(out, static_cast<std::uint32_t>(b));
    }
    return out;
}

std::string canonical_form_hex(const Graph& g) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string hex;
    for (std::uint8_t byte : canonical_form(g)) {
        hex += digits[byte >> 4];
        hex += digits[byte & 0xf];
    }
    return hex;
}

std::optional<Permutation> isomorphic(const Graph& g1, const Graph& g2) {
    const int n = g1.vertex_count();
    if (n != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return std::nullopt;
    auto profile = [](const Graph& g) {
        std::vector<std::pair<int, int>> out;
        for (int v = 0; v < g.vertex_count(); ++v) out.emplace_back(g.color(v), g.degree(v));
        std::sort(out.begin(), out.end());
        return out;
    };
    if (profile(g1) != profile(g2)) return std::nullopt;
    Partition p1 = color_partition(g1);
    Partition p2 = color_partition(g2);
    Refiner r1(g1), r2(g2);
    const auto t1 = r1.refine(p1, all_cell_starts(p1));
    const auto t2 = r2.refine(p2, all_cell_starts(p2));
    if (t1 != t2 || p1.cells != p2.cells) return std::nullopt;
    MappingSearch search(g1, g2);
    return search.run(p1, p2);
}

std::vector<std::vector<int>> edge_orbits(const Graph& g, const PermGroupWitness& group) {
    const auto& edges = g.edges();
    const int m = static_cast<int>(edges.size());
    auto index_of = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        const auto it = std::lower_bound(edges.begin(), edges.end(), Edge{u, v});
        return static_cast<int>(it - edges.begin());
    };
    std::vector<Permutation> edge_perms;
    for (const auto& gen : group.generators()) {
        Permutation ep(m);
        for (int e = 0; e < m; ++e) ep[e] = index_of(gen[edges[e].first], gen[edges[e].second]);
        edge_perms.push_back(std::move(ep));
    }
    return orbits_of(m, edge_perms);
}

bool edge_transitive(const Graph& g, const PermGroupWitness& group) {
    if (g.edge_count() == 0) return true;
    return edge_orbits(g, group).size() == 1;
}

bool edge_transitive(const Graph& g) { return edge_transitive(g, automorphism_group(g)); }

}  // namespace dcdkit
