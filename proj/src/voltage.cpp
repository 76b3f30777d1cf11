#include "dcdkit/voltage.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "dcdkit/error.hpp"

namespace dcdkit {

namespace {

long mod(long a, long k) { return ((a % k) + k) % k; }

}  // namespace

void VoltageGraph::normalize() {
    if (vertex_count < 1) throw Error(ErrorKind::InvalidArgument, "voltage graph needs at least one vertex");
    if (k < 1) throw Error(ErrorKind::InvalidArgument, "group order must be positive");
    if (!colors.empty() && static_cast<int>(colors.size()) != vertex_count) {
        throw Error(ErrorKind::InvalidArgument, "one color per base vertex required");
    }
    for (auto& a : arcs) {
        if (a.u < 0 || a.u >= vertex_count || a.v < 0 || a.v >= vertex_count) {
            throw Error(ErrorKind::InvalidArgument, "arc endpoint out of range");
        }
        a.s = mod(a.s, k);
    }
}

CoverResult cover(const VoltageGraph& input) {
    VoltageGraph vg = input;
    vg.normalize();
    const int k = vg.k;
    std::vector<Edge> edges;
    for (const auto& a : vg.arcs) {
        if (a.u == a.v && a.s == 0) throw Error(ErrorKind::MultiEdgeInCover, "loop with voltage 0 lifts to loops");
        const bool semi = a.u == a.v && mod(2 * a.s, k) == 0;
        for (int i = 0; i < k; ++i) {
            const int j = static_cast<int>(mod(i + a.s, k));
            if (semi && j < i) continue;
            const int x = a.u * k + i, y = a.v * k + j;
            edges.emplace_back(std::min(x, y), std::max(x, y));
        }
    }
    std::vector<Edge> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error(ErrorKind::MultiEdgeInCover, "two arcs lift to the same edge");
    }
    std::vector<int> colors, projection;
    for (int u = 0; u < vg.vertex_count; ++u)
        for (int i = 0; i < k; ++i) {
            projection.push_back(u);
            if (!vg.colors.empty()) colors.push_back(vg.colors[u]);
        }
    return {Graph(vg.vertex_count * k, std::move(edges), colors), projection};
}

bool is_semiregular(const Graph& g, const Permutation& a) {
    if (static_cast<int>(a.size()) != g.vertex_count()) return false;
    if (!is_automorphism(g, a)) return false;
    const int order = static_cast<int>(permutation_order(a));
    for (int len : cycle_type(a))
        if (len != order) return false;
    return true;
}

std::vector<Permutation> semiregular_cyclic(const Graph& g, const PermGroupWitness& group, int k, const SemiregularOptions& opt) {
    std::vector<Permutation> out;
    if (k < 1 || g.vertex_count() % k != 0) return out;
    group.for_each_element(
        [&](const Permutation& p) {
            if (permutation_order(p) != static_cast<std::uint64_t>(k)) return true;
            const auto cycles = cycle_type(p);
            if (std::all_of(cycles.begin(), cycles.end(), [&](int c) { return c == k; })) out.push_back(p);
            return opt.max_results == 0 || out.size() < opt.max_results;
        },
        opt.budget);
    return out;
}

std::vector<Permutation> semiregular_cyclic(const Graph& g, int k, const SemiregularOptions& opt) {
    if (k < 1 || g.vertex_count() % k != 0) return {};
    return semiregular_cyclic(g, automorphism_group(g), k, opt);
}

VoltageGraph quotient(const Graph& g, const Permutation& a) {
    if (!is_semiregular(g, a)) throw Error(ErrorKind::NotSemiregular, "permutation is not a semiregular automorphism");
    const int n = g.vertex_count();
    const int k = static_cast<int>(permutation_order(a));
    // Orbits ordered by least element.
    std::vector<int> orbit_of(n, -1);
    std::vector<int> least;
    for (int v = 0; v < n; ++v) {
        if (orbit_of[v] >= 0) continue;
        const int id = static_cast<int>(least.size());
        least.push_back(v);
        for (int w = v; orbit_of[w] < 0; w = a[w]) orbit_of[w] = id;
    }
    const int m = static_cast<int>(least.size());
    // fiber[v] = i such that v = a^i(rep of its orbit); reps chosen along a BFS tree.
    std::vector<int> fiber(n, -1);
    auto label_orbit = [&](int rep, int start_index) {
        int w = rep;
        for (int i = 0; i < k; ++i) {
            fiber[w] = static_cast<int>(mod(start_index + i, k));
            w = a[w];
        }
    };
    std::vector<bool> done(m, false);
    for (int root = 0; root < m; ++root) {
        if (done[root]) continue;
        done[root] = true;
        label_orbit(least[root], 0);
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int o = queue.front();
            queue.pop_front();
            // Members of the orbit in increasing order for determinism.
            std::vector<int> members;
            for (int v = 0; v < n; ++v)
                if (orbit_of[v] == o) members.push_back(v);
            for (int x : members)
                for (int y : g.neighbors(x)) {
                    const int p = orbit_of[y];
                    if (done[p]) continue;
                    done[p] = true;
                    // y gets the same fiber index as x.
                    label_orbit(y, fiber[x]);
                    queue.push_back(p);
                }
        }
    }
    VoltageGraph vg;
    vg.vertex_count = m;
    vg.k = k;
    std::set<Edge> seen;
    for (const auto& [x, y] : g.edges()) {
        if (seen.count({x, y})) continue;
        int u = x, v = y;
        for (int t = 0; t < k; ++t) {
            seen.insert({std::min(u, v), std::max(u, v)});
            u = a[u];
            v = a[v];
        }
        vg.arcs.push_back({orbit_of[x], orbit_of[y], mod(fiber[y] - fiber[x], k)});
    }
    if (g.has_coloring()) {
        vg.colors.assign(m, 0);
        for (int o = 0; o < m; ++o) vg.colors[o] = g.color(least[o]);
        for (int v = 0; v < n; ++v)
            if (g.color(v) != vg.colors[orbit_of[v]]) {
                vg.colors.clear();
                break;
            }
    }
    return vg;
}

bool quotient_round_trip(const Graph& g, const Permutation& a) {
    const auto vg = quotient(g, a);
    Graph lifted = cover(vg).graph;
    Graph target = g;
    if (vg.colors.empty()) {
        lifted = lifted.without_colors();
        target = target.without_colors();
    }
    return isomorphic(lifted, target).has_value();
}

std::string to_text(const VoltageGraph& vg) {
    std::ostringstream out;
    out << "v " << vg.vertex_count << " k " << vg.k << "\n";
    if (!vg.colors.empty()) {
        out << "c";
        for (int c : vg.colors) out << " " << c;
        out << "\n";
    }
    for (const auto& a : vg.arcs) out << a.u << " " << a.v << " " << a.s << "\n";
    return out.str();
}

VoltageGraph voltage_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    VoltageGraph vg;
    bool header = false;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first)) continue;
        const std::string where = "line " + std::to_string(line_no);
        if (!header) {
            std::string kw;
            if (first != "v" || !(fields >> vg.vertex_count >> kw >> vg.k) || kw != "k") {
                throw Error(ErrorKind::ParseError, where + ": expected header 'v <count> k <order>'");
            }
            header = true;
            continue;
        }
        if (first == "c") {
            int c;
            while (fields >> c) vg.colors.push_back(c);
            continue;
        }
        VoltageArc a;
        try {
            a.u = std::stoi(first);
        } catch (const std::exception&) {
            throw Error(ErrorKind::ParseError, where + ": expected 'u v s'");
        }
        if (!(fields >> a.v >> a.s)) throw Error(ErrorKind::ParseError, where + ": expected 'u v s'");
        std::string extra;
        if (fields >> extra) throw Error(ErrorKind::ParseError, where + ": trailing input");
        vg.arcs.push_back(a);
    }
    if (!header) throw Error(ErrorKind::ParseError, "missing header");
    try {
        vg.normalize();
    } catch (const Error& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    return vg;
}

nlohmann::json to_json(const VoltageGraph& vg) {
    nlohmann::json arcs = nlohmann::json::array();
    for (const auto& a : vg.arcs) arcs.push_back({a.u, a.v, a.s});
    nlohmann::json j = {{"vertices", vg.vertex_count}, {"k", vg.k}, {"arcs", arcs}};
    if (!vg.colors.empty()) j["colors"] = vg.colors;
    return j;
}

VoltageGraph voltage_from_json(const nlohmann::json& j) {
    try {
        VoltageGraph vg;
        vg.vertex_count = j.at("vertices").get<int>();
        vg.k = j.at("k").get<int>();
        for (const auto& a : j.at("arcs")) vg.arcs.push_back({a.at(0).get<int>(), a.at(1).get<int>(), a.at(2).get<long>()});
        if (j.contains("colors")) vg.colors = j.at("colors").get<std::vector<int>>();
        vg.normalize();
        return vg;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    } catch (const Error& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

bool cover_is_bipartite_by_voltages(const VoltageGraph& input) {
    VoltageGraph vg = input;
    vg.normalize();
    const long k = vg.k;
    std::vector<std::vector<std::pair<int, long>>> adj(vg.vertex_count);  // (neighbor, voltage)
    for (const auto& a : vg.arcs) {
        adj[a.u].emplace_back(a.v, a.s);
        if (a.u != a.v) adj[a.v].emplace_back(a.u, mod(-a.s, k));
    }
    // Potentials along BFS trees; every arc then closes a walk with net
    // (voltage, length parity). Those generate a subgroup of Z_k x Z_2 and an
    // odd closed walk lifts iff that subgroup contains (0, 1).
    std::vector<long> pot(vg.vertex_count, -1);
    std::vector<int> par(vg.vertex_count, 0);
    for (int s = 0; s < vg.vertex_count; ++s) {
        if (pot[s] >= 0) continue;
        pot[s] = 0;
        std::deque<int> q{s};
        std::vector<int> comp;
        while (!q.empty()) {
            const int u = q.front();
            q.pop_front();
            comp.push_back(u);
            for (const auto& [v, w] : adj[u])
                if (pot[v] < 0) {
                    pot[v] = mod(pot[u] + w, k);
                    par[v] = par[u] ^ 1;
                    q.push_back(v);
                }
        }
        std::vector<std::pair<long, int>> gens;
        for (int u : comp)
            for (const auto& [v, w] : adj[u]) gens.emplace_back(mod(pot[u] + w - pot[v], k), par[u] ^ par[v] ^ 1);
        std::vector<char> in(2 * k, 0);
        in[0] = 1;
        std::deque<std::pair<long, int>> frontier{{0, 0}};
        while (!frontier.empty()) {
            const auto [x, p] = frontier.front();
            frontier.pop_front();
            for (const auto& [gx, gp] : gens) {
                const long y = (x + gx) % k;
                const int r = p ^ gp;
                if (!in[2 * y + r]) {
                    in[2 * y + r] = 1;
                    frontier.push_back({y, r});
                }
            }
        }
        if (in[1]) return false;
    }
    return true;
}

}  // namespace dcdkit
