#include "dcdkit/incidence.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "dcdkit/error.hpp"

namespace dcdkit {

namespace {

void require_unique(const std::vector<std::string>& labels, const char* what) {
    std::unordered_set<std::string> seen;
    for (const auto& l : labels)
        if (!seen.insert(l).second) throw Error(ErrorKind::InvalidArgument, std::string("duplicate ") + what + " label '" + l + "'");
}

}  // namespace

IncidenceStructure::IncidenceStructure(std::vector<std::string> point_labels, std::vector<std::string> block_labels,
                                       std::vector<Flag> incidences)
    : points_(std::move(point_labels)), blocks_(std::move(block_labels)), flags_(std::move(incidences)) {
    require_unique(points_, "point");
    require_unique(blocks_, "block");
    for (const auto& [p, b] : flags_) {
        if (p < 0 || p >= point_count() || b < 0 || b >= block_count()) {
            throw Error(ErrorKind::InvalidArgument, "incidence references a missing point or block");
        }
    }
    std::sort(flags_.begin(), flags_.end());
    if (std::adjacent_find(flags_.begin(), flags_.end()) != flags_.end()) {
        throw Error(ErrorKind::InvalidArgument, "duplicate incidence pair");
    }
    blocks_of_.assign(points_.size(), {});
    points_of_.assign(blocks_.size(), {});
    for (const auto& [p, b] : flags_) {
        blocks_of_[p].push_back(b);
        points_of_[b].push_back(p);
    }
}

bool IncidenceStructure::incident(int point, int block) const {
    const auto& bs = blocks_of_[point];
    return std::binary_search(bs.begin(), bs.end(), block);
}

std::optional<int> IncidenceStructure::point_index(const std::string& label) const {
    const auto it = std::find(points_.begin(), points_.end(), label);
    if (it == points_.end()) return std::nullopt;
    return static_cast<int>(it - points_.begin());
}

std::optional<int> IncidenceStructure::block_index(const std::string& label) const {
    const auto it = std::find(blocks_.begin(), blocks_.end(), label);
    if (it == blocks_.end()) return std::nullopt;
    return static_cast<int>(it - blocks_.begin());
}

std::string ConfigSignature::to_string() const {
    if (balanced) return "(" + std::to_string(p) + "_" + std::to_string(q) + ")";
    return "(" + std::to_string(p) + "_" + std::to_string(q) + ", " + std::to_string(n) + "_" + std::to_string(k) + ")";
}

ConfigSignature validate_configuration(const IncidenceStructure& s) {
    ConfigSignature sig;
    sig.p = s.point_count();
    sig.n = s.block_count();
    if (sig.p == 0 || sig.n == 0) throw Error(ErrorKind::InvalidArgument, "empty incidence structure");
    sig.q = static_cast<int>(s.blocks_of(0).size());
    for (int p = 1; p < sig.p; ++p)
        if (static_cast<int>(s.blocks_of(p).size()) != sig.q) {
            throw Error(ErrorKind::NonUniformDegree, "point '" + s.point_labels()[p] + "' has degree " +
                                                         std::to_string(s.blocks_of(p).size()) + ", expected " + std::to_string(sig.q));
        }
    sig.k = static_cast<int>(s.points_of(0).size());
    for (int b = 1; b < sig.n; ++b)
        if (static_cast<int>(s.points_of(b).size()) != sig.k) {
            throw Error(ErrorKind::NonUniformBlockSize, "block '" + s.block_labels()[b] + "' has size " +
                                                            std::to_string(s.points_of(b).size()) + ", expected " + std::to_string(sig.k));
        }
    // Pairwise common-block counting.
    std::vector<int> shared(sig.p, 0);
    for (int p = 0; p < sig.p; ++p) {
        std::fill(shared.begin(), shared.end(), 0);
        for (int b : s.blocks_of(p))
            for (int other : s.points_of(b)) {
                if (other == p) continue;
                if (++shared[other] > 1) {
                    throw Error(ErrorKind::NotLinear, "points '" + s.point_labels()[p] + "' and '" + s.point_labels()[other] +
                                                          "' share two blocks");
                }
            }
    }
    sig.balanced = sig.p == sig.n;
    return sig;
}

LeviGraph levi_graph(const IncidenceStructure& s) {
    const int p = s.point_count();
    std::vector<Edge> edges;
    edges.reserve(s.incidences().size());
    for (const auto& [pt, b] : s.incidences()) edges.emplace_back(pt, p + b);
    std::vector<int> coloring(p + s.block_count(), 0);
    std::fill(coloring.begin() + p, coloring.end(), 1);
    return {Graph(p + s.block_count(), std::move(edges), coloring), coloring};
}

IncidenceStructure dual(const IncidenceStructure& s) {
    std::vector<Flag> flags;
    flags.reserve(s.incidences().size());
    for (const auto& [p, b] : s.incidences()) flags.emplace_back(b, p);
    return IncidenceStructure(s.block_labels(), s.point_labels(), std::move(flags));
}

IncidenceStructure incidence_sum(const IncidenceSumSpec& spec) {
    const auto& c1 = spec.c1;
    const auto& c2 = spec.c2;
    for (const auto& x : spec.new_incidences) {
        const auto& own = x.point_side == Summand::First ? c1 : c2;
        const auto& other = x.point_side == Summand::First ? c2 : c1;
        if (x.point < 0 || x.point >= own.point_count() || x.block < 0 || x.block >= other.block_count()) {
            throw Error(ErrorKind::CrossIncidenceInvalid, "cross incidence references a missing point or block");
        }
    }
    auto join = [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
        std::set<std::string> seen(a.begin(), a.end());
        bool collide = false;
        for (const auto& l : b) collide = collide || seen.count(l) > 0;
        std::vector<std::string> out;
        for (const auto& l : a) out.push_back(collide ? "1:" + l : l);
        for (const auto& l : b) out.push_back(collide ? "2:" + l : l);
        return out;
    };
    const int p1 = c1.point_count();
    const int n1 = c1.block_count();
    std::vector<Flag> flags;
    for (const auto& [p, b] : c1.incidences()) flags.emplace_back(p, b);
    for (const auto& [p, b] : c2.incidences()) flags.emplace_back(p1 + p, n1 + b);
    for (const auto& x : spec.new_incidences) {
        if (x.point_side == Summand::First) {
            flags.emplace_back(x.point, n1 + x.block);
        } else {
            flags.emplace_back(p1 + x.point, x.block);
        }
    }
    std::sort(flags.begin(), flags.end());
    if (std::adjacent_find(flags.begin(), flags.end()) != flags.end()) {
        throw Error(ErrorKind::CrossIncidenceInvalid, "duplicate cross incidence");
    }
    return IncidenceStructure(join(c1.point_labels(), c2.point_labels()), join(c1.block_labels(), c2.block_labels()),
                              std::move(flags));
}

bool is_polarity(const IncidenceStructure& s, const Permutation& levi_map) {
    const int p = s.point_count();
    const int total = p + s.block_count();
    if (static_cast<int>(levi_map.size()) != total) return false;
    for (int v = 0; v < total; ++v) {
        const int w = levi_map[v];
        if (w < 0 || w >= total) return false;
        if ((v < p) == (w < p)) return false;
        if (levi_map[w] != v) return false;
    }
    for (const auto& [pt, b] : s.incidences()) {
        // point pt -> block levi_map[pt] - p, block b -> point levi_map[p + b]
        if (!s.incident(levi_map[p + b], levi_map[pt] - p)) return false;
    }
    return true;
}

std::optional<Polarity> is_self_polar(const IncidenceStructure& s) {
    const auto sig = validate_configuration(s);
    if (!sig.balanced) throw Error(ErrorKind::NotBalanced, "self-polarity needs equal point and block counts");
    const auto levi = levi_graph(s);
    const Graph plain = levi.graph.without_colors();
    const auto group = automorphism_group(plain);
    const int p = s.point_count();
    std::optional<Permutation> witness;
    group.for_each_element([&](const Permutation& g) {
        for (int v = 0; v < static_cast<int>(g.size()); ++v) {
            if ((v < p) == (g[v] < p)) return true;
            if (g[g[v]] != v) return true;
        }
        witness = g;
        return false;
    });
    if (!witness) return std::nullopt;
    Polarity pol;
    pol.levi_map = *witness;
    for (int v = 0; v < p; ++v) pol.point_to_block.push_back((*witness)[v] - p);
    for (int b = 0; b < s.block_count(); ++b) pol.block_to_point.push_back((*witness)[p + b]);
    return pol;
}

IncidenceStructure cyclic_configuration(const std::vector<int>& symbol, int m) {
    if (m < 1) throw Error(ErrorKind::InvalidArgument, "modulus must be positive");
    std::set<int> residues;
    for (int s : symbol) residues.insert(((s % m) + m) % m);
    if (residues.size() != symbol.size()) throw Error(ErrorKind::InvalidArgument, "symbol has repeated residues");
    std::vector<std::string> points, blocks;
    std::vector<Flag> flags;
    for (int i = 0; i < m; ++i) {
        points.push_back(std::to_string(i));
        blocks.push_back("B" + std::to_string(i));
    }
    for (int j = 0; j < m; ++j)
        for (int s : residues) flags.emplace_back((j + s) % m, j);
    return IncidenceStructure(std::move(points), std::move(blocks), std::move(flags));
}

bool isomorphic_structures(const IncidenceStructure& a, const IncidenceStructure& b) {
    return isomorphic(levi_graph(a).graph, levi_graph(b).graph).has_value();
}

}  // namespace dcdkit

namespace dcdkit {

IncidenceStructure v_construction(const Graph& g, const std::vector<std::string>& vertex_labels) {
    const int n = g.vertex_count();
    const auto degree = g.regular_degree();
    if (!degree || *degree < 2) throw Error(ErrorKind::NotAdmissible, "V-construction needs a regular graph of valency >= 2");
    std::vector<std::string> labels = vertex_labels;
    if (labels.empty()) {
        for (int v = 0; v < n; ++v) labels.push_back(std::to_string(v));
    }
    if (static_cast<int>(labels.size()) != n) throw Error(ErrorKind::InvalidArgument, "vertex label count mismatch");
    std::set<std::vector<int>> seen;
    for (int v = 0; v < n; ++v) {
        if (!seen.insert(g.neighbors(v)).second) {
            throw Error(ErrorKind::NotAdmissible, "vertex " + labels[v] + " repeats another vertex's neighborhood");
        }
    }
    std::vector<std::string> blocks;
    std::vector<Flag> flags;
    for (int v = 0; v < n; ++v) {
        blocks.push_back("N(" + labels[v] + ")");
        for (int w : g.neighbors(v)) flags.emplace_back(w, v);
    }
    return IncidenceStructure(std::move(labels), std::move(blocks), std::move(flags));
}

}  // namespace dcdkit
