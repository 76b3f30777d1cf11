#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dcdkit/graph.hpp"
#include "dcdkit/symmetry.hpp"

namespace dcdkit {

/// (point index, block index)
using Flag = std::pair<int, int>;

// Points, blocks and an incidence relation. Immutable once built; incidence
// pairs are kept sorted.
class IncidenceStructure {
public:
    IncidenceStructure() = default;
    IncidenceStructure(std::vector<std::string> point_labels, std::vector<std::string> block_labels,
                       std::vector<Flag> incidences);

    int point_count() const { return static_cast<int>(points_.size()); }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::string>& point_labels() const { return points_; }
    const std::vector<std::string>& block_labels() const { return blocks_; }
    const std::vector<Flag>& incidences() const { return flags_; }

    const std::vector<int>& blocks_of(int point) const { return blocks_of_[point]; }
    const std::vector<int>& points_of(int block) const { return points_of_[block]; }
    bool incident(int point, int block) const;

    std::optional<int> point_index(const std::string& label) const;
    std::optional<int> block_index(const std::string& label) const;

    bool operator==(const IncidenceStructure& other) const {
        return points_ == other.points_ && blocks_ == other.blocks_ && flags_ == other.flags_;
    }

private:
    std::vector<std::string> points_;
    std::vector<std::string> blocks_;
    std::vector<Flag> flags_;
    std::vector<std::vector<int>> blocks_of_;
    std::vector<std::vector<int>> points_of_;
};

struct ConfigSignature {
    int p = 0;  ///< points
    int q = 0;  ///< blocks through each point
    int n = 0;  ///< blocks
    int k = 0;  ///< points on each block
    bool balanced = false;

    /// "(35_4)" when balanced, "(20_3, 15_4)" otherwise.
    std::string to_string() const;
    bool operator==(const ConfigSignature&) const = default;
};

/// Checks uniform degrees, uniform block sizes and linearity (two points
/// share at most one block), in that order.
ConfigSignature validate_configuration(const IncidenceStructure& s);

struct LeviGraph {
    Graph graph;               ///< points 0..p-1, then blocks p..p+n-1; colored 0 / 1
    std::vector<int> coloring; ///< 0 = point, 1 = block
};

LeviGraph levi_graph(const IncidenceStructure& s);

IncidenceStructure dual(const IncidenceStructure& s);

enum class Summand { First, Second };

/// A point of one summand made incident with a block of the other.
struct CrossIncidence {
    Summand point_side = Summand::First;
    int point = 0;
    int block = 0;  ///< index in the other summand

    bool operator==(const CrossIncidence&) const = default;
};

struct IncidenceSumSpec {
    IncidenceStructure c1;
    IncidenceStructure c2;
    std::vector<CrossIncidence> new_incidences;
};

/// Disjoint union plus the cross incidences. Points of c1 come first, then
/// points of c2; likewise for blocks. Labels are kept when they do not
/// collide, otherwise prefixed with "1:" / "2:".
IncidenceStructure incidence_sum(const IncidenceSumSpec& spec);

/// Color-swapping involution of the Levi graph, expressed on Levi vertices
/// (points 0..p-1, blocks p..p+n-1).
struct Polarity {
    Permutation levi_map;
    std::vector<int> point_to_block;
    std::vector<int> block_to_point;
};

/// Checks that the Levi permutation is an involution swapping points and
/// blocks and preserving incidence.
bool is_polarity(const IncidenceStructure& s, const Permutation& levi_map);

/// Exhaustive search over the Levi graph automorphism group for a polarity.
/// The structure must validate as a balanced configuration (NotBalanced otherwise).
std::optional<Polarity> is_self_polar(const IncidenceStructure& s);

/// Points Z_m; block j = { j + s mod m : s in symbol }.
IncidenceStructure cyclic_configuration(const std::vector<int>& symbol, int m);

/// Points are the vertices of a regular graph, blocks their neighborhoods.
/// Throws NotAdmissible when two vertices share a neighborhood, or when the
/// graph is not regular of valency at least 2.
IncidenceStructure v_construction(const Graph& g, const std::vector<std::string>& vertex_labels = {});

/// Levi-graph isomorphism respecting the point/block coloring.
bool isomorphic_structures(const IncidenceStructure& a, const IncidenceStructure& b);

}  // namespace dcdkit
