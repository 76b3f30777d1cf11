#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "dcdkit/graph.hpp"
#include "dcdkit/symmetry.hpp"

namespace dcdkit {

/// Arc u -> v carrying voltage s in Z_k; traversed backwards it carries -s.
struct VoltageArc {
    int u = 0;
    int v = 0;
    long s = 0;
    bool operator==(const VoltageArc&) const = default;
};

// Base multigraph with Z_k voltages. Loops and parallel arcs are allowed. A
// loop whose voltage satisfies 2s = 0 mod k is a semi-edge: it lifts to k/2
// edges {(u,i), (u,i+s)}.
struct VoltageGraph {
    int vertex_count = 0;
    int k = 1;
    std::vector<VoltageArc> arcs;  ///< voltages reduced to 0..k-1
    std::vector<int> colors;       ///< optional, one per base vertex

    /// Validates indices and reduces voltages; throws InvalidArgument.
    void normalize();
    bool operator==(const VoltageGraph&) const = default;
};

struct CoverResult {
    Graph graph;                  ///< vertex (u, i) has index u * k + i
    std::vector<int> projection;  ///< cover vertex -> base vertex
};

/// Throws MultiEdgeInCover when two lifts coincide or a loop lifts to loops.
CoverResult cover(const VoltageGraph& vg);

/// a is an automorphism of g whose orbits all have size `order(a)`.
bool is_semiregular(const Graph& g, const Permutation& a);

struct SemiregularOptions {
    std::uint64_t budget = 1000000;  ///< group elements enumerated at most
    std::size_t max_results = 0;     ///< 0 = no limit
};

/// Automorphisms of order k with all vertex orbits of size k, taken from an
/// enumeration of the (color-preserving) automorphism group. An empty result
/// means none were found within the budget.
std::vector<Permutation> semiregular_cyclic(const Graph& g, int k, const SemiregularOptions& opt = {});
std::vector<Permutation> semiregular_cyclic(const Graph& g, const PermGroupWitness& group, int k,
                                            const SemiregularOptions& opt = {});

/// Base vertices are the orbits of a (ordered by least element); one arc per
/// edge orbit. Orbit transversals follow a BFS spanning tree of the base so
/// tree arcs carry voltage 0. Throws NotSemiregular.
VoltageGraph quotient(const Graph& g, const Permutation& a);

/// cover(quotient(g, a)) is isomorphic to g (colors respected).
bool quotient_round_trip(const Graph& g, const Permutation& a);

/// "v <count> k <order>" header followed by "u v s" arc lines; an optional
/// "c <color> ..." line carries base vertex colors; '#' starts a comment.
std::string to_text(const VoltageGraph& vg);
VoltageGraph voltage_from_text(const std::string& text);

nlohmann::json to_json(const VoltageGraph& vg);
VoltageGraph voltage_from_json(const nlohmann::json& j);

/// Bipartiteness of the cover decided on the base: the cover is bipartite iff
/// no closed walk of odd length in the base has net voltage 0.
bool cover_is_bipartite_by_voltages(const VoltageGraph& vg);

}  // namespace dcdkit
