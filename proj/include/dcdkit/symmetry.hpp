#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dcdkit/graph.hpp"
#include "dcdkit/rational.hpp"

namespace dcdkit {

/// perm[v] is the image of v.
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
/// (a * b)(v) = a(b(v))
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
bool is_identity(const Permutation& p);
/// Order of the cyclic group generated by p.
std::uint64_t permutation_order(const Permutation& p);
/// Sorted cycle lengths.
std::vector<int> cycle_type(const Permutation& p);

/// Edge- and color-preserving bijection check.
bool is_automorphism(const Graph& g, const Permutation& p);
/// p maps g1 onto g2 (edges and colors).
bool is_isomorphism(const Graph& g1, const Graph& g2, const Permutation& p);

// Automorphism group as a base with a strong generating set. Level i holds
// the coset representatives of G^(i) / G^(i+1), where G^(i) fixes the first
// i base points; the order is the product of the fundamental orbit sizes.
class PermGroupWitness {
public:
    struct Level {
        int base_point = 0;
        std::vector<int> orbit;                      ///< fundamental orbit of base_point
        std::vector<Permutation> representatives;    ///< representatives[j] maps base_point to orbit[j]
    };

    PermGroupWitness(int degree, std::vector<Permutation> generators, std::vector<Level> levels);

    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    const std::vector<Level>& levels() const { return levels_; }
    std::vector<int> base() const;
    BigInt order() const;

    /// Visit every element exactly once (deterministic order). The callback
    /// returns false to stop early. Returns the number of elements visited.
    std::uint64_t for_each_element(const std::function<bool(const Permutation&)>& visit,
                                   std::uint64_t budget = UINT64_MAX) const;

    bool contains(const Permutation& p) const;

    /// Orbits of the whole group on points, each sorted, ordered by minimum.
    std::vector<std::vector<int>> orbits() const;

private:
    int degree_;
    std::vector<Permutation> generators_;
    std::vector<Level> levels_;
};

PermGroupWitness automorphism_group(const Graph& g);

/// Canonical certificate: equal iff the graphs are color-preserving isomorphic.
std::vector<std::uint8_t> canonical_form(const Graph& g);
std::string canonical_form_hex(const Graph& g);

/// Relabeling of g realising its canonical form (vertex v -> position).
Permutation canonical_labeling(const Graph& g);

/// Bijection g1 -> g2 preserving edges and colors, if one exists.
std::optional<Permutation> isomorphic(const Graph& g1, const Graph& g2);

/// Orbits of the group on the edge set; each edge is given by its index in g.edges().
std::vector<std::vector<int>> edge_orbits(const Graph& g, const PermGroupWitness& group);
bool edge_transitive(const Graph& g, const PermGroupWitness& group);
bool edge_transitive(const Graph& g);

/// Orbits of the group generated by the given permutations.
std::vector<std::vector<int>> orbits_of(int degree, const std::vector<Permutation>& generators);

}  // namespace dcdkit
