#pragma once

#include <vector>

#include "dcdkit/incidence.hpp"
#include "dcdkit/subsets.hpp"

namespace dcdkit {

// DCD(n): points are the n-subsets and lines the (n-1)-subsets of
// {0..2n-2}, incidence is containment. Index i of the structure's points
// (blocks) corresponds to point_subsets[i] (block_subsets[i]), both colex.
struct DcdStructure {
    int n = 0;
    int ground_size = 0;  ///< 2n - 1
    std::vector<SubsetMask> point_subsets;
    std::vector<SubsetMask> block_subsets;
    IncidenceStructure structure;

    int point_of(SubsetMask s) const;
    int block_of(SubsetMask s) const;
};

DcdStructure dcd_build(int n);

/// Split of DCD(n) along one hyperplane index h into two mutually dual
/// summands joined by the graph of the bijection phi.
struct Decomposition {
    int n = 0;
    int h = 0;
    bool c1_avoids_h = true;
    IncidenceStructure c1;
    IncidenceStructure c2;
    std::vector<SubsetMask> c1_points, c1_lines, c2_points, c2_lines;
    std::vector<CrossIncidence> cross;
    /// Line l avoiding h -> index of the point l + {h}. With the default
    /// ordering this is c1 line -> c2 point.
    std::vector<int> phi;
    std::vector<int> delta_point;        ///< c1 point -> c2 line (complement)
    std::vector<int> delta_line;         ///< c1 line -> c2 point (complement)
};

/// Throws IndexOutOfRange unless 0 <= h <= 2n-2. With c1_avoids_h = false the
/// roles of the two summands are exchanged.
Decomposition decompose(const DcdStructure& d, int h, bool c1_avoids_h = true);

IncidenceStructure reassemble(const Decomposition& dec);

/// Flag-by-flag check that delta is a duality c1 -> c2: (p, l) incident in c1
/// iff (delta(l), delta(p)) incident in c2, with delta bijective.
bool delta_is_duality(const Decomposition& dec);

/// Structures with identical labels and identical labelled incidences,
/// regardless of element order.
bool same_labelled_structure(const IncidenceStructure& a, const IncidenceStructure& b);

/// Complementation in {0..2n-2}: point S -> line complement(S) and back.
Polarity polarity(const DcdStructure& d);

/// The same polarity assembled from delta and its inverse as in the union of
/// the two summands of a decomposition.
Polarity polarity_from_decomposition(const DcdStructure& d, const Decomposition& dec);

/// (20_3, 15_4): 4- and 3-subsets of {0..6} containing 0.
IncidenceStructure steiner_plucker();
/// (15_4, 20_3): 4- and 3-subsets of {1..6}.
IncidenceStructure cayley_salmon();

/// Ground-set relabeling 1<->6, 2<->5, 3<->4 fixing 0.
std::vector<int> phi_relabeling();

/// True iff the relabeling maps the subset-labelled structure onto itself.
bool relabeling_is_automorphism(const IncidenceStructure& s, const std::vector<int>& ground_perm, int ground_size = 7);

/// phi is an automorphism of both the Steiner-Pluecker and Cayley-Salmon structures.
bool phi_check();

struct FlagOrbitReport {
    std::size_t orbit_size = 0;
    std::size_t flag_count = 0;
    bool transitive() const { return orbit_size == flag_count; }
};

/// Orbit of one flag of DCD(n) under the symmetric group on {0..2n-2}
/// together with complementation. Requires n <= 5.
FlagOrbitReport flag_transitive_dcd(int n);

}  // namespace dcdkit
