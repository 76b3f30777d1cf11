#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dcdkit {

// Subsets of a ground set {0..63} as bitmasks. Numeric order of masks with a
// fixed popcount is exactly colexicographic order.
using SubsetMask = std::uint64_t;

/// All k-subsets of {0..m-1} in colex order.
std::vector<SubsetMask> k_subsets(int m, int k);

std::vector<int> subset_elements(SubsetMask s);

SubsetMask subset_from_elements(const std::vector<int>& elements);

inline int subset_size(SubsetMask s) { return __builtin_popcountll(s); }

inline bool subset_contains(SubsetMask outer, SubsetMask inner) { return (outer & inner) == inner; }

inline SubsetMask subset_complement(SubsetMask s, int m) {
    return (~s) & ((m >= 64) ? ~SubsetMask{0} : ((SubsetMask{1} << m) - 1));
}

/// Ascending element list rendered as digits ("0123"); ground sets larger than
/// ten elements fall back to a comma separated list.
std::string subset_label(SubsetMask s, int ground_size);

/// Inverse of subset_label. Throws ParseError on malformed input.
SubsetMask parse_subset_label(const std::string& label, int ground_size);

/// Apply a permutation of the ground set to a subset.
SubsetMask permute_subset(SubsetMask s, const std::vector<int>& perm);

long long binomial(int n, int k);

}  // namespace dcdkit
