#include "dcdkit/dcd.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "dcdkit/error.hpp"

namespace dcdkit {

namespace {

int index_in(const std::vector<SubsetMask>& sorted, SubsetMask s) {
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), s);
    if (it == sorted.end() || *it != s) throw Error(ErrorKind::InvalidArgument, "subset not present");
    return static_cast<int>(it - sorted.begin());
}

std::vector<std::string> labels_of(const std::vector<SubsetMask>& sets, int ground) {
    std::vector<std::string> out;
    for (SubsetMask s : sets) out.push_back(subset_label(s, ground));
    return out;
}

IncidenceStructure containment_structure(const std::vector<SubsetMask>& points, const std::vector<SubsetMask>& blocks,
                                         int ground) {
    std::vector<Flag> flags;
    for (int p = 0; p < static_cast<int>(points.size()); ++p)
        for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
            if (subset_contains(points[p], blocks[b])) flags.emplace_back(p, b);
    return IncidenceStructure(labels_of(points, ground), labels_of(blocks, ground), std::move(flags));
}

std::vector<SubsetMask> filter(const std::vector<SubsetMask>& sets, bool keep_with, int element) {
    std::vector<SubsetMask> out;
    const SubsetMask bit = SubsetMask{1} << element;
    for (SubsetMask s : sets)
        if (((s & bit) != 0) == keep_with) out.push_back(s);
    return out;
}

}  // namespace

int DcdStructure::point_of(SubsetMask s) const { return index_in(point_subsets, s); }
int DcdStructure::block_of(SubsetMask s) const { return index_in(block_subsets, s); }

DcdStructure dcd_build(int n) {
    if (n < 2 || 2 * n - 1 > 63) throw Error(ErrorKind::InvalidArgument, "dcd_build requires 2 <= n <= 32");
    DcdStructure d;
    d.n = n;
    d.ground_size = 2 * n - 1;
    d.point_subsets = k_subsets(d.ground_size, n);
    d.block_subsets = k_subsets(d.ground_size, n - 1);
    d.structure = containment_structure(d.point_subsets, d.block_subsets, d.ground_size);
    return d;
}

Decomposition decompose(const DcdStructure& d, int h, bool c1_avoids_h) {
    if (h < 0 || h >= d.ground_size) {
        throw Error(ErrorKind::IndexOutOfRange, "hyperplane index " + std::to_string(h) + " outside 0.." + std::to_string(d.ground_size - 1));
    }
    Decomposition dec;
    dec.n = d.n;
    dec.h = h;
    dec.c1_avoids_h = c1_avoids_h;
    const bool c1_with = !c1_avoids_h;
    dec.c1_points = filter(d.point_subsets, c1_with, h);
    dec.c1_lines = filter(d.block_subsets, c1_with, h);
    dec.c2_points = filter(d.point_subsets, !c1_with, h);
    dec.c2_lines = filter(d.block_subsets, !c1_with, h);
    dec.c1 = containment_structure(dec.c1_points, dec.c1_lines, d.ground_size);
    dec.c2 = containment_structure(dec.c2_points, dec.c2_lines, d.ground_size);
    const SubsetMask bit = SubsetMask{1} << h;
    // The straddling containments: each line l avoiding h lies on the point
    // l + {h}, which sits in the other summand.
    const auto& lines_without = c1_avoids_h ? dec.c1_lines : dec.c2_lines;
    const auto& points_with = c1_avoids_h ? dec.c2_points : dec.c1_points;
    for (int l = 0; l < static_cast<int>(lines_without.size()); ++l) {
        const int p = index_in(points_with, lines_without[l] | bit);
        dec.phi.push_back(p);
        dec.cross.push_back({c1_avoids_h ? Summand::Second : Summand::First, p, l});
    }
    for (SubsetMask p : dec.c1_points) dec.delta_point.push_back(index_in(dec.c2_lines, subset_complement(p, d.ground_size)));
    for (SubsetMask l : dec.c1_lines) dec.delta_line.push_back(index_in(dec.c2_points, subset_complement(l, d.ground_size)));
    return dec;
}

IncidenceStructure reassemble(const Decomposition& dec) { return incidence_sum({dec.c1, dec.c2, dec.cross}); }

bool delta_is_duality(const Decomposition& dec) {
    const int p1 = dec.c1.point_count();
    const int n1 = dec.c1.block_count();
    if (dec.c2.point_count() != n1 || dec.c2.block_count() != p1) return false;
    std::set<int> lines(dec.delta_point.begin(), dec.delta_point.end());
    std::set<int> points(dec.delta_line.begin(), dec.delta_line.end());
    if (static_cast<int>(lines.size()) != p1 || static_cast<int>(points.size()) != n1) return false;
    for (int p = 0; p < p1; ++p)
        for (int l = 0; l < n1; ++l)
            if (dec.c1.incident(p, l) != dec.c2.incident(dec.delta_line[l], dec.delta_point[p])) return false;
    return true;
}

bool same_labelled_structure(const IncidenceStructure& a, const IncidenceStructure& b) {
    auto flags = [](const IncidenceStructure& s) {
        std::set<std::pair<std::string, std::string>> out;
        for (const auto& [p, bl] : s.incidences()) out.emplace(s.point_labels()[p], s.block_labels()[bl]);
        return out;
    };
    auto sorted = [](std::vector<std::string> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    return sorted(a.point_labels()) == sorted(b.point_labels()) && sorted(a.block_labels()) == sorted(b.block_labels()) &&
           flags(a) == flags(b);
}

Polarity polarity(const DcdStructure& d) {
    const int p = d.structure.point_count();
    Polarity pol;
    pol.levi_map.assign(p + d.structure.block_count(), 0);
    for (int i = 0; i < p; ++i) {
        const int b = d.block_of(subset_complement(d.point_subsets[i], d.ground_size));
        pol.point_to_block.push_back(b);
        pol.levi_map[i] = p + b;
    }
    for (int b = 0; b < d.structure.block_count(); ++b) {
        const int q = d.point_of(subset_complement(d.block_subsets[b], d.ground_size));
        pol.block_to_point.push_back(q);
        pol.levi_map[p + b] = q;
    }
    return pol;
}

Polarity polarity_from_decomposition(const DcdStructure& d, const Decomposition& dec) {
    const int p = d.structure.point_count();
    Polarity pol;
    pol.point_to_block.assign(p, -1);
    pol.block_to_point.assign(d.structure.block_count(), -1);
    // x in c1: delta(x); x in c2: delta^{-1}(x).
    for (int i = 0; i < static_cast<int>(dec.c1_points.size()); ++i) {
        const int pt = d.point_of(dec.c1_points[i]);
        const int ln = d.block_of(dec.c2_lines[dec.delta_point[i]]);
        pol.point_to_block[pt] = ln;
        pol.block_to_point[ln] = pt;
    }
    for (int i = 0; i < static_cast<int>(dec.c1_lines.size()); ++i) {
        const int ln = d.block_of(dec.c1_lines[i]);
        const int pt = d.point_of(dec.c2_points[dec.delta_line[i]]);
        pol.block_to_point[ln] = pt;
        pol.point_to_block[pt] = ln;
    }
    pol.levi_map.assign(p + d.structure.block_count(), 0);
    for (int i = 0; i < p; ++i) pol.levi_map[i] = p + pol.point_to_block[i];
    for (int b = 0; b < d.structure.block_count(); ++b) pol.levi_map[p + b] = pol.block_to_point[b];
    return pol;
}

IncidenceStructure steiner_plucker() {
    return containment_structure(filter(k_subsets(7, 4), true, 0), filter(k_subsets(7, 3), true, 0), 7);
}

IncidenceStructure cayley_salmon() {
    return containment_structure(filter(k_subsets(7, 4), false, 0), filter(k_subsets(7, 3), false, 0), 7);
}

std::vector<int> phi_relabeling() { return {0, 6, 5, 4, 3, 2, 1}; }

bool relabeling_is_automorphism(const IncidenceStructure& s, const std::vector<int>& ground_perm, int ground_size) {
    auto image = [&](const std::string& label) {
        return subset_label(permute_subset(parse_subset_label(label, ground_size), ground_perm), ground_size);
    };
    std::vector<int> point_image, block_image;
    for (const auto& l : s.point_labels()) {
        const auto target = s.point_index(image(l));
        if (!target) return false;
        point_image.push_back(*target);
    }
    for (const auto& l : s.block_labels()) {
        const auto target = s.block_index(image(l));
        if (!target) return false;
        block_image.push_back(*target);
    }
    for (const auto& [p, b] : s.incidences())
        if (!s.incident(point_image[p], block_image[b])) return false;
    return true;
}

bool phi_check() {
    const auto phi = phi_relabeling();
    if (!is_identity(compose(phi, phi))) return false;
    return relabeling_is_automorphism(steiner_plucker(), phi) && relabeling_is_automorphism(cayley_salmon(), phi);
}

FlagOrbitReport flag_transitive_dcd(int n) {
    if (n < 2 || n > 5) throw Error(ErrorKind::InvalidArgument, "flag_transitive_dcd is limited to 2 <= n <= 5");
    const auto d = dcd_build(n);
    const int m = d.ground_size;
    std::vector<std::vector<int>> ground_gens;
    std::vector<int> transposition(m), rotation(m);
    for (int i = 0; i < m; ++i) {
        transposition[i] = i;
        rotation[i] = (i + 1) % m;
    }
    std::swap(transposition[0], transposition[1]);
    ground_gens.push_back(transposition);
    ground_gens.push_back(rotation);
    // Flags as (point subset, line subset); complementation sends (P, L) to
    // (complement L, complement P).
    using FlagSets = std::pair<SubsetMask, SubsetMask>;
    std::set<FlagSets> seen;
    std::deque<FlagSets> queue;
    const auto& first = d.structure.incidences().front();
    const FlagSets start{d.point_subsets[first.first], d.block_subsets[first.second]};
    seen.insert(start);
    queue.push_back(start);
    while (!queue.empty()) {
        const auto [p, l] = queue.front();
        queue.pop_front();
        std::vector<FlagSets> images;
        for (const auto& g : ground_gens) images.emplace_back(permute_subset(p, g), permute_subset(l, g));
        images.emplace_back(subset_complement(l, m), subset_complement(p, m));
        for (const auto& img : images)
            if (seen.insert(img).second) queue.push_back(img);
    }
    return {seen.size(), d.structure.incidences().size()};
}

}  // namespace dcdkit
