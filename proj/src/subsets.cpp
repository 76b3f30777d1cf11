#include "dcdkit/subsets.hpp"

#include "dcdkit/error.hpp"

namespace dcdkit {

std::vector<SubsetMask> k_subsets(int m, int k) {
    if (m < 0 || m > 63 || k < 0 || k > m) {
        throw Error(ErrorKind::InvalidArgument, "k_subsets requires 0 <= k <= m <= 63");
    }
    std::vector<SubsetMask> out;
    out.reserve(static_cast<std::size_t>(binomial(m, k)));
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    // Gosper's hack walks masks of equal popcount in increasing order.
    SubsetMask s = (SubsetMask{1} << k) - 1;
    const SubsetMask limit = SubsetMask{1} << m;
    while (s < limit) {
        out.push_back(s);
        const SubsetMask c = s & (~s + 1);
        const SubsetMask r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    return out;
}

std::vector<int> subset_elements(SubsetMask s) {
    std::vector<int> out;
    while (s != 0) {
        out.push_back(__builtin_ctzll(s));
        s &= s - 1;
    }
    return out;
}

SubsetMask subset_from_elements(const std::vector<int>& elements) {
    SubsetMask s = 0;
    for (int e : elements) {
        if (e < 0 || e > 63) throw Error(ErrorKind::InvalidArgument, "subset element out of range");
        s |= SubsetMask{1} << e;
    }
    return s;
}

std::string subset_label(SubsetMask s, int ground_size) {
    std::string out;
    const bool digits = ground_size <= 10;
    for (int e : subset_elements(s)) {
        if (!digits && !out.empty()) out += ',';
        out += std::to_string(e);
    }
    return out;
}

SubsetMask parse_subset_label(const std::string& label, int ground_size) {
    std::vector<int> elements;
    if (ground_size <= 10) {
        for (char c : label) {
            if (c < '0' || c > '9') throw Error(ErrorKind::ParseError, "bad subset label '" + label + "'");
            elements.push_back(c - '0');
        }
    } else {
        std::size_t start = 0;
        while (start <= label.size()) {
            const auto comma = label.find(',', start);
            const auto piece = label.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            try {
                elements.push_back(std::stoi(piece));
            } catch (const std::exception&) {
                throw Error(ErrorKind::ParseError, "bad subset label '" + label + "'");
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    for (int e : elements) {
        if (e >= ground_size) throw Error(ErrorKind::ParseError, "subset label element out of range");
    }
    return subset_from_elements(elements);
}

SubsetMask permute_subset(SubsetMask s, const std::vector<int>& perm) {
    SubsetMask out = 0;
    for (int e : subset_elements(s)) out |= SubsetMask{1} << perm.at(static_cast<std::size_t>(e));
    return out;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace dcdkit
