#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "dcdkit/error.hpp"
#include "dcdkit/io.hpp"
#include "dcdkit/linalg.hpp"
#include "dcdkit/rational.hpp"
#include "dcdkit/subsets.hpp"

using namespace dcdkit;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("rationals stay canonical") {
    CHECK(make_rat(6, -4) == Rat(-3, 2));
    CHECK(to_string(make_rat(6, -4)) == "-3/2");
    CHECK(parse_rat("-3/6") == Rat(-1, 2));
    CHECK(parse_rat("7") == Rat(7));
    CHECK(is_zero(parse_rat("0/5")));
    CHECK(kind_of([] { parse_rat("1/0"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_rat("abc"); }) == ErrorKind::ParseError);
}

TEST_CASE("binomial matches Pascal's rule") {
    std::vector<std::vector<long long>> pascal(20, std::vector<long long>(20, 0));
    for (int n = 0; n < 20; ++n) {
        pascal[n][0] = 1;
        for (int k = 1; k <= n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + (k <= n - 1 ? pascal[n - 1][k] : 0);
    }
    for (int n = 0; n < 20; ++n)
        for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == pascal[n][k]);
}

TEST_CASE("k-subsets come in colex order") {
    // Colex: compare by the largest element where the sets differ.
    auto colex_less = [](const std::vector<int>& a, const std::vector<int>& b) {
        for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    };
    for (int m = 1; m <= 9; ++m)
        for (int k = 1; k <= m; ++k) {
            const auto subsets = k_subsets(m, k);
            REQUIRE(static_cast<long long>(subsets.size()) == binomial(m, k));
            for (std::size_t i = 1; i < subsets.size(); ++i)
                CHECK(colex_less(subset_elements(subsets[i - 1]), subset_elements(subsets[i])));
        }
    const auto triples = k_subsets(7, 3);
    CHECK(subset_label(triples.front(), 7) == "012");
    CHECK(subset_label(triples[1], 7) == "013");
    CHECK(subset_label(triples.back(), 7) == "456");
}

TEST_CASE("subset labels round-trip") {
    for (SubsetMask s : k_subsets(7, 4)) CHECK(parse_subset_label(subset_label(s, 7), 7) == s);
    for (SubsetMask s : k_subsets(12, 3)) CHECK(parse_subset_label(subset_label(s, 12), 12) == s);
    CHECK(subset_label(subset_from_elements({0, 1, 2, 3}), 7) == "0123");
    CHECK(subset_complement(subset_from_elements({0, 1, 2, 3}), 7) == subset_from_elements({4, 5, 6}));
    CHECK(kind_of([] { parse_subset_label("09", 7); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_subset_label("x1", 7); }) == ErrorKind::ParseError);
}

TEST_CASE("permute_subset applies the ground permutation") {
    const std::vector<int> perm = {0, 6, 5, 4, 3, 2, 1};
    CHECK(permute_subset(subset_from_elements({0, 1, 2}), perm) == subset_from_elements({0, 5, 6}));
    for (SubsetMask s : k_subsets(7, 3)) CHECK(permute_subset(permute_subset(s, perm), perm) == s);
}

TEST_CASE("Vandermonde determinant equals the product of differences") {
    const std::vector<Rat> xs = {Rat(-2), Rat(1, 3), Rat(5), Rat(7, 2), Rat(-9, 4)};
    RatMat m;
    for (const auto& x : xs) {
        RatVec row;
        Rat p = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            row.push_back(p);
            p *= x;
        }
        m.push_back(row);
    }
    Rat expected = 1;
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j) expected *= xs[j] - xs[i];
    CHECK(determinant(m) == expected);
    const RatMat inv = inverse(m);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        RatVec e(xs.size(), Rat(0));
        e[i] = 1;
        RatVec col;
        for (const auto& row : inv) col.push_back(row[i]);
        CHECK(multiply(m, col) == e);
    }
}

TEST_CASE("nullspace and rank agree") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        RatMat m(3, RatVec(5));
        for (auto& row : m)
            for (auto& x : row) x = coeff(rng);
        if (trial % 5 == 0) m[2] = m[0];  // force a dependency now and then
        const RatMat ns = nullspace(m, 5);
        CHECK(static_cast<int>(ns.size()) + rank(m) == 5);
        for (const auto& v : ns) CHECK(is_zero_vector(multiply(m, v)));
    }
    CHECK(kind_of([] { inverse({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("projective helpers") {
    const RatVec u = {Rat(1), Rat(2), Rat(3)}, v = {Rat(-4), Rat(0), Rat(5, 2)};
    const RatVec w = cross3(u, v);
    CHECK(is_zero(dot(w, u)));
    CHECK(is_zero(dot(w, v)));
    CHECK(det3(u, v, w) == dot(w, w));
    CHECK(proportional(u, {Rat(-2), Rat(-4), Rat(-6)}));
    CHECK_FALSE(proportional(u, v));
    CHECK(normalize_projective({Rat(0), Rat(3), Rat(6)}) == RatVec{Rat(0), Rat(1), Rat(2)});
    const auto prim = primitive_integer_vector({Rat(1, 2), Rat(-1, 3), Rat(0)});
    CHECK(prim == std::vector<BigInt>{BigInt(3), BigInt(-2), BigInt(0)});
}

TEST_CASE("edge list and JSON round-trip") {
    const Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {1, 3}}, {0, 1, 0, 1, 1});
    CHECK(graph_from_edgelist(to_edgelist(g)) == g);
    CHECK(graph_from_json(to_json(g)) == g);
    CHECK(to_edgelist(Graph(3, {{0, 1}})) == "p graph 3 1\n0 1\n");
    CHECK(kind_of([] { graph_from_edgelist("0 1\n"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { graph_from_edgelist("p graph 3 2\n0 1\n"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { graph_from_edgelist("p graph 3 1\n0 3\n"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { graph_from_edgelist("p graph 3 2\n0 1\n1 0\n"); }) == ErrorKind::ParseError);
}

TEST_CASE("incidence JSON is ordered by label") {
    const IncidenceStructure s({"b", "a"}, {"y", "x"}, {{0, 0}, {1, 1}, {0, 1}});
    const auto j = to_json(s);
    CHECK(j["points"] == nlohmann::json({"a", "b"}));
    CHECK(j["blocks"] == nlohmann::json({"x", "y"}));
    CHECK(j["incidence"] == nlohmann::json({{0, 0}, {1, 0}, {1, 1}}));
    const IncidenceStructure back = incidence_from_json(j);
    CHECK(to_json(back) == j);
    CHECK(kind_of([] { incidence_from_json(nlohmann::json::parse(R"({"points":["a"],"blocks":[],"incidence":[[0,0]]})")); }) ==
          ErrorKind::ParseError);
}
