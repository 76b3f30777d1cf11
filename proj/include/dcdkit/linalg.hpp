#pragma once

#include <vector>

#include "dcdkit/rational.hpp"

namespace dcdkit {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  ///< row-major

struct RowEchelon {
    RatMat rows;              ///< reduced row echelon form, zero rows dropped
    std::vector<int> pivots;  ///< pivot column of each row
};

RowEchelon rref(RatMat m);
int rank(const RatMat& m);
/// Basis of { x : m x = 0 } as rows; `columns` is needed when m has no rows.
RatMat nullspace(const RatMat& m, int columns);
Rat determinant(RatMat m);
/// Throws InvalidArgument if singular.
RatMat inverse(const RatMat& m);
RatVec multiply(const RatMat& m, const RatVec& v);

/// Scales so that the first nonzero entry is 1; zero vectors are unchanged.
RatVec normalize_projective(RatVec v);
bool is_zero_vector(const RatVec& v);
/// u and v represent the same projective point (both nonzero).
bool proportional(const RatVec& u, const RatVec& v);
RatVec cross3(const RatVec& u, const RatVec& v);
Rat dot(const RatVec& u, const RatVec& v);
Rat det3(const RatVec& a, const RatVec& b, const RatVec& c);

/// Integer representative of a projective point: cleared denominators,
/// content divided out, first nonzero entry positive.
std::vector<BigInt> primitive_integer_vector(const RatVec& v);

}  // namespace dcdkit
