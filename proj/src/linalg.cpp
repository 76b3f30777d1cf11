#include "dcdkit/linalg.hpp"

#include <utility>

#include "dcdkit/error.hpp"

namespace dcdkit {

RowEchelon rref(RatMat m) {
    RowEchelon out;
    if (m.empty()) return out;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m.front().size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (sgn(m[i][c]) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[r], m[pivot]);
        const Rat inv = 1 / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || sgn(m[i][c]) == 0) continue;
            const Rat f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        out.pivots.push_back(c);
        ++r;
    }
    m.resize(r);
    out.rows = std::move(m);
    return out;
}

int rank(const RatMat& m) { return static_cast<int>(rref(m).pivots.size()); }

RatMat nullspace(const RatMat& m, int columns) {
    const auto e = rref(m);
    std::vector<bool> is_pivot(columns, false);
    for (int c : e.pivots) is_pivot[c] = true;
    RatMat basis;
    for (int free = 0; free < columns; ++free) {
        if (is_pivot[free]) continue;
        RatVec v(columns, Rat(0));
        v[free] = 1;
        for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

Rat determinant(RatMat m) {
    const int n = static_cast<int>(m.size());
    Rat det = 1;
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int i = c; i < n; ++i)
            if (sgn(m[i][c]) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) return Rat(0);
        if (pivot != c) {
            std::swap(m[c], m[pivot]);
            det = -det;
        }
        det *= m[c][c];
        for (int i = c + 1; i < n; ++i) {
            if (sgn(m[i][c]) == 0) continue;
            const Rat f = m[i][c] / m[c][c];
            for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

RatMat inverse(const RatMat& m) {
    const int n = static_cast<int>(m.size());
    RatMat aug(n, RatVec(2 * n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    const auto e = rref(std::move(aug));
    if (static_cast<int>(e.pivots.size()) < n || e.pivots[n - 1] != n - 1) {
        throw Error(ErrorKind::InvalidArgument, "matrix is singular");
    }
    RatMat inv(n, RatVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = e.rows[i][n + j];
    return inv;
}

RatVec multiply(const RatMat& m, const RatVec& v) {
    RatVec out(m.size(), Rat(0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

RatVec normalize_projective(RatVec v) {
    for (const auto& x : v) {
        if (sgn(x) != 0) {
            const Rat lead = x;
            for (auto& y : v) y /= lead;
            break;
        }
    }
    return v;
}

bool is_zero_vector(const RatVec& v) {
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

bool proportional(const RatVec& u, const RatVec& v) {
    if (u.size() != v.size()) return false;
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (u[i] * v[j] != u[j] * v[i]) return false;
    return !is_zero_vector(u) && !is_zero_vector(v);
}

RatVec cross3(const RatVec& u, const RatVec& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

Rat dot(const RatVec& u, const RatVec& v) {
    Rat s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

Rat det3(const RatVec& a, const RatVec& b, const RatVec& c) { return dot(a, cross3(b, c)); }

std::vector<BigInt> primitive_integer_vector(const RatVec& v) {
    BigInt l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<BigInt> out;
    BigInt g = 0;
    for (const auto& x : v) {
        BigInt y = x.get_num() * (l / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), y.get_mpz_t());
        out.push_back(std::move(y));
    }
    if (g == 0) return out;
    int lead_sign = 0;
    for (const auto& y : out)
        if (sgn(y) != 0) {
            lead_sign = sgn(y);
            break;
        }
    if (lead_sign < 0) g = -g;
    for (auto& y : out) y /= g;
    return out;
}

}  // namespace dcdkit
