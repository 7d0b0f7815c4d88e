#ifndef CONFRB_MATRIX_HPP
#define CONFRB_MATRIX_HPP

#include <vector>

#include "confrb/poly.hpp"

namespace confrb {

using PolyVec = std::vector<GaussPoly>;
using PolyMat = std::vector<std::vector<GaussPoly>>; // m[row][col]

inline PolyVec vec_zero(const Ring& r, int n) {
    return PolyVec((size_t)n, GaussPoly::zero(r));
}

inline PolyVec vec_unit(const Ring& r, int n, int i) {
    PolyVec v = vec_zero(r, n);
    v[(size_t)i] = GaussPoly::constant(r, 1);
    return v;
}

inline PolyVec vec_promote(const PolyVec& v, const Ring& r) {
    PolyVec out;
    out.reserve(v.size());
    for (auto& p : v) out.push_back(p.promote(r));
    return out;
}

inline PolyVec vec_add(const PolyVec& a, const PolyVec& b) {
    PolyVec out = a;
    for (size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

inline PolyVec vec_sub(const PolyVec& a, const PolyVec& b) {
    PolyVec out = a;
    for (size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
}

inline PolyVec vec_scale(const PolyVec& a, const GaussPoly& s) {
    PolyVec out = a;
    for (auto& p : out) p *= s;
    return out;
}

inline bool vec_is_zero(const PolyVec& v) {
    for (auto& p : v)
        if (!p.is_zero()) return false;
    return true;
}

inline PolyMat mat_zero(const Ring& r, int n) {
    return PolyMat((size_t)n, vec_zero(r, n));
}

inline PolyMat mat_identity(const Ring& r, int n) {
    PolyMat m = mat_zero(r, n);
    for (int i = 0; i < n; ++i) m[(size_t)i][(size_t)i] = GaussPoly::constant(r, 1);
    return m;
}

inline PolyMat mat_promote(const PolyMat& m, const Ring& r) {
    PolyMat out;
    out.reserve(m.size());
    for (auto& row : m) out.push_back(vec_promote(row, r));
    return out;
}

inline PolyVec mat_col(const PolyMat& m, int j) {
    PolyVec v;
    v.reserve(m.size());
    for (auto& row : m) v.push_back(row[(size_t)j]);
    return v;
}

/// m * v (column action on coordinates).
inline PolyVec mat_apply(const PolyMat& m, const PolyVec& v) {
    size_t n = m.size();
    PolyVec out;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        GaussPoly s = GaussPoly::zero(v[0].ring());
        for (size_t j = 0; j < n; ++j) s += m[i][j] * v[j];
        out.push_back(std::move(s));
    }
    return out;
}

inline PolyMat mat_mul(const PolyMat& a, const PolyMat& b) {
    size_t n = a.size();
    PolyMat out(n, PolyVec(n, GaussPoly::zero(a[0][0].ring())));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            GaussPoly s = GaussPoly::zero(a[0][0].ring());
            for (size_t k = 0; k < n; ++k) s += a[i][k] * b[k][j];
            out[i][j] = std::move(s);
        }
    return out;
}

inline PolyMat mat_add(const PolyMat& a, const PolyMat& b) {
    PolyMat out = a;
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = 0; j < out.size(); ++j) out[i][j] += b[i][j];
    return out;
}

inline PolyMat mat_neg(const PolyMat& a) {
    PolyMat out = a;
    for (auto& row : out)
        for (auto& p : row) p = -p;
    return out;
}

inline PolyMat mat_scale(const PolyMat& a, const GaussPoly& s) {
    PolyMat out = a;
    for (auto& row : out)
        for (auto& p : row) p *= s;
    return out;
}

inline bool mat_equal(const PolyMat& a, const PolyMat& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j) {
            auto [x, y] = unify(a[i][j], b[i][j]);
            if (x != y) return false;
        }
    return true;
}

inline GaussPoly mat_det(const PolyMat& m) {
    size_t n = m.size();
    if (n == 0) return GaussPoly();
    if (n == 1) return m[0][0];
    GaussPoly det = GaussPoly::zero(m[0][0].ring());
    for (size_t j = 0; j < n; ++j) {
        PolyMat minor(n - 1, PolyVec());
        for (size_t r = 1; r < n; ++r)
            for (size_t c = 0; c < n; ++c)
                if (c != j) minor[r - 1].push_back(m[r][c]);
        GaussPoly cof = m[0][j] * mat_det(minor);
        det += (j % 2 == 0) ? cof : -cof;
    }
    return det;
}

/// Exact inverse via the adjugate. Supported when det is a nonzero constant
/// (the automorphisms used here all have constant determinant);
/// singular-map-error otherwise.
inline PolyMat mat_inverse(const PolyMat& m) {
    size_t n = m.size();
    GaussPoly det = mat_det(m);
    if (det.is_zero())
        raise(ErrorKind::singular_map, "matrix is singular");
    if (!det.is_constant())
        raise(ErrorKind::singular_map,
              "matrix determinant is not a constant: " + det.str());
    GaussRat inv_det = GaussRat(1) / det.constant_value();
    const Ring& r = m[0][0].ring();
    PolyMat out = mat_zero(r, (int)n);
    if (n == 1) {
        out[0][0] = GaussPoly::constant(r, inv_det);
        return out;
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            // cofactor expansion: adj(m)[i][j] = (-1)^{i+j} * minor(j,i)
            PolyMat minor(n - 1, PolyVec());
            for (size_t rr = 0; rr < n; ++rr) {
                if (rr == j) continue;
                for (size_t cc = 0; cc < n; ++cc)
                    if (cc != i) minor[rr > j ? rr - 1 : rr].push_back(m[rr][cc]);
            }
            GaussPoly cof = mat_det(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            out[i][j] = cof * inv_det;
        }
    return out;
}

} // namespace confrb

#endif
