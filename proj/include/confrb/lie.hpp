#ifndef CONFRB_LIE_HPP
#define CONFRB_LIE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "confrb/matrix.hpp"

namespace confrb {

/// Finite-dimensional Lie algebra given by basis names and structure
/// constants. Entries are constants of the ring (rationals or parameter
/// polynomials); antisymmetry is enforced at construction.
class LieAlgebra {
public:
    using BracketTable = std::map<std::pair<int, int>, PolyVec>;

    static LieAlgebra make(Ring ring, std::vector<std::string> basis,
                           const BracketTable& given) {
        LieAlgebra g;
        g.ring_ = std::move(ring);
        g.basis_ = std::move(basis);
        int n = (int)g.basis_.size();
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (g.basis_[(size_t)i] == g.basis_[(size_t)j])
                    raise(ErrorKind::invalid_algebra, "duplicate basis name");
        // parameters must not shadow the bracket and slot variables
        for (const char* reserved : {var::lambda, var::mu, var::nu, var::del,
                                     var::d1, var::d2, var::d3})
            if (g.ring_.has(reserved))
                raise(ErrorKind::invalid_algebra,
                      std::string("structure-constant alphabet reserves '") +
                          reserved + "'");
        g.bracket_.assign((size_t)n, std::vector<PolyVec>((size_t)n,
                                                          vec_zero(g.ring_, n)));
        std::vector<std::vector<bool>> seen((size_t)n, std::vector<bool>((size_t)n, false));
        for (auto& [ij, v] : given) {
            auto [i, j] = ij;
            if (i < 0 || j < 0 || i >= n || j >= n || (int)v.size() != n)
                raise(ErrorKind::invalid_algebra, "bracket table index/size out of range");
            PolyVec pv = vec_promote(v, g.ring_);
            if (i == j && !vec_is_zero(pv))
                raise(ErrorKind::invalid_algebra, "diagonal bracket must vanish");
            if (seen[(size_t)j][(size_t)i] &&
                !vec_is_zero(vec_add(pv, g.bracket_[(size_t)j][(size_t)i])))
                raise(ErrorKind::invalid_algebra, "antisymmetry violated in bracket table");
            g.bracket_[(size_t)i][(size_t)j] = pv;
            if (!seen[(size_t)j][(size_t)i] && i != j)
                g.bracket_[(size_t)j][(size_t)i] = vec_scale(pv, GaussPoly::constant(g.ring_, -1));
            seen[(size_t)i][(size_t)j] = true;
        }
        return g;
    }

    /// sl2 with the standard basis: [e,f] = h, [h,e] = 2e, [h,f] = -2f.
    static LieAlgebra sl2() {
        Ring r = Ring::make({});
        auto c = [&](long e, long f, long h) {
            return PolyVec{GaussPoly::constant(r, e), GaussPoly::constant(r, f),
                           GaussPoly::constant(r, h)};
        };
        BracketTable t;
        t[{0, 1}] = c(0, 0, 1);  // [e,f] = h
        t[{2, 0}] = c(2, 0, 0);  // [h,e] = 2e
        t[{2, 1}] = c(0, -2, 0); // [h,f] = -2f
        return make(r, {"e", "f", "h"}, t);
    }

    static LieAlgebra abelian(std::vector<std::string> basis) {
        return make(Ring::make({}), std::move(basis), {});
    }

    const Ring& ring() const { return ring_; }
    int dim() const { return (int)basis_.size(); }
    const std::vector<std::string>& basis() const { return basis_; }
    const PolyVec& bracket(int i, int j) const {
        return bracket_[(size_t)i][(size_t)j];
    }

    int index_of(const std::string& name) const {
        for (int i = 0; i < dim(); ++i)
            if (basis_[(size_t)i] == name) return i;
        raise(ErrorKind::invalid_algebra, "unknown basis element '" + name + "'");
    }

    /// Bilinear extension of the bracket to coordinate vectors.
    PolyVec bracket_of(const PolyVec& x, const PolyVec& y) const {
        Ring w = join(ring_, join(x[0].ring(), y[0].ring()));
        PolyVec out = vec_zero(w, dim());
        for (int i = 0; i < dim(); ++i) {
            if (x[(size_t)i].is_zero()) continue;
            GaussPoly xi = x[(size_t)i].promote(w);
            for (int j = 0; j < dim(); ++j) {
                if (y[(size_t)j].is_zero()) continue;
                GaussPoly f = xi * y[(size_t)j].promote(w);
                for (int k = 0; k < dim(); ++k)
                    out[(size_t)k] += f * bracket_[(size_t)i][(size_t)j][(size_t)k].promote(w);
            }
        }
        return out;
    }

    PolyMat ad(int i, const Ring& w) const {
        PolyMat m = mat_zero(w, dim());
        for (int c = 0; c < dim(); ++c)
            for (int r = 0; r < dim(); ++r)
                m[(size_t)r][(size_t)c] = bracket_[(size_t)i][(size_t)c][(size_t)r].promote(w);
        return m;
    }

private:
    Ring ring_;
    std::vector<std::string> basis_;
    std::vector<std::vector<PolyVec>> bracket_;
};

/// Linear operator on a Lie algebra, stored as a square matrix acting on
/// coordinate columns (column j = image of basis element j). Entries are
/// constants in the bracket variables; parameters are allowed.
struct LinearMap {
    Ring ring;
    PolyMat m;

    static LinearMap zero(const Ring& r, int n) { return {r, mat_zero(r, n)}; }
    static LinearMap identity(const Ring& r, int n) { return {r, mat_identity(r, n)}; }

    int dim() const { return (int)m.size(); }
    PolyVec column(int j) const { return mat_col(m, j); }

    LinearMap promote(const Ring& r) const { return {r, mat_promote(m, r)}; }

    friend bool operator==(const LinearMap& a, const LinearMap& b) {
        return mat_equal(a.m, b.m);
    }
};

/// Result of a Rota-Baxter check: per unordered basis pair, the vector-valued
/// defect of [R(a),R(b)] - R([R(a),b] + [a,R(b)] + k[a,b]). All residuals
/// identically zero <=> R is an RB-operator of the given weight.
struct RBWitness {
    GaussPoly weight;
    std::vector<std::tuple<std::string, std::string, PolyVec>> residuals;

    bool ok() const {
        for (auto& [a, b, v] : residuals)
            if (!vec_is_zero(v)) return false;
        return true;
    }
};

inline bool check_jacobi(const LieAlgebra& g) {
    int n = g.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Ring w = g.ring();
                PolyVec sum = vec_zero(w, n);
                auto term = [&](int a, int b, int c) {
                    return g.bracket_of(g.bracket(a, b), vec_unit(w, n, c));
                };
                sum = vec_add(sum, term(i, j, k));
                sum = vec_add(sum, term(j, k, i));
                sum = vec_add(sum, term(k, i, j));
                if (!vec_is_zero(sum)) return false;
            }
    return true;
}

/// K[i][j] = trace(ad e_i . ad e_j).
inline PolyMat killing_form(const LieAlgebra& g) {
    int n = g.dim();
    Ring w = g.ring();
    PolyMat k = mat_zero(w, n);
    std::vector<PolyMat> ads;
    for (int i = 0; i < n; ++i) ads.push_back(g.ad(i, w));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            PolyMat prod = mat_mul(ads[(size_t)i], ads[(size_t)j]);
            GaussPoly tr = GaussPoly::zero(w);
            for (int t = 0; t < n; ++t) tr += prod[(size_t)t][(size_t)t];
            k[(size_t)i][(size_t)j] = std::move(tr);
        }
    return k;
}

inline RBWitness check_rb(const LieAlgebra& g, const LinearMap& R,
                          const GaussPoly& weight) {
    if (R.dim() != g.dim())
        raise(ErrorKind::invalid_algebra, "operator size does not match algebra");
    Ring w = join(g.ring(), join(R.ring, weight.ring()));
    LinearMap Rw = R.promote(w);
    GaussPoly k = weight.promote(w);
    RBWitness out{k, {}};
    int n = g.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            PolyVec ri = Rw.column(i), rj = Rw.column(j);
            PolyVec lhs = g.bracket_of(ri, rj);
            PolyVec inner = vec_add(g.bracket_of(ri, vec_unit(w, n, j)),
                                    g.bracket_of(vec_unit(w, n, i), rj));
            inner = vec_add(inner, vec_scale(vec_promote(g.bracket(i, j), w), k));
            PolyVec rhs = mat_apply(Rw.m, inner);
            out.residuals.emplace_back(g.basis()[(size_t)i], g.basis()[(size_t)j],
                                       vec_sub(lhs, rhs));
        }
    return out;
}

inline bool is_automorphism(const LieAlgebra& g, const LinearMap& phi) {
    if (phi.dim() != g.dim()) return false;
    GaussPoly det = mat_det(phi.m);
    if (det.is_zero()) return false;
    Ring w = join(g.ring(), phi.ring);
    LinearMap pw = phi.promote(w);
    for (int i = 0; i < g.dim(); ++i)
        for (int j = i + 1; j < g.dim(); ++j) {
            PolyVec lhs = g.bracket_of(pw.column(i), pw.column(j));
            PolyVec rhs = mat_apply(pw.m, vec_promote(g.bracket(i, j), w));
            if (!vec_is_zero(vec_sub(lhs, rhs))) return false;
        }
    return true;
}

/// phi(R) = -(R + k id); an RB-operator of weight k again.
inline LinearMap phi_transform(const LinearMap& R, const GaussPoly& weight) {
    Ring w = join(R.ring, weight.ring());
    PolyMat m = mat_neg(mat_add(mat_promote(R.m, w),
                                mat_scale(mat_identity(w, R.dim()), weight.promote(w))));
    return {w, std::move(m)};
}

/// R^(phi) = phi^{-1} R phi for a verified automorphism phi.
inline LinearMap conjugate_map(const LieAlgebra& g, const LinearMap& R,
                               const LinearMap& phi) {
    if (!is_automorphism(g, phi))
        raise(ErrorKind::singular_map, "conjugator is not an automorphism");
    Ring w = join(g.ring(), join(R.ring, phi.ring));
    PolyMat p = mat_promote(phi.m, w);
    PolyMat out = mat_mul(mat_inverse(p), mat_mul(mat_promote(R.m, w), p));
    return {w, std::move(out)};
}

/// Weight-0 operators are closed under scaling; weight-error otherwise.
inline LinearMap scale_map(const LinearMap& R, const GaussRat& c,
                           const GaussPoly& weight) {
    if (!weight.is_zero())
        raise(ErrorKind::weight, "scaling preserves RB only at weight 0");
    return {R.ring, mat_scale(R.m, GaussPoly::constant(R.ring, c))};
}

namespace detail {

// Gauss-Jordan over Q(i); returns false if the system B x = v is inconsistent.
inline bool solve_in_span(const std::vector<std::vector<GaussRat>>& span,
                          const std::vector<GaussRat>& v) {
    size_t n = v.size(), m = span.size();
    std::vector<std::vector<GaussRat>> a(n, std::vector<GaussRat>(m + 1));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < m; ++j) a[i][j] = span[j][i];
        a[i][m] = v[i];
    }
    size_t row = 0;
    for (size_t col = 0; col < m && row < n; ++col) {
        size_t piv = row;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) continue;
        std::swap(a[row], a[piv]);
        GaussRat d = a[row][col];
        for (auto& x : a[row]) x = x / d;
        for (size_t i = 0; i < n; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            GaussRat f = a[i][col];
            for (size_t j = 0; j <= m; ++j) a[i][j] -= f * a[row][j];
        }
        ++row;
    }
    for (size_t i = row; i < n; ++i)
        if (!a[i][m].is_zero()) return false;
    // rows below the pivot block are all-zero on the left by construction
    for (size_t i = 0; i < n; ++i) {
        bool lhs_zero = true;
        for (size_t j = 0; j < m; ++j)
            if (!a[i][j].is_zero()) { lhs_zero = false; break; }
        if (lhs_zero && !a[i][m].is_zero()) return false;
    }
    return true;
}

} // namespace detail

/// Splitting operator R(a1 + a2) = -k a2 for a direct-sum decomposition of g
/// into two subalgebras, given by rational coordinate vectors.
inline LinearMap splitting_rb(const LieAlgebra& g,
                              const std::vector<std::vector<GaussRat>>& span1,
                              const std::vector<std::vector<GaussRat>>& span2,
                              const GaussPoly& weight) {
    int n = g.dim();
    if ((int)(span1.size() + span2.size()) != n)
        raise(ErrorKind::split, "spans do not add up to the algebra dimension");
    auto as_polyvec = [&](const std::vector<GaussRat>& v) {
        PolyVec out;
        for (auto& c : v) out.push_back(GaussPoly::constant(g.ring(), c));
        return out;
    };
    auto check_subalgebra = [&](const std::vector<std::vector<GaussRat>>& span) {
        for (size_t a = 0; a < span.size(); ++a)
            for (size_t b = a + 1; b < span.size(); ++b) {
                PolyVec br = g.bracket_of(as_polyvec(span[a]), as_polyvec(span[b]));
                std::vector<GaussRat> v;
                for (auto& p : br) {
                    if (!p.is_constant())
                        raise(ErrorKind::split,
                              "splitting requires rational structure constants");
                    v.push_back(p.constant_value());
                }
                if (!detail::solve_in_span(span, v))
                    raise(ErrorKind::split, "span is not a subalgebra");
            }
    };
    check_subalgebra(span1);
    check_subalgebra(span2);

    // B = [span1 | span2]; P2 = B diag(0,..,0,1,..,1) B^{-1}; R = -k P2.
    Ring w = join(g.ring(), weight.ring());
    PolyMat B = mat_zero(w, n);
    for (int j = 0; j < n; ++j) {
        const auto& src = j < (int)span1.size()
                              ? span1[(size_t)j]
                              : span2[(size_t)(j - (int)span1.size())];
        if ((int)src.size() != n)
            raise(ErrorKind::split, "span vector has wrong dimension");
        for (int i = 0; i < n; ++i)
            B[(size_t)i][(size_t)j] = GaussPoly::constant(w, src[(size_t)i]);
    }
    GaussPoly det = mat_det(B);
    if (det.is_zero())
        raise(ErrorKind::split, "spans are not complementary");
    PolyMat sel = mat_zero(w, n);
    for (int j = (int)span1.size(); j < n; ++j)
        sel[(size_t)j][(size_t)j] = GaussPoly::constant(w, 1);
    PolyMat P2 = mat_mul(B, mat_mul(sel, mat_inverse(B)));
    return {w, mat_scale(P2, -weight.promote(w))};
}

/// Named, parameterized operator families on sl2.
struct LieCatalogEntry {
    std::string name;
    GaussPoly weight;
    LinearMap map;
};

/// Prop-style catalogs on sl2: weight 0 -> families (a)-(e) with symbolic t;
/// weight 1 -> families (a)-(c) with symbolic t plus the trivial pair.
inline std::vector<LieCatalogEntry> catalog_sl2(int weight) {
    Ring r = Ring::make({"t"});
    GaussPoly t = GaussPoly::variable(r, "t");
    auto c = [&](long v) { return GaussPoly::constant(r, v); };
    auto entry = [&](std::string name, long w, PolyMat m) {
        return LieCatalogEntry{std::move(name), GaussPoly::constant(r, w),
                               LinearMap{r, std::move(m)}};
    };
    std::vector<LieCatalogEntry> out;
    if (weight == 0) {
        out.push_back(entry("P2.3a", 0, mat_zero(r, 3)));
        out.push_back(entry("P2.3b", 0,
                            {{c(0), t, c(2)}, {c(0), c(0), c(0)}, {c(0), c(-1), c(0)}}));
        out.push_back(entry("P2.3c", 0,
                            {{c(0), c(0), c(0)}, {c(0), c(0), c(0)}, {c(0), c(0), c(1)}}));
        out.push_back(entry("P2.3d", 0,
                            {{c(0), c(0), c(0)}, {c(0), c(0), c(0)}, {c(0), c(1), c(0)}}));
        out.push_back(entry("P2.3e", 0,
                            {{c(0), c(1), c(0)}, {c(0), c(0), c(0)}, {c(0), c(0), c(0)}}));
    } else if (weight == 1) {
        out.push_back(entry("P2.4a", 1,
                            {{c(-1), c(0), c(0)}, {c(0), c(0), c(0)}, {c(0), c(0), c(0)}}));
        out.push_back(entry("P2.4b", 1,
                            {{c(-1), c(0), c(0)}, {c(0), c(0), c(0)}, {c(-1), c(0), c(0)}}));
        out.push_back(entry("P2.4c", 1,
                            {{c(-1), c(0), c(0)}, {c(0), c(0), c(0)}, {c(0), c(0), t}}));
        out.push_back(entry("zero", 1, mat_zero(r, 3)));
        out.push_back(entry("neg-id", 1, mat_scale(mat_identity(r, 3), c(-1))));
    } else {
        raise(ErrorKind::catalog, "catalog_sl2: unsupported weight");
    }
    return out;
}

} // namespace confrb

#endif
