#ifndef CONFRB_CONFORMAL_RB_HPP
#define CONFRB_CONFORMAL_RB_HPP

#include <optional>
#include <string>
#include <vector>

#include "confrb/conformal.hpp"

namespace confrb {

/// d-linear operator on a conformal algebra: square matrix of polynomials in
/// d (and parameters), indexed by generators, acting on coordinate columns.
/// Entries must not involve bracket or slot variables.
struct ConformalMap {
    Ring ring;
    PolyMat m;

    static ConformalMap make(Ring r, PolyMat mat) {
        static const char* forbidden[] = {var::lambda, var::mu, var::nu,
                                          var::d1, var::d2, var::d3};
        for (auto& row : mat)
            for (auto& p : row)
                for (auto* f : forbidden)
                    if (p.involves(f))
                        raise(ErrorKind::invalid_algebra,
                              std::string("conformal map entry involves '") + f + "'");
        return {std::move(r), std::move(mat)};
    }

    static ConformalMap zero(const Ring& r, int n) { return {r, mat_zero(r, n)}; }
    static ConformalMap identity(const Ring& r, int n) { return {r, mat_identity(r, n)}; }

    int dim() const { return (int)m.size(); }
    PolyVec column(int j) const { return mat_col(m, j); }
    ConformalMap promote(const Ring& r) const { return {r, mat_promote(m, r)}; }

    friend bool operator==(const ConformalMap& a, const ConformalMap& b) {
        return mat_equal(a.m, b.m);
    }
};

inline PolyMat mat_from_cols(const Ring& r, const std::vector<PolyVec>& cols) {
    int n = (int)cols.size();
    PolyMat m = mat_zero(r, n);
    for (int c = 0; c < n; ++c)
        for (int row = 0; row < n; ++row)
            m[(size_t)row][(size_t)c] = cols[(size_t)c][(size_t)row].promote(r);
    return m;
}

/// R extends C[d]-linearly and C[l]-linearly to lambda-bracket values.
inline LambdaValue apply_conformal_map(const ConformalMap& R, const LambdaValue& v) {
    Ring w = join(R.ring, v.coords[0].ring());
    int n = R.dim();
    PolyVec out = vec_zero(w, n);
    for (int q = 0; q < n; ++q)
        for (int p = 0; p < n; ++p)
            out[(size_t)q] += R.m[(size_t)q][(size_t)p].promote(w) *
                              v.coords[(size_t)p].promote(w);
    return {out};
}

/// Defect of [R(a)_l R(b)] = R([R(a)_l b] + [a_l R(b)] + k [a_l b]) per
/// unordered generator pair; all residuals zero <=> RB-operator of weight k.
inline RBWitness check_conformal_rb(const ConformalAlgebra& L, const ConformalMap& R,
                                    const GaussPoly& weight) {
    if (R.dim() != L.rank())
        raise(ErrorKind::invalid_algebra, "operator size does not match algebra");
    Ring w = join(L.ring(), join(R.ring, weight.ring()));
    ConformalMap Rw = R.promote(w);
    GaussPoly k = weight.promote(w);
    RBWitness out{k, {}};
    int n = L.rank();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            ConformalElement ri{Rw.column(i)}, rj{Rw.column(j)};
            LambdaValue lhs = lambda_bracket(L, ri, rj);
            LambdaValue t1 = lambda_bracket(L, ri, {vec_unit(w, n, j)});
            LambdaValue t2 = lambda_bracket(L, {vec_unit(w, n, i)}, rj);
            PolyVec inner = vec_add(t1.coords, t2.coords);
            for (int q = 0; q < n; ++q)
                inner[(size_t)q] += k * L.table(i, j)[(size_t)q].promote(w);
            LambdaValue rhs = apply_conformal_map(Rw, {inner});
            Ring wr = join(lhs.coords[0].ring(), rhs.coords[0].ring());
            PolyVec defect =
                vec_sub(vec_promote(lhs.coords, wr), vec_promote(rhs.coords, wr));
            out.residuals.emplace_back(L.generators()[(size_t)i],
                                       L.generators()[(size_t)j], std::move(defect));
        }
    return out;
}

/// R0(e_i) = R(e_i)|_{d = 0}: the induced operator on the underlying algebra.
inline LinearMap project_R0(const ConformalMap& R) {
    Ring r = R.ring;
    GaussPoly zero = GaussPoly::zero(r);
    PolyMat m = R.m;
    for (auto& row : m)
        for (auto& p : row)
            if (p.involves(var::del)) p = p.substitute({{var::del, zero}}, r);
    return {r, std::move(m)};
}

/// d-linear extension P(f(d)a) = f(d)P(a) of an operator on the base algebra.
inline ConformalMap extend_partial(const LinearMap& R0) {
    for (auto& row : R0.m)
        for (auto& p : row)
            if (p.involves(var::del))
                raise(ErrorKind::invalid_algebra,
                      "extend_partial: base operator entries must be d-free");
    Ring r = join(R0.ring, Ring::make({var::del}));
    return ConformalMap::make(r, mat_promote(R0.m, r));
}

/// The d-constant extension of phi0 is an automorphism of L iff it preserves
/// the lambda-bracket on generators.
inline bool is_conformal_automorphism(const ConformalAlgebra& L, const LinearMap& phi0) {
    if (phi0.dim() != L.rank()) return false;
    GaussPoly det = mat_det(phi0.m);
    if (det.is_zero()) return false;
    Ring w = join(L.ring(), phi0.ring);
    LinearMap pw = phi0.promote(w);
    for (auto& row : pw.m)
        for (auto& p : row)
            if (p.involves(var::del) || p.involves(var::lambda)) return false;
    int n = L.rank();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            LambdaValue lhs =
                lambda_bracket(L, {pw.column(i)}, {pw.column(j)});
            PolyVec rhs = mat_apply(pw.m, vec_promote(L.table(i, j), w));
            if (!vec_is_zero(vec_sub(lhs.coords, vec_promote(rhs, lhs.coords[0].ring()))))
                return false;
        }
    return true;
}

/// phi^{-1} R phi with phi the d-constant extension of a verified
/// automorphism of the underlying algebra.
inline ConformalMap conjugate_conformal(const ConformalAlgebra& L, const ConformalMap& R,
                                        const LinearMap& phi0) {
    if (!is_conformal_automorphism(L, phi0))
        raise(ErrorKind::singular_map, "conjugator is not an automorphism");
    Ring w = join(L.ring(), join(R.ring, phi0.ring));
    PolyMat p = mat_promote(phi0.m, w);
    PolyMat out = mat_mul(mat_inverse(p), mat_mul(mat_promote(R.m, w), p));
    return ConformalMap::make(w, std::move(out));
}

inline ConformalMap phi_transform_conformal(const ConformalMap& R,
                                            const GaussPoly& weight) {
    Ring w = join(R.ring, weight.ring());
    PolyMat m = mat_neg(mat_add(mat_promote(R.m, w),
                                mat_scale(mat_identity(w, R.dim()), weight.promote(w))));
    return ConformalMap::make(w, std::move(m));
}

/// "Up to scalar multiple" of the weight-0 classification, as a transform;
/// weight-error for nonzero weight.
inline ConformalMap scale_conformal(const ConformalMap& R, const GaussRat& c,
                                    const GaussPoly& weight) {
    if (!weight.is_zero())
        raise(ErrorKind::weight, "scaling preserves RB only at weight 0");
    return ConformalMap::make(R.ring,
                              mat_scale(R.m, GaussPoly::constant(R.ring, c)));
}

// ---------------------------------------------------------------------------
// Catalog of operator families on Cur(sl2) and their normalizers.
// ---------------------------------------------------------------------------

struct ConformalCatalogEntry {
    std::string name;
    GaussPoly weight;
    ConformalMap map;
    std::string normalizer; // "", "psi", "xi", "pi-or-theta"
};

inline Ring cur_sl2_param_ring() {
    return Ring::make({var::lambda, var::del, "alpha", "beta", "t",
                       "q0", "q1", "q2", "q3"});
}

/// Generic polynomial q(d) = q0 + q1 d + q2 d^2 + q3 d^3 with symbolic
/// coefficients.
inline GaussPoly generic_q(const Ring& r) {
    GaussPoly d = GaussPoly::variable(r, var::del);
    GaussPoly q = GaussPoly::variable(r, "q0");
    q += GaussPoly::variable(r, "q1") * d;
    q += GaussPoly::variable(r, "q2") * d.pow(2);
    q += GaussPoly::variable(r, "q3") * d.pow(3);
    return q;
}

/// Weight 0: the families R1(alpha,q), R2(alpha,q), R3(alpha,q) (stored times
/// alpha to keep entries polynomial), R4(alpha,beta,q), plus d-linear
/// extensions of the sl2 weight-0 catalog. Weight 1: Q1(q) plus extensions
/// of the sl2 weight-1 catalog and the trivial pair.
inline std::vector<ConformalCatalogEntry> catalog_cur_sl2(int weight) {
    Ring r = cur_sl2_param_ring();
    GaussPoly q = generic_q(r);
    GaussPoly al = GaussPoly::variable(r, "alpha");
    GaussPoly be = GaussPoly::variable(r, "beta");
    GaussPoly z = GaussPoly::zero(r);
    GaussRat half(Rational(1, 2));
    auto entry = [&](std::string name, long w, std::vector<PolyVec> cols,
                     std::string norm) {
        return ConformalCatalogEntry{std::move(name), GaussPoly::constant(r, w),
                                     ConformalMap::make(r, mat_from_cols(r, cols)),
                                     std::move(norm)};
    };
    std::vector<ConformalCatalogEntry> out;
    if (weight == 0) {
        out.push_back(entry("R1", 0,
                            {{z, z, z}, {q, z, al}, {GaussPoly::constant(r, -2) * al, z, z}},
                            ""));
        out.push_back(entry("R2", 0,
                            {{z, z, z},
                             {al * al * q * half, z, al * q * half},
                             {al * q, z, q}},
                            "psi"));
        // the fractional form of this family carries a 1/alpha entry; the
        // alpha-multiple below is the polynomial representative of the same
        // weight-0 family
        out.push_back(entry("R3", 0,
                            {{al * q, al * al * q, z}, {q, al * q, z}, {z, z, z}},
                            "xi"));
        out.push_back(entry("R4", 0,
                            {{al * q, q, be * q},
                             {al * al * q, al * q, al * be * q},
                             {GaussPoly::constant(r, 2) * al * be * q,
                              GaussPoly::constant(r, 2) * be * q,
                              GaussPoly::constant(r, 2) * be * be * q}},
                            "pi-or-theta"));
        for (auto& e : catalog_sl2(0))
            out.push_back({"ext:" + e.name, GaussPoly::constant(r, 0),
                           extend_partial(e.map).promote(r), ""});
    } else if (weight == 1) {
        out.push_back(entry("Q1", 1,
                            {{GaussPoly::constant(r, -1), z, z}, {z, z, z}, {z, z, q}},
                            ""));
        for (auto& e : catalog_sl2(1))
            out.push_back({"ext:" + e.name, GaussPoly::constant(r, 1),
                           extend_partial(e.map).promote(r), ""});
    } else {
        raise(ErrorKind::catalog, "catalog_cur_sl2: unsupported weight");
    }
    return out;
}

inline ConformalCatalogEntry catalog_cur_sl2_entry(const std::string& name) {
    for (int w : {0, 1})
        for (auto& e : catalog_cur_sl2(w))
            if (e.name == name) return e;
    raise(ErrorKind::catalog, "unknown catalog entry '" + name + "'");
}

/// The two weight-0 operator forms on the rank-2 example algebra:
/// (i)  R(a) = -mu(a + b), R(b) = mu(a + b), mu != 0;
/// (ii) R(a) = g(d) b, R(b) = 0 (generic g with symbolic coefficients).
inline std::vector<ConformalCatalogEntry> catalog_rank2() {
    std::vector<ConformalCatalogEntry> out;
    {
        Ring r = Ring::make({var::del, "mu"});
        GaussPoly mu = GaussPoly::variable(r, "mu");
        out.push_back({"rank2-i", GaussPoly::zero(r),
                       ConformalMap::make(r, mat_from_cols(r, {{-mu, -mu}, {mu, mu}})),
                       ""});
    }
    {
        Ring r = Ring::make({var::del, "g0", "g1", "g2", "g3"});
        GaussPoly d = GaussPoly::variable(r, var::del);
        GaussPoly g = GaussPoly::variable(r, "g0") + GaussPoly::variable(r, "g1") * d +
                      GaussPoly::variable(r, "g2") * d.pow(2) +
                      GaussPoly::variable(r, "g3") * d.pow(3);
        GaussPoly z = GaussPoly::zero(r);
        out.push_back({"rank2-ii", GaussPoly::zero(r),
                       ConformalMap::make(r, mat_from_cols(r, {{z, g}, {z, z}})), ""});
    }
    return out;
}

/// Instantiate parameters of a catalog map at rational values.
inline ConformalMap instantiate(const ConformalMap& R,
                                const std::map<std::string, GaussRat>& values) {
    std::map<std::string, GaussPoly> bind;
    for (auto& [n, v] : values) bind[n] = GaussPoly::constant(R.ring, v);
    PolyMat m = R.m;
    for (auto& row : m)
        for (auto& p : row) p = p.substitute(bind, R.ring);
    return ConformalMap::make(R.ring, std::move(m));
}

inline LinearMap instantiate(const LinearMap& R,
                             const std::map<std::string, GaussRat>& values) {
    std::map<std::string, GaussPoly> bind;
    for (auto& [n, v] : values) bind[n] = GaussPoly::constant(R.ring, v);
    PolyMat m = R.m;
    for (auto& row : m)
        for (auto& p : row) p = p.substitute(bind, R.ring);
    return {R.ring, std::move(m)};
}

// --- normalizing automorphisms of sl2 from the classification proofs ----

/// psi: e -> e, f -> f - (a/2)h - (a^2/4)e, h -> a e + h. Polynomial in a.
inline LinearMap psi_normalizer(const GaussPoly& a) {
    Ring r = a.ring();
    GaussRat half(Rational(1, 2)), quarter(Rational(1, 4));
    GaussPoly one = GaussPoly::constant(r, 1), z = GaussPoly::zero(r);
    std::vector<PolyVec> cols = {
        {one, z, z},
        {-(a * a * quarter), one, -(a * half)},
        {a, z, one}};
    return {r, mat_from_cols(r, cols)};
}

/// xi at a rational point: requires s^2 = alpha, alpha != 0.
inline LinearMap xi_normalizer(const GaussRat& alpha, const GaussRat& s) {
    if (alpha.is_zero() || !(s * s == alpha))
        raise(ErrorKind::catalog, "xi normalizer needs s^2 = alpha, alpha != 0");
    Ring r = Ring::make({});
    auto c = [&](GaussRat v) { return GaussPoly::constant(r, v); };
    GaussRat inv2s = GaussRat(1) / (GaussRat(2) * s);
    std::vector<std::vector<GaussRat>> cols = {
        {-inv2s, alpha * inv2s, GaussRat(Rational(1, 2))},
        {inv2s, -(alpha * inv2s), GaussRat(Rational(1, 2))},
        {GaussRat(1) / s, alpha / s, GaussRat(0)}};
    std::vector<PolyVec> pcols;
    for (auto& col : cols) {
        PolyVec pv;
        for (auto& g : col) pv.push_back(c(g));
        pcols.push_back(pv);
    }
    return {r, mat_from_cols(r, pcols)};
}

/// pi: e -> -b^2 e + f + b h, f -> e, h -> 2b e - h (for alpha + b^2 = 0).
inline LinearMap pi_normalizer(const GaussRat& b) {
    Ring r = Ring::make({});
    auto c = [&](GaussRat v) { return GaussPoly::constant(r, v); };
    std::vector<PolyVec> cols = {
        {c(-(b * b)), c(GaussRat(1)), c(b)},
        {c(GaussRat(1)), c(GaussRat(0)), c(GaussRat(0))},
        {c(GaussRat(2) * b), c(GaussRat(0)), c(-GaussRat(1))}};
    return {r, mat_from_cols(r, cols)};
}

/// theta at a rational point: requires D^2 = alpha + beta^2, D != 0. The 2iD
/// denominators land in Q(i).
inline LinearMap theta_normalizer(const GaussRat& alpha, const GaussRat& beta,
                                  const GaussRat& D) {
    if (D.is_zero() || !(D * D == alpha + beta * beta))
        raise(ErrorKind::catalog, "theta normalizer needs D^2 = alpha + beta^2, D != 0");
    Ring r = Ring::make({});
    auto c = [&](GaussRat v) { return GaussPoly::constant(r, v); };
    GaussRat twoiD = GaussRat(Rational(0), Rational(2)) * D; // 2 i D
    GaussRat inv = GaussRat(1) / twoiD;
    GaussRat bp = beta + D, bm = beta - D;
    std::vector<std::vector<GaussRat>> cols = {
        {(alpha + GaussRat(2) * beta * bp) * inv, -inv, -(bp * inv)},
        {(alpha + GaussRat(2) * beta * bm) * inv, -inv, -(bm * inv)},
        {alpha / D, GaussRat(1) / D, beta / D}};
    std::vector<PolyVec> pcols;
    for (auto& col : cols) {
        PolyVec pv;
        for (auto& g : col) pv.push_back(c(g));
        pcols.push_back(pv);
    }
    return {r, mat_from_cols(r, pcols)};
}

// --- family membership -----------------------------------------------------

/// Match R(e) = 0, R(f) = q(d)e + a h, R(h) = -2a e; returns (q, a).
inline std::optional<std::pair<GaussPoly, GaussPoly>>
in_R1_family(const ConformalMap& R) {
    if (R.dim() != 3) return std::nullopt;
    const PolyMat& m = R.m;
    if (!vec_is_zero(mat_col(m, 0))) return std::nullopt;
    if (!m[1][1].is_zero() || !m[1][2].is_zero() || !m[2][2].is_zero())
        return std::nullopt;
    GaussPoly a = m[2][1];
    if (a.involves(var::del)) return std::nullopt;
    GaussPoly expect = GaussPoly::constant(a.ring(), -2) * a;
    auto [x, y] = unify(m[0][2], expect);
    if (x != y) return std::nullopt;
    return std::make_pair(m[0][1], a);
}

/// Match R(e) = R(f) = 0, R(h) = q(d)h with q != 0; returns q.
inline std::optional<GaussPoly> in_R2_family(const ConformalMap& R) {
    if (R.dim() != 3) return std::nullopt;
    const PolyMat& m = R.m;
    if (!vec_is_zero(mat_col(m, 0)) || !vec_is_zero(mat_col(m, 1)))
        return std::nullopt;
    if (!m[0][2].is_zero() || !m[1][2].is_zero()) return std::nullopt;
    if (m[2][2].is_zero()) return std::nullopt;
    return m[2][2];
}

} // namespace confrb

#endif
