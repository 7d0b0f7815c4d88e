#ifndef CONFRB_CCYBE_HPP
#define CONFRB_CCYBE_HPP

#include <string>
#include <vector>

#include "confrb/conformal_rb.hpp"
#include "confrb/tensor.hpp"

namespace confrb {

/// tau(a (x) b) = b (x) a, with the slot variables d1 and d2 swapped in the
/// coefficients.
inline TensorElement tau(const TensorElement& r) {
    if (r.rank() != 2) raise(ErrorKind::rank, "tau expects a rank-2 tensor");
    Ring w = r.ring();
    GaussPoly x1 = GaussPoly::variable(w, var::d1);
    GaussPoly x2 = GaussPoly::variable(w, var::d2);
    TensorElement out = TensorElement::zero(w, 2, r.dim());
    for (auto& [idx, c] : r.terms())
        out.add_term({idx[1], idx[0]},
                     c.substitute({{var::d1, x2}, {var::d2, x1}}, w));
    return out;
}

inline bool is_skew(const TensorElement& r) {
    if (r.rank() != 2) raise(ErrorKind::rank, "is_skew expects a rank-2 tensor");
    return (r + tau(r)).is_zero();
}

/// Canonical representative of the quotient mod d^{(x)3}: substitute
/// d3 -> -d1-d2 in every coefficient.
inline TensorElement reduce_mod_d3(const TensorElement& t) {
    if (t.rank() != 3) raise(ErrorKind::rank, "rank-3 tensor expected");
    Ring w = t.ring();
    GaussPoly rep = -(GaussPoly::variable(w, var::d1) + GaussPoly::variable(w, var::d2));
    return t.map_coeffs({{var::d3, rep}}, w);
}

/// The three-term double bracket of the conformal classical Yang-Baxter
/// equation, for r in L (x) L over a current conformal algebra, returned in
/// the canonical quotient form (d3 eliminated).
inline TensorElement double_bracket(const ConformalAlgebra& L, const TensorElement& r) {
    if (r.rank() != 2) raise(ErrorKind::rank, "double_bracket expects a rank-2 tensor");
    if (!L.is_current())
        raise(ErrorKind::unsupported_algebra,
              "double_bracket is implemented for current conformal algebras");
    if (r.dim() != L.rank())
        raise(ErrorKind::rank, "tensor generators do not match the algebra");
    const LieAlgebra& g = *L.current_base();
    Ring w = join(join(r.ring(), slot_ring(3)), g.ring());
    GaussPoly x1 = GaussPoly::variable(w, var::d1);
    GaussPoly x2 = GaussPoly::variable(w, var::d2);
    GaussPoly x3 = GaussPoly::variable(w, var::d3);
    TensorElement out = TensorElement::zero(w, 3, r.dim());

    for (auto& [si, sc] : r.terms())
        for (auto& [ti, tc] : r.terms()) {
            GaussPoly cs = sc.promote(w), ct = tc.promote(w);
            // [a_i l a_j] (x) b_i (x) b_j at l = d_(x)2
            {
                GaussPoly c = cs.substitute({{var::d1, -x2}}, w) *
                              ct.substitute({{var::d1, x1 + x2}, {var::d2, x3}}, w);
                const PolyVec& br = g.bracket(si[0], ti[0]);
                for (int k = 0; k < r.dim(); ++k)
                    if (!br[(size_t)k].is_zero())
                        out.add_term({k, si[1], ti[1]}, c * br[(size_t)k].promote(w));
            }
            // - a_i (x) [a_j l b_i] (x) b_j at l = d_(x)3
            {
                GaussPoly c = cs.substitute({{var::d2, x2 + x3}}, w) *
                              ct.substitute({{var::d1, -x3}, {var::d2, x3}}, w);
                const PolyVec& br = g.bracket(ti[0], si[1]);
                for (int k = 0; k < r.dim(); ++k)
                    if (!br[(size_t)k].is_zero())
                        out.add_term({si[0], k, ti[1]}, -(c * br[(size_t)k].promote(w)));
            }
            // - a_i (x) a_j (x) [b_j l b_i] at l = d_(x)2
            {
                GaussPoly c = cs.substitute({{var::d2, x2 + x3}}, w) *
                              ct.substitute({{var::d1, x2}, {var::d2, -x2}}, w);
                const PolyVec& br = g.bracket(ti[1], si[1]);
                for (int k = 0; k < r.dim(); ++k)
                    if (!br[(size_t)k].is_zero())
                        out.add_term({si[0], ti[0], k}, -(c * br[(size_t)k].promote(w)));
            }
        }
    return reduce_mod_d3(out);
}

inline bool check_ccybe(const ConformalAlgebra& L, const TensorElement& r) {
    return double_bracket(L, r).is_zero();
}

/// a_m [[r,r]] = 0 (mod m = -d^{(x)3}) for every generator a: the action is
/// computed on the canonical representative, m is substituted before the
/// final quotient reduction.
inline bool check_weak_ccybe(const ConformalAlgebra& L, const TensorElement& r) {
    TensorElement db = double_bracket(L, r);
    for (int a = 0; a < L.rank(); ++a) {
        TensorElement acted = tensor_action(L, L.generator(a), db, var::mu);
        Ring w = acted.ring();
        GaussPoly sum = GaussPoly::variable(w, var::d1) +
                        GaussPoly::variable(w, var::d2) + GaussPoly::variable(w, var::d3);
        TensorElement sub = acted.map_coeffs({{var::mu, -sum}}, w);
        if (!reduce_mod_d3(sub).is_zero()) return false;
    }
    return true;
}

/// a_l (r + tau(r)) |_{l = -d^{(x)2}} = 0 for every generator a.
inline bool check_invariance(const ConformalAlgebra& L, const TensorElement& r) {
    if (r.rank() != 2) raise(ErrorKind::rank, "check_invariance expects rank 2");
    TensorElement sym = r + tau(r);
    if (sym.is_zero()) return true;
    for (int a = 0; a < L.rank(); ++a) {
        TensorElement acted = tensor_action(L, L.generator(a), sym, var::lambda);
        Ring w = acted.ring();
        GaussPoly sum = GaussPoly::variable(w, var::d1) + GaussPoly::variable(w, var::d2);
        if (!acted.map_coeffs({{var::lambda, -sum}}, w).is_zero()) return false;
    }
    return true;
}

/// Conformal bilinear form on Cur(g): <f(d)a, g(d)b>_l = f(-l) g(l) K(a,b)
/// with K the Killing form of g.
struct ConformalForm {
    LieAlgebra base;
    PolyMat killing;

    static ConformalForm make(const LieAlgebra& g) {
        return {g, killing_form(g)};
    }

    static ConformalForm make(const ConformalAlgebra& L) {
        if (!L.is_current())
            raise(ErrorKind::unsupported_algebra,
                  "the conformal form is defined on current algebras");
        return make(*L.current_base());
    }

    bool nondegenerate() const { return !mat_det(killing).is_zero(); }
};

inline GaussPoly conformal_form(const ConformalForm& F, const ConformalElement& x,
                                const ConformalElement& y) {
    int n = F.base.dim();
    if ((int)x.coords.size() != n || (int)y.coords.size() != n)
        raise(ErrorKind::form, "element size does not match the form");
    Ring w = join(join(x.coords[0].ring(), y.coords[0].ring()),
                  join(F.base.ring(), Ring::make({var::lambda, var::del})));
    GaussPoly l = GaussPoly::variable(w, var::lambda);
    GaussPoly out = GaussPoly::zero(w);
    for (int i = 0; i < n; ++i) {
        if (x.coords[(size_t)i].is_zero()) continue;
        GaussPoly fi = x.coords[(size_t)i].promote(w).substitute({{var::del, -l}}, w);
        for (int j = 0; j < n; ++j) {
            if (y.coords[(size_t)j].is_zero() || F.killing[(size_t)i][(size_t)j].is_zero())
                continue;
            GaussPoly gj = y.coords[(size_t)j].promote(w).substitute({{var::del, l}}, w);
            out += fi * gj * F.killing[(size_t)i][(size_t)j].promote(w);
        }
    }
    return out;
}

/// Executable invariance of the form: <[a_m b], c>_l = <a, [b_{l-d} c]>_m
/// on all generator triples.
inline bool check_form_invariance(const ConformalForm& F, const ConformalAlgebra& L) {
    int n = L.rank();
    Ring w = join(L.ring(), Ring::make({var::mu, var::nu}));
    GaussPoly l = GaussPoly::variable(w, var::lambda);
    GaussPoly m = GaussPoly::variable(w, var::mu);
    GaussPoly d = GaussPoly::variable(w, var::del);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                // LHS: [a_m b] has coords w_k(m, d); pair with c at l.
                LambdaValue ab = lambda_bracket(L, L.generator(a), L.generator(b), var::mu);
                GaussPoly lhs = GaussPoly::zero(w);
                for (int k = 0; k < n; ++k)
                    lhs += ab.coords[(size_t)k].promote(w).substitute({{var::del, -l}}, w) *
                           F.killing[(size_t)k][(size_t)c].promote(w);
                // RHS: [b_n c] with n -> l - d, paired with a at m.
                LambdaValue bc = lambda_bracket(L, L.generator(b), L.generator(c), var::nu);
                GaussPoly rhs = GaussPoly::zero(w);
                for (int k = 0; k < n; ++k) {
                    GaussPoly v = bc.coords[(size_t)k].promote(w).substitute(
                        {{var::nu, l - d}}, w);
                    rhs += v.substitute({{var::del, m}}, w) *
                           F.killing[(size_t)a][(size_t)k].promote(w);
                }
                if (lhs != rhs) return false;
            }
    return true;
}

/// P^r_0(u) = sum_{i,j} A_ij(-d, d) <i, u> j from a rank-2 solution tensor;
/// form-error if the form is degenerate.
inline ConformalMap rb_from_solution(const ConformalForm& F, const TensorElement& r) {
    if (r.rank() != 2) raise(ErrorKind::rank, "rb_from_solution expects rank 2");
    if (!F.nondegenerate())
        raise(ErrorKind::form, "bilinear form is degenerate");
    int n = F.base.dim();
    if (r.dim() != n) raise(ErrorKind::rank, "tensor does not match the form");
    Ring w = join(r.ring(), join(F.base.ring(), Ring::make({var::del})));
    GaussPoly d = GaussPoly::variable(w, var::del);
    PolyMat m = mat_zero(w, n);
    for (auto& [idx, c] : r.terms()) {
        GaussPoly a = c.promote(w).substitute({{var::d1, -d}, {var::d2, d}}, w);
        int i = idx[0], j = idx[1];
        for (int u = 0; u < n; ++u) {
            const GaussPoly& kiu = F.killing[(size_t)i][(size_t)u];
            if (!kiu.is_zero()) m[(size_t)j][(size_t)u] += a * kiu.promote(w);
        }
    }
    return ConformalMap::make(w, std::move(m));
}

/// Skew solution families on Cur(sl2), built from the diagonal data
/// A(x, -x) = a x f(x^2) with the canonical antisymmetric lift
/// A(x, y) = a u f(u^2), u = (x - y)/2. Cases:
///   i   : polynomial part on e(x)e (a_ee = 1), constants beta = gamma = 0;
///   ii  : polynomial part on h(x)h scaled by `scale` != 0, all constants 0;
///   iii : constants only.
/// The polynomial f must be unitary (monic) in `fvar`.
inline TensorElement cursl2_solution_family(const std::string& kase, const GaussPoly& f,
                                            const std::string& fvar, GaussRat alpha,
                                            GaussRat beta, GaussRat gamma,
                                            GaussRat scale) {
    Ring w = join(f.ring(), slot_ring(2));
    auto lifted = [&]() {
        // u f(u^2) with u = (d1 - d2)/2
        GaussPoly u = (GaussPoly::variable(w, var::d1) - GaussPoly::variable(w, var::d2)) *
                      GaussRat(Rational(1, 2));
        GaussPoly fu = f.promote(w).substitute({{fvar, u * u}}, w);
        return u * fu;
    };
    auto require_monic = [&]() {
        int deg = f.degree(fvar);
        auto parts = f.coeff_extract({fvar});
        GaussPoly::Key lead{(std::uint32_t)deg};
        auto it = parts.find(lead);
        if (it == parts.end() || !it->second.is_constant() ||
            !(it->second.constant_value() == GaussRat(1)))
            raise(ErrorKind::family, "f must be unitary (monic leading coefficient)");
    };
    const int E = 0, Fg = 1, H = 2;
    TensorElement r = TensorElement::zero(w, 2, 3);
    auto add_wedge = [&](int i, int j, GaussRat c) {
        if (c.is_zero()) return;
        r.add_term({i, j}, GaussPoly::constant(w, c));
        r.add_term({j, i}, GaussPoly::constant(w, -c));
    };
    if (kase == "i") {
        if (!beta.is_zero() || !gamma.is_zero())
            raise(ErrorKind::family, "case i requires beta = gamma = 0");
        require_monic();
        r.add_term({E, E}, lifted());
        add_wedge(H, E, alpha);
    } else if (kase == "ii") {
        if (!alpha.is_zero() || !beta.is_zero() || !gamma.is_zero())
            raise(ErrorKind::family, "case ii requires alpha = beta = gamma = 0");
        if (scale.is_zero()) raise(ErrorKind::family, "case ii requires a nonzero scale");
        require_monic();
        r.add_term({H, H}, lifted() * scale);
    } else if (kase == "iii") {
        add_wedge(Fg, E, beta);
        add_wedge(H, E, alpha);
        add_wedge(H, Fg, gamma);
    } else {
        raise(ErrorKind::family, "unknown family case '" + kase + "'");
    }
    return r;
}

} // namespace confrb

#endif
