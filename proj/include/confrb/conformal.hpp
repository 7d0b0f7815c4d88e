#ifndef CONFRB_CONFORMAL_HPP
#define CONFRB_CONFORMAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "confrb/lie.hpp"

namespace confrb {

/// Element of a conformal algebra: one polynomial in d (plus parameters)
/// per generator.
struct ConformalElement {
    PolyVec coords;
};

/// Value of a lambda-bracket: one polynomial in l and d per generator.
struct LambdaValue {
    PolyVec coords;
};

/// Lie conformal algebra of finite type, given by the lambda-bracket table
/// on generators: [g_i l g_j] = sum_k table[i][j][k](l, d) g_k. Brackets of
/// general elements are computed on demand by substitution, never stored.
class ConformalAlgebra {
public:
    using Table = std::map<std::pair<int, int>, PolyVec>;

    /// Missing (j,i) entries are filled from conformal anticommutativity,
    /// table[j][i] = -table[i][j]|_{l -> -l-d}.
    static ConformalAlgebra make(Ring ring, std::vector<std::string> gens,
                                 const Table& given) {
        if (!ring.has(var::lambda) || !ring.has(var::del))
            raise(ErrorKind::invalid_algebra, "table alphabet must declare l and d");
        for (const char* reserved : {var::mu, var::nu, var::d1, var::d2, var::d3})
            if (ring.has(reserved))
                raise(ErrorKind::invalid_algebra,
                      std::string("table alphabet reserves '") + reserved + "'");
        ConformalAlgebra L;
        L.ring_ = std::move(ring);
        L.gens_ = std::move(gens);
        int n = (int)L.gens_.size();
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (L.gens_[(size_t)i] == L.gens_[(size_t)j])
                    raise(ErrorKind::invalid_algebra, "duplicate generator name");
        L.table_.assign((size_t)n,
                        std::vector<PolyVec>((size_t)n, vec_zero(L.ring_, n)));
        std::vector<std::vector<bool>> seen((size_t)n, std::vector<bool>((size_t)n, false));
        for (auto& [ij, v] : given) {
            auto [i, j] = ij;
            if (i < 0 || j < 0 || i >= n || j >= n || (int)v.size() != n)
                raise(ErrorKind::invalid_algebra, "table index/size out of range");
            L.table_[(size_t)i][(size_t)j] = vec_promote(v, L.ring_);
            seen[(size_t)i][(size_t)j] = true;
        }
        GaussPoly l = GaussPoly::variable(L.ring_, var::lambda);
        GaussPoly d = GaussPoly::variable(L.ring_, var::del);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (seen[(size_t)i][(size_t)j] || !seen[(size_t)j][(size_t)i]) continue;
                PolyVec flipped;
                for (auto& p : L.table_[(size_t)j][(size_t)i])
                    flipped.push_back(-p.substitute({{var::lambda, -l - d}}, L.ring_));
                L.table_[(size_t)i][(size_t)j] = std::move(flipped);
                seen[(size_t)i][(size_t)j] = true;
            }
        return L;
    }

    const Ring& ring() const { return ring_; }
    int rank() const { return (int)gens_.size(); }
    const std::vector<std::string>& generators() const { return gens_; }
    const PolyVec& table(int i, int j) const { return table_[(size_t)i][(size_t)j]; }
    const std::optional<LieAlgebra>& current_base() const { return base_; }
    bool is_current() const { return base_.has_value(); }

    int index_of(const std::string& name) const {
        for (int i = 0; i < rank(); ++i)
            if (gens_[(size_t)i] == name) return i;
        raise(ErrorKind::invalid_algebra, "unknown generator '" + name + "'");
    }

    ConformalElement generator(int i) const {
        return {vec_unit(ring_, rank(), i)};
    }

    /// Current conformal algebra Cur(g): constant table lifted from g,
    /// [f(d)a l g(d)b] = f(-l) g(l+d) [a,b].
    static ConformalAlgebra cur_of(const LieAlgebra& g) {
        if (!check_jacobi(g))
            raise(ErrorKind::invalid_algebra, "Jacobi identity fails; not a Lie algebra");
        Ring r = join(g.ring(), Ring::make({var::lambda, var::del}));
        Table t;
        for (int i = 0; i < g.dim(); ++i)
            for (int j = 0; j < g.dim(); ++j)
                t[{i, j}] = vec_promote(g.bracket(i, j), r);
        ConformalAlgebra L = make(r, g.basis(), t);
        L.base_ = g;
        return L;
    }

    /// Virasoro: rank 1, [L l L] = (d + 2 l) L.
    static ConformalAlgebra vir() {
        Ring r = Ring::make({var::lambda, var::del});
        GaussPoly p = GaussPoly::variable(r, var::del) +
                      GaussPoly::constant(r, 2) * GaussPoly::variable(r, var::lambda);
        Table t;
        t[{0, 0}] = {p};
        return make(r, {"L"}, t);
    }

    /// Rank-2 algebra with [a l a] = (d+2l)a, [a l b] = (d+l)b, [b l b] = 0.
    static ConformalAlgebra rank2_example() {
        Ring r = Ring::make({var::lambda, var::del});
        GaussPoly l = GaussPoly::variable(r, var::lambda);
        GaussPoly d = GaussPoly::variable(r, var::del);
        GaussPoly z = GaussPoly::zero(r);
        Table t;
        t[{0, 0}] = {d + GaussPoly::constant(r, 2) * l, z};
        t[{0, 1}] = {z, d + l};
        t[{1, 1}] = {z, z};
        return make(r, {"a", "b"}, t);
    }

private:
    Ring ring_;
    std::vector<std::string> gens_;
    std::vector<std::vector<PolyVec>> table_;
    std::optional<LieAlgebra> base_;
};

/// [x lvar y] for elements with coordinates polynomial in d; the bracket
/// variable may be renamed to keep nested brackets hygienic. Left coordinates
/// are evaluated at -lvar, right coordinates at lvar + d.
inline LambdaValue lambda_bracket(const ConformalAlgebra& L, const ConformalElement& x,
                                  const ConformalElement& y,
                                  const std::string& lvar = var::lambda) {
    int n = L.rank();
    if ((int)x.coords.size() != n || (int)y.coords.size() != n)
        raise(ErrorKind::invalid_algebra, "element size does not match algebra");
    Ring w = join(join(L.ring(), Ring::make({lvar})),
                  join(x.coords[0].ring(), y.coords[0].ring()));
    GaussPoly lv = GaussPoly::variable(w, lvar);
    GaussPoly d = GaussPoly::variable(w, var::del);
    PolyVec out = vec_zero(w, n);
    for (int i = 0; i < n; ++i) {
        if (x.coords[(size_t)i].is_zero()) continue;
        if (x.coords[(size_t)i].involves(lvar))
            raise(ErrorKind::alphabet, "left argument already involves '" + lvar + "'");
        GaussPoly fi = x.coords[(size_t)i].promote(w).substitute({{var::del, -lv}}, w);
        for (int j = 0; j < n; ++j) {
            if (y.coords[(size_t)j].is_zero()) continue;
            if (y.coords[(size_t)j].involves(lvar))
                raise(ErrorKind::alphabet, "right argument already involves '" + lvar + "'");
            GaussPoly gj =
                y.coords[(size_t)j].promote(w).substitute({{var::del, lv + d}}, w);
            GaussPoly f = fi * gj;
            for (int k = 0; k < n; ++k) {
                const GaussPoly& t = L.table(i, j)[(size_t)k];
                if (t.is_zero()) continue;
                GaussPoly tk = t.promote(w);
                if (lvar != var::lambda)
                    tk = tk.substitute({{var::lambda, lv}}, w);
                out[(size_t)k] += f * tk;
            }
        }
    }
    return {out};
}

/// Defect report for the Lie conformal axioms: anticommutativity per
/// unordered generator pair, Jacobi per ordered generator triple.
struct AxiomReport {
    std::vector<std::tuple<std::string, PolyVec>> anti;
    std::vector<std::tuple<std::string, PolyVec>> jacobi;

    bool ok() const {
        for (auto& [loc, v] : anti)
            if (!vec_is_zero(v)) return false;
        for (auto& [loc, v] : jacobi)
            if (!vec_is_zero(v)) return false;
        return true;
    }
};

inline AxiomReport check_conformal_axioms(const ConformalAlgebra& L) {
    AxiomReport rep;
    int n = L.rank();
    Ring w = join(L.ring(), Ring::make({var::mu}));
    GaussPoly l = GaussPoly::variable(w, var::lambda);
    GaussPoly m = GaussPoly::variable(w, var::mu);
    GaussPoly d = GaussPoly::variable(w, var::del);

    // [a l b] + [b_{-l-d} a] = 0
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            PolyVec defect = vec_zero(w, n);
            for (int k = 0; k < n; ++k) {
                GaussPoly lhs = L.table(i, j)[(size_t)k].promote(w);
                GaussPoly rhs = L.table(j, i)[(size_t)k].promote(w).substitute(
                    {{var::lambda, -l - d}}, w);
                defect[(size_t)k] = lhs + rhs;
            }
            rep.anti.emplace_back(L.generators()[(size_t)i] + "," +
                                      L.generators()[(size_t)j],
                                  std::move(defect));
        }

    // [a_l [b_m c]] - [b_m [a_l c]] - [[a_l b]_{l+m} c] = 0
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                PolyVec defect = vec_zero(w, n);
                for (int p = 0; p < n; ++p) {
                    // [a_l (w_p(m,d) g_p)] = w_p(m, l+d) [a_l g_p]
                    GaussPoly w1 = L.table(j, k)[(size_t)p].promote(w).substitute(
                        {{var::lambda, m}}, w);
                    if (!w1.is_zero()) {
                        GaussPoly f = w1.substitute({{var::del, l + d}}, w);
                        for (int q = 0; q < n; ++q)
                            defect[(size_t)q] += f * L.table(i, p)[(size_t)q].promote(w);
                    }
                    GaussPoly w2 = L.table(i, k)[(size_t)p].promote(w);
                    if (!w2.is_zero()) {
                        GaussPoly f = w2.substitute({{var::del, m + d}}, w);
                        for (int q = 0; q < n; ++q)
                            defect[(size_t)q] -=
                                f * L.table(j, p)[(size_t)q].promote(w).substitute(
                                        {{var::lambda, m}}, w);
                    }
                    // [(w_p(l,d) g_p)_{l+m} c] = w_p(l, -(l+m)) [g_p_{l+m} c]
                    GaussPoly w3 = L.table(i, j)[(size_t)p].promote(w);
                    if (!w3.is_zero()) {
                        GaussPoly f = w3.substitute({{var::del, -(l + m)}}, w);
                        for (int q = 0; q < n; ++q)
                            defect[(size_t)q] -=
                                f * L.table(p, k)[(size_t)q].promote(w).substitute(
                                        {{var::lambda, l + m}}, w);
                    }
                }
                rep.jacobi.emplace_back(L.generators()[(size_t)i] + "," +
                                            L.generators()[(size_t)j] + "," +
                                            L.generators()[(size_t)k],
                                        std::move(defect));
            }
    return rep;
}

} // namespace confrb

#endif
