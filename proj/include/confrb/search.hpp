#ifndef CONFRB_SEARCH_HPP
#define CONFRB_SEARCH_HPP

#include <set>
#include <string>
#include <vector>

#include "confrb/conformal_rb.hpp"

namespace confrb {

/// Zero-pattern constraints for the lattice search: whole columns forced to
/// zero (R(gen) = 0), columns restricted to the diagonal (R(gen) along gen),
/// and entries whose constant term must vanish (the classification
/// normalizations).
struct SearchPattern {
    std::set<int> zero_cols;
    std::set<int> diag_cols;
    std::set<std::pair<int, int>> const_zero; // (row, col)
};

/// Tokens: "R<gen>=0", "R<gen>=diag", "norm0", "norm1" (comma separated).
/// norm0 forces R(e)|_0 = 0 plus b_f(0) = c_f(0) = 0; norm1 forces
/// R(f)|_0 = 0 plus a_f(0) = c_e(0) = c_f(0) = 0 (rank-3 algebras only).
inline SearchPattern parse_pattern(const ConformalAlgebra& L, const std::string& text) {
    SearchPattern pat;
    if (text.empty()) return pat;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find(',', start);
        std::string tok = text.substr(
            start, end == std::string::npos ? std::string::npos : end - start);
        if (!tok.empty()) {
            if (tok == "norm0" || tok == "norm1") {
                if (L.rank() != 3)
                    raise(ErrorKind::parse, "normalization patterns need a rank-3 algebra");
                if (tok == "norm0") {
                    for (int row = 0; row < 3; ++row) pat.const_zero.insert({row, 0});
                    pat.const_zero.insert({1, 1}); // b_f(0) = 0
                    pat.const_zero.insert({1, 2}); // c_f(0) = 0
                } else {
                    for (int row = 0; row < 3; ++row) pat.const_zero.insert({row, 1});
                    pat.const_zero.insert({1, 0}); // a_f(0) = 0
                    pat.const_zero.insert({0, 2}); // c_e(0) = 0
                    pat.const_zero.insert({1, 2}); // c_f(0) = 0
                }
            } else if (tok.size() > 2 && tok[0] == 'R') {
                size_t eq = tok.find('=');
                if (eq == std::string::npos)
                    raise(ErrorKind::parse, "bad pattern token '" + tok + "'");
                int col = L.index_of(tok.substr(1, eq - 1));
                std::string rhs = tok.substr(eq + 1);
                if (rhs == "0") pat.zero_cols.insert(col);
                else if (rhs == "diag") pat.diag_cols.insert(col);
                else raise(ErrorKind::parse, "bad pattern token '" + tok + "'");
            } else {
                raise(ErrorKind::parse, "bad pattern token '" + tok + "'");
            }
        }
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return pat;
}

struct SearchResult {
    std::vector<ConformalMap> hits;
    Integer lattice_size{0};
};

namespace detail {

/// Rational structure constants of a current base, when available.
struct RationalBase {
    int n = 0;
    std::vector<GaussRat> c; // c[(i*n+j)*n+k]
    bool valid = false;

    static RationalBase from(const LieAlgebra& g) {
        RationalBase out;
        out.n = g.dim();
        out.c.assign((size_t)(out.n * out.n * out.n), GaussRat(0));
        for (int i = 0; i < out.n; ++i)
            for (int j = 0; j < out.n; ++j)
                for (int k = 0; k < out.n; ++k) {
                    const GaussPoly& p = g.bracket(i, j)[(size_t)k];
                    if (!p.is_constant()) return out; // parametric; no prefilter
                    out.c[(size_t)((i * out.n + j) * out.n + k)] = p.constant_value();
                }
        out.valid = true;
        return out;
    }

    const GaussRat& at(int i, int j, int k) const {
        return c[(size_t)((i * n + j) * n + k)];
    }

    /// RB residuals of a rational matrix at weight k, evaluated directly in
    /// Q(i); used as a cheap necessary condition (the d = 0 projection of a
    /// conformal RB-operator is an RB-operator on the base).
    bool rb_ok(const std::vector<GaussRat>& m, const GaussRat& weight) const {
        auto M = [&](int r, int cc) -> const GaussRat& {
            return m[(size_t)(r * n + cc)];
        };
        std::vector<GaussRat> lhs((size_t)n), inner((size_t)n), rhs((size_t)n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                for (int k = 0; k < n; ++k) {
                    lhs[(size_t)k] = GaussRat(0);
                    inner[(size_t)k] = weight * at(i, j, k);
                }
                for (int a = 0; a < n; ++a) {
                    if (M(a, i).is_zero()) continue;
                    for (int b = 0; b < n; ++b) {
                        if (!M(b, j).is_zero()) {
                            GaussRat f = M(a, i) * M(b, j);
                            for (int k = 0; k < n; ++k)
                                if (!at(a, b, k).is_zero())
                                    lhs[(size_t)k] += f * at(a, b, k);
                        }
                    }
                    for (int k = 0; k < n; ++k)
                        if (!at(a, j, k).is_zero())
                            inner[(size_t)k] += M(a, i) * at(a, j, k);
                }
                for (int b = 0; b < n; ++b) {
                    if (M(b, j).is_zero()) continue;
                    for (int k = 0; k < n; ++k)
                        if (!at(i, b, k).is_zero())
                            inner[(size_t)k] += M(b, j) * at(i, b, k);
                }
                for (int q = 0; q < n; ++q) {
                    rhs[(size_t)q] = GaussRat(0);
                    for (int p = 0; p < n; ++p)
                        if (!inner[(size_t)p].is_zero())
                            rhs[(size_t)q] += M(q, p) * inner[(size_t)p];
                }
                for (int k = 0; k < n; ++k)
                    if (!(lhs[(size_t)k] == rhs[(size_t)k])) return false;
            }
        return true;
    }
};

} // namespace detail

/// Enumerate all operator matrices with entries of d-degree <= deg and
/// coefficients drawn from `coeffs`, subject to the zero-pattern, and keep
/// those whose RB defect vanishes. cap-error if the lattice exceeds `cap`.
inline SearchResult bounded_search(const ConformalAlgebra& L, const GaussRat& weight,
                                   int deg, const std::vector<GaussRat>& coeffs,
                                   const SearchPattern& pattern = {},
                                   const Integer& cap = Integer(10000000)) {
    if (deg < 0) raise(ErrorKind::parse, "degree bound must be non-negative");
    if (coeffs.empty()) raise(ErrorKind::parse, "empty coefficient set");
    int n = L.rank();
    struct Slot {
        int row, col, pow;
    };
    std::vector<Slot> slots;
    for (int col = 0; col < n; ++col) {
        if (pattern.zero_cols.count(col)) continue;
        for (int row = 0; row < n; ++row) {
            if (pattern.diag_cols.count(col) && row != col) continue;
            for (int p = 0; p <= deg; ++p) {
                if (p == 0 && pattern.const_zero.count({row, col})) continue;
                slots.push_back({row, col, p});
            }
        }
    }
    Integer total = 1;
    for (size_t i = 0; i < slots.size(); ++i) total *= (long)coeffs.size();
    if (total > cap) {
        std::ostringstream os;
        os << "lattice has " << total << " candidates, cap is " << cap;
        raise(ErrorKind::cap, os.str());
    }

    Ring r = Ring::make({var::del});
    GaussPoly wpoly = GaussPoly::constant(r, weight);
    detail::RationalBase base;
    if (L.is_current()) base = detail::RationalBase::from(*L.current_base());
    SearchResult out;
    out.lattice_size = total;
    VarId dv = r.var(var::del);

    std::vector<size_t> odo(slots.size(), 0);
    std::vector<GaussRat> m0((size_t)(n * n));
    while (true) {
        bool ok = true;
        if (base.valid) {
            // necessary condition first: R|_{d=0} must be an RB-operator of
            // the same weight on the base Lie algebra
            std::fill(m0.begin(), m0.end(), GaussRat(0));
            for (size_t s = 0; s < slots.size(); ++s)
                if (slots[s].pow == 0)
                    m0[(size_t)(slots[s].row * n + slots[s].col)] = coeffs[odo[s]];
            ok = base.rb_ok(m0, weight);
        }
        if (ok) {
            PolyMat m = mat_zero(r, n);
            for (size_t s = 0; s < slots.size(); ++s) {
                const GaussRat& c = coeffs[odo[s]];
                if (c.is_zero()) continue;
                GaussPoly::Key key((size_t)r.arity(), 0);
                key[(size_t)dv] = (std::uint32_t)slots[s].pow;
                m[(size_t)slots[s].row][(size_t)slots[s].col].add_term(key, c);
            }
            ConformalMap cand{r, m};
            if (check_conformal_rb(L, cand, wpoly).ok())
                out.hits.push_back(std::move(cand));
        }
        // odometer over the coefficient lattice
        size_t s = 0;
        for (; s < slots.size(); ++s) {
            if (++odo[s] < coeffs.size()) break;
            odo[s] = 0;
        }
        if (s == slots.size()) break;
    }
    return out;
}

} // namespace confrb

#endif
