#ifndef CONFRB_FORMAL_HPP
#define CONFRB_FORMAL_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "confrb/conformal_rb.hpp"

namespace confrb {

/// The nine coefficient functions of the generic operator ansatz on
/// Cur(sl2): column x of the matrix has coordinates (x_e, x_f, x_h).
enum class CoefFn : int { ae, af, ah, be, bf, bh, ce, cf, ch };

/// Argument forms the coefficient functions are evaluated at.
enum class ArgForm : int { d, neg_l, l_plus_d, zero };

inline const char* coef_fn_name(CoefFn f) {
    static const char* names[] = {"a_e", "a_f", "a_h", "b_e", "b_f",
                                  "b_h", "c_e", "c_f", "c_h"};
    return names[(int)f];
}

inline const char* arg_form_name(ArgForm a) {
    static const char* names[] = {"d", "-l", "l+d", "0"};
    return names[(int)a];
}

inline std::optional<CoefFn> coef_fn_from_name(const std::string& s) {
    for (int i = 0; i < 9; ++i)
        if (s == coef_fn_name((CoefFn)i)) return (CoefFn)i;
    return std::nullopt;
}

inline std::optional<ArgForm> arg_form_from_name(const std::string& s) {
    for (int i = 0; i < 4; ++i)
        if (s == arg_form_name((ArgForm)i)) return (ArgForm)i;
    return std::nullopt;
}

struct FormalToken {
    CoefFn fn;
    ArgForm arg;
    friend bool operator==(FormalToken a, FormalToken b) {
        return a.fn == b.fn && a.arg == b.arg;
    }
    friend bool operator<(FormalToken a, FormalToken b) {
        if (a.fn != b.fn) return (int)a.fn < (int)b.fn;
        return (int)a.arg < (int)b.arg;
    }
};

/// Commutative polynomial in the formal tokens F(arg) with Q(i) coefficients.
/// Canonical form: sorted token multisets, no zero coefficients.
class FormalPoly {
public:
    using Key = std::vector<FormalToken>; // sorted
    using TermMap = std::map<Key, GaussRat>;

    static FormalPoly zero() { return {}; }

    static FormalPoly constant(GaussRat c) {
        FormalPoly p;
        if (!c.is_zero()) p.terms_.emplace(Key{}, std::move(c));
        return p;
    }

    static FormalPoly token(CoefFn fn, ArgForm arg) {
        FormalPoly p;
        p.terms_.emplace(Key{{fn, arg}}, GaussRat(1));
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend bool operator==(const FormalPoly& a, const FormalPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const FormalPoly& a, const FormalPoly& b) {
        return !(a == b);
    }

    friend FormalPoly operator+(const FormalPoly& a, const FormalPoly& b) {
        FormalPoly out = a;
        for (auto& [k, c] : b.terms_) out.add_term(k, c);
        return out;
    }
    friend FormalPoly operator-(const FormalPoly& a, const FormalPoly& b) {
        FormalPoly out = a;
        for (auto& [k, c] : b.terms_) out.add_term(k, -c);
        return out;
    }
    friend FormalPoly operator-(const FormalPoly& a) {
        FormalPoly out;
        for (auto& [k, c] : a.terms_) out.terms_.emplace(k, -c);
        return out;
    }
    friend FormalPoly operator*(const FormalPoly& a, const FormalPoly& b) {
        FormalPoly out;
        for (auto& [ka, ca] : a.terms_)
            for (auto& [kb, cb] : b.terms_) {
                Key k = ka;
                k.insert(k.end(), kb.begin(), kb.end());
                std::sort(k.begin(), k.end());
                out.add_term(k, ca * cb);
            }
        return out;
    }
    friend FormalPoly operator*(const FormalPoly& a, const GaussRat& s) {
        FormalPoly out;
        if (s.is_zero()) return out;
        for (auto& [k, c] : a.terms_) out.terms_.emplace(k, c * s);
        return out;
    }
    FormalPoly& operator+=(const FormalPoly& b) { *this = *this + b; return *this; }
    FormalPoly& operator-=(const FormalPoly& b) { *this = *this - b; return *this; }

    /// Re-evaluate every token at a new argument. Only defined on token
    /// products still sitting at the generic argument d.
    FormalPoly at(ArgForm target) const {
        FormalPoly out;
        for (auto& [k, c] : terms_) {
            Key nk = k;
            for (auto& t : nk) {
                if (t.arg != ArgForm::d)
                    raise(ErrorKind::internal, "formal token already evaluated");
                t.arg = target;
            }
            std::sort(nk.begin(), nk.end());
            out.add_term(nk, c);
        }
        return out;
    }

    /// Scale so the first term in canonical order has coefficient 1; used for
    /// comparison up to an overall nonzero scalar.
    FormalPoly normalized() const {
        if (terms_.empty()) return *this;
        GaussRat lead = terms_.begin()->second;
        FormalPoly out;
        for (auto& [k, c] : terms_) out.terms_.emplace(k, c / lead);
        return out;
    }

    /// Substitute concrete polynomials (in d) for the coefficient functions.
    GaussPoly eval(const std::array<GaussPoly, 9>& fns, const Ring& w) const {
        GaussPoly l = GaussPoly::variable(w, var::lambda);
        GaussPoly d = GaussPoly::variable(w, var::del);
        std::map<std::pair<int, int>, GaussPoly> cache;
        auto tok_val = [&](FormalToken t) {
            auto key = std::make_pair((int)t.fn, (int)t.arg);
            auto it = cache.find(key);
            if (it != cache.end()) return it->second;
            GaussPoly base = fns[(size_t)t.fn].promote(w);
            GaussPoly v;
            switch (t.arg) {
            case ArgForm::d: v = base; break;
            case ArgForm::neg_l: v = base.substitute({{var::del, -l}}, w); break;
            case ArgForm::l_plus_d: v = base.substitute({{var::del, l + d}}, w); break;
            case ArgForm::zero: v = base.substitute({{var::del, GaussPoly::zero(w)}}, w); break;
            }
            cache.emplace(key, v);
            return v;
        };
        GaussPoly out = GaussPoly::zero(w);
        for (auto& [k, c] : terms_) {
            GaussPoly t = GaussPoly::constant(w, c);
            for (auto& tok : k) t *= tok_val(tok);
            out += t;
        }
        return out;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto& [k, c] : terms_) {
            std::string mono;
            for (auto& t : k) {
                if (!mono.empty()) mono += "*";
                mono += std::string(coef_fn_name(t.fn)) + "(" + arg_form_name(t.arg) + ")";
            }
            std::string coeff = c.str();
            std::string piece;
            if (mono.empty()) piece = coeff;
            else if (coeff == "1") piece = mono;
            else if (coeff == "-1") piece = "-" + mono;
            else piece = coeff + "*" + mono;
            if (first) { out = piece; first = false; }
            else if (piece[0] == '-') out += " - " + piece.substr(1);
            else out += " + " + piece;
        }
        return out;
    }

    void add_term(const Key& k, const GaussRat& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) terms_.emplace(k, c);
        else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

private:
    TermMap terms_;
};

/// One coefficient identity extracted from the generic RB equation:
/// the (coord)-coordinate of the defect at the generator pair.
struct FormalEquation {
    std::string pair;  // e.g. "h,h"
    std::string coord; // e.g. "e"
    FormalPoly expr;   // = 0
};

struct EquationSystem {
    int weight = 0;
    std::vector<FormalEquation> eqs;
};

namespace detail {

// sl2 structure constants in basis order (e, f, h).
inline int sl2_c(int i, int j, int k) {
    static const int br[3][3][3] = {
        {{0, 0, 0}, {0, 0, 1}, {-2, 0, 0}},  // [e,e], [e,f]=h, [e,h]=-2e
        {{0, 0, -1}, {0, 0, 0}, {0, 2, 0}},  // [f,e]=-h, [f,f], [f,h]=2f
        {{2, 0, 0}, {0, -2, 0}, {0, 0, 0}},  // [h,e]=2e, [h,f]=-2f, [h,h]
    };
    return br[i][j][k];
}

inline std::vector<FormalPoly> formal_bracket(const std::vector<FormalPoly>& x,
                                              const std::vector<FormalPoly>& y) {
    std::vector<FormalPoly> out(3);
    for (int i = 0; i < 3; ++i) {
        if (x[(size_t)i].is_zero()) continue;
        FormalPoly xi = x[(size_t)i].at(ArgForm::neg_l);
        for (int j = 0; j < 3; ++j) {
            if (y[(size_t)j].is_zero()) continue;
            FormalPoly f = xi * y[(size_t)j].at(ArgForm::l_plus_d);
            for (int k = 0; k < 3; ++k) {
                int c = sl2_c(i, j, k);
                if (c != 0) out[(size_t)k] += f * GaussRat((long)c);
            }
        }
    }
    return out;
}

} // namespace detail

/// Instantiate the RB identity on Cur(sl2) at the generic ansatz
/// R(e)=a_e(d)e+a_f(d)f+a_h(d)h, ... and extract the coefficient of each
/// generator at every unordered generator pair: 18 formal equations.
/// Pair order matches the classification write-up:
/// (h,h), (e,e), (f,f), (e,f), (e,h), (f,h).
inline EquationSystem derive_rb_system(int weight) {
    if (weight != 0 && weight != 1)
        raise(ErrorKind::catalog, "derive_rb_system: weight must be 0 or 1");
    using F = FormalPoly;
    const char* names[3] = {"e", "f", "h"};
    // column x of the generic matrix: coordinates (x_e, x_f, x_h)
    auto col = [&](int x) {
        std::vector<F> v;
        for (int row = 0; row < 3; ++row)
            v.push_back(F::token((CoefFn)(x * 3 + row), ArgForm::d));
        return v;
    };
    auto unit = [&](int x) {
        std::vector<F> v(3);
        v[(size_t)x] = F::constant(GaussRat(1));
        return v;
    };
    auto apply_R = [&](const std::vector<F>& w) {
        std::vector<F> out(3);
        for (int q = 0; q < 3; ++q)
            for (int p = 0; p < 3; ++p)
                if (!w[(size_t)p].is_zero())
                    out[(size_t)q] +=
                        w[(size_t)p] * F::token((CoefFn)(p * 3 + q), ArgForm::d);
        return out;
    };

    EquationSystem sys;
    sys.weight = weight;
    const std::pair<int, int> pairs[6] = {{2, 2}, {0, 0}, {1, 1},
                                          {0, 1}, {0, 2}, {1, 2}};
    for (auto [i, j] : pairs) {
        std::vector<F> lhs = detail::formal_bracket(col(i), col(j));
        std::vector<F> inner = detail::formal_bracket(col(i), unit(j));
        std::vector<F> inner2 = detail::formal_bracket(unit(i), col(j));
        for (int k = 0; k < 3; ++k) {
            inner[(size_t)k] += inner2[(size_t)k];
            int c = detail::sl2_c(i, j, k);
            if (weight != 0 && c != 0)
                inner[(size_t)k] += F::constant(GaussRat((long)(weight * c)));
        }
        std::vector<F> rhs = apply_R(inner);
        for (int k = 0; k < 3; ++k)
            sys.eqs.push_back({std::string(names[i]) + "," + names[j], names[k],
                               lhs[(size_t)k] - rhs[(size_t)k]});
    }
    return sys;
}

/// The classification systems transcribed literally, as LHS - RHS. The
/// weight enters only through the "+k" summands of equations 10-18.
inline EquationSystem reference_rb_system(int weight) {
    if (weight != 0 && weight != 1)
        raise(ErrorKind::catalog, "reference_rb_system: weight must be 0 or 1");
    using F = FormalPoly;
    constexpr ArgForm D = ArgForm::d, NL = ArgForm::neg_l, LD = ArgForm::l_plus_d;
    auto ae = [](ArgForm a) { return F::token(CoefFn::ae, a); };
    auto af = [](ArgForm a) { return F::token(CoefFn::af, a); };
    auto ah = [](ArgForm a) { return F::token(CoefFn::ah, a); };
    auto be = [](ArgForm a) { return F::token(CoefFn::be, a); };
    auto bf = [](ArgForm a) { return F::token(CoefFn::bf, a); };
    auto bh = [](ArgForm a) { return F::token(CoefFn::bh, a); };
    auto ce = [](ArgForm a) { return F::token(CoefFn::ce, a); };
    auto cf = [](ArgForm a) { return F::token(CoefFn::cf, a); };
    auto ch = [](ArgForm a) { return F::token(CoefFn::ch, a); };
    GaussRat two(2);
    F k = F::constant(GaussRat((long)weight));

    EquationSystem sys;
    sys.weight = weight;
    auto add = [&](const char* pair, const char* coord, F lhs, F rhs) {
        sys.eqs.push_back({pair, coord, lhs - rhs});
    };

    // pair (h,h)
    add("h,h", "e", ce(LD) * ch(NL) - ce(NL) * ch(LD),
        ae(D) * (ce(LD) - ce(NL)) + be(D) * (cf(NL) - cf(LD)));
    add("h,h", "f", cf(NL) * ch(LD) - cf(LD) * ch(NL),
        af(D) * (ce(LD) - ce(NL)) + bf(D) * (cf(NL) - cf(LD)));
    add("h,h", "h", ce(NL) * cf(LD) - ce(LD) * cf(NL),
        (ah(D) * (ce(LD) - ce(NL))) * two + (bh(D) * (cf(NL) - cf(LD))) * two);
    // pair (e,e)
    add("e,e", "e", (ae(LD) * ah(NL) - ae(NL) * ah(LD)) * two,
        ce(D) * (af(LD) - af(NL)) + (ae(D) * (ah(NL) - ah(LD))) * two);
    add("e,e", "f", (af(NL) * ah(LD) - af(LD) * ah(NL)) * two,
        cf(D) * (af(LD) - af(NL)) + (af(D) * (ah(NL) - ah(LD))) * two);
    add("e,e", "h", ae(NL) * af(LD) - ae(LD) * af(NL),
        ch(D) * (af(LD) - af(NL)) + (ah(D) * (ah(NL) - ah(LD))) * two);
    // pair (f,f)
    add("f,f", "e", (be(LD) * bh(NL) - be(NL) * bh(LD)) * two,
        ce(D) * (be(NL) - be(LD)) + (be(D) * (bh(LD) - bh(NL))) * two);
    add("f,f", "f", (bf(NL) * bh(LD) - bf(LD) * bh(NL)) * two,
        cf(D) * (be(NL) - be(LD)) + (bf(D) * (bh(LD) - bh(NL))) * two);
    add("f,f", "h", be(NL) * bf(LD) - be(LD) * bf(NL),
        ch(D) * (be(NL) - be(LD)) + (bh(D) * (bh(LD) - bh(NL))) * two);
    // pair (e,f)
    add("e,f", "e", (ah(NL) * be(LD) - ae(NL) * bh(LD)) * two,
        -(bh(LD) * ae(D)) * two - (ah(NL) * be(D)) * two +
            (ae(NL) + bf(LD) + k) * ce(D));
    add("e,f", "f", -((ah(NL) * bf(LD) - af(NL) * bh(LD)) * two),
        -(bh(LD) * af(D)) * two - (ah(NL) * bf(D)) * two +
            (ae(NL) + bf(LD) + k) * cf(D));
    add("e,f", "h", ae(NL) * bf(LD) - af(NL) * be(LD),
        -(bh(LD) * ah(D)) * two - (ah(NL) * bh(D)) * two +
            (ae(NL) + bf(LD) + k) * ch(D));
    // pair (e,h)
    add("e,h", "e", (ah(NL) * ce(LD) - ae(NL) * ch(LD)) * two,
        -((ae(NL) + ch(LD) + k) * ae(D)) * two + (af(NL) * be(D)) * two +
            cf(LD) * ce(D));
    add("e,h", "f", -((ah(NL) * cf(LD) - af(NL) * ch(LD)) * two),
        -((ae(NL) + ch(LD) + k) * af(D)) * two + (af(NL) * bf(D)) * two +
            cf(LD) * cf(D));
    add("e,h", "h", ae(NL) * cf(LD) - af(NL) * ce(LD),
        -((ae(NL) + ch(LD) + k) * ah(D)) * two + (af(NL) * bh(D)) * two +
            cf(LD) * ch(D));
    // pair (f,h)
    add("f,h", "e", (bh(NL) * ce(LD) - be(NL) * ch(LD)) * two,
        -(be(NL) * ae(D)) * two + ((bf(NL) + ch(LD) + k) * be(D)) * two -
            ce(LD) * ce(D));
    add("f,h", "f", -((bh(NL) * cf(LD) - bf(NL) * ch(LD)) * two),
        -(be(NL) * af(D)) * two + ((bf(NL) + ch(LD) + k) * bf(D)) * two -
            ce(LD) * cf(D));
    add("f,h", "h", be(NL) * cf(LD) - bf(NL) * ce(LD),
        -(be(NL) * ah(D)) * two + ((bf(NL) + ch(LD) + k) * bh(D)) * two -
            ce(LD) * ch(D));
    return sys;
}

/// Per-tag comparison of two systems up to an overall nonzero scalar.
struct MatchReport {
    struct Entry {
        std::string pair, coord;
        bool matched;
    };
    std::vector<Entry> entries;

    int matched() const {
        int n = 0;
        for (auto& e : entries) n += e.matched ? 1 : 0;
        return n;
    }
    int total() const { return (int)entries.size(); }
    bool perfect() const { return matched() == total(); }
};

inline MatchReport match_system(const EquationSystem& derived,
                                const EquationSystem& reference) {
    MatchReport rep;
    for (auto& ref : reference.eqs) {
        bool found = false, matched = false;
        for (auto& der : derived.eqs) {
            if (der.pair != ref.pair || der.coord != ref.coord) continue;
            found = true;
            matched = der.expr.normalized() == ref.expr.normalized();
            break;
        }
        rep.entries.push_back({ref.pair, ref.coord, found && matched});
    }
    return rep;
}

/// Coefficient-function assignment read off a conformal operator matrix on
/// Cur(sl2): fns[3*col + row] = m[row][col].
inline std::array<GaussPoly, 9> coefficient_functions(const ConformalMap& R) {
    if (R.dim() != 3)
        raise(ErrorKind::invalid_algebra, "expected a rank-3 operator matrix");
    std::array<GaussPoly, 9> fns;
    for (int col = 0; col < 3; ++col)
        for (int row = 0; row < 3; ++row)
            fns[(size_t)(col * 3 + row)] = R.m[(size_t)row][(size_t)col];
    return fns;
}

} // namespace confrb

#endif
