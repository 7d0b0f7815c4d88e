#ifndef CONFRB_POLY_HPP
#define CONFRB_POLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "confrb/rational.hpp"
#include "confrb/ring.hpp"

namespace confrb {

/// Sparse multivariate polynomial over Q(i), attached to a Ring (its declared
/// alphabet). Canonical form: no zero coefficients are stored, so structural
/// equality of the term maps is semantic equality. Immutable in spirit: all
/// operations return new values.
class GaussPoly {
public:
    using Key = std::vector<std::uint32_t>; // exponent per ring variable
    using TermMap = std::map<Key, GaussRat>;

    GaussPoly() : ring_(Ring()) {}
    explicit GaussPoly(Ring r) : ring_(std::move(r)) {}

    static GaussPoly zero(const Ring& r) { return GaussPoly(r); }

    static GaussPoly constant(const Ring& r, GaussRat c) {
        GaussPoly p(r);
        if (!c.is_zero()) p.terms_.emplace(Key((size_t)r.arity(), 0), std::move(c));
        return p;
    }

    static GaussPoly constant(const Ring& r, long n) {
        return constant(r, GaussRat(n));
    }

    static GaussPoly variable(const Ring& r, const std::string& name,
                              std::uint32_t exp = 1) {
        VarId v = r.var(name);
        GaussPoly p(r);
        if (exp == 0) return constant(r, 1);
        Key k((size_t)r.arity(), 0);
        k[(size_t)v] = exp;
        p.terms_.emplace(std::move(k), GaussRat(1));
        return p;
    }

    const Ring& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        if (terms_.empty()) return true;
        if (terms_.size() != 1) return false;
        for (auto e : terms_.begin()->first)
            if (e != 0) return false;
        return true;
    }

    /// Value of a constant polynomial; alphabet-error otherwise.
    GaussRat constant_value() const {
        if (!is_constant())
            raise(ErrorKind::alphabet, "polynomial is not constant: " + str());
        return terms_.empty() ? GaussRat(0) : terms_.begin()->second;
    }

    bool involves(const std::string& name) const {
        auto v = ring_.find(name);
        if (!v) return false;
        for (auto& [k, c] : terms_)
            if (k[(size_t)*v] != 0) return true;
        return false;
    }

    int degree(const std::string& name) const {
        auto v = ring_.find(name);
        if (!v) return 0;
        int d = 0;
        for (auto& [k, c] : terms_) d = std::max(d, (int)k[(size_t)*v]);
        return d;
    }

    /// Names of variables actually appearing with nonzero exponent.
    std::vector<std::string> support() const {
        std::vector<bool> used((size_t)ring_.arity(), false);
        for (auto& [k, c] : terms_)
            for (size_t i = 0; i < k.size(); ++i)
                if (k[i] != 0) used[i] = true;
        std::vector<std::string> out;
        for (size_t i = 0; i < used.size(); ++i)
            if (used[i]) out.push_back(ring_.name((VarId)i));
        return out;
    }

    friend bool operator==(const GaussPoly& a, const GaussPoly& b) {
        if (!a.ring_.same(b.ring_)) return false;
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const GaussPoly& a, const GaussPoly& b) { return !(a == b); }

    friend GaussPoly operator+(const GaussPoly& a, const GaussPoly& b) {
        require_same_ring(a, b, "add");
        GaussPoly out = a;
        for (auto& [k, c] : b.terms_) out.add_term(k, c);
        return out;
    }

    friend GaussPoly operator-(const GaussPoly& a, const GaussPoly& b) {
        require_same_ring(a, b, "sub");
        GaussPoly out = a;
        for (auto& [k, c] : b.terms_) out.add_term(k, -c);
        return out;
    }

    friend GaussPoly operator-(const GaussPoly& a) {
        GaussPoly out(a.ring_);
        for (auto& [k, c] : a.terms_) out.terms_.emplace(k, -c);
        return out;
    }

    friend GaussPoly operator*(const GaussPoly& a, const GaussPoly& b) {
        require_same_ring(a, b, "mul");
        GaussPoly out(a.ring_);
        for (auto& [ka, ca] : a.terms_)
            for (auto& [kb, cb] : b.terms_) {
                Key k = ka;
                for (size_t i = 0; i < k.size(); ++i) k[i] += kb[i];
                out.add_term(k, ca * cb);
            }
        return out;
    }

    friend GaussPoly operator*(const GaussPoly& a, const GaussRat& s) {
        GaussPoly out(a.ring_);
        if (s.is_zero()) return out;
        for (auto& [k, c] : a.terms_) out.terms_.emplace(k, c * s);
        return out;
    }
    friend GaussPoly operator*(const GaussRat& s, const GaussPoly& a) { return a * s; }

    GaussPoly& operator+=(const GaussPoly& b) { *this = *this + b; return *this; }
    GaussPoly& operator-=(const GaussPoly& b) { *this = *this - b; return *this; }
    GaussPoly& operator*=(const GaussPoly& b) { *this = *this * b; return *this; }

    GaussPoly pow(std::uint32_t e) const {
        GaussPoly out = constant(ring_, 1);
        for (std::uint32_t i = 0; i < e; ++i) out = out * *this;
        return out;
    }

    /// Re-express over a larger alphabet (name-matched); alphabet-error if a
    /// used variable is missing from the target.
    GaussPoly promote(const Ring& target) const {
        if (ring_.same(target)) {
            GaussPoly out = *this;
            out.ring_ = target;
            return out;
        }
        std::vector<int> remap((size_t)ring_.arity(), -1);
        for (int i = 0; i < ring_.arity(); ++i) {
            auto v = target.find(ring_.name(i));
            if (v) remap[(size_t)i] = *v;
        }
        GaussPoly out(target);
        for (auto& [k, c] : terms_) {
            Key nk((size_t)target.arity(), 0);
            for (size_t i = 0; i < k.size(); ++i) {
                if (k[i] == 0) continue;
                if (remap[i] < 0)
                    raise(ErrorKind::alphabet, "variable '" + ring_.name((VarId)i) +
                                                   "' missing from target alphabet");
                nk[(size_t)remap[i]] = k[i];
            }
            out.add_term(nk, c);
        }
        return out;
    }

    /// Simultaneous substitution. Bound names must be declared in this ring;
    /// images and all pass-through variables must live in `target`.
    GaussPoly substitute(const std::map<std::string, GaussPoly>& bindings,
                         const Ring& target) const {
        std::vector<const GaussPoly*> image((size_t)ring_.arity(), nullptr);
        for (auto& [name, img] : bindings) {
            VarId v = ring_.var(name); // alphabet-error if undeclared
            if (!target.contains(img.ring()))
                raise(ErrorKind::alphabet,
                      "substitution image for '" + name + "' not in target alphabet");
            image[(size_t)v] = &img;
        }
        // power tables for bound variables
        std::vector<std::vector<GaussPoly>> pows((size_t)ring_.arity());
        for (auto& [k, c] : terms_)
            for (size_t i = 0; i < k.size(); ++i)
                if (image[i] && k[i] >= pows[i].size()) {
                    auto& tab = pows[i];
                    if (tab.empty()) tab.push_back(constant(target, 1));
                    GaussPoly img = image[i]->promote(target);
                    while (tab.size() <= k[i]) tab.push_back(tab.back() * img);
                }
        GaussPoly out(target);
        for (auto& [k, c] : terms_) {
            Key passthrough((size_t)target.arity(), 0);
            GaussPoly acc = constant(target, c);
            for (size_t i = 0; i < k.size(); ++i) {
                if (k[i] == 0) continue;
                if (image[i]) {
                    acc = acc * pows[i][k[i]];
                } else {
                    auto tv = target.find(ring_.name((VarId)i));
                    if (!tv)
                        raise(ErrorKind::alphabet,
                              "unbound variable '" + ring_.name((VarId)i) +
                                  "' missing from target alphabet");
                    passthrough[(size_t)*tv] += k[i];
                }
            }
            GaussPoly mono(target);
            mono.terms_.emplace(std::move(passthrough), GaussRat(1));
            out += acc * mono;
        }
        return out;
    }

    GaussPoly subst_var(const std::string& name, const GaussPoly& img) const {
        return substitute({{name, img}}, join(ring_, img.ring()));
    }

    /// Collect coefficients with respect to `vars` (in the given order).
    /// Result maps exponent vectors over `vars` to residual polynomials
    /// free of every variable in `vars`; reassembly reproduces the input.
    std::map<Key, GaussPoly> coeff_extract(const std::vector<std::string>& vars) const {
        std::vector<VarId> vs;
        vs.reserve(vars.size());
        for (auto& n : vars) vs.push_back(ring_.var(n));
        std::map<Key, GaussPoly> out;
        for (auto& [k, c] : terms_) {
            Key sel(vs.size(), 0);
            Key rest = k;
            for (size_t i = 0; i < vs.size(); ++i) {
                sel[i] = k[(size_t)vs[i]];
                rest[(size_t)vs[i]] = 0;
            }
            auto [it, fresh] = out.try_emplace(std::move(sel), GaussPoly(ring_));
            it->second.add_term(rest, c);
        }
        return out;
    }

    /// True iff p(-v) == -p. Requires the polynomial to involve no variable
    /// other than `name` (alphabet-error otherwise).
    bool is_odd_in(const std::string& name) const {
        VarId v = ring_.var(name);
        for (auto& [k, c] : terms_)
            for (size_t i = 0; i < k.size(); ++i)
                if (k[i] != 0 && (VarId)i != v)
                    raise(ErrorKind::alphabet,
                          "is_odd_in: polynomial involves '" + ring_.name((VarId)i) + "'");
        GaussPoly neg = substitute({{name, -variable(ring_, name)}}, ring_);
        return neg == -*this;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [k, c] = *it;
            std::string coeff = c.str();
            std::string mono;
            for (size_t i = 0; i < k.size(); ++i) {
                if (k[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += ring_.name((VarId)i);
                if (k[i] > 1) mono += "^" + std::to_string(k[i]);
            }
            std::string piece;
            if (mono.empty()) {
                piece = coeff;
            } else if (coeff == "1") {
                piece = mono;
            } else if (coeff == "-1") {
                piece = "-" + mono;
            } else {
                if (coeff.find_first_of("+-", 1) != std::string::npos || !c.is_real())
                    coeff = "(" + coeff + ")";
                piece = coeff + "*" + mono;
            }
            if (first) {
                out = piece;
                first = false;
            } else if (!piece.empty() && piece[0] == '-') {
                out += " - " + piece.substr(1);
            } else {
                out += " + " + piece;
            }
        }
        return out;
    }

    /// Internal: accumulate a term, keeping the map canonical.
    void add_term(const Key& k, const GaussRat& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

private:
    static void require_same_ring(const GaussPoly& a, const GaussPoly& b,
                                  const char* op) {
        if (!a.ring_.same(b.ring_))
            raise(ErrorKind::alphabet,
                  std::string("alphabet mismatch in '") + op + "'");
    }

    Ring ring_;
    TermMap terms_;
};

/// Promote both operands to the join of their alphabets.
inline std::pair<GaussPoly, GaussPoly> unify(const GaussPoly& a, const GaussPoly& b) {
    if (a.ring().same(b.ring())) return {a, b};
    Ring r = join(a.ring(), b.ring());
    return {a.promote(r), b.promote(r)};
}

} // namespace confrb

#endif
