#ifndef CONFRB_TENSOR_HPP
#define CONFRB_TENSOR_HPP

#include <map>
#include <string>
#include <vector>

#include "confrb/conformal.hpp"

namespace confrb {

inline std::string slot_var(int i) { return "d" + std::to_string(i + 1); }

inline Ring slot_ring(int rank) {
    std::vector<std::string> names;
    for (int i = 0; i < rank; ++i) names.push_back(slot_var(i));
    return Ring::make(std::move(names));
}

/// Element of L^{tensor rank} for a free conformal algebra: coefficients are
/// polynomials in the slot variables d1..d_rank (one per tensor factor),
/// indexed by generator tuples.
class TensorElement {
public:
    using Index = std::vector<int>;
    using TermMap = std::map<Index, GaussPoly>;

    static TensorElement zero(Ring r, int rank, int dim) {
        TensorElement t;
        t.ring_ = join(std::move(r), slot_ring(rank));
        t.rank_ = rank;
        t.dim_ = dim;
        return t;
    }

    const Ring& ring() const { return ring_; }
    int rank() const { return rank_; }
    int dim() const { return dim_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Index& idx, const GaussPoly& c) {
        if ((int)idx.size() != rank_)
            raise(ErrorKind::rank, "tensor index arity mismatch");
        for (int i : idx)
            if (i < 0 || i >= dim_) raise(ErrorKind::rank, "tensor index out of range");
        if (!ring_.contains(c.ring())) {
            Ring nr = join(ring_, c.ring());
            for (auto& [i, p] : terms_) p = p.promote(nr);
            ring_ = nr;
        }
        GaussPoly p = c.promote(ring_);
        if (p.is_zero()) return;
        auto it = terms_.find(idx);
        if (it == terms_.end()) {
            terms_.emplace(idx, std::move(p));
        } else {
            it->second += p;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    GaussPoly coeff(const Index& idx) const {
        auto it = terms_.find(idx);
        return it == terms_.end() ? GaussPoly::zero(ring_) : it->second.promote(ring_);
    }

    TensorElement promote(const Ring& r) const {
        TensorElement out;
        out.ring_ = join(r, ring_);
        out.rank_ = rank_;
        out.dim_ = dim_;
        for (auto& [idx, c] : terms_) out.terms_.emplace(idx, c.promote(out.ring_));
        return out;
    }

    friend TensorElement operator+(const TensorElement& a, const TensorElement& b) {
        if (a.rank_ != b.rank_ || a.dim_ != b.dim_)
            raise(ErrorKind::rank, "tensor rank/dimension mismatch");
        TensorElement out = a.promote(b.ring_);
        for (auto& [idx, c] : b.terms_) out.add_term(idx, c);
        return out;
    }

    friend TensorElement operator-(const TensorElement& a, const TensorElement& b) {
        return a + (b * GaussRat(-1));
    }

    friend TensorElement operator*(const TensorElement& a, const GaussRat& s) {
        TensorElement out = TensorElement::zero(a.ring_, a.rank_, a.dim_);
        for (auto& [idx, c] : a.terms_) out.add_term(idx, c * s);
        return out;
    }

    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        if (a.rank_ != b.rank_ || a.dim_ != b.dim_) return false;
        return (a - b).is_zero();
    }

    /// Apply a simultaneous substitution to every coefficient.
    TensorElement map_coeffs(const std::map<std::string, GaussPoly>& bindings,
                             const Ring& target) const {
        TensorElement out;
        out.ring_ = target;
        out.rank_ = rank_;
        out.dim_ = dim_;
        for (auto& [idx, c] : terms_) out.add_term(idx, c.substitute(bindings, target));
        return out;
    }

    std::string str(const std::vector<std::string>& gens) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto& [idx, c] : terms_) {
            if (!out.empty()) out += " + ";
            std::string mono;
            for (int i : idx) {
                if (!mono.empty()) mono += "(x)";
                mono += gens[(size_t)i];
            }
            out += "(" + c.str() + ")*" + mono;
        }
        return out;
    }

private:
    Ring ring_;
    int rank_ = 0;
    int dim_ = 0;
    TermMap terms_;
};

/// Left-module action of a on L^{tensor n}: sum over slots of the in-slot
/// lambda-bracket, with the bracket variable named `action_var` and the
/// slot's d renamed to its slot variable.
inline TensorElement tensor_action(const ConformalAlgebra& L, const ConformalElement& a,
                                   const TensorElement& T,
                                   const std::string& action_var = var::lambda) {
    int n = L.rank();
    if (T.dim() != n)
        raise(ErrorKind::rank, "tensor generators do not match the algebra");
    if ((int)a.coords.size() != n)
        raise(ErrorKind::rank, "element size does not match the algebra");
    Ring w = join(join(L.ring(), Ring::make({action_var})),
                  join(T.ring(), a.coords[0].ring()));
    GaussPoly nu = GaussPoly::variable(w, action_var);
    TensorElement out = TensorElement::zero(w, T.rank(), n);
    for (int g = 0; g < n; ++g) {
        const GaussPoly& fg = a.coords[(size_t)g];
        if (fg.is_zero()) continue;
        if (fg.involves(action_var))
            raise(ErrorKind::alphabet, "acting element involves the action variable");
        GaussPoly f = fg.promote(w).substitute({{var::del, -nu}}, w);
        for (auto& [idx, c] : T.terms()) {
            if (c.involves(action_var) || c.involves(var::del))
                raise(ErrorKind::alphabet, "tensor coefficient involves a bound variable");
            for (int slot = 0; slot < T.rank(); ++slot) {
                GaussPoly ds = GaussPoly::variable(w, slot_var(slot));
                GaussPoly shifted =
                    c.promote(w).substitute({{slot_var(slot), nu + ds}}, w);
                for (int k = 0; k < n; ++k) {
                    const GaussPoly& t = L.table(g, idx[(size_t)slot])[(size_t)k];
                    if (t.is_zero()) continue;
                    GaussPoly tk = t.promote(w).substitute(
                        {{var::lambda, nu}, {var::del, ds}}, w);
                    TensorElement::Index nidx = idx;
                    nidx[(size_t)slot] = k;
                    out.add_term(nidx, f * shifted * tk);
                }
            }
        }
    }
    return out;
}

} // namespace confrb

#endif
