#ifndef CONFRB_RING_HPP
#define CONFRB_RING_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "confrb/error.hpp"

namespace confrb {

/// Index of a variable within its Ring's alphabet.
using VarId = int;

// Canonical variable names used throughout the library. Parameters
// (alpha, beta, t, q0..q3, ...) are ordinary names chosen per context.
namespace var {
inline constexpr const char* lambda = "l";  // bracket variable
inline constexpr const char* mu     = "m";  // second bracket variable
inline constexpr const char* nu     = "n";  // auxiliary action variable
inline constexpr const char* del    = "d";  // the module generator ∂
inline constexpr const char* d1     = "d1"; // tensor slot variables
inline constexpr const char* d2     = "d2";
inline constexpr const char* d3     = "d3";
} // namespace var

/// A declared, ordered, finite variable alphabet. Immutable; cheap to copy.
/// Two rings are interchangeable iff their name lists are equal.
class Ring {
public:
    Ring() : d_(empty_data()) {}

    static Ring make(std::vector<std::string> names) {
        auto d = std::make_shared<Data>();
        for (auto& n : names) {
            if (n.empty()) raise(ErrorKind::alphabet, "empty variable name");
            if (!d->index.emplace(n, (VarId)d->names.size()).second)
                raise(ErrorKind::alphabet, "duplicate variable name '" + n + "'");
            d->names.push_back(std::move(n));
        }
        return Ring(std::move(d));
    }

    int arity() const { return (int)d_->names.size(); }
    const std::vector<std::string>& names() const { return d_->names; }
    const std::string& name(VarId v) const { return d_->names.at((size_t)v); }

    std::optional<VarId> find(const std::string& n) const {
        auto it = d_->index.find(n);
        if (it == d_->index.end()) return std::nullopt;
        return it->second;
    }

    VarId var(const std::string& n) const {
        auto v = find(n);
        if (!v) raise(ErrorKind::alphabet, "variable '" + n + "' not declared");
        return *v;
    }

    bool has(const std::string& n) const { return find(n).has_value(); }

    bool same(const Ring& o) const {
        return d_ == o.d_ || d_->names == o.d_->names;
    }

    /// True iff every variable of `o` is declared here.
    bool contains(const Ring& o) const {
        for (auto& n : o.d_->names)
            if (!has(n)) return false;
        return true;
    }

private:
    struct Data {
        std::vector<std::string> names;
        std::map<std::string, VarId> index;
    };

    explicit Ring(std::shared_ptr<const Data> d) : d_(std::move(d)) {}

    static std::shared_ptr<const Data> empty_data() {
        static const auto d = std::make_shared<Data>();
        return d;
    }

    std::shared_ptr<const Data> d_;
};

/// Union alphabet; reuses an operand when it already contains the other,
/// otherwise builds the sorted union.
inline Ring join(const Ring& a, const Ring& b) {
    if (a.same(b)) return a;
    if (a.contains(b)) return a;
    if (b.contains(a)) return b;
    std::vector<std::string> names = a.names();
    names.insert(names.end(), b.names().begin(), b.names().end());
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    return Ring::make(std::move(names));
}

inline Ring join(const Ring& a, const Ring& b, const Ring& c) {
    return join(join(a, b), c);
}

inline Ring join(std::initializer_list<Ring> rings) {
    Ring r;
    for (auto& x : rings) r = join(r, x);
    return r;
}

} // namespace confrb

#endif
