#ifndef CONFRB_RATIONAL_HPP
#define CONFRB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <string>

#include "confrb/error.hpp"

namespace confrb {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parse "p", "-p", "p/q" into an exact rational.
inline Rational parse_rational(const std::string& s) {
    auto bad = [&]() { raise(ErrorKind::parse, "bad rational: '" + s + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) bad();
        return Rational(num, den);
    } catch (const std::exception&) {
        bad();
    }
    return Rational(); // unreachable
}

inline std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

/// Element of Q(i): re + im*i, both exact rationals.
struct GaussRat {
    Rational re{0};
    Rational im{0};

    GaussRat() = default;
    GaussRat(long n) : re(n) {}
    GaussRat(Rational r) : re(std::move(r)) {}
    GaussRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat i() { return GaussRat(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussRat conj() const { return {re, -im}; }

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
        if (b.is_zero()) raise(ErrorKind::parse, "division by zero in Q(i)");
        Rational n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    GaussRat& operator+=(const GaussRat& b) { *this = *this + b; return *this; }
    GaussRat& operator-=(const GaussRat& b) { *this = *this - b; return *this; }
    GaussRat& operator*=(const GaussRat& b) { *this = *this * b; return *this; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    /// Total order used only for canonical term sorting, not arithmetic.
    friend bool operator<(const GaussRat& a, const GaussRat& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        if (re != 0) out += rational_str(re);
        if (im != 0) {
            if (!out.empty() && im > 0) out += "+";
            if (im == 1) out += "i";
            else if (im == -1) out += "-i";
            else out += rational_str(im) + "i";
        }
        return out;
    }
};

inline GaussRat parse_gauss(const std::string& re, const std::string& im) {
    return {parse_rational(re), parse_rational(im)};
}

} // namespace confrb

#endif
