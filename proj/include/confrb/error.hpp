#ifndef CONFRB_ERROR_HPP
#define CONFRB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace confrb {

enum class ErrorKind {
    alphabet,     // variable not declared / alphabets differ
    parse,        // malformed input (JSON, rationals, flags)
    rank,         // tensor rank mismatch
    split,        // invalid subalgebra splitting
    weight,       // transform not defined at this weight
    singular_map, // map not invertible
    catalog,      // unknown catalog entry / unsupported weight
    family,       // solution-family constraint violated
    form,         // degenerate bilinear form
    invalid_algebra,
    unsupported_algebra,
    cap,          // search lattice exceeds the candidate cap
    internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& msg) {
    throw Error(kind, msg);
}

} // namespace confrb

#endif
