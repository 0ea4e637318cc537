#ifndef RLS_ERRORS_HPP
#define RLS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rls {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// mismatched spacetime dimensions between operands
struct DimensionError : Error {
    using Error::Error;
};

// root not bracketed: the signal never reaches the target in the given range
struct BracketError : Error {
    using Error::Error;
};

// degenerate configuration (coincident frame points, singular system, ...)
struct SingularError : Error {
    using Error::Error;
};

struct ConvergenceError : Error {
    using Error::Error;
};

// parameter outside a worldline/clock domain
struct DomainError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

} // namespace rls

#endif
