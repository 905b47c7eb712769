#ifndef BEREZIN_ERRORS_HPP
#define BEREZIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace berezin {

// Base class for everything this library throws on its own behalf.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Bad caller input: malformed strings, index sets out of range, |A| != |B|, ...
struct argument_error : error {
    explicit argument_error(const std::string& what) : error(what) {}
};

// Non-square matrix, dimension mismatch, layer size mismatch.
struct shape_error : error {
    explicit shape_error(const std::string& what) : error(what) {}
};

// Exactly singular matrix where an inverse or a division was required.
struct singular_error : error {
    explicit singular_error(const std::string& what) : error(what) {}
};

// Missing variable in an evaluation point, or a division that is not exact.
struct evaluation_error : error {
    explicit evaluation_error(const std::string& what) : error(what) {}
};

// Mixing Grassmann elements from algebras of different size, or violating
// an algebraic precondition (e.g. exponential of a non-nilpotent element).
struct algebra_error : error {
    explicit algebra_error(const std::string& what) : error(what) {}
};

// A lattice window too small for the requested path endpoints.
struct truncation_error : error {
    explicit truncation_error(const std::string& what) : error(what) {}
};

} // namespace berezin

#endif
