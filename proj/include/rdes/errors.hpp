#ifndef RDES_ERRORS_HPP_
#define RDES_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace rdes {

/// Malformed model document. Carries a human-readable position when known.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A structurally invalid model (determinism violation, undeclared symbol, ...).
class ModelError : public std::runtime_error {
public:
    explicit ModelError(const std::string& what) : std::runtime_error(what) {}
};

/// A configured resource cap was exceeded (enumeration depth, arena size, ...).
class LimitError : public std::runtime_error {
public:
    explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rdes

#endif // RDES_ERRORS_HPP_
