#pragma once

#include <stdexcept>
#include <string>

namespace tb {

/// Base class for all domain errors raised by the library.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

struct contractible_loop : domain_error {
    explicit contractible_loop(const std::string& w = "walk reduces to the empty word") : domain_error(w) {}
};
struct not_composable : domain_error {
    explicit not_composable(const std::string& w = "letters do not compose") : domain_error(w) {}
};
struct not_monotone : domain_error {
    explicit not_monotone(const std::string& w = "walk is not monotone (CVb)") : domain_error(w) {}
};
struct not_simple : domain_error {
    explicit not_simple(const std::string& w = "loop is not simple") : domain_error(w) {}
};
struct homotopic_inputs : domain_error {
    explicit homotopic_inputs(const std::string& w = "inputs are homotopic loops") : domain_error(w) {}
};
struct not_chain_map : domain_error {
    explicit not_chain_map(const std::string& w = "map does not commute with differentials") : domain_error(w) {}
};
struct not_minimal : domain_error {
    explicit not_minimal(const std::string& w = "complex is not minimal") : domain_error(w) {}
};
struct not_coprime : domain_error {
    explicit not_coprime(const std::string& w = "rank and total degree are not coprime") : domain_error(w) {}
};
struct search_too_large : domain_error {
    explicit search_too_large(const std::string& w = "enumeration exceeds configured bounds") : domain_error(w) {}
};
struct not_simple_twist_curve : domain_error {
    explicit not_simple_twist_curve(const std::string& w = "twist curve has self-intersections") : domain_error(w) {}
};
struct not_spherical : domain_error {
    explicit not_spherical(const std::string& w = "loop is not spherical") : domain_error(w) {}
};

} // namespace tb
