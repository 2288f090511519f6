#ifndef QUADLAT_ERRORS_HPP
#define QUADLAT_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace quadlat {

/// Bad field parameters: even or composite characteristic, reducible modulus, oversized order.
struct invalid_field : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An operation that needs a quasigroup was handed a pair (a,b) that does not define one,
/// or a pair outside the domain of a particular lemma (a = b, excluded set, ...).
struct invalid_pair : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Caller-side precondition that the operation checks and reports distinctly.
struct precondition_violation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A brute-force search hit its node limit before finishing.
struct budget_exhausted : std::runtime_error {
    explicit budget_exhausted(std::uint64_t nodes)
        : std::runtime_error("search budget exhausted after " + std::to_string(nodes) + " nodes"),
          nodes_visited(nodes)
    {
    }
    std::uint64_t nodes_visited;
};

} // namespace quadlat

#endif
