#pragma once

#include <stdexcept>
#include <string>

namespace lpm {

// Base class for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input (path words, shorthand). Carries a 1-based position.
struct parse_error : error {
    parse_error(const std::string& what, std::size_t position)
        : error(what + " (position " + std::to_string(position) + ")"), position(position) {}
    std::size_t position;
};

// Structurally invalid input: unequal path lengths or endpoints.
struct shape_error : error {
    using error::error;
};

// Lower path rises above the upper path somewhere.
struct order_error : error {
    using error::error;
};

// Operation applied outside its domain (disconnected region, loop/coloop
// removal, subset outside the operation universe, non-Eulerian lattice, ...).
struct domain_error : error {
    using error::error;
};

// A configured cap was exceeded (basis count, hull size, face count).
struct resource_error : error {
    using error::error;
};

} // namespace lpm
