#ifndef PEBBLE_ERRORS_HPP
#define PEBBLE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pebble {

// Bad value for a generator or formula parameter (e.g. K_0, C_2).
struct invalid_parameter : std::invalid_argument {
    explicit invalid_parameter(const std::string& what) : std::invalid_argument(what) {}
};

// Operands live on different graphs, or the graph lacks required structure.
struct invalid_argument_error : std::invalid_argument {
    explicit invalid_argument_error(const std::string& what) : std::invalid_argument(what) {}
};

// A pebbling move that violates adjacency or pebble-count preconditions.
struct illegal_move : std::logic_error {
    explicit illegal_move(const std::string& what) : std::logic_error(what) {}
};

// A configured size cap or compute budget was exceeded.
struct resource_limit : std::runtime_error {
    explicit resource_limit(const std::string& what) : std::runtime_error(what) {}
};

} // namespace pebble

#endif
