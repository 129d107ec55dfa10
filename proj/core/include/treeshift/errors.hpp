#pragma once

#include <stdexcept>
#include <string>

namespace treeshift {

// Malformed input: unknown vertex, weight on a root, tail on a vertex with
// children, and similar misuse of the domain types.
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An object whose existence is guaranteed by the theory was not found.
// Always indicates a bug in this library, never a user error.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace treeshift
