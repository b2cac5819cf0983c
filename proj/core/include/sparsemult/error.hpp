#ifndef SPARSEMULT_ERROR_HPP
#define SPARSEMULT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sparsemult {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or out-of-contract input (empty sets, dimension mismatches, bad indices).
class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(what) {}
};

/// A combinatorial hypothesis (H1, H2, H3, A1-A3) required by an operation does not hold.
class ConditionError : public Error {
public:
    explicit ConditionError(const std::string& what) : Error(what) {}
};

/// An internal invariant was breached; indicates a bug, never bad input.
class InvariantError : public Error {
public:
    explicit InvariantError(const std::string& what) : Error(what) {}
};

/// The dual-space iteration hit its order cap without the nullities stabilizing.
class StabilizationError : public Error {
public:
    explicit StabilizationError(const std::string& what) : Error(what) {}
};

} // namespace sparsemult

#endif
