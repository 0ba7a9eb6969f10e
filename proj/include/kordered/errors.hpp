#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kord {

// Caller broke an operation's stated precondition (bad k, overlapping sets, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Argument outside the mathematical domain of the operation (empty set for a density, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// is_k_ordered on a graph that has no Hamiltonian cycle at all.
class NotHamiltonianError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A generator was asked for parameters it cannot realise.
class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Instance does not satisfy the hypotheses an extremal procedure relies on.
class HypothesisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace kord
