#pragma once

#include <stdexcept>
#include <string>

namespace cakecut {

// Error taxonomy. The CLI maps these to exit codes: input problems -> 2,
// protocol-level failures -> 3.

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error("DomainError: " + msg) {}
};

struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error("InputError: " + msg) {}
};

struct QueryPrecondition : std::runtime_error {
    explicit QueryPrecondition(const std::string& msg)
        : std::runtime_error("QueryPrecondition: " + msg) {}
};

struct ZeroValueResidue : std::runtime_error {
    explicit ZeroValueResidue(const std::string& msg)
        : std::runtime_error("ZeroValueResidue: " + msg) {}
};

struct StateError : std::runtime_error {
    explicit StateError(const std::string& msg) : std::runtime_error("StateError: " + msg) {}
};

// A protocol guarantee proven in the source material failed at runtime.
// Reaching this is a bug (or an override-constants run outside the guarantees).
struct ProtocolError : std::runtime_error {
    explicit ProtocolError(const std::string& msg) : std::runtime_error("ProtocolError: " + msg) {}
};

struct PigeonholeFailure : std::runtime_error {
    explicit PigeonholeFailure(const std::string& msg)
        : std::runtime_error("PigeonholeFailure: " + msg) {}
};

struct ActiveSetExhausted : std::runtime_error {
    explicit ActiveSetExhausted(const std::string& msg)
        : std::runtime_error("ActiveSetExhausted: " + msg) {}
};

struct IterationBudgetExceeded : std::runtime_error {
    explicit IterationBudgetExceeded(const std::string& msg)
        : std::runtime_error("IterationBudgetExceeded: " + msg) {}
};

}  // namespace cakecut
