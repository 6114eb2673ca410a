#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace eds {

enum class Errc {
    IntraSideEdge,
    DuplicateEdge,
    SelfLoop,
    BadVertex,
    EmptySeed,
    ConflictExcluded,
    BudgetExceeded,
    NotInClass,
    NotAnEds,
    RetriesExhausted,
    FormatError,
};

class EdsError : public std::runtime_error {
public:
    EdsError(Errc code, std::string what) : std::runtime_error(std::move(what)), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

// Raised when a search exceeds its node/branch budget; never a silent wrong answer.
class BudgetError : public EdsError {
public:
    BudgetError(std::string what, std::uint64_t nodes)
        : EdsError(Errc::BudgetExceeded, std::move(what)), nodes_(nodes) {}
    std::uint64_t nodes() const { return nodes_; }

private:
    std::uint64_t nodes_;
};

} // namespace eds
