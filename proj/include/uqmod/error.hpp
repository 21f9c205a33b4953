#pragma once

#include <stdexcept>
#include <string>

namespace uqmod {

enum class Err {
    DivisionByZero,
    ZeroInput,
    SpecializationPole,
    GroupMismatch,
    NotGeneralizedCartan,
    NotFiniteType,
    CartanConditionViolated,
    QiiIsOne,
    NoQJ,
    NonLinkablePair,
    InconsistentSymmetry,
    MultipleLinksFromVertex,
    OddCycle,
    ReducedInvariantViolated,
    DegreeBudgetExceeded,
    PositionOutOfRange,
    NotQLS,
    NotDominant,
    UnboundedSearch,
    NoCharacterExists,
    BudgetExceeded,
    InconsistentEAction,
    DimensionTooLarge,
    OrderHypothesisViolated,
    CheckFailed,
    ParseError,
    Io,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(Err kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
    Err kind() const { return kind_; }

private:
    Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& msg) { throw Error(kind, msg); }

const char* err_name(Err kind);

} // namespace uqmod
