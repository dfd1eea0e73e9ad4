#pragma once

#include <stdexcept>
#include <string>

namespace dpc {

enum class ErrorKind {
    InconsistentRotation,
    LoopOrMultiEdge,
    DisconnectedWhenRequired,
    UnknownVertex,
    NotACycle,
    BasepointNotOnCycle,
    CycleTooLong,
    WrongArity,
    Disconnected,
    PrecoloringConflict,
    BadK,
    BoundaryNotCycle,
    BoundaryNotGood,
    BadPrecoloring,
    NotInClassG,
    WouldMergeEdges,
    WouldCreateLoop,
    NotInternal,
    BadSlot,
    OutOfDomain,
    LedgerMissing,
    PreconditionFailed,
    AttemptsExhausted,
    ParseError,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

} // namespace dpc
