#pragma once

#include <stdexcept>
#include <string>

namespace cogdim {

enum class ErrorKind {
    Cycle,                  // relation closure violates antisymmetry
    DuplicateId,
    UnknownElement,
    EmptyOmega,
    NotASubcomplex,
    NegativeDimension,
    DifferentParent,
    InfiniteBackend,        // operation needs a concrete (multiplication-capable) group
    RigidityUnknown,
    UnknownIsoStatus,
    NonInjectiveMap,
    IncompatibleComposition,
    MissingMap,
    NotFlag,
    NotValidated,
    NotAdmissible,
    NotStrictDomain,
    ConditionFailed,        // reflection-like condition (i)/(ii)/(iii)
    LabelMismatch,
    NonInjectiveMorphism,
    SizeGuard,              // complex/group exceeds the configured limits
    BadInput,               // malformed document or argument
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

const char* error_kind_name(ErrorKind kind);

/// Hard caps on the size of objects the library will materialize.
struct Limits {
    std::size_t max_complex_simplices = 1'000'000;
    std::size_t max_development_simplices = 10'000'000;
    std::size_t max_group_order = 10'000;

    static const Limits& defaults();
};

}  // namespace cogdim
