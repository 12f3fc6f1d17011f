#include "cogdim/errors.hpp"

namespace cogdim {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Cycle: return "CycleError";
        case ErrorKind::DuplicateId: return "DuplicateIdError";
        case ErrorKind::UnknownElement: return "UnknownElement";
        case ErrorKind::EmptyOmega: return "EmptyOmega";
        case ErrorKind::NotASubcomplex: return "NotASubcomplex";
        case ErrorKind::NegativeDimension: return "NegativeDimension";
        case ErrorKind::DifferentParent: return "DifferentParent";
        case ErrorKind::InfiniteBackend: return "InfiniteBackend";
        case ErrorKind::RigidityUnknown: return "RigidityUnknown";
        case ErrorKind::UnknownIsoStatus: return "UnknownIsoStatus";
        case ErrorKind::NonInjectiveMap: return "NonInjectiveMap";
        case ErrorKind::IncompatibleComposition: return "IncompatibleComposition";
        case ErrorKind::MissingMap: return "MissingMap";
        case ErrorKind::NotFlag: return "NotFlag";
        case ErrorKind::NotValidated: return "NotValidated";
        case ErrorKind::NotAdmissible: return "NotAdmissible";
        case ErrorKind::NotStrictDomain: return "NotStrictDomain";
        case ErrorKind::ConditionFailed: return "ConditionFailed";
        case ErrorKind::LabelMismatch: return "LabelMismatch";
        case ErrorKind::NonInjectiveMorphism: return "NonInjectiveMorphism";
        case ErrorKind::SizeGuard: return "SizeGuardExceeded";
        case ErrorKind::BadInput: return "BadInput";
        case ErrorKind::Internal: return "InternalError";
    }
    return "Error";
}

const Limits& Limits::defaults() {
    static const Limits lim{};
    return lim;
}

}  // namespace cogdim
