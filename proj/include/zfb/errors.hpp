#pragma once

#include <stdexcept>
#include <string>

namespace zfb {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// graph construction / parsing
struct SelfLoop : Error { using Error::Error; };
struct DuplicateEdge : Error { using Error::Error; };
struct BadToken : Error { using Error::Error; };
struct MalformedGraph6 : Error { using Error::Error; };
struct EmptyEdgeSet : Error { using Error::Error; };
struct EmptyGraph : Error { using Error::Error; };

// solvers
struct BudgetExceeded : Error { using Error::Error; };
struct NotForcing : Error { using Error::Error; };
struct NotAcyclic : Error { using Error::Error; };
struct NotFull : Error { using Error::Error; };
struct NoEdges : Error { using Error::Error; };
struct InvalidOrder : Error { using Error::Error; };

// transfer preconditions
struct IsolatedVertex : Error { using Error::Error; };
struct Disconnected : Error { using Error::Error; };

// corpus / cli
struct BadParams : Error { using Error::Error; };

// Internal-consistency failures in the transfer pipeline. These branches are
// unreachable for valid inputs; when one fires it carries a machine-readable
// reproducer (JSON text) so the event can be filed and replayed.
struct DiagnosticError : Error {
    DiagnosticError(const std::string& what, std::string bundle_json)
        : Error(what), bundle(std::move(bundle_json)) {}
    std::string bundle;
};

struct NotInducedPath : DiagnosticError { using DiagnosticError::DiagnosticError; };
struct ConflictingRules : DiagnosticError { using DiagnosticError::DiagnosticError; };
struct CycleInOrientation : DiagnosticError { using DiagnosticError::DiagnosticError; };
struct WitnessInvalid : DiagnosticError { using DiagnosticError::DiagnosticError; };
struct PropertyViolated : DiagnosticError { using DiagnosticError::DiagnosticError; };
struct ForcingReplayFailed : DiagnosticError { using DiagnosticError::DiagnosticError; };

} // namespace zfb
