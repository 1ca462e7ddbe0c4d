#pragma once

#include <stdexcept>
#include <string>

namespace ltorus {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// algebra
struct UndefinedOnZero : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// front
struct InvalidDiagram : Error { using Error::Error; };
struct UnknownComponent : Error { using Error::Error; };
struct InconsistentSeed : Error { using Error::Error; };

// ruling
struct StrandLimitExceeded : Error { using Error::Error; };
struct NotGeneralizedRuling : Error { using Error::Error; };

// closed form
struct NotSharp : Error { using Error::Error; };

// skein
struct BudgetExceeded : Error { using Error::Error; };

// dga
struct InvalidPotential : Error { using Error::Error; };
struct StructureViolation : Error { using Error::Error; };
struct RulingMismatch : Error { using Error::Error; };
struct AugmentationInvalid : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };

// barannikov
struct NotSquareZero : Error { using Error::Error; };
struct NotStrictlyUpperTriangular : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };

}  // namespace ltorus
