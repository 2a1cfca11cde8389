#pragma once

#include <stdexcept>
#include <string>

namespace meshforge {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define MESHFORGE_ERROR(Name)                                        \
    struct Name : Error {                                            \
        explicit Name(const std::string& msg) : Error(#Name ": " + msg) {} \
    }

MESHFORGE_ERROR(SyntaxError);
MESHFORGE_ERROR(UndeclaredVertex);
MESHFORGE_ERROR(DuplicateId);
MESHFORGE_ERROR(InvalidDynkinIndex);
MESHFORGE_ERROR(UnsupportedFormat);
MESHFORGE_ERROR(BoundMismatch);
MESHFORGE_ERROR(QuiverMismatch);
MESHFORGE_ERROR(BoundTooSmall);
MESHFORGE_ERROR(NotStabilizedInput);
MESHFORGE_ERROR(EmptyIdempotent);
MESHFORGE_ERROR(MeshUndefined);
MESHFORGE_ERROR(PairingMissing);
MESHFORGE_ERROR(NotStable);
MESHFORGE_ERROR(ValidationFailed);
MESHFORGE_ERROR(NotStabilized);
MESHFORGE_ERROR(ProjectiveVertex);
MESHFORGE_ERROR(MissingMiddleTerms);
MESHFORGE_ERROR(IncompatibleEndpoints);
MESHFORGE_ERROR(NonUnitScalar);
MESHFORGE_ERROR(NotAComplex);
MESHFORGE_ERROR(NotAugmented);
MESHFORGE_ERROR(InfiniteDimensional);
MESHFORGE_ERROR(OutOfMemoryBudget);

#undef MESHFORGE_ERROR

}  // namespace meshforge
