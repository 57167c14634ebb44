#pragma once

#include <stdexcept>
#include <string>

namespace ietlab {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define IETLAB_DEFINE_ERROR(NAME)                                        \
    struct NAME : Error {                                                \
        explicit NAME(const std::string& msg = #NAME) : Error(msg) {}    \
    }

IETLAB_DEFINE_ERROR(NotABijection);
IETLAB_DEFINE_ERROR(Reducible);
IETLAB_DEFINE_ERROR(NonPositiveLength);
IETLAB_DEFINE_ERROR(PrecisionExhausted);
IETLAB_DEFINE_ERROR(TieBreakUndefined);
IETLAB_DEFINE_ERROR(StepCapExceeded);
IETLAB_DEFINE_ERROR(NonComposablePath);
IETLAB_DEFINE_ERROR(NonPositiveEntry);
IETLAB_DEFINE_ERROR(DimensionMismatch);
IETLAB_DEFINE_ERROR(InconsistentParity);
IETLAB_DEFINE_ERROR(BadPermutationShape);
IETLAB_DEFINE_ERROR(NotPrime);
IETLAB_DEFINE_ERROR(BoundViolated);
IETLAB_DEFINE_ERROR(DegenerateInterval);
IETLAB_DEFINE_ERROR(OutOfDomain);
IETLAB_DEFINE_ERROR(NonMatchingBreakpoints);

#undef IETLAB_DEFINE_ERROR

}  // namespace ietlab
