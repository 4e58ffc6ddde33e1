#pragma once

#include <stdexcept>
#include <string>

namespace unorm {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define UNORM_DEFINE_ERROR(Name)                                  \
    class Name : public Error {                                   \
    public:                                                       \
        explicit Name(const std::string& msg) : Error(#Name ": " + msg) {} \
    }

// Arithmetic layer
UNORM_DEFINE_ERROR(PrecisionExhausted);
UNORM_DEFINE_ERROR(NonUnit);
UNORM_DEFINE_ERROR(NotPrincipalUnit);

// Matrix layer
UNORM_DEFINE_ERROR(NonUnitDeterminant);
UNORM_DEFINE_ERROR(NotInShape);

// Twisted layer
UNORM_DEFINE_ERROR(NotInCompact);
UNORM_DEFINE_ERROR(OrderOverflow);
UNORM_DEFINE_ERROR(NotTopUnipotent);
UNORM_DEFINE_ERROR(NotTopSemisimple);

// Norm layer
UNORM_DEFINE_ERROR(NotCertifiedSemisimple);
UNORM_DEFINE_ERROR(SectionSearchExhausted);
UNORM_DEFINE_ERROR(NoUnitInKernel);
UNORM_DEFINE_ERROR(FastPathUnavailable);

// Descent layer
UNORM_DEFINE_ERROR(MiddleEigenvalueMissing);
UNORM_DEFINE_ERROR(NormEquationFailure);
UNORM_DEFINE_ERROR(ResidueSearchExhausted);
UNORM_DEFINE_ERROR(LiftObstruction);

// Driver layer
UNORM_DEFINE_ERROR(ConfigInvalid);

#undef UNORM_DEFINE_ERROR

} // namespace unorm
