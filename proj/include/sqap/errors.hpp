#pragma once

#include <stdexcept>
#include <string>

namespace sqap {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define SQAP_DEFINE_ERROR(NAME)                                    \
    class NAME : public Error {                                    \
    public:                                                        \
        using Error::Error;                                        \
    }

SQAP_DEFINE_ERROR(DimensionMismatch);
SQAP_DEFINE_ERROR(NotPowerOfTwo);
SQAP_DEFINE_ERROR(NonFiniteInput);
SQAP_DEFINE_ERROR(GranularityMismatch);
SQAP_DEFINE_ERROR(LengthMismatch);
SQAP_DEFINE_ERROR(KTooLarge);
SQAP_DEFINE_ERROR(MTooLarge);
SQAP_DEFINE_ERROR(BudgetTooSmall);
SQAP_DEFINE_ERROR(BehindCamera);
SQAP_DEFINE_ERROR(OutOfFrame);
SQAP_DEFINE_ERROR(InvalidSpec);
SQAP_DEFINE_ERROR(IoError);
SQAP_DEFINE_ERROR(OverflowError);

#undef SQAP_DEFINE_ERROR

} // namespace sqap
