#pragma once

#include <stdexcept>
#include <string>

namespace kops {

/// Base class for every error raised by the kernel.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define KOPS_DEFINE_ERROR(Name)                                         \
    class Name : public Error {                                         \
    public:                                                             \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

KOPS_DEFINE_ERROR(NonSymmetricInput);
KOPS_DEFINE_ERROR(InvalidArgument);
KOPS_DEFINE_ERROR(TruncationMismatch);
KOPS_DEFINE_ERROR(TruncationExceeded);
KOPS_DEFINE_ERROR(NotReduced);
KOPS_DEFINE_ERROR(NotNormalised);
KOPS_DEFINE_ERROR(NotAugmented);
KOPS_DEFINE_ERROR(WindowExhausted);
KOPS_DEFINE_ERROR(InvalidFamily);
KOPS_DEFINE_ERROR(ModelTruncationExceeded);
KOPS_DEFINE_ERROR(RegistrationFailure);
KOPS_DEFINE_ERROR(RankUnderflow);
KOPS_DEFINE_ERROR(IndexOutOfRange);
KOPS_DEFINE_ERROR(ParseError);
KOPS_DEFINE_ERROR(ParityMismatch);

#undef KOPS_DEFINE_ERROR

} // namespace kops
