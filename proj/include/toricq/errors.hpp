#pragma once

#include <stdexcept>
#include <string>

namespace toricq {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define TORICQ_DEFINE_ERROR(Name)            \
    class Name : public Error {              \
    public:                                  \
        using Error::Error;                  \
    }

TORICQ_DEFINE_ERROR(InvalidInput);
TORICQ_DEFINE_ERROR(InvalidRay);
TORICQ_DEFINE_ERROR(UnsupportedCone);
TORICQ_DEFINE_ERROR(ShapeError);
TORICQ_DEFINE_ERROR(RangeError);
TORICQ_DEFINE_ERROR(TooLarge);
TORICQ_DEFINE_ERROR(Undefined);
TORICQ_DEFINE_ERROR(NotSplittable);
TORICQ_DEFINE_ERROR(NotSpanning);

#undef TORICQ_DEFINE_ERROR

}  // namespace toricq
