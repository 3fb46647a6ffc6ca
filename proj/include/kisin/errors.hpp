#pragma once

#include <stdexcept>
#include <string>

namespace kisin {

// Base class for everything thrown by the library.  `kind()` is a stable
// machine-readable tag; the what() string carries context.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define KISIN_DEFINE_ERROR(Name)                                            \
    class Name : public Error {                                             \
    public:                                                                  \
        explicit Name(const std::string& msg) : Error(#Name, msg) {}         \
    }

KISIN_DEFINE_ERROR(NotAUnit);
KISIN_DEFINE_ERROR(PrecisionExhausted);
KISIN_DEFINE_ERROR(SingularMatrix);
KISIN_DEFINE_ERROR(DimensionMismatch);
KISIN_DEFINE_ERROR(FieldTooSmall);
KISIN_DEFINE_ERROR(DescentViolation);
KISIN_DEFINE_ERROR(CommutationFailure);
KISIN_DEFINE_ERROR(NotInLoopGroup);
KISIN_DEFINE_ERROR(TypeMismatch);
KISIN_DEFINE_ERROR(ShapeMismatch);
KISIN_DEFINE_ERROR(RamifiedNotSupported);
KISIN_DEFINE_ERROR(SingularAtPi);
KISIN_DEFINE_ERROR(InvalidOrientation);
KISIN_DEFINE_ERROR(UnknownFormat);
KISIN_DEFINE_ERROR(ParseError);

#undef KISIN_DEFINE_ERROR

} // namespace kisin
