#pragma once

#include <stdexcept>
#include <string>

namespace paramplane {

// Every failure raised by the library derives from Error; kind() names the
// condition so callers (the CLI in particular) can report it verbatim.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define PARAMPLANE_DEFINE_ERROR(Name)                                         \
    class Name : public Error {                                               \
    public:                                                                   \
        explicit Name(const std::string& what) : Error(#Name, what) {}        \
    };

PARAMPLANE_DEFINE_ERROR(NotPalindromic)
PARAMPLANE_DEFINE_ERROR(OddDegree)
PARAMPLANE_DEFINE_ERROR(DegenerateLeading)
PARAMPLANE_DEFINE_ERROR(NoConvergence)
PARAMPLANE_DEFINE_ERROR(NonRealCoefficients)
PARAMPLANE_DEFINE_ERROR(DeflationResidual)
PARAMPLANE_DEFINE_ERROR(DegenerateParameter)
PARAMPLANE_DEFINE_ERROR(NotFixed)
PARAMPLANE_DEFINE_ERROR(UsageError)
PARAMPLANE_DEFINE_ERROR(ValidationError)
PARAMPLANE_DEFINE_ERROR(IoError)

#undef PARAMPLANE_DEFINE_ERROR

} // namespace paramplane
