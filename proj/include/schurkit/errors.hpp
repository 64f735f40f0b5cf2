#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace schurkit {

/// Base of every exception raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define SCHURKIT_DEFINE_ERROR(Name)        \
    class Name : public Error {            \
    public:                                \
        using Error::Error;                \
    }

SCHURKIT_DEFINE_ERROR(NotAPartition);
/// A partition does not fit the fixed-size, zero-terminated layout.
SCHURKIT_DEFINE_ERROR(DoesNotFit);
SCHURKIT_DEFINE_ERROR(PredicateDomain);
SCHURKIT_DEFINE_ERROR(MaxMismatch);
SCHURKIT_DEFINE_ERROR(IndexOutOfRange);
SCHURKIT_DEFINE_ERROR(EntryOutOfRange);
SCHURKIT_DEFINE_ERROR(NotSymmetric);
SCHURKIT_DEFINE_ERROR(NotHomogeneous);
SCHURKIT_DEFINE_ERROR(ArityMismatch);
SCHURKIT_DEFINE_ERROR(OverflowError);
SCHURKIT_DEFINE_ERROR(ParseError);

#undef SCHURKIT_DEFINE_ERROR

/// Raised by the plain conjugate routine; `clause()` names the requires
/// clause that failed.
class PreconditionViolated : public Error {
public:
    PreconditionViolated(std::string clause, const std::string& what)
        : Error(what), clause_(std::move(clause)) {}

    const std::string& clause() const noexcept { return clause_; }

private:
    std::string clause_;
};

}  // namespace schurkit
