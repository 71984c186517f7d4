#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qb {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "Error"; }
};

#define QB_DECLARE_ERROR(Name)                                              \
    class Name : public Error {                                             \
    public:                                                                 \
        using Error::Error;                                                 \
        const char* kind() const noexcept override { return #Name; }        \
    };

QB_DECLARE_ERROR(PoleError)
QB_DECLARE_ERROR(OverflowError)
QB_DECLARE_ERROR(DomainError)
QB_DECLARE_ERROR(SeriesDivergence)
QB_DECLARE_ERROR(ToleranceNotMet)
QB_DECLARE_ERROR(NoCancellation)
QB_DECLARE_ERROR(NoReduction)
QB_DECLARE_ERROR(NonGenericParameters)
QB_DECLARE_ERROR(NearSingularParameter)
QB_DECLARE_ERROR(BranchMismatch)
QB_DECLARE_ERROR(Unsupported)
QB_DECLARE_ERROR(DivergentSpec)
QB_DECLARE_ERROR(ValidationError)
QB_DECLARE_ERROR(IoError)

#undef QB_DECLARE_ERROR

class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    const char* kind() const noexcept override { return "ParseError"; }
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

} // namespace qb
