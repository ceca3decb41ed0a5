#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace teamproof {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, std::string expected)
        : Error("syntax error at position " + std::to_string(position) + ": expected " + expected),
          position_(position), expected_(std::move(expected)) {}
    std::size_t position() const { return position_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

#define TEAMPROOF_ERROR(Name)              \
    class Name : public Error {            \
    public:                                \
        using Error::Error;                \
    };

TEAMPROOF_ERROR(NonClassicalNegation)
TEAMPROOF_ERROR(InvalidPath)
TEAMPROOF_ERROR(DomainMismatch)
TEAMPROOF_ERROR(ResourceLimit)
TEAMPROOF_ERROR(DegreeOutOfRange)
TEAMPROOF_ERROR(LabelAbsent)
TEAMPROOF_ERROR(NonClassicalInput)
TEAMPROOF_ERROR(CaseMismatch)
TEAMPROOF_ERROR(ShapeMismatch)
TEAMPROOF_ERROR(NonClassicalAntecedent)
TEAMPROOF_ERROR(NonClassicalRightContraction)
TEAMPROOF_ERROR(FormulaNotDuplicated)
TEAMPROOF_ERROR(ContainsCut)
TEAMPROOF_ERROR(UnsupportedRule)
TEAMPROOF_ERROR(NonClassicalLambda1)
TEAMPROOF_ERROR(PartitionMismatch)
TEAMPROOF_ERROR(FormatError)

#undef TEAMPROOF_ERROR

}  // namespace teamproof
