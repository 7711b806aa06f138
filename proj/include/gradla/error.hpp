#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gradla {

// Categories map one-to-one onto CLI exit codes.
enum class ErrorKind { Parse = 2, Precondition = 3, Mathematical = 4, Verification = 5 };

enum class ErrorCode {
    ParseError,
    DivisionByZero,
    IncompatibleRootOrders,
    InvalidParams,
    IllDefinedBicharacter,
    InvalidCommutationFactor,
    InvalidMultiplier,
    NoSolutionAtThisRootOrder,
    UnsupportedGroup,
    IncompatibleGroups,
    NotAssociative,
    DegreeViolation,
    NotLambdaCommutative,
    NoUnit,
    NotInvertible,
    MixedAlgebras,
    DegreeMismatch,
    InhomogeneousScalar,
    Singular,
    MissingUnit,
    NotSquare,
    NotDegreeZero,
    InvalidOrdering,
    OddEntries,
    NotCrossedProduct,
    NotParitySorted,
    OddDegree,
    SingularOddBlock,
    NonCommutingEntries,
    NotQuaternionic,
    VerificationFailed,
};

std::string_view code_name(ErrorCode c);
ErrorKind code_kind(ErrorCode c);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg);
    ErrorCode code() const { return code_; }
    ErrorKind kind() const { return code_kind(code_); }
    std::string_view name() const { return code_name(code_); }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& msg);

} // namespace gradla
