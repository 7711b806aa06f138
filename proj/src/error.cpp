#include "gradla/error.hpp"

namespace gradla {

std::string_view code_name(ErrorCode c)
{
    switch (c) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::IncompatibleRootOrders: return "IncompatibleRootOrders";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::IllDefinedBicharacter: return "IllDefinedBicharacter";
    case ErrorCode::InvalidCommutationFactor: return "InvalidCommutationFactor";
    case ErrorCode::InvalidMultiplier: return "InvalidMultiplier";
    case ErrorCode::NoSolutionAtThisRootOrder: return "NoSolutionAtThisRootOrder";
    case ErrorCode::UnsupportedGroup: return "UnsupportedGroup";
    case ErrorCode::IncompatibleGroups: return "IncompatibleGroups";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::DegreeViolation: return "DegreeViolation";
    case ErrorCode::NotLambdaCommutative: return "NotLambdaCommutative";
    case ErrorCode::NoUnit: return "NoUnit";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::MixedAlgebras: return "MixedAlgebras";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::InhomogeneousScalar: return "InhomogeneousScalar";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::MissingUnit: return "MissingUnit";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotDegreeZero: return "NotDegreeZero";
    case ErrorCode::InvalidOrdering: return "InvalidOrdering";
    case ErrorCode::OddEntries: return "OddEntries";
    case ErrorCode::NotCrossedProduct: return "NotCrossedProduct";
    case ErrorCode::NotParitySorted: return "NotParitySorted";
    case ErrorCode::OddDegree: return "OddDegree";
    case ErrorCode::SingularOddBlock: return "SingularOddBlock";
    case ErrorCode::NonCommutingEntries: return "NonCommutingEntries";
    case ErrorCode::NotQuaternionic: return "NotQuaternionic";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    }
    return "Unknown";
}

ErrorKind code_kind(ErrorCode c)
{
    switch (c) {
    case ErrorCode::ParseError:
        return ErrorKind::Parse;
    case ErrorCode::DivisionByZero:
    case ErrorCode::NotInvertible:
    case ErrorCode::Singular:
    case ErrorCode::SingularOddBlock:
    case ErrorCode::NoSolutionAtThisRootOrder:
        return ErrorKind::Mathematical;
    case ErrorCode::VerificationFailed:
        return ErrorKind::Verification;
    default:
        return ErrorKind::Precondition;
    }
}

Error::Error(ErrorCode code, const std::string& msg)
    : std::runtime_error(std::string(code_name(code)) + ": " + msg), code_(code)
{
}

void fail(ErrorCode code, const std::string& msg)
{
    throw Error(code, msg);
}

} // namespace gradla
