#pragma once

#include "gradla/error.hpp"
#include "gradla/presets.hpp"

#include <functional>

namespace testing_helpers {

inline gradla::ErrorCode code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const gradla::Error& e) {
        return e.code();
    }
    return gradla::ErrorCode::VerificationFailed;
}

inline gradla::GradedMatrix mat(const gradla::GradedAlgebra& a, const std::vector<gradla::GroupElement>& nu,
                                std::vector<gradla::AlgebraElement> entries)
{
    return gradla::GradedMatrix(a, nu, nu, std::move(entries));
}

} // namespace testing_helpers
