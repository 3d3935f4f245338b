#pragma once

#include "wpb/exact_scalar.hpp"
#include "wpb/families.hpp"
#include "wpb/test_function.hpp"
#include "wpb/weak_distribution.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace wpb {

/// Test-function labels:
///   gaussian:alpha=Q   polygauss:POLY,alpha=Q   indicator:A,B   exp:lambda=Q   zero
TestFunctionPtr resolve_test_function(std::string_view label);

/// Distribution specs:
///   phi:N   psi:N   x:N   delta:N   span:phi:{k:c,...}   span:psi:{k:c,...}
/// Span coefficients accept rationals and Gaussian rationals such as "1/2-3i".
WeakDistribution resolve_distribution(std::string_view spec);
FamilyIndexVector resolve_span(std::string_view spec);

/// "2", "-1/3", "i", "1/2+3i", "-2i".
ExactScalar parse_exact_scalar(std::string_view text);

using Operand = std::variant<WeakDistribution, TestFunctionPtr>;

/// Distribution specs take precedence; anything else must be a test function
/// label. Throws UnresolvedSpec when neither registry recognises the text.
Operand resolve_operand(std::string_view spec);

bool is_distribution_spec(std::string_view spec);

}  // namespace wpb
