// Exception types shared across the library.

#pragma once

#include <stdexcept>
#include <string>

namespace majorant {

struct ParameterOutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RadiusOutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ZeroConstantTerm : std::domain_error {
    using std::domain_error::domain_error;
};

struct NonzeroInnerConstantTerm : std::domain_error {
    using std::domain_error::domain_error;
};

struct InvalidSchwarz : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotAUnivalentWitness : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BudgetExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised for malformed function-spec strings or files (CLI exit code 65).
struct FunctionSpecError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace majorant
