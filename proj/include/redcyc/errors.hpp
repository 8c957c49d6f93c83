#pragma once

#include <stdexcept>

namespace redcyc {

// Error taxonomy shared by all modules. Everything derives from the
// standard hierarchy so callers can be as coarse or fine as they like.

struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : std::domain_error {
    using std::domain_error::domain_error;
};

struct NoSuchElement : std::domain_error {
    using std::domain_error::domain_error;
};

// Raised when an operation requires the subgroup order to be coprime to
// the field characteristic and it is not.
struct UnsupportedCharacteristic : std::domain_error {
    using std::domain_error::domain_error;
};

struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace redcyc
