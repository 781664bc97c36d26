#pragma once

#include <stdexcept>
#include <string>

namespace rio {

// Length mismatch between fixed-length vectors.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An argument outside its documented domain.
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A page chain that is not monotone under the componentwise order.
struct ChainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// No admissible write exists: the write-once memory is full for this datum.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A support solver hit an input its dispatch tables do not cover. This is a
// hard internal error: the constructions are supposed to be total.
struct DispatchError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace rio
