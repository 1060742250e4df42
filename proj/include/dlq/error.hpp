#pragma once

#include <stdexcept>
#include <string>

namespace dlq {

// Malformed input data: bad Cartan matrix, unknown type label, index out of range.
struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A documented operation precondition does not hold; the message names the
// violated precondition ("w not I-reduced", "x not J-reduced-I", ...).
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace dlq
