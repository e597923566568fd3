#pragma once

#include <stdexcept>

namespace rgh {

// An internal invariant failed: catalog, matrices and homology disagree.
class InternalError : public std::logic_error {
    using std::logic_error::logic_error;
};

// The requested homology mode is not available for the signature.
class ModeError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace rgh
