#pragma once

#include <stdexcept>
#include <string>

namespace macmahon {

/// Raised when an input violates a structural constraint (non-monotone rows,
/// broken interlacing, malformed files). The message names the first violation.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace macmahon
