#pragma once

#include <stdexcept>
#include <string>

namespace liedim {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input (partition grammar, group grammar, JSON specs).
class parse_error : public error {
public:
    using error::error;
};

// Structurally valid input outside the domain of an operation
// (invalid partition for a family, overfull Levi composition, ...).
class domain_error : public error {
public:
    using error::error;
};

} // namespace liedim
