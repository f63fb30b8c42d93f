#pragma once

#include <stdexcept>
#include <string>

namespace arw {

// Thrown when a computation depends on data that was not supplied
// (e.g. chaos statistics requested without the 4-correlation tuples).
struct dependency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a grid resolution violates the band-limit requirements.
struct resolution_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Thrown when an iterative numeric procedure fails to settle.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a statistical routine receives too little data.
struct statistics_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace arw
