#pragma once

#include <stdexcept>

namespace icode {

// Error taxonomy used across the library. The CLI maps these onto exit codes.

struct invalid_dimension : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct invalid_parameters : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct invalid_index : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct invalid_side_information : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct singular_system : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct not_decodable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace icode
