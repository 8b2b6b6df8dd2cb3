#ifndef CONDTRUSS_ERROR_HPP
#define CONDTRUSS_ERROR_HPP

#include <stdexcept>

namespace condtruss {

// Error taxonomy mirrored by the CLI exit codes:
// usage/parse -> 2, data format -> 3, lookup -> 4.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct format_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct lookup_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace condtruss

#endif
