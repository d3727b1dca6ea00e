#pragma once

#include <stdexcept>
#include <string>

namespace mbmod {

enum class errc {
    duplicate_pair,
    zero_coefficient,
    index_out_of_range,
    non_prime_modulus,
    field_mismatch,
    not_connected,
    empty_module,
    size_limit_exceeded,
    unsatisfiable,
    parse_error,
    io_error,
};

const char* errc_name(errc code);

/// Library error. code() classifies the failure; what() carries the
/// location-specific message (offending pair, index, file position).
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace mbmod
