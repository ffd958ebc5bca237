#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bisect {

/// Base class for every error thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class division_by_zero : public error {
public:
    division_by_zero() : error("division by zero") {}
    using error::error;
};

/// Malformed input text; carries the byte offset of the offending character.
class parse_error : public error {
    std::size_t pos_;

public:
    parse_error(const std::string& what, std::size_t pos)
        : error(what + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }
};

class zero_polynomial : public error {
public:
    zero_polynomial() : error("zero polynomial") {}
    using error::error;
};

class constant_polynomial : public error {
public:
    constant_polynomial() : error("constant polynomial") {}
    using error::error;
};

class endpoint_is_root : public error {
public:
    endpoint_is_root() : error("interval endpoint is a root") {}
    using error::error;
};

class geometric_root_anomaly : public error {
public:
    using error::error;
};

class unsupported_coefficients : public error {
public:
    using error::error;
};

class not_primitive : public error {
public:
    using error::error;
};

class unsupported_degree : public error {
public:
    using error::error;
};

class root_mismatch : public error {
public:
    using error::error;
};

class invalid_length : public error {
public:
    using error::error;
};

class degenerate_triangle : public error {
public:
    using error::error;
};

class degenerate_family : public error {
public:
    using error::error;
};

class precision_exceeded : public error {
public:
    using error::error;
};

} // namespace bisect
