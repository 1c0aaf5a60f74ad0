#ifndef HYPERLAP_ERRORS_HPP
#define HYPERLAP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hyperlap {

// Base of every library error.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bad user input: malformed files, out-of-range indices, invalid objects.
// The CLI maps these to exit status 1.
class input_error : public error {
public:
    using error::error;
};

class index_error : public input_error {
public:
    using input_error::input_error;
};

class level_error : public input_error {
public:
    using input_error::input_error;
};

class missing_skeleton_error : public input_error {
public:
    using input_error::input_error;
};

class invalid_walk_error : public input_error {
public:
    using input_error::input_error;
};

class dimension_error : public input_error {
public:
    using input_error::input_error;
};

// Enumeration would exceed the configured walk ceiling. Exit status 2.
class budget_error : public error {
public:
    using error::error;
};

struct SourceLocation {
    std::size_t line = 1;
    std::size_t column = 1;
    std::string excerpt;
};

class parse_error : public input_error {
public:
    parse_error(const std::string& message, SourceLocation where);

    const SourceLocation& location() const noexcept { return where_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::string message_;
    SourceLocation where_;
};

} // namespace hyperlap

#endif
