#ifndef UGTOP_ERRORS_HPP
#define UGTOP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ugtop {

/// Malformed input data (bad instance, size mismatch, invalid witness, ...).
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An exhaustive solver refused because the search space exceeds its budget.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Text format parse failure, carries the 1-based line number.
struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

} // namespace ugtop

#endif
