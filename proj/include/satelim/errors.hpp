#pragma once

#include <stdexcept>
#include <string>

namespace satelim {

// Base class for everything the kernel can throw.
class kernel_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A caller violated a precondition (mixed rings, zero divisor, bad CLI usage).
class usage_error : public kernel_error {
public:
    using kernel_error::kernel_error;
};

// Division by zero and friends.
class arith_error : public kernel_error {
public:
    using kernel_error::kernel_error;
};

// An exponent or degree left the supported range.
class overflow_error : public kernel_error {
public:
    using kernel_error::kernel_error;
};

// A computation exceeded its configured resource budget.
class budget_error : public kernel_error {
public:
    using kernel_error::kernel_error;
};

// Malformed text input; carries a 1-based source position.
class parse_error : public kernel_error {
public:
    parse_error(const std::string& what, int line, int col)
        : kernel_error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + what),
          line_(line),
          col_(col) {}

    int line() const noexcept { return line_; }
    int col() const noexcept { return col_; }

private:
    int line_;
    int col_;
};

}  // namespace satelim
