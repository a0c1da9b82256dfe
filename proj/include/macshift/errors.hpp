#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace macshift {

// Division by the zero element of the coefficient field.
class zero_division_error : public std::runtime_error {
public:
    explicit zero_division_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Exact polynomial division left a nonzero remainder.  The remainder is
// carried (rendered) so a broken identity upstream can be diagnosed.
class exact_division_error : public std::runtime_error {
public:
    exact_division_error(const std::string& msg, std::string remainder)
        : std::runtime_error(msg), remainder_text(std::move(remainder)) {}
    std::string remainder_text;
};

// A rational function has a pole where a finite limit was requested.
class pole_error : public std::runtime_error {
public:
    explicit pole_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An interpolation or basis-expansion linear system turned out singular or
// inconsistent.  Over the generic field this signals an implementation bug.
class linear_solve_error : public std::runtime_error {
public:
    explicit linear_solve_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace macshift
