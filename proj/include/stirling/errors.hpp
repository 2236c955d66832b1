#pragma once

#include <stdexcept>
#include <string>

namespace stirling {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violated precondition on otherwise well-formed input.
struct precondition_error : error {
    using error::error;
};

// The parameter triple (0,0,0) is outside the definition of the numbers.
struct degenerate_triple_error : precondition_error {
    degenerate_triple_error()
        : precondition_error("parameter triple (0,0,0) is degenerate") {}
};

// Query lies outside the convergence regime of the defining series.
struct regime_error : error {
    using error::error;
};

// The series did not meet the stopping rule within the term cap.
struct convergence_error : error {
    using error::error;
};

// Gamma evaluated at a pole that does not cancel against another factor.
// `argument` identifies the offending Gamma argument.
struct pole_error : error {
    std::string argument;
    pole_error(const std::string& msg, std::string arg)
        : error(msg), argument(std::move(arg)) {}
};

}  // namespace stirling
