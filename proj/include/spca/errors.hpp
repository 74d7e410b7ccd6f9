#pragma once

#include <stdexcept>
#include <string>

namespace spca {

// Bad arguments: dimension mismatches, out-of-range parameters, broken
// type invariants.
struct invalid_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed input files. `line` is 1-based; 0 means the failure was not
// tied to a specific line (e.g. the file could not be opened).
struct parse_error : std::runtime_error {
    parse_error(const std::string& what, long line_no)
        : std::runtime_error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + what
                                         : what),
          line(line_no) {}
    long line;
};

// Factorization or solve produced non-finite values / lost positive
// definiteness.
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The l1 proximal step zeroed the entire iterate, so no usable loading
// vector exists for this penalty level.
struct over_shrinkage_error : numerical_error {
    over_shrinkage_error(double threshold_in, long iteration_in, int component_in = 0)
        : numerical_error(format(threshold_in, iteration_in, component_in)),
          threshold(threshold_in),
          iteration(iteration_in),
          component(component_in) {}

    double threshold;  // lambda * t, the applied soft-threshold level
    long iteration;    // 1-based iteration that collapsed to zero
    int component;     // 1-based component ordinal inside a multi-component fit; 0 otherwise

private:
    static std::string format(double threshold, long iteration, int component) {
        std::string msg = "soft threshold lambda*t = " + std::to_string(threshold) +
                          " zeroed the iterate at iteration " + std::to_string(iteration);
        if (component > 0) msg += " (component " + std::to_string(component) + ")";
        return msg;
    }
};

}  // namespace spca
