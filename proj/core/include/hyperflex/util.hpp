#ifndef HYPERFLEX_UTIL_HPP
#define HYPERFLEX_UTIL_HPP

#include <stdexcept>
#include <string>
#include <cstdint>

namespace hyperflex {

// Input that violates a documented precondition (bad file, bad k, ...).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computation failed in a way the caller may be able to recover from
// (non-separable specialization, gluing mismatch, ...).
struct computation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A cross-check that must hold by theory failed; indicates a bug.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

struct gluing_mismatch : computation_error {
    using computation_error::computation_error;
};

struct subdivision_mismatch : computation_error {
    using computation_error::computation_error;
};

struct nonseparable_error : computation_error {
    using computation_error::computation_error;
};

struct valuation_off_curve : computation_error {
    using computation_error::computation_error;
};

inline std::int64_t binomial2(std::int64_t n) { return n * (n - 1) / 2; }

// Thread cap taken from HYPERFLEX_THREADS; 1 when unset or unparsable.
unsigned thread_cap();

} // namespace hyperflex

#endif
