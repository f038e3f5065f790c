#pragma once

#include <stdexcept>
#include <string>

namespace tcd {

// Malformed or out-of-contract input: wrong arity, bad JSON, parameter out of range.
// The CLI maps this to exit code 1.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A generator exhausted its retry budget without meeting its target.
struct GenerationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A pipeline stage refused the instance on domain grounds (no compatible cycles,
// empty path family, no transporters for a required pair, certification failure).
// The CLI maps this to exit code 2.
struct PipelineAbort : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tcd
