#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ebi {

// Root of the library's exception hierarchy. Everything thrown on purpose
// derives from this; anything else escaping the library is a bug.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally invalid data handed to an operation: mismatched lengths,
// out-of-range vertex references, ill-formed schedules.
class malformed_input_error : public error {
 public:
  using error::error;
};

// Text that does not match the labeling file format. `line` is 1-based.
class parse_error : public malformed_input_error {
 public:
  parse_error(const std::string& what, std::size_t line)
      : malformed_input_error(what + " (line " + std::to_string(line) + ")"),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A swap step whose edges are out of range, identical, non-adjacent, or
// equal-labeled at application time.
class invalid_swap_error : public error {
 public:
  using error::error;
};

// A schedule whose evaluation diverged from its contract: an intermediate
// labeling stopped being edge-friendly or a checkpoint index was missed.
// `prefix` is the number of steps applied when the violation was detected.
class schedule_error : public error {
 public:
  schedule_error(const std::string& what, std::size_t prefix)
      : error(what + " (after " + std::to_string(prefix) + " steps)"),
        prefix_(prefix) {}

  std::size_t prefix() const noexcept { return prefix_; }

 private:
  std::size_t prefix_;
};

// Arguments outside an operation's documented domain.
class parameter_error : public error {
 public:
  using error::error;
};

// Parameters that are in range yet admit no valid construction.
class infeasible_parameters_error : public parameter_error {
 public:
  using parameter_error::parameter_error;
};

// A schedule builder ran out of absorber capacity. Signals a defect in the
// construction itself, not bad user input.
class budget_error : public error {
 public:
  using error::error;
};

// A constructed labeling failed its own build-time verification.
class internal_error : public error {
 public:
  using error::error;
};

}  // namespace ebi
