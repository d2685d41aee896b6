#pragma once
#include <stdexcept>
#include <string>

namespace knotdiff {

enum class ErrorKind {
  malformed_entry,
  edge_count,
  connectivity,
  ordering,
  length_mismatch,
  cap_exceeded,
  multi_component,
  singular_present,
  recursion_budget,
  index_out_of_range,
  degree_zero,
  basis_incomplete,
  mixed_degree,
  invalid_group,
  io,
  internal,
};

// Thrown on contract violations and resource caps.  Carries a kind so the CLI
// can map failures onto stable process exit codes.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  // 2 = rejected input, 3 = resource cap, 1 = internal fault
  int exit_code() const noexcept {
    switch (kind_) {
      case ErrorKind::cap_exceeded:
      case ErrorKind::recursion_budget:
        return 3;
      case ErrorKind::internal:
        return 1;
      default:
        return 2;
    }
  }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) {
  throw Error(k, msg);
}

}  // namespace knotdiff
