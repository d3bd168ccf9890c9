#pragma once

#include <stdexcept>
#include <string>

namespace dynapot {

// Exceeded a configured expansion/degree budget.
struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& m) : std::runtime_error(m) {}
};

// Bad user-supplied configuration or arguments.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& m) : std::runtime_error(m) {}
};

// A numeric procedure failed to converge or lost too much precision.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& m) : std::runtime_error(m) {}
};

// A pointwise guard (critical-orbit exclusion, Y-locus, division floor) failed.
struct GuardError : std::runtime_error {
  explicit GuardError(const std::string& m) : std::runtime_error(m) {}
};

// Tri-state certification outcome for escape-rate evaluations.
enum class CertStatus { Escaped, Bounded, Undecided };

inline const char* to_string(CertStatus s) {
  switch (s) {
    case CertStatus::Escaped: return "escaped";
    case CertStatus::Bounded: return "bounded";
    default: return "undecided";
  }
}

}  // namespace dynapot
