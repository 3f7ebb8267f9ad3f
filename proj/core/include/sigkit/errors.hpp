#pragma once

#include <stdexcept>
#include <string>

namespace sigkit {

// Raised when an operation would need to enumerate beyond its supported
// problem size (2^n truth tables, n! permutation sweeps, 2^|family|
// inclusion-exclusion terms). Callers can treat it as "input too large"
// rather than "input invalid".
class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class not_probability_vector_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A candidate whose implied face count at some level is not an integer can
// never be realized; the offending level is kept for diagnostics.
class non_integer_face_count_error : public std::invalid_argument {
 public:
  non_integer_face_count_error(int level, const std::string& what)
      : std::invalid_argument(what), level_(level) {}
  int level() const noexcept { return level_; }

 private:
  int level_;
};

}  // namespace sigkit
