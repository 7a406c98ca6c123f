#pragma once

#include <stdexcept>
#include <string>

namespace choquet {

enum class Errc {
  dimension_mismatch,
  invalid_ball,
  dimension_bound,
  not_on_sphere,
  not_in_ball,
  not_probability,
  not_positive,
  hypothesis,
  missing_pieces,
  malformed_input,
  unknown_suite,
  lp_malformed,
  numeric_failure,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace choquet
