// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace qvt {

enum class ErrorCode {
  zero_magnetic_field,
  superluminal_boost,
  perpendicular_fields,
  degenerate_null_field,
  timestep_too_large,
  superluminal_initial_velocity,
  exhaust_at_light_speed,
  index_too_large,
  out_of_domain,
  quadrature_failure,
  unsupported_arity,
  config_parse,
  schema,
  io
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

const char* error_code_name(ErrorCode code);

}  // namespace qvt
