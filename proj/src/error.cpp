// SPDX-License-Identifier: Apache-2.0
#include "qvt/error.hpp"

namespace qvt {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::zero_magnetic_field: return "ZeroMagneticField";
    case ErrorCode::superluminal_boost: return "SuperluminalBoost";
    case ErrorCode::perpendicular_fields: return "PerpendicularFields";
    case ErrorCode::degenerate_null_field: return "DegenerateNullField";
    case ErrorCode::timestep_too_large: return "TimestepTooLarge";
    case ErrorCode::superluminal_initial_velocity:
      return "SuperluminalInitialVelocity";
    case ErrorCode::exhaust_at_light_speed: return "ExhaustAtLightSpeed";
    case ErrorCode::index_too_large: return "IndexTooLarge";
    case ErrorCode::out_of_domain: return "OutOfDomain";
    case ErrorCode::quadrature_failure: return "QuadratureFailure";
    case ErrorCode::unsupported_arity: return "UnsupportedArity";
    case ErrorCode::config_parse: return "ConfigParseError";
    case ErrorCode::schema: return "SchemaError";
    case ErrorCode::io: return "IoError";
  }
  return "UnknownError";
}

}  // namespace qvt
