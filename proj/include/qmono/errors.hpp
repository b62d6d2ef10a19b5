#pragma once

#include <stdexcept>
#include <string>

namespace qmono {

enum class ErrorCode {
  parse_error,
  undeclared_name,
  non_composable_relation,
  infinite_dimensional,
  unknown_arrow,
  unknown_vertex,
  projective_arrow_module,
  algebra_mismatch,
  shape_mismatch,
  illegal_morphism,
  not_arrow_sum,
  length_mismatch,
  invalid_quiver,
  invalid_expression,
  invalid_argument,
  resource_limit,
  io_error,
};

/// Machine-readable code name, e.g. "INFINITE_DIMENSIONAL".
inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse_error: return "PARSE_ERROR";
    case ErrorCode::undeclared_name: return "UNDECLARED_NAME";
    case ErrorCode::non_composable_relation: return "NON_COMPOSABLE_RELATION";
    case ErrorCode::infinite_dimensional: return "INFINITE_DIMENSIONAL";
    case ErrorCode::unknown_arrow: return "UNKNOWN_ARROW";
    case ErrorCode::unknown_vertex: return "UNKNOWN_VERTEX";
    case ErrorCode::projective_arrow_module: return "PROJECTIVE_ARROW_MODULE";
    case ErrorCode::algebra_mismatch: return "ALGEBRA_MISMATCH";
    case ErrorCode::shape_mismatch: return "SHAPE_MISMATCH";
    case ErrorCode::illegal_morphism: return "ILLEGAL_MORPHISM";
    case ErrorCode::not_arrow_sum: return "NOT_ARROW_SUM";
    case ErrorCode::length_mismatch: return "LENGTH_MISMATCH";
    case ErrorCode::invalid_quiver: return "INVALID_QUIVER";
    case ErrorCode::invalid_expression: return "INVALID_EXPRESSION";
    case ErrorCode::invalid_argument: return "INVALID_ARGUMENT";
    case ErrorCode::resource_limit: return "RESOURCE_LIMIT";
    case ErrorCode::io_error: return "IO_ERROR";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qmono
