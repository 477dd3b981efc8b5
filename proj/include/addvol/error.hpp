#pragma once

#include <stdexcept>
#include <string>

namespace addvol {

// Failure vocabulary shared by the library and the CLI exit-code map.
enum class Errc {
  parse_error,
  duplicate_element,
  empty_set,
  map_not_total,
  collinear,
  dim_not_two,
  dim_not_one,
  not_injective,
  no_valid_vector,
  params_out_of_range,
  t_out_of_range,
  construction_failed,
  budget_exceeded,
  not_integral,
};

inline const char* errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::parse_error: return "PARSE_ERROR";
    case Errc::duplicate_element: return "DUPLICATE_ELEMENT";
    case Errc::empty_set: return "EMPTY_SET";
    case Errc::map_not_total: return "MAP_NOT_TOTAL";
    case Errc::collinear: return "COLLINEAR";
    case Errc::dim_not_two: return "DIM_NOT_TWO";
    case Errc::dim_not_one: return "DIM_NOT_ONE";
    case Errc::not_injective: return "NOT_INJECTIVE";
    case Errc::no_valid_vector: return "NO_VALID_VECTOR";
    case Errc::params_out_of_range: return "PARAMS_OUT_OF_RANGE";
    case Errc::t_out_of_range: return "T_OUT_OF_RANGE";
    case Errc::construction_failed: return "CONSTRUCTION_FAILED";
    case Errc::budget_exceeded: return "BUDGET_EXCEEDED";
    case Errc::not_integral: return "NOT_INTEGRAL";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace addvol
