#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

namespace equicolor {

enum class ErrorCode {
  OutOfRange,
  SelfLoop,
  DuplicateEdge,
  EmptyGraph,
  NotAComponent,
  ImproperSeed,
  PaletteTooSmall,
  NotIndependent,
  PaletteMismatch,
  NotComparable,
  MonotonicityViolation,
  HypothesisViolation,
  BoundViolation,
  SignatureMismatch,
  NotSeparated,
  UnacceptableMove,
  Stalled,
  NotConnected,
  NotDegreeList,
  GallaiTree,
  ComponentMissesAnchor,
  RegularGallaiComponent,
  ImproperInput,
  ImproperAux,
  PreconditionViolated,
  BudgetExceeded,
  ParseError,
  HeaderMismatch,
  InfeasibleParameters,
  InvalidArgument,
  InvariantViolation,
};

std::string_view to_string(ErrorCode code);

// Every module reports failures through this one exception type. `detail`
// carries machine-readable context (offending step, component, values) that
// the CLI forwards verbatim in its error JSON.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, nlohmann::json detail = nlohmann::json::object());

  ErrorCode code() const noexcept { return code_; }
  const nlohmann::json& detail() const noexcept { return detail_; }

  nlohmann::json to_json() const;

 private:
  ErrorCode code_;
  nlohmann::json detail_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message,
                       nlohmann::json detail = nlohmann::json::object());

// Internal consistency check that stays on in release builds.
inline void check(bool condition, const char* what) {
  if (!condition) fail(ErrorCode::InvariantViolation, what);
}

}  // namespace equicolor
