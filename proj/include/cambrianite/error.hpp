#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cambrianite {

enum class ErrorKind {
  Parse,
  NonFinite,
  SystemMismatch,
  DimensionMismatch,
  GroupTooLarge,
  CommutationClassTooLarge,
  NotSortable,
  LabelConflict,
  SingularCone,
  PointingViolation,
  NotInterior,
  NotCrystallographic,
  BasePointNotInLattice,
  UnknownRoot,
  FieldMismatch,
  Undecidable,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::NonFinite: return "NonFinite";
    case ErrorKind::SystemMismatch: return "SystemMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::GroupTooLarge: return "GroupTooLarge";
    case ErrorKind::CommutationClassTooLarge: return "CommutationClassTooLarge";
    case ErrorKind::NotSortable: return "NotSortable";
    case ErrorKind::LabelConflict: return "LabelConflict";
    case ErrorKind::SingularCone: return "SingularCone";
    case ErrorKind::PointingViolation: return "PointingViolation";
    case ErrorKind::NotInterior: return "NotInterior";
    case ErrorKind::NotCrystallographic: return "NotCrystallographic";
    case ErrorKind::BasePointNotInLattice: return "BasePointNotInLattice";
    case ErrorKind::UnknownRoot: return "UnknownRoot";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::Undecidable: return "Undecidable";
  }
  return "Unknown";
}

// All library failures are reported through this one exception type; the
// kind carries the machine-readable reason.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cambrianite
