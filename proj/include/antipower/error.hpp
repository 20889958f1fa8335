#pragma once

#include <stdexcept>
#include <string>

namespace antipower {

enum class ErrorKind {
  parse,
  undefined_input,
  empty_range,
  shape,
  insufficient_data,
  invalid_generator,
  overflow,
  horizon_exceeded,
  cap_exceeded,
  unsupported_class,
  classification_inconsistency,
  unconfirmed_factor,
  theorem_violation,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return "parse";
    case ErrorKind::undefined_input: return "undefined-input";
    case ErrorKind::empty_range: return "empty-range";
    case ErrorKind::shape: return "shape";
    case ErrorKind::insufficient_data: return "insufficient-data";
    case ErrorKind::invalid_generator: return "invalid-generator";
    case ErrorKind::overflow: return "overflow";
    case ErrorKind::horizon_exceeded: return "horizon-exceeded";
    case ErrorKind::cap_exceeded: return "cap-exceeded";
    case ErrorKind::unsupported_class: return "unsupported-class";
    case ErrorKind::classification_inconsistency: return "classification-inconsistency";
    case ErrorKind::unconfirmed_factor: return "unconfirmed-factor";
    case ErrorKind::theorem_violation: return "theorem-violation";
  }
  return "unknown";
}

/// Every failure raised by the library. The kind is stable and drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace antipower
