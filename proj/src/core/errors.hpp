#pragma once

#include <stdexcept>
#include <string>

namespace f1an {

enum class Errc {
  InvalidNorm,
  Unbounded,
  TooLarge,
  InvalidRadii,
  InvalidElement,
  Unsupported,
  TagMismatch,
  DivisionByZero,
  PrecisionExhausted,
  NotBounded,
  CounterexampleFound,
  LatticeOverflow,
  InternalError,
  ParseError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidNorm: return "InvalidNorm";
    case Errc::Unbounded: return "Unbounded";
    case Errc::TooLarge: return "TooLarge";
    case Errc::InvalidRadii: return "InvalidRadii";
    case Errc::InvalidElement: return "InvalidElement";
    case Errc::Unsupported: return "Unsupported";
    case Errc::TagMismatch: return "TagMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::PrecisionExhausted: return "PrecisionExhausted";
    case Errc::NotBounded: return "NotBounded";
    case Errc::CounterexampleFound: return "CounterexampleFound";
    case Errc::LatticeOverflow: return "LatticeOverflow";
    case Errc::InternalError: return "InternalError";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

class F1Error : public std::runtime_error {
 public:
  F1Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace f1an
