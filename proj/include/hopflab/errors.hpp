#pragma once

#include <stdexcept>
#include <string>

namespace hopflab {

// Structural misuse (wrong shapes, wrong fields, bad parameters) throws.
// Mathematical failures (an axiom that does not hold) are reported, not thrown.

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct FieldMismatch : Error {
  explicit FieldMismatch(const std::string& msg) : Error("field mismatch: " + msg) {}
};

struct DimMismatch : Error {
  explicit DimMismatch(const std::string& msg) : Error("dimension mismatch: " + msg) {}
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct NoRoot : Error {
  explicit NoRoot(const std::string& msg) : Error("no root of unity: " + msg) {}
};

struct NotInvertible : Error {
  explicit NotInvertible(const std::string& msg) : Error("not invertible: " + msg) {}
};

struct BadParams : Error {
  explicit BadParams(const std::string& msg) : Error("bad parameters: " + msg) {}
};

struct ClosureFailure : Error {
  explicit ClosureFailure(const std::string& msg) : Error("closure failure: " + msg) {}
};

struct BraidingNotLinear : Error {
  explicit BraidingNotLinear(const std::string& msg)
      : Error("braiding is not linear over the given Hopf algebra: " + msg) {}
};

struct NotAzumaya : Error {
  explicit NotAzumaya(const std::string& msg) : Error("algebra is not Azumaya: " + msg) {}
};

struct SearchBudgetExceeded : Error {
  explicit SearchBudgetExceeded(const std::string& msg)
      : Error("search budget exceeded: " + msg) {}
};

struct WireMismatch : Error {
  explicit WireMismatch(const std::string& msg) : Error("wire mismatch: " + msg) {}
};

struct UnresolvedBox : Error {
  explicit UnresolvedBox(const std::string& msg) : Error("unresolved box: " + msg) {}
};

struct BadInput : Error {
  explicit BadInput(const std::string& msg) : Error("bad input: " + msg) {}
};

}  // namespace hopflab
