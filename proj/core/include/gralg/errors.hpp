#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace gralg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("operands live over different fields") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A basis vector e^degree_index (both 1-based) used to report witnesses.
struct BasisRef {
  std::size_t degree = 0;
  std::size_t index = 0;
  friend bool operator==(const BasisRef&, const BasisRef&) = default;
};

using WitnessTriple = std::array<BasisRef, 3>;

std::string to_string(const WitnessTriple& w);

/// Raised when a candidate product fails the Maurer-Cartan equation.
class NotAssociative : public Error {
 public:
  explicit NotAssociative(WitnessTriple witness);
  const WitnessTriple& witness() const noexcept { return witness_; }

 private:
  WitnessTriple witness_;
};

/// Raised when a 2-cochain violates the cocycle identity.
class NotCocycle : public Error {
 public:
  explicit NotCocycle(WitnessTriple witness);
  const WitnessTriple& witness() const noexcept { return witness_; }

 private:
  WitnessTriple witness_;
};

}  // namespace gralg
