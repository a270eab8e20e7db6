#pragma once

#include <stdexcept>
#include <string>

#include "posmat/bits.hpp"

namespace posmat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: unknown labels, subsets outside the ground set, bad files.
class InputError : public Error {
 public:
  using Error::Error;
};

// A presented structure does not satisfy the matroid axioms.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Basis family failing the exchange axiom; b1, b2 and the element a witness it.
class ExchangeError : public ValidationError {
 public:
  ExchangeError(const std::string& what, Mask b1, Mask b2, int a)
      : ValidationError(what), b1(b1), b2(b2), a(a) {}
  Mask b1, b2;
  int a;
};

// Cyclic-flat family failing one of the lattice axioms Z0..Z3.
class AxiomError : public ValidationError {
 public:
  AxiomError(const std::string& what, std::string axiom, Mask x, Mask y)
      : ValidationError(what), axiom(std::move(axiom)), x(x), y(y) {}
  std::string axiom;
  Mask x, y;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class CapacityError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace posmat
