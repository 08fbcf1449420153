#pragma once

#include <stdexcept>
#include <string>

namespace qdp {

enum class ErrorKind {
  // input could not be parsed or has the wrong shape
  MalformedInput,
  // mathematically invalid request (hypothesis of an operation violated)
  CompositeP,
  EvenPrime,
  NotPGroup,
  NotUnimodular,
  PrimeMismatch,
  Inhomogeneous,
  ShapeMismatch,
  DomainMismatch,
  InvalidModel,
  NotMonotone,
  NotBorelSmith,
  NonIntegral,
  IncompleteInduction,
  NoWitnessFound,
  // resource guards
  SizeGuard,
  DegreeBudget,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qdp
