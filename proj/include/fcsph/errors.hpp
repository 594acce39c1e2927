#pragma once

#include <stdexcept>
#include <string>

namespace fcsph {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rank out of range for the family, or an unknown family letter.
class InvalidCartanType : public Error {
 public:
  using Error::Error;
};

/// Operands belong to different root systems or algebras.
class MismatchedSystems : public Error {
 public:
  MismatchedSystems() : Error("operands belong to different root systems") {}
};

/// Enumeration would exceed the configured size budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Reduced-word enumeration hit its cap before a decision was reached.
class WordCapExceeded : public Error {
 public:
  using Error::Error;
};

/// Input set is not biconvex (not an inversion set).
class NotBiconvex : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace fcsph
