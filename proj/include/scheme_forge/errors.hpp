#pragma once

#include <stdexcept>
#include <string>

namespace scheme_forge {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// finite fields
class SpecMismatch : public Error {
 public:
  SpecMismatch() : Error("field elements belong to different fields") {}
};
class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in finite field") {}
};
class NoInvolution : public Error {
 public:
  NoInvolution() : Error("field has odd degree; no involutory automorphism") {}
};
class DomainError : public Error {
 public:
  using Error::Error;
};
class InvalidField : public Error {
 public:
  using Error::Error;
};

// geometry and groups
class DegeneratePair : public Error {
 public:
  DegeneratePair() : Error("a 2-subset needs two distinct points") {}
};
class IndeterminateCrossRatio : public Error {
 public:
  IndeterminateCrossRatio() : Error("cross-ratio is indeterminate (0/0)") {}
};
class InvalidGroup : public Error {
 public:
  using Error::Error;
};

// schemes
class NotTransitive : public Error {
 public:
  NotTransitive() : Error("group action is not transitive on the domain") {}
};
class NotAScheme : public Error {
 public:
  using Error::Error;
};
class UnsupportedDomain : public Error {
 public:
  using Error::Error;
};
class ResourceGuard : public Error {
 public:
  using Error::Error;
};

}  // namespace scheme_forge
