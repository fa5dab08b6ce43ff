#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crg {

// Base of every error raised by the library. The CLI maps these to exit code 2
// (input problems) or reports them as failed checks.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// scalar_kernel
class NotAUnit : public Error {
 public:
  using Error::Error;
};
class UnboundSymbol : public Error {
 public:
  using Error::Error;
};
class ZeroUnit : public Error {
 public:
  using Error::Error;
};
class InconsistentConjugation : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t column)
      : Error(what + " at column " + std::to_string(column)), column_(column) {}
  // 1-based column of the offending token; end of input is length + 1.
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

// matrix_algebra
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};
class NotInvertibleInRing : public Error {
 public:
  using Error::Error;
};

// ambiguity_groups
class MissingParam : public Error {
 public:
  using Error::Error;
};
class ClosureViolation : public Error {
 public:
  ClosureViolation(const std::string& what, std::size_t residual_terms)
      : Error(what), residual_terms_(residual_terms) {}
  std::size_t residual_terms() const noexcept { return residual_terms_; }

 private:
  std::size_t residual_terms_;
};
class PatternMismatch : public Error {
 public:
  using Error::Error;
};

// frame_calculus
class UntabulatedBracket : public Error {
 public:
  using Error::Error;
};

// hypersurface_lab
class PointNotOnM : public Error {
 public:
  using Error::Error;
};
class PoleAtPoint : public Error {
 public:
  using Error::Error;
};
class ZeroDenominator : public Error {
 public:
  using Error::Error;
};

// Malformed declarative input (preset files, manifold files, map files).
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace crg
