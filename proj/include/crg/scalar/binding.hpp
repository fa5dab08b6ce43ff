#pragma once

#include <map>

#include "crg/scalar/unit_fraction.hpp"

namespace crg {

/// Numeric values for symbols. A symbol's conjugate partner, when not bound
/// explicitly, takes the complex conjugate value.
class Binding {
 public:
  Binding& set(const Symbol& s, GaussRat v);
  bool contains(const Symbol& s) const;
  const std::map<Symbol, GaussRat>& values() const noexcept { return values_; }

  // Throws UnboundSymbol, ZeroUnit or InconsistentConjugation.
  GaussRat value(const Symbol& s) const;

 private:
  std::map<Symbol, GaussRat> values_;
};

GaussRat substitute(const StarPoly& p, const Binding& b);
GaussRat substitute(const Monomial& m, const Binding& b);
GaussRat substitute(const UnitFraction& f, const Binding& b);

/// Symbolic substitution: each key symbol is replaced by its value and each
/// unmapped conjugate partner by the conjugated value. Unmapped symbols stay.
/// Throws NotAUnit if a denominator symbol is mapped to a non-unit.
using SymbolMap = std::map<Symbol, UnitFraction>;
UnitFraction substitute_symbols(const UnitFraction& f, const SymbolMap& map);

}  // namespace crg
