#include "crg/scalar/binding.hpp"

#include "crg/errors.hpp"

namespace crg {

Binding& Binding::set(const Symbol& s, GaussRat v) {
  values_[s] = std::move(v);
  return *this;
}

bool Binding::contains(const Symbol& s) const { return values_.count(s) != 0 || values_.count(s.conj()) != 0; }

GaussRat Binding::value(const Symbol& s) const {
  auto it = values_.find(s);
  auto jt = values_.find(s.conj());
  GaussRat v;
  if (it != values_.end()) {
    v = it->second;
    if (jt != values_.end() && jt->second != v.conj())
      throw InconsistentConjugation("values of " + s.str() + " and " + s.conj().str() + " are not conjugate");
  } else if (jt != values_.end()) {
    v = jt->second.conj();
  } else {
    throw UnboundSymbol("unbound symbol '" + s.str() + "'");
  }
  if (s.is_self_conjugate() && !v.is_real())
    throw InconsistentConjugation("real symbol '" + s.str() + "' bound to " + to_string(v));
  if (s.is_unit() && v.is_zero()) throw ZeroUnit("unit '" + s.str() + "' bound to 0");
  return v;
}

GaussRat substitute(const Monomial& m, const Binding& b) {
  GaussRat out(1);
  for (const auto& [s, e] : m.factors()) {
    const GaussRat v = b.value(s);
    for (unsigned k = 0; k < e; ++k) out *= v;
  }
  return out;
}

GaussRat substitute(const StarPoly& p, const Binding& b) {
  GaussRat out;
  for (const auto& [m, c] : p.terms()) out += c * substitute(m, b);
  return out;
}

GaussRat substitute(const UnitFraction& f, const Binding& b) {
  const GaussRat den = substitute(f.denominator(), b);
  // Units are nonzero, so den != 0 once every factor passed value().
  return substitute(f.numerator(), b) / den;
}

namespace {

UnitFraction lookup(const Symbol& s, const SymbolMap& map) {
  auto it = map.find(s);
  if (it != map.end()) return it->second;
  auto jt = map.find(s.conj());
  if (jt != map.end()) return jt->second.conj();
  return UnitFraction(s);
}

}  // namespace

UnitFraction substitute_symbols(const UnitFraction& f, const SymbolMap& map) {
  UnitFraction num;
  for (const auto& [m, c] : f.numerator().terms()) {
    UnitFraction t(c);
    for (const auto& [s, e] : m.factors()) t *= lookup(s, map).pow(static_cast<int>(e));
    num += t;
  }
  UnitFraction den(1);
  for (const auto& [s, e] : f.denominator().factors()) den *= lookup(s, map).pow(static_cast<int>(e));
  return num / den;
}

}  // namespace crg
