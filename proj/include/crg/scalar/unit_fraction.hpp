#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "crg/scalar/star_poly.hpp"

namespace crg {

/// Element of the polynomial ring localized at the unit symbols: a StarPoly
/// over a monomial in unit symbols.
///
/// Canonical form: the denominator has coefficient 1 and shares no symbol
/// power with the content of the numerator; zero is 0/1.
class UnitFraction {
 public:
  UnitFraction() = default;
  UnitFraction(StarPoly num);  // NOLINT(google-explicit-constructor)
  UnitFraction(GaussRat c) : UnitFraction(StarPoly(std::move(c))) {}  // NOLINT
  UnitFraction(long c) : UnitFraction(StarPoly(c)) {}  // NOLINT
  explicit UnitFraction(Symbol s) : UnitFraction(StarPoly(s)) {}
  // Throws crg::NotAUnit if den contains a non-unit symbol.
  UnitFraction(StarPoly num, Monomial den);

  const StarPoly& numerator() const noexcept { return num_; }
  const Monomial& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  // Numerator is a single term over unit symbols.
  bool is_unit() const;
  std::set<Symbol> symbols() const;

  UnitFraction conj() const;
  // Throws crg::NotAUnit unless is_unit().
  UnitFraction inverse() const;
  // Negative exponents require is_unit().
  UnitFraction pow(int n) const;
  // Quotient rule for a frame derivation; unit denominators stay units.
  UnitFraction derive(const std::string& derivation) const;

  UnitFraction operator-() const;
  UnitFraction& operator+=(const UnitFraction& o);
  UnitFraction& operator-=(const UnitFraction& o);
  UnitFraction& operator*=(const UnitFraction& o);
  UnitFraction& operator/=(const UnitFraction& o) { return *this *= o.inverse(); }

  friend UnitFraction operator+(UnitFraction a, const UnitFraction& b) { return a += b; }
  friend UnitFraction operator-(UnitFraction a, const UnitFraction& b) { return a -= b; }
  friend UnitFraction operator*(UnitFraction a, const UnitFraction& b) { return a *= b; }
  friend UnitFraction operator/(UnitFraction a, const UnitFraction& b) { return a /= b; }
  friend bool operator==(const UnitFraction& a, const UnitFraction& b) {
    return a.den_ == b.den_ && a.num_ == b.num_;
  }
  friend bool operator!=(const UnitFraction& a, const UnitFraction& b) { return !(a == b); }

  // "-b/(a^2*conj(a))", "(b*c - e*a*conj(a))/(a^4*conj(a)^2)"
  std::string str() const;

 private:
  void canonicalize();

  StarPoly num_;
  Monomial den_;
};

std::string to_string(const UnitFraction& f);

/// Rewriting rules lhs -> rhs on monomials, closed under conjugation. Used for
/// derived units such as Delta := a11*a22 - a12*a21 via a11*a22 -> Delta + a12*a21.
/// Every rule must strictly decrease the exponent of some symbol of lhs that
/// rhs does not mention, so reduction terminates.
class Relations {
 public:
  void add_rule(const Monomial& lhs, const StarPoly& rhs);
  void merge(const Relations& o);
  bool empty() const noexcept { return rules_.empty(); }
  const std::vector<std::pair<Monomial, StarPoly>>& rules() const noexcept { return rules_; }

  StarPoly reduce(const StarPoly& p) const;
  UnitFraction reduce(const UnitFraction& f) const;
  bool equal(const UnitFraction& f, const UnitFraction& g) const;

 private:
  std::vector<std::pair<Monomial, StarPoly>> rules_;
};

// Canonical-form equality modulo optional relations: f*den(g) - g*den(f) reduces to 0.
bool equal_mod(const UnitFraction& f, const UnitFraction& g, const Relations* rel);

std::ostream& operator<<(std::ostream& os, const StarPoly& p);
std::ostream& operator<<(std::ostream& os, const UnitFraction& f);

}  // namespace crg
