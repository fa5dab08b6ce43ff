#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "crg/scalar/gauss_rational.hpp"
#include "crg/scalar/symbol.hpp"

namespace crg {

/// Power product of symbols. Exponents are positive; the empty product is 1.
class Monomial {
 public:
  using Factor = std::pair<Symbol, unsigned>;

  Monomial() = default;
  explicit Monomial(Symbol s, unsigned exp = 1);
  // Factors in any order; duplicates merge, zero exponents drop.
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  bool is_one() const noexcept { return factors_.empty(); }
  unsigned degree() const noexcept;
  unsigned exponent(const Symbol& s) const;
  bool only_units() const;

  bool divides(const Monomial& other) const;
  // Precondition: divides(other).
  Monomial quotient_of(const Monomial& other) const;
  // Component-wise minimum.
  static Monomial gcd(const Monomial& a, const Monomial& b);
  static Monomial lcm(const Monomial& a, const Monomial& b);

  Monomial conj() const;
  Monomial without(const Symbol& s) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  // a*conj(a)^2*b
  std::string str() const;

 private:
  std::vector<Factor> factors_;  // sorted by Symbol order
};

// Degree-lexicographic: higher total degree first, then lexicographic over
// the global symbol order.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Polynomial over Gaussian rationals in the conjugation-closed symbol
/// universe. Canonical: no zero coefficients, terms in MonomialOrder.
class StarPoly {
 public:
  using Terms = std::map<Monomial, GaussRat, MonomialOrder>;

  StarPoly() = default;
  StarPoly(GaussRat c);  // NOLINT(google-explicit-constructor)
  StarPoly(long c) : StarPoly(GaussRat(c)) {}  // NOLINT(google-explicit-constructor)
  explicit StarPoly(Symbol s);
  explicit StarPoly(Monomial m, GaussRat c = GaussRat(1));

  const Terms& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  GaussRat constant_term() const;
  bool is_single_term() const noexcept { return terms_.size() == 1; }
  unsigned degree() const;
  std::set<Symbol> symbols() const;

  StarPoly conj() const;
  StarPoly pow(unsigned n) const;
  // Formal partial derivative with respect to s (conj(s) is a separate variable).
  StarPoly partial(const Symbol& s) const;
  // Leibniz extension of a derivation: X(s) becomes the atom s.derive(X).
  StarPoly derive(const std::string& derivation) const;
  // Multiply every term by a monomial.
  StarPoly times(const Monomial& m) const;
  // Divide every term by m; precondition: m divides each monomial.
  StarPoly divided_by(const Monomial& m) const;
  // Minimum exponent of each symbol over all terms.
  Monomial content_monomial() const;

  StarPoly operator-() const;
  StarPoly& operator+=(const StarPoly& o);
  StarPoly& operator-=(const StarPoly& o);
  StarPoly& operator*=(const StarPoly& o);
  StarPoly& operator*=(const GaussRat& c);

  friend StarPoly operator+(StarPoly a, const StarPoly& b) { return a += b; }
  friend StarPoly operator-(StarPoly a, const StarPoly& b) { return a -= b; }
  friend StarPoly operator*(const StarPoly& a, const StarPoly& b);
  friend StarPoly operator*(StarPoly a, const GaussRat& c) { return a *= c; }
  friend StarPoly operator*(const GaussRat& c, StarPoly a) { return a *= c; }
  friend bool operator==(const StarPoly& a, const StarPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const StarPoly& a, const StarPoly& b) { return !(a == b); }

  void add_term(const Monomial& m, const GaussRat& c);

  // Expression-grammar rendering, e.g. "b1*a2 + a1*conj(a1)*b2", "0".
  std::string str() const;

 private:
  Terms terms_;
};

std::string to_string(const StarPoly& p);

}  // namespace crg
