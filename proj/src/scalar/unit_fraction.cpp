#include "crg/scalar/unit_fraction.hpp"

#include <ostream>

#include "crg/errors.hpp"

namespace crg {

UnitFraction::UnitFraction(StarPoly num) : num_(std::move(num)) {}

UnitFraction::UnitFraction(StarPoly num, Monomial den) : num_(std::move(num)), den_(std::move(den)) {
  for (const auto& [s, e] : den_.factors())
    if (!s.is_unit()) throw NotAUnit("'" + s.str() + "' is not a unit");
  canonicalize();
}

void UnitFraction::canonicalize() {
  if (num_.is_zero()) {
    den_ = Monomial();
    return;
  }
  if (den_.is_one()) return;
  const Monomial g = Monomial::gcd(num_.content_monomial(), den_);
  if (g.is_one()) return;
  num_ = num_.divided_by(g);
  den_ = g.quotient_of(den_);
}

bool UnitFraction::is_unit() const {
  return num_.is_single_term() && num_.terms().begin()->first.only_units();
}

std::set<Symbol> UnitFraction::symbols() const {
  auto out = num_.symbols();
  for (const auto& f : den_.factors()) out.insert(f.first);
  return out;
}

UnitFraction UnitFraction::conj() const {
  UnitFraction out;
  out.num_ = num_.conj();
  out.den_ = den_.conj();
  return out;
}

UnitFraction UnitFraction::inverse() const {
  if (num_.is_zero()) throw NotAUnit("division by zero");
  if (!is_unit()) throw NotAUnit("'" + num_.str() + "' is not a unit monomial");
  const auto& [m, c] = *num_.terms().begin();
  return UnitFraction(StarPoly(den_, c.inverse()), m);
}

UnitFraction UnitFraction::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  UnitFraction out;
  out.num_ = num_.pow(static_cast<unsigned>(n));
  std::vector<Monomial::Factor> fs;
  for (const auto& [s, e] : den_.factors()) fs.emplace_back(s, e * static_cast<unsigned>(n));
  out.den_ = Monomial::from_factors(std::move(fs));
  out.canonicalize();
  return out;
}

UnitFraction UnitFraction::derive(const std::string& derivation) const {
  if (den_.is_one()) return UnitFraction(num_.derive(derivation));
  const StarPoly d(den_);
  StarPoly num = num_.derive(derivation) * d - num_ * d.derive(derivation);
  return UnitFraction(std::move(num), den_ * den_);
}

UnitFraction UnitFraction::operator-() const {
  UnitFraction out = *this;
  out.num_ = -out.num_;
  return out;
}

UnitFraction& UnitFraction::operator+=(const UnitFraction& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    const Monomial l = Monomial::lcm(den_, o.den_);
    num_ = num_.times(den_.quotient_of(l)) + o.num_.times(o.den_.quotient_of(l));
    den_ = l;
  }
  canonicalize();
  return *this;
}

UnitFraction& UnitFraction::operator-=(const UnitFraction& o) { return *this += -o; }

UnitFraction& UnitFraction::operator*=(const UnitFraction& o) {
  num_ *= o.num_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

std::string UnitFraction::str() const {
  if (den_.is_one()) return num_.str();
  std::string num;
  if (num_.is_single_term()) {
    const auto& [m, c] = *num_.terms().begin();
    const bool neg = (c.is_real() && sgn(c.re()) < 0) || (sgn(c.re()) == 0 && sgn(c.im()) < 0);
    const GaussRat k = neg ? -c : c;
    std::string body;
    if (m.is_one()) {
      body = to_string(k);
      if (body.find('/') != std::string::npos || body.find('*') != std::string::npos) body = "(" + body + ")";
    } else if (k.is_one()) {
      body = m.str();
    } else {
      body = to_string(k) + "*" + m.str();
    }
    num = neg ? "-" + body : body;
  } else {
    num = "(" + num_.str() + ")";
  }
  const std::string den = den_.factors().size() == 1 ? den_.str() : "(" + den_.str() + ")";
  return num + "/" + den;
}

std::string to_string(const UnitFraction& f) { return f.str(); }

void Relations::add_rule(const Monomial& lhs, const StarPoly& rhs) {
  auto add = [&](const Monomial& l, const StarPoly& r) {
    for (const auto& [el, er] : rules_)
      if (el == l) {
        if (er != r) throw Error("conflicting relation for " + l.str());
        return;
      }
    rules_.emplace_back(l, r);
  };
  add(lhs, rhs);
  add(lhs.conj(), rhs.conj());
}

void Relations::merge(const Relations& o) {
  for (const auto& [l, r] : o.rules_) add_rule(l, r);
}

StarPoly Relations::reduce(const StarPoly& p) const {
  if (rules_.empty()) return p;
  StarPoly cur = p;
  for (;;) {
    bool changed = false;
    StarPoly next;
    for (const auto& [m, c] : cur.terms()) {
      const std::pair<Monomial, StarPoly>* hit = nullptr;
      for (const auto& rule : rules_)
        if (rule.first.divides(m)) {
          hit = &rule;
          break;
        }
      if (hit == nullptr) {
        next.add_term(m, c);
        continue;
      }
      changed = true;
      next += (hit->second * c).times(hit->first.quotient_of(m));
    }
    cur = std::move(next);
    if (!changed) return cur;
  }
}

UnitFraction Relations::reduce(const UnitFraction& f) const {
  if (rules_.empty()) return f;
  return UnitFraction(reduce(f.numerator()), f.denominator());
}

bool Relations::equal(const UnitFraction& f, const UnitFraction& g) const { return equal_mod(f, g, this); }

bool equal_mod(const UnitFraction& f, const UnitFraction& g, const Relations* rel) {
  const StarPoly diff =
      f.numerator().times(g.denominator()) - g.numerator().times(f.denominator());
  if (rel == nullptr) return diff.is_zero();
  return rel->reduce(diff).is_zero();
}

std::ostream& operator<<(std::ostream& os, const StarPoly& p) { return os << p.str(); }

std::ostream& operator<<(std::ostream& os, const UnitFraction& f) { return os << f.str(); }

}  // namespace crg
