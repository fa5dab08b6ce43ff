#include <ostream>

#include "crg/errors.hpp"
#include "crg/hypersurface/hypersurface.hpp"

namespace crg {

RationalFunc::RationalFunc(StarPoly num) : num_(std::move(num)), den_(1) {}

RationalFunc::RationalFunc(StarPoly num, StarPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = StarPoly(1);
  } else if (den_.is_constant() && den_ != StarPoly(1)) {
    num_ = num_ * den_.constant_term().inverse();
    den_ = StarPoly(1);
  }
}

RationalFunc operator+(const RationalFunc& a, const RationalFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunc operator*(const RationalFunc& a, const RationalFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Cancel a shared denominator against the other numerator when they coincide.
  if (a.den_ == b.num_) return {a.num_, b.den_};
  if (b.den_ == a.num_) return {b.num_, a.den_};
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunc operator/(const RationalFunc& a, const RationalFunc& b) {
  if (b.is_zero()) throw Error("division by the zero rational function");
  return a * RationalFunc(b.den_, b.num_);
}

bool operator==(const RationalFunc& a, const RationalFunc& b) {
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RationalFunc RationalFunc::apply(const std::function<StarPoly(const StarPoly&)>& d) const {
  const StarPoly dn = d(num_);
  if (den_ == StarPoly(1)) return RationalFunc(dn);
  const StarPoly dd = d(den_);
  if (dd.is_zero()) return {dn, den_};
  return {dn * den_ - num_ * dd, den_ * den_};
}

RationalFunc RationalFunc::partial(const Symbol& s) const {
  return apply([&](const StarPoly& p) { return p.partial(s); });
}

GaussRat RationalFunc::eval(const Binding& at) const {
  const GaussRat d = substitute(den_, at);
  if (d.is_zero()) throw PoleAtPoint("denominator " + den_.str() + " vanishes at the point");
  return substitute(num_, at) / d;
}

RationalFunc RationalFunc::normalized() const {
  if (den_ == StarPoly(1)) return *this;
  const Monomial common = Monomial::gcd(num_.content_monomial(), den_.content_monomial());
  StarPoly n = num_.divided_by(common);
  StarPoly d = den_.divided_by(common);
  // Leading coefficient in the canonical term order.
  const GaussRat lead = d.terms().begin()->second.inverse();
  return {n * lead, d * lead};
}

std::string RationalFunc::str() const {
  if (den_ == StarPoly(1)) return num_.str();
  const std::string n = num_.is_single_term() ? num_.str() : "(" + num_.str() + ")";
  const std::string d = den_.is_single_term() ? den_.str() : "(" + den_.str() + ")";
  return n + "/" + d;
}

std::ostream& operator<<(std::ostream& os, const RationalFunc& f) { return os << f.str(); }

}  // namespace crg
