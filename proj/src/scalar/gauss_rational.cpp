#include "crg/scalar/gauss_rational.hpp"

#include <ostream>

#include "crg/errors.hpp"

namespace crg {

Rational parse_rational(const std::string& text) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
  const auto slash = text.find('/');
  auto all_digits = [](const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  const std::string num = text.substr(start, slash == std::string::npos ? std::string::npos : slash - start);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) throw Error("not a rational number: '" + text + "'");
  Rational q{mpz_class(num), mpz_class(den)};
  if (sgn(q.get_den()) == 0) throw Error("zero denominator in '" + text + "'");
  q.canonicalize();
  if (text[0] == '-') q = -q;
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

GaussRat& GaussRat::operator+=(const GaussRat& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRat& GaussRat::operator-=(const GaussRat& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRat GaussRat::inverse() const {
  const Rational n = norm();
  if (sgn(n) == 0) throw NotAUnit("division by zero");
  return {re_ / n, -im_ / n};
}

GaussRat& GaussRat::operator/=(const GaussRat& o) { return *this *= o.inverse(); }

std::string to_string(const GaussRat& z) {
  const bool has_re = sgn(z.re()) != 0;
  const bool has_im = sgn(z.im()) != 0;
  if (!has_im) return z.re().get_str();
  std::string im;
  if (z.im() == 1)
    im = "I";
  else if (z.im() == -1)
    im = "-I";
  else
    im = z.im().get_str() + "*I";
  if (!has_re) return im;
  std::string out = "(" + z.re().get_str();
  if (sgn(z.im()) > 0) out += "+";
  out += im + ")";
  return out;
}

std::ostream& operator<<(std::ostream& os, const GaussRat& z) { return os << to_string(z); }

}  // namespace crg
