#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace crg {

using Rational = mpq_class;

// Parses "p" or "p/q" (optional leading '-'); throws crg::Error on garbage or q == 0.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

/// Exact complex number with rational real and imaginary parts.
class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(long n) : re_(n) {}  // NOLINT(google-explicit-constructor)
  GaussRat(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  GaussRat(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussRat i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  GaussRat conj() const { return {re_, -im_}; }
  // |z|^2
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussRat operator-() const { return {-re_, -im_}; }
  GaussRat& operator+=(const GaussRat& o);
  GaussRat& operator-=(const GaussRat& o);
  GaussRat& operator*=(const GaussRat& o);
  // Throws crg::NotAUnit on division by zero.
  GaussRat& operator/=(const GaussRat& o);

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  GaussRat inverse() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

// Expression-grammar rendering: "3", "-1/2", "I", "-2*I", "(1+2*I)", "1/3*I".
std::string to_string(const GaussRat& z);
std::ostream& operator<<(std::ostream& os, const GaussRat& z);

}  // namespace crg
