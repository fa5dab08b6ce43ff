#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crg/scalar/binding.hpp"

namespace crg {

enum class Ambient { C2, C3 };

std::string to_string(Ambient a);
Ambient parse_ambient(std::string_view text);

// Real coordinates of the graph v = phi: C2 (x, y, u), C3 (x1, y1, x2, y2, u).
const std::vector<Symbol>& real_coordinates(Ambient a);
// Complexified basis of a coordinate vector field:
// C2 (z, zbar, w, wbar), C3 (z1, z2, zbar1, zbar2, w, wbar).
const std::vector<std::string>& basis_names(Ambient a);

/// Quotient of polynomials in the real coordinates. Not gcd-reduced; a
/// constant denominator is folded into the numerator.
class RationalFunc {
 public:
  RationalFunc() : den_(1) {}
  RationalFunc(StarPoly num);  // NOLINT(google-explicit-constructor)
  RationalFunc(StarPoly num, StarPoly den);

  const StarPoly& num() const noexcept { return num_; }
  const StarPoly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  RationalFunc operator-() const { return {-num_, den_}; }
  friend RationalFunc operator+(const RationalFunc& a, const RationalFunc& b);
  friend RationalFunc operator-(const RationalFunc& a, const RationalFunc& b) { return a + (-b); }
  friend RationalFunc operator*(const RationalFunc& a, const RationalFunc& b);
  friend RationalFunc operator/(const RationalFunc& a, const RationalFunc& b);
  // Cross-multiplication.
  friend bool operator==(const RationalFunc& a, const RationalFunc& b);
  friend bool operator!=(const RationalFunc& a, const RationalFunc& b) { return !(a == b); }

  RationalFunc conj() const { return {num_.conj(), den_.conj()}; }
  // Extends a derivation of polynomials by the quotient rule.
  RationalFunc apply(const std::function<StarPoly(const StarPoly&)>& d) const;
  RationalFunc partial(const Symbol& s) const;
  // Throws PoleAtPoint when the denominator vanishes.
  GaussRat eval(const Binding& at) const;

  // Display form: common monomial content removed, denominator made monic.
  RationalFunc normalized() const;
  std::string str() const;

 private:
  StarPoly num_;
  StarPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFunc& f);

// Action of a complexified basis field on a function of the real
// coordinates: d/dz_k = (d/dx_k - i d/dy_k)/2, d/dw = d/dwbar = (d/du)/2.
RationalFunc basis_derivative(Ambient a, std::size_t basis_index, const RationalFunc& f);

/// Coordinate vector field, one component per basis_names(ambient) entry.
struct CoordVectorField {
  Ambient ambient = Ambient::C2;
  std::vector<RationalFunc> comps;

  static CoordVectorField zero(Ambient a);
  // The basis field with the given name.
  static CoordVectorField basis(Ambient a, const std::string& name);

  const RationalFunc& operator[](const std::string& name) const;
  RationalFunc& operator[](const std::string& name);

  RationalFunc apply(const RationalFunc& f) const;
  // z <-> zbar, w <-> wbar with conjugated components.
  CoordVectorField conj() const;
  std::vector<GaussRat> eval(const Binding& at) const;

  friend CoordVectorField operator+(const CoordVectorField& a, const CoordVectorField& b);
  friend CoordVectorField operator-(const CoordVectorField& a, const CoordVectorField& b);
  friend CoordVectorField operator*(const RationalFunc& f, const CoordVectorField& x);
  friend bool operator==(const CoordVectorField& a, const CoordVectorField& b);
  friend bool operator!=(const CoordVectorField& a, const CoordVectorField& b) { return !(a == b); }

  std::string str() const;
};

// [X,Y]_j = X(Y_j) - Y(X_j).
CoordVectorField coord_bracket(const CoordVectorField& x, const CoordVectorField& y);

/// Real hypersurface v = phi in C2 or C3, phi a real polynomial in the real
/// coordinates.
struct GraphedHypersurface {
  Ambient ambient = Ambient::C2;
  StarPoly phi;
};

// Parses phi from the scalar grammar; throws FormatError when phi uses other
// symbols, divides by a non-constant or is not real.
GraphedHypersurface make_hypersurface(Ambient a, std::string_view phi);
// "ambient C2|C3" then "phi = <expr>"; '#' starts a comment.
GraphedHypersurface load_hypersurface(std::istream& in);
GraphedHypersurface load_hypersurface_text(std::string_view text);

// A point is given by its real coordinates, optionally followed by v.
using Point = std::vector<Rational>;
Point parse_point(std::string_view text);
std::string to_string(const Point& q);
// Binding of the real coordinates. Throws PointNotOnM when v != phi and
// FormatError on a wrong coordinate count.
Binding point_binding(const GraphedHypersurface& m, const Point& q);

// A_k = -phi_{z_k} / (i + phi_u), so that L_k = d/dz_k + 2 A_k d/dw is tangent.
std::vector<RationalFunc> generator_coefficients(const GraphedHypersurface& m);
std::vector<CoordVectorField> build_generators(const GraphedHypersurface& m);

std::size_t rank_at_point(const GraphedHypersurface& m, const std::vector<CoordVectorField>& fields,
                          const Point& q);

// H_jk = l(i [L_j, Lbar_k]) with l(V) = V_w - 2 sum_k A_k V_{z_k}, the
// transversal part of V modulo the generators and their conjugates.
std::vector<std::vector<RationalFunc>> levi_matrix(const GraphedHypersurface& m,
                                                   const std::vector<CoordVectorField>& gens);

enum class Verdict { ClassI, Degenerate, ClassIV1, ClassIV2Candidate };
std::string to_string(Verdict v);

struct Classification {
  Verdict verdict = Verdict::Degenerate;
  // C2: rank of (L, Lbar, [L,Lbar]). C3: rank of the Levi matrix.
  std::size_t rank = 0;
  std::optional<GaussRat> levi_det;
  std::vector<std::string> notes;
};

Classification classify_point(const GraphedHypersurface& m, const Point& q);
// Same results in the same order; the first uses parallel_for.
std::vector<Classification> classify_batch(const GraphedHypersurface& m, const std::vector<Point>& qs);
std::vector<Classification> classify_batch_serial(const GraphedHypersurface& m, const std::vector<Point>& qs);

/// h': (z', w') -> (z, w) by polynomials in the primed coordinates.
struct HoloMap {
  Ambient ambient = Ambient::C2;
  // In basis order z..., w; variables z', w' (or z1', z2', w').
  std::vector<StarPoly> comps;
};

// Primed complex coordinates: C2 (z', w'), C3 (z1', z2', w').
const std::vector<Symbol>& primed_coordinates(Ambient a);
// One "<component> -> <polynomial>" line per component (z, w or z1, z2, w;
// a trailing prime on the component name is accepted). '=' may replace '->'.
HoloMap load_map(std::istream& in);
HoloMap load_map_text(std::string_view text);
HoloMap identity_map(Ambient a);

struct MultiplierResult {
  GaussRat a;
  // A(h'(q')) - (w_{z'} + 2A' w_{w'}) / (2a); zero when h' maps M' into M.
  GaussRat residual;
  std::vector<GaussRat> image;  // (z, w)
  bool image_on_target = false;
};

// q' is a point of the source M'. Throws PointNotOnM, or ZeroDenominator when
// a vanishes at q'.
MultiplierResult multiplier_at(const HoloMap& h, const GraphedHypersurface& source,
                               const GraphedHypersurface& target, const Point& q);

}  // namespace crg
