#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "crg/groups/group_template.hpp"
#include "crg/matrix/ring_matrix.hpp"
#include "crg/report.hpp"
#include "crg/scalar/parser.hpp"

namespace crg {

/// Linear combination of frame fields with function coefficients. Frame
/// names are registered derivations (L, Lbar, T, ...); coefficients are
/// polynomials in coefficient functions and their derivation atoms.
class VectorExpr {
 public:
  using Terms = std::map<std::string, StarPoly>;

  VectorExpr() = default;
  VectorExpr(const std::string& frame, StarPoly coeff);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  // Coefficient of a frame field (0 when absent).
  StarPoly coeff(const std::string& frame) const;
  void set(const std::string& frame, StarPoly coeff);

  VectorExpr operator-() const;
  VectorExpr& operator+=(const VectorExpr& o);
  VectorExpr& operator-=(const VectorExpr& o);
  friend VectorExpr operator+(VectorExpr a, const VectorExpr& b) { return a += b; }
  friend VectorExpr operator-(VectorExpr a, const VectorExpr& b) { return a -= b; }
  // Pointwise scaling by a function.
  friend VectorExpr operator*(const StarPoly& f, const VectorExpr& x);
  friend bool operator==(const VectorExpr& a, const VectorExpr& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const VectorExpr& a, const VectorExpr& b) { return !(a == b); }

  // "a*conj(a)*T + conj(b)*Lbar + b*L" in the given frame order (names not
  // listed come last, alphabetically).
  std::string str(const std::vector<std::string>& order = {}) const;

 private:
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const VectorExpr& x);

// Frame fields and coefficients conjugated jointly.
VectorExpr vf_conj(const VectorExpr& x);

/// Brackets of frame fields. Entries are closed under antisymmetry and
/// conjugation on lookup; a pair reachable by neither raises UntabulatedBracket.
class BracketTable {
 public:
  // Stores [x,y] = value. Throws crg::Error when the entry contradicts one
  // already present (directly, by antisymmetry or by conjugation).
  void add(const std::string& x, const std::string& y, const VectorExpr& value);
  VectorExpr lookup(const std::string& x, const std::string& y) const;
  bool contains(const std::string& x, const std::string& y) const;
  const std::map<std::pair<std::string, std::string>, VectorExpr>& entries() const noexcept { return entries_; }

 private:
  bool find(const std::string& x, const std::string& y, VectorExpr& out) const;
  std::map<std::pair<std::string, std::string>, VectorExpr> entries_;
};

// Leibniz expansion [fX, gY] = fg[X,Y] + f X(g) Y - g Y(f) X, extended bilinearly.
VectorExpr vf_bracket(const VectorExpr& x, const VectorExpr& y, const BracketTable& table);

/// One step of a primed-frame recipe: target' = scale * [left', right'].
/// Each naming replaces the coefficient of a frame field by a fresh name
/// ("b") or checks it against the conjugate of an earlier one ("conj(b)").
struct RecipeStep {
  std::string target;
  std::string left;
  std::string right;
  GaussRat scale{1};
  std::vector<std::pair<std::string, std::string>> names;  // frame field -> name spec
};

// A formula as printed: an entry "(i,j)" of the transfer matrix, or a
// coefficient definition.
struct PrintedCoefficient {
  std::string name;
  std::string expr;
};

/// Everything frame_calculus needs for one class, loadable from text.
struct ClassPreset {
  GroupId id = GroupId::I;
  std::vector<std::string> frame;  // unprimed order; primed rows follow it
  ParseOptions decl;               // coefficient kinds; derivations enabled
  BracketTable table;
  std::map<std::string, VectorExpr> transfer;  // "L" -> a*L means h'_*(L') = a*L
  std::vector<RecipeStep> recipe;
  std::vector<std::vector<std::string>> printed_matrix;
  std::vector<PrintedCoefficient> printed_coefficients;

  std::string name() const { return to_string(id); }
};

// Text format, one directive per line ('#' starts a comment):
//   pair L Lbar                      conjugate frame fields (T T for a real one)
//   frame II L Lbar T S
//   declare II units a               also: reals, real_units
//   bracket II [L,Lbar] = -I*T       or I*[L2,L1bar] = A*T + ...
//   transfer II L' = a*L
//   recipe II S' = [L',T']           or T' = I*[L',Lbar']
//   name II S' T = c                 or name II T' Lbar = conj(b)
//   printed II row 4 = e, d, c, a*conj(a)
//   printed II coeff c = -I*a*conj(b) + a*L(a*conj(a))
// Throws FormatError naming the line.
std::vector<ClassPreset> load_presets(std::istream& in);
std::vector<ClassPreset> load_presets_text(const std::string& text);
const std::string& builtin_preset_text();
const ClassPreset& builtin_preset(GroupId id);

struct CoefficientDefinition {
  std::string name;
  StarPoly value;
};

struct TransferResult {
  GroupId id = GroupId::I;
  std::vector<std::string> frame;
  RingMatrix matrix;                         // rows h'_*(X') over the unprimed frame, named
  std::vector<CoefficientDefinition> definitions;  // in order of appearance
  std::map<std::string, VectorExpr> pushed;  // primed field -> named pushforward

  const StarPoly& definition(const std::string& name) const;
};

// Runs the recipe; throws UntabulatedBracket, or crg::Error when a "conj(n)"
// naming or a real name does not hold.
TransferResult derive_transfer(const ClassPreset& preset);
TransferResult derive_transfer(GroupId id);

// Entrywise diff of the derived matrix and coefficient definitions against
// the printed ones: "matrix" (pass) or "entry (i,j)" errata, then one
// "coefficient n" record each.
std::vector<CheckRecord> compare_with_paper(const ClassPreset& preset);
std::vector<CheckRecord> compare_with_paper(GroupId id);

// Zero pattern and diagonal weights of the derived matrix against the group
// template embedding; full entry equality is reported in the details.
CheckRecord keystone_check(GroupId id);

}  // namespace crg
