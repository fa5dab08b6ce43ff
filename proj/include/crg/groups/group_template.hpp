#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crg/matrix/ring_matrix.hpp"
#include "crg/report.hpp"
#include "crg/scalar/parser.hpp"

namespace crg {

enum class GroupId { I, II, III1, III2, IV1, IV2 };

std::string to_string(GroupId g);
// Accepts "I", "II", "III1", "III2", "IV1", "IV2"; throws crg::Error otherwise.
GroupId parse_group_id(const std::string& s);
const std::vector<GroupId>& all_groups();

enum class ParamKind { ComplexFree, ComplexUnit, RealUnit, RealFree };

struct ParamSpec {
  std::string name;
  ParamKind kind;
  long identity;  // value at the group identity
  bool is_unit() const { return kind == ParamKind::ComplexUnit || kind == ParamKind::RealUnit; }
  bool is_real() const { return kind == ParamKind::RealUnit || kind == ParamKind::RealFree; }
};

// A unit defined by a polynomial in the parameters, e.g. Delta = a11*a22 - a12*a21.
// Realized through the rewriting rule lead -> name + (lead - definition).
struct DerivedUnit {
  std::string name;
  std::string definition;
  std::string lead;  // leading monomial of definition, coefficient 1
};

// A formula as printed in the reference text, to be diffed against the derived one.
//   kind "compose": label is a parameter name ("c") or an entry "(5,5)"; the
//                   expression uses tuple symbols a_1, a_2, ...
//   kind "inverse": label is a parameter name ("c") or an entry "(4,1)" of the
//                   inverse matrix; the expression uses plain parameter names.
struct PrintedForm {
  std::string kind;
  std::string label;
  std::string expr;
};

/// One of the six parametric embeddings. Parameters are read back from the
/// designated 0-based positions of a product or inverse.
struct GroupTemplate {
  GroupId id;
  std::size_t n = 0;
  std::vector<ParamSpec> params;
  std::vector<std::vector<std::string>> pattern;  // entries in the expression grammar
  std::map<std::string, std::pair<std::size_t, std::size_t>> positions;
  std::vector<DerivedUnit> derived_units;
  int expected_real_dim = 0;
  std::vector<PrintedForm> printed;

  std::string name() const { return to_string(id); }
  const ParamSpec& param(const std::string& name) const;

  // Declarations for parameters renamed with a suffix ("" keeps plain names;
  // "_1" gives a_1, b_1, ...). Derived units are declared too.
  ParseOptions options(const std::string& suffix = "") const;
  Symbol symbol(const std::string& param, const std::string& suffix = "") const;
  Relations relations(const std::string& suffix = "") const;
  // The pattern with plain parameter symbols.
  RingMatrix symbolic_matrix() const;
};

const GroupTemplate& group_template(GroupId g);

// Parameter name -> value.
using ParamTuple = std::map<std::string, UnitFraction>;
using NumericTuple = std::map<std::string, GaussRat>;

ParamTuple generic_params(const GroupTemplate& t, const std::string& suffix);
ParamTuple identity_params(const GroupTemplate& t);

// Throws MissingParam, ZeroUnit (a unit parameter equal to 0), or
// InconsistentConjugation (a real parameter that is not self-conjugate).
RingMatrix embed(const GroupTemplate& t, const ParamTuple& p);
NumMatrix embed_numeric(const GroupTemplate& t, const NumericTuple& p);

// embed(p1)*embed(p2) read back at the designated positions. Throws
// ClosureViolation when embed(result) differs from the product.
ParamTuple compose_params(const GroupTemplate& t, const ParamTuple& p1, const ParamTuple& p2,
                          const Relations* rel = nullptr);
// Parameters of mat_inverse(embed(p)). Throws PatternMismatch when the inverse
// leaves the template image.
ParamTuple invert_params(const GroupTemplate& t, const ParamTuple& p, const Relations* rel = nullptr);

bool tuples_equal(const GroupTemplate& t, const ParamTuple& x, const ParamTuple& y, const Relations* rel = nullptr);

// Records for "closure", "inverse", "assoc", "identity" in that order; checks
// selects a subset ("all" or one name).
std::vector<CheckRecord> verify_group(const GroupTemplate& t, const std::string& checks = "all");
// Diff of every printed composition/inverse formula against the derived one.
std::vector<CheckRecord> diff_printed_laws(const GroupTemplate& t);

// Lie algebra at the identity: one matrix per real degree of freedom.
struct LieBasis {
  std::vector<std::string> labels;  // "Re(a)", "Im(a)", "c"
  std::vector<NumMatrix> matrices;
};

LieBasis lie_algebra_basis(const GroupTemplate& t);
std::size_t lie_dimension(const std::vector<NumMatrix>& basis);
// Every commutator lies in the rational span of the basis.
bool verify_lie_closure(const std::vector<NumMatrix>& basis);

}  // namespace crg
