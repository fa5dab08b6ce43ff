#include <algorithm>
#include <cctype>

#include "crg/errors.hpp"
#include "crg/frames/frame_calculus.hpp"

namespace crg {

const StarPoly& TransferResult::definition(const std::string& name) const {
  for (const auto& d : definitions)
    if (d.name == name) return d.value;
  throw Error("class " + to_string(id) + " defines no coefficient '" + name + "'");
}

namespace {

bool in_frame(const ClassPreset& p, const std::string& f) {
  return std::find(p.frame.begin(), p.frame.end(), f) != p.frame.end();
}

bool is_recipe_target(const ClassPreset& p, const std::string& f) {
  return std::any_of(p.recipe.begin(), p.recipe.end(), [&](const RecipeStep& s) { return s.target == f; });
}

const VectorExpr& pushed_field(const std::map<std::string, VectorExpr>& pushed, const ClassPreset& p,
                               const std::string& f) {
  auto it = pushed.find(f);
  if (it == pushed.end()) throw Error("class " + p.name() + ": " + f + "' is used before it is defined");
  return it->second;
}

// Replaces coefficients by fresh names, recording their definitions.
VectorExpr apply_names(const ClassPreset& p, const RecipeStep& step, VectorExpr v, TransferResult& out) {
  for (const auto& [field, spec] : step.names) {
    const StarPoly derived = v.coeff(field);
    const StarPoly named = parse_expr(spec, p.decl).numerator();
    const bool fresh =
        std::all_of(spec.begin(), spec.end(), [](unsigned char ch) { return std::isalnum(ch) || ch == '_'; });
    if (fresh) {
      if (p.decl.kind_of(spec).real && derived != derived.conj())
        throw Error("class " + p.name() + ": real coefficient " + spec + " = " + derived.str() +
                    " is not fixed by conjugation");
      out.definitions.push_back({spec, derived});
    } else {
      // conj(n) and similar: must agree with the definitions made so far.
      SymbolMap back;
      for (const auto& d : out.definitions) back.emplace(p.decl.symbol(d.name), UnitFraction(d.value));
      const UnitFraction expected = substitute_symbols(UnitFraction(named), back);
      if (expected != UnitFraction(derived))
        throw Error("class " + p.name() + ": coefficient of " + field + " in " + step.target + "' is " +
                    derived.str() + ", not " + spec + " = " + expected.str());
    }
    v.set(field, named);
  }
  return v;
}

}  // namespace

TransferResult derive_transfer(const ClassPreset& p) {
  TransferResult out;
  out.id = p.id;
  out.frame = p.frame;
  auto& pushed = out.pushed;
  auto with_partner = [&](const std::string& f, const VectorExpr& v) {
    pushed[f] = v;
    const std::string g = conj_derivation(f);
    if (g != f && in_frame(p, g) && !is_recipe_target(p, g) && p.transfer.count(g) == 0) pushed[g] = vf_conj(v);
  };
  for (const auto& [f, v] : p.transfer) with_partner(f, v);
  for (const auto& step : p.recipe) {
    const VectorExpr raw = StarPoly(step.scale) * vf_bracket(pushed_field(pushed, p, step.left),
                                                             pushed_field(pushed, p, step.right), p.table);
    with_partner(step.target, apply_names(p, step, raw, out));
  }

  const std::size_t n = p.frame.size();
  out.matrix = RingMatrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    const VectorExpr& row = pushed_field(pushed, p, p.frame[i]);
    for (const auto& [f, c] : row.terms())
      if (!in_frame(p, f))
        throw Error("class " + p.name() + ": " + p.frame[i] + "' has a component along " + f +
                    ", outside the frame");
    for (std::size_t j = 0; j < n; ++j) out.matrix(i, j) = UnitFraction(row.coeff(p.frame[j]));
  }
  return out;
}

TransferResult derive_transfer(GroupId id) { return derive_transfer(builtin_preset(id)); }

std::vector<CheckRecord> compare_with_paper(const ClassPreset& p) {
  std::vector<CheckRecord> out;
  const TransferResult t = derive_transfer(p);
  if (!p.printed_matrix.empty()) {
    std::size_t matched = 0;
    std::vector<CheckRecord> errata;
    for (std::size_t i = 0; i < p.frame.size(); ++i)
      for (std::size_t j = 0; j < p.frame.size(); ++j) {
        const UnitFraction printed = parse_expr(p.printed_matrix[i][j], p.decl);
        if (printed == t.matrix(i, j)) {
          ++matched;
          continue;
        }
        errata.push_back({p.name(), "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                          Status::Erratum, std::nullopt,
                          {"printed " + printed.str(), "derived " + t.matrix(i, j).str()}});
      }
    CheckRecord summary{p.name(), "matrix", errata.empty() ? Status::Pass : Status::Erratum, std::nullopt, {}};
    summary.details.push_back(std::to_string(matched) + " of " + std::to_string(p.frame.size() * p.frame.size()) +
                              " printed entries match");
    out.push_back(std::move(summary));
    for (auto& e : errata) out.push_back(std::move(e));
  }
  for (const auto& pc : p.printed_coefficients) {
    CheckRecord r{p.name(), "coefficient " + pc.name, Status::Pass, std::nullopt, {}};
    const UnitFraction printed = parse_expr(pc.expr, p.decl);
    try {
      const UnitFraction derived(t.definition(pc.name));
      if (printed == derived) {
        r.details.push_back("matches " + derived.str());
      } else {
        r.status = Status::Erratum;
        r.details.push_back("printed " + printed.str());
        r.details.push_back("derived " + derived.str());
      }
    } catch (const Error& e) {
      r.status = Status::Fail;
      r.details.push_back(e.what());
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckRecord> compare_with_paper(GroupId id) { return compare_with_paper(builtin_preset(id)); }

CheckRecord keystone_check(GroupId id) {
  CheckRecord r{to_string(id), "keystone", Status::Pass, std::nullopt, {}};
  try {
    const RingMatrix derived = derive_transfer(id).matrix;
    const RingMatrix embedded = group_template(id).symbolic_matrix();
    if (derived.size() != embedded.size()) throw DimensionMismatch("derived and template sizes differ");
    std::size_t pattern = 0;
    std::size_t unequal = 0;
    for (std::size_t i = 0; i < derived.size(); ++i)
      for (std::size_t j = 0; j < derived.size(); ++j) {
        const auto& x = derived(i, j);
        const auto& y = embedded(i, j);
        const std::string at = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
        if (x.is_zero() != y.is_zero() || (i == j && x != y)) {
          ++pattern;
          r.details.push_back(at + " derived " + x.str() + ", template " + y.str());
        } else if (x != y) {
          ++unequal;
          r.details.push_back(at + " off-diagonal symbols differ: derived " + x.str() + ", template " + y.str());
        }
      }
    r.residual_terms = pattern;
    if (pattern != 0) r.status = Status::Fail;
    if (pattern == 0 && unequal == 0) r.details.push_back("all entries equal the template embedding");
  } catch (const Error& e) {
    r.status = Status::Fail;
    r.details.push_back(e.what());
  }
  return r;
}

}  // namespace crg
