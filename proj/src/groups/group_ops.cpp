#include <sstream>

#include "crg/errors.hpp"
#include "crg/groups/group_template.hpp"

namespace crg {

ParamTuple generic_params(const GroupTemplate& t, const std::string& suffix) {
  ParamTuple p;
  for (const auto& spec : t.params) p.emplace(spec.name, UnitFraction(t.symbol(spec.name, suffix)));
  return p;
}

ParamTuple identity_params(const GroupTemplate& t) {
  ParamTuple p;
  for (const auto& spec : t.params) p.emplace(spec.name, UnitFraction(spec.identity));
  return p;
}

RingMatrix embed(const GroupTemplate& t, const ParamTuple& p) {
  SymbolMap map;
  for (const auto& spec : t.params) {
    auto it = p.find(spec.name);
    if (it == p.end()) throw MissingParam("missing parameter '" + spec.name + "' for group " + t.name());
    if (spec.is_unit() && it->second.is_zero()) throw ZeroUnit("unit parameter '" + spec.name + "' is 0");
    if (spec.is_real() && it->second.conj() != it->second)
      throw InconsistentConjugation("real parameter '" + spec.name + "' assigned " + it->second.str());
    map.emplace(t.symbol(spec.name), it->second);
  }
  return mat_substitute_symbols(t.symbolic_matrix(), map);
}

NumMatrix embed_numeric(const GroupTemplate& t, const NumericTuple& p) {
  Binding b;
  for (const auto& spec : t.params) {
    auto it = p.find(spec.name);
    if (it == p.end()) throw MissingParam("missing parameter '" + spec.name + "' for group " + t.name());
    b.set(t.symbol(spec.name), it->second);
  }
  return mat_substitute(t.symbolic_matrix(), b);
}

namespace {

ParamTuple read_params(const GroupTemplate& t, const RingMatrix& m) {
  ParamTuple p;
  for (const auto& spec : t.params) {
    const auto [i, j] = t.positions.at(spec.name);
    p.emplace(spec.name, m(i, j));
  }
  return p;
}

}  // namespace

ParamTuple compose_params(const GroupTemplate& t, const ParamTuple& p1, const ParamTuple& p2, const Relations* rel) {
  RingMatrix prod = embed(t, p1) * embed(t, p2);
  if (rel != nullptr) prod = mat_reduce(prod, *rel);
  ParamTuple p3 = read_params(t, prod);
  std::size_t residual = 0;
  try {
    residual = residual_terms(embed(t, p3), prod, rel);
  } catch (const Error& e) {
    throw ClosureViolation(std::string("product leaves the template: ") + e.what(), 1);
  }
  if (residual != 0)
    throw ClosureViolation("product of two " + t.name() + " matrices is not in the template image", residual);
  return p3;
}

ParamTuple invert_params(const GroupTemplate& t, const ParamTuple& p, const Relations* rel) {
  const RingMatrix inv = mat_inverse(embed(t, p), rel);
  ParamTuple q = read_params(t, inv);
  std::size_t residual = 0;
  try {
    residual = residual_terms(embed(t, q), inv, rel);
  } catch (const Error& e) {
    throw PatternMismatch(std::string("inverse leaves the template: ") + e.what());
  }
  if (residual != 0)
    throw PatternMismatch("inverse of a " + t.name() + " matrix is not in the template image (" +
                          std::to_string(residual) + " residual terms)");
  return q;
}

bool tuples_equal(const GroupTemplate& t, const ParamTuple& x, const ParamTuple& y, const Relations* rel) {
  for (const auto& spec : t.params)
    if (!equal_mod(x.at(spec.name), y.at(spec.name), rel)) return false;
  return true;
}

namespace {

std::size_t tuple_residual(const GroupTemplate& t, const ParamTuple& x, const ParamTuple& y, const Relations* rel) {
  std::size_t total = 0;
  for (const auto& spec : t.params) {
    const UnitFraction& f = x.at(spec.name);
    const UnitFraction& g = y.at(spec.name);
    StarPoly d = f.numerator().times(g.denominator()) - g.numerator().times(f.denominator());
    if (rel != nullptr) d = rel->reduce(d);
    total += d.term_count();
  }
  return total;
}

std::vector<std::string> describe(const GroupTemplate& t, const ParamTuple& p, const std::string& suffix) {
  std::vector<std::string> out;
  for (const auto& spec : t.params) out.push_back(spec.name + suffix + " = " + p.at(spec.name).str());
  return out;
}

Relations generic_relations(const GroupTemplate& t) {
  Relations rel;
  for (const char* s : {"_1", "_2", "_3"}) rel.merge(t.relations(s));
  return rel;
}

CheckRecord run_check(const GroupTemplate& t, const std::string& name,
                      const std::function<std::size_t(std::vector<std::string>&)>& body) {
  CheckRecord r{t.name(), name, Status::Pass, std::nullopt, {}};
  try {
    const std::size_t residual = body(r.details);
    r.residual_terms = residual;
    if (residual != 0) r.status = Status::Fail;
  } catch (const ClosureViolation& e) {
    r.status = Status::Fail;
    r.residual_terms = e.residual_terms();
    r.details.push_back(std::string("ClosureViolation: ") + e.what());
  } catch (const Error& e) {
    r.status = Status::Fail;
    r.details.push_back(e.what());
  }
  return r;
}

}  // namespace

std::vector<CheckRecord> verify_group(const GroupTemplate& t, const std::string& checks) {
  const Relations rel = generic_relations(t);
  const ParamTuple p1 = generic_params(t, "_1");
  const ParamTuple p2 = generic_params(t, "_2");
  const ParamTuple p3 = generic_params(t, "_3");
  auto wanted = [&](const char* c) { return checks == "all" || checks == c; };
  if (!(wanted("closure") || wanted("inverse") || wanted("assoc") || wanted("identity")))
    throw Error("unknown check '" + checks + "' (expected closure, inverse, assoc, identity or all)");

  std::vector<CheckRecord> out;
  if (wanted("closure"))
    out.push_back(run_check(t, "closure", [&](std::vector<std::string>& details) {
      const ParamTuple p12 = compose_params(t, p1, p2, &rel);
      details = describe(t, p12, "_3");
      return residual_terms(embed(t, p12), embed(t, p1) * embed(t, p2), &rel);
    }));
  if (wanted("inverse"))
    out.push_back(run_check(t, "inverse", [&](std::vector<std::string>& details) {
      const RingMatrix m = embed(t, p1);
      const ParamTuple q = invert_params(t, p1, &rel);
      const RingMatrix mq = embed(t, q);
      const RingMatrix id = RingMatrix::identity(t.n);
      details.push_back("det = " + rel.reduce(mat_det(m)).str());
      for (auto& d : describe(t, q, "~")) details.push_back(d);
      return residual_terms(mq * m, id, &rel) + residual_terms(m * mq, id, &rel) +
             residual_terms(mq, mat_inverse(m, &rel), &rel);
    }));
  if (wanted("assoc"))
    out.push_back(run_check(t, "assoc", [&](std::vector<std::string>& details) {
      const ParamTuple left = compose_params(t, compose_params(t, p1, p2, &rel), p3, &rel);
      const ParamTuple right = compose_params(t, p1, compose_params(t, p2, p3, &rel), &rel);
      details.push_back("(p1*p2)*p3 = p1*(p2*p3) on generic tuples");
      return tuple_residual(t, left, right, &rel);
    }));
  if (wanted("identity"))
    out.push_back(run_check(t, "identity", [&](std::vector<std::string>& details) {
      const ParamTuple e = identity_params(t);
      details.push_back("embed(e) = Id; e*p = p*e = p; e^-1 = e");
      return residual_terms(embed(t, e), RingMatrix::identity(t.n)) +
             tuple_residual(t, compose_params(t, e, p1, &rel), p1, &rel) +
             tuple_residual(t, compose_params(t, p1, e, &rel), p1, &rel) +
             tuple_residual(t, invert_params(t, e, &rel), e, &rel);
    }));
  return out;
}

namespace {

std::pair<std::size_t, std::size_t> parse_entry_label(const std::string& label) {
  std::size_t i = 0;
  std::size_t j = 0;
  char open = 0;
  char comma = 0;
  char close = 0;
  std::istringstream is(label);
  is >> open >> i >> comma >> j >> close;
  if (!is || open != '(' || comma != ',' || close != ')' || i == 0 || j == 0)
    throw FormatError("bad entry label '" + label + "'");
  return {i - 1, j - 1};
}

ParseOptions merged(const ParseOptions& a, const ParseOptions& b) {
  ParseOptions o = a;
  o.units.insert(b.units.begin(), b.units.end());
  o.reals.insert(b.reals.begin(), b.reals.end());
  o.real_units.insert(b.real_units.begin(), b.real_units.end());
  return o;
}

CheckRecord compare(const GroupTemplate& t, const std::string& check, const UnitFraction& printed,
                    const UnitFraction& derived, const Relations* rel) {
  CheckRecord r{t.name(), check, Status::Pass, std::nullopt, {}};
  if (equal_mod(printed, derived, rel)) {
    r.details.push_back("matches " + derived.str());
  } else {
    r.status = Status::Erratum;
    r.details.push_back("printed " + printed.str());
    r.details.push_back("derived " + derived.str());
  }
  return r;
}

}  // namespace

std::vector<CheckRecord> diff_printed_laws(const GroupTemplate& t) {
  std::vector<CheckRecord> out;
  const Relations rel = generic_relations(t);
  const ParamTuple p1 = generic_params(t, "_1");
  const ParamTuple p2 = generic_params(t, "_2");
  const ParseOptions pair_opts = merged(t.options("_1"), t.options("_2"));
  const RingMatrix prod = embed(t, p1) * embed(t, p2);
  const ParamTuple p12 = compose_params(t, p1, p2, &rel);

  const ParamTuple p = generic_params(t, "");
  const Relations plain_rel = t.relations("");
  const RingMatrix inv = mat_inverse(embed(t, p), &plain_rel);
  const ParamTuple q = invert_params(t, p, &plain_rel);

  for (const auto& f : t.printed) {
    const bool entry = !f.label.empty() && f.label[0] == '(';
    if (f.kind == "compose") {
      const UnitFraction printed = parse_expr(f.expr, pair_opts);
      UnitFraction derived;
      if (entry) {
        const auto [i, j] = parse_entry_label(f.label);
        derived = prod(i, j);
      } else {
        derived = p12.at(f.label);
      }
      out.push_back(compare(t, "printed compose " + f.label, printed, derived, &rel));
    } else {
      const UnitFraction printed = parse_expr(f.expr, t.options());
      UnitFraction derived;
      if (entry) {
        const auto [i, j] = parse_entry_label(f.label);
        derived = inv(i, j);
      } else {
        derived = q.at(f.label);
      }
      out.push_back(compare(t, "printed inverse " + f.label, printed, derived, &plain_rel));
    }
  }
  return out;
}

}  // namespace crg
