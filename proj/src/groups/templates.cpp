#include <cctype>

#include "crg/errors.hpp"
#include "crg/groups/group_template.hpp"

namespace crg {

std::string to_string(GroupId g) {
  switch (g) {
    case GroupId::I: return "I";
    case GroupId::II: return "II";
    case GroupId::III1: return "III1";
    case GroupId::III2: return "III2";
    case GroupId::IV1: return "IV1";
    case GroupId::IV2: return "IV2";
  }
  return "?";
}

GroupId parse_group_id(const std::string& s) {
  for (GroupId g : all_groups())
    if (to_string(g) == s) return g;
  throw Error("unknown group '" + s + "' (expected I, II, III1, III2, IV1 or IV2)");
}

const std::vector<GroupId>& all_groups() {
  static const std::vector<GroupId> ids = {GroupId::I, GroupId::II, GroupId::III1,
                                           GroupId::III2, GroupId::IV1, GroupId::IV2};
  return ids;
}

const ParamSpec& GroupTemplate::param(const std::string& name) const {
  for (const auto& p : params)
    if (p.name == name) return p;
  throw MissingParam("group " + this->name() + " has no parameter '" + name + "'");
}

ParseOptions GroupTemplate::options(const std::string& suffix) const {
  ParseOptions o;
  for (const auto& p : params) {
    const std::string n = p.name + suffix;
    switch (p.kind) {
      case ParamKind::ComplexUnit: o.units.insert(n); break;
      case ParamKind::RealUnit: o.real_units.insert(n); break;
      case ParamKind::RealFree: o.reals.insert(n); break;
      case ParamKind::ComplexFree: break;
    }
  }
  for (const auto& d : derived_units) o.units.insert(d.name + suffix);
  return o;
}

Symbol GroupTemplate::symbol(const std::string& p, const std::string& suffix) const {
  const ParamSpec& spec = param(p);
  return Symbol::make(p + suffix, {spec.is_unit(), spec.is_real()});
}

namespace {

// Renames plain parameter identifiers in a grammar string by appending suffix.
std::string with_suffix(const GroupTemplate& t, const std::string& expr, const std::string& suffix) {
  if (suffix.empty()) return expr;
  std::string out;
  std::size_t i = 0;
  while (i < expr.size()) {
    if (std::isalpha(static_cast<unsigned char>(expr[i]))) {
      std::size_t j = i;
      while (j < expr.size() && (std::isalnum(static_cast<unsigned char>(expr[j])) || expr[j] == '_')) ++j;
      std::string id = expr.substr(i, j - i);
      bool known = false;
      for (const auto& p : t.params) known = known || p.name == id;
      for (const auto& d : t.derived_units) known = known || d.name == id;
      out += known ? id + suffix : id;
      i = j;
    } else {
      out += expr[i++];
    }
  }
  return out;
}

}  // namespace

Relations GroupTemplate::relations(const std::string& suffix) const {
  Relations rel;
  const ParseOptions o = options(suffix);
  for (const auto& d : derived_units) {
    const StarPoly lead = parse_expr(with_suffix(*this, d.lead, suffix), o).numerator();
    const StarPoly def = parse_expr(with_suffix(*this, d.definition, suffix), o).numerator();
    const Symbol unit = Symbol::make(d.name + suffix, {true, false});
    rel.add_rule(lead.terms().begin()->first, StarPoly(unit) + lead - def);
  }
  return rel;
}

RingMatrix GroupTemplate::symbolic_matrix() const {
  const ParseOptions o = options();
  RingMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = parse_expr(pattern[i][j], o);
  return m;
}

namespace {

constexpr ParamKind CF = ParamKind::ComplexFree;
constexpr ParamKind CU = ParamKind::ComplexUnit;
constexpr ParamKind RU = ParamKind::RealUnit;

GroupTemplate make_I() {
  GroupTemplate t;
  t.id = GroupId::I;
  t.n = 3;
  t.params = {{"a", CU, 1}, {"b", CF, 0}};
  t.pattern = {{"a", "0", "0"}, {"0", "conj(a)", "0"}, {"b", "conj(b)", "a*conj(a)"}};
  t.positions = {{"a", {0, 0}}, {"b", {2, 0}}};
  t.expected_real_dim = 4;
  t.printed = {
      {"compose", "a", "a_1*a_2"},
      {"compose", "b", "b_1*a_2 + a_1*conj(a_1)*b_2"},
      {"inverse", "(1,1)", "1/a"},
      {"inverse", "(2,2)", "1/conj(a)"},
      {"inverse", "(3,1)", "-b/(a*conj(a)*conj(a))"},
      {"inverse", "(3,2)", "-conj(b)/(a*conj(a)*conj(a))"},
      {"inverse", "(3,3)", "1/(a*conj(a))"},
      {"inverse", "a", "1/a"},
      {"inverse", "b", "-b/(a*conj(a))"},
  };
  return t;
}

// Rows 1-4 shared by II, III1 and III2.
const std::vector<std::string> kRow1 = {"a", "0", "0", "0", "0"};
const std::vector<std::string> kRow2 = {"0", "conj(a)", "0", "0", "0"};
const std::vector<std::string> kRow3 = {"b", "conj(b)", "a*conj(a)", "0", "0"};
const std::vector<std::string> kRow4 = {"e", "d", "c", "a*a*conj(a)", "0"};

std::vector<std::string> head(const std::vector<std::string>& row, std::size_t n) {
  return {row.begin(), row.begin() + static_cast<long>(n)};
}

GroupTemplate make_II() {
  GroupTemplate t;
  t.id = GroupId::II;
  t.n = 4;
  t.params = {{"a", CU, 1}, {"b", CF, 0}, {"c", CF, 0}, {"d", CF, 0}, {"e", CF, 0}};
  t.pattern = {head(kRow1, 4), head(kRow2, 4), head(kRow3, 4), head(kRow4, 4)};
  t.positions = {{"a", {0, 0}}, {"b", {2, 0}}, {"c", {3, 2}}, {"d", {3, 1}}, {"e", {3, 0}}};
  t.expected_real_dim = 10;
  t.printed = {
      {"compose", "a", "a_1*a_2"},
      {"compose", "b", "b_1*a_2 + a_1*conj(a_1)*b_2"},
      {"compose", "c", "c_1*a_2*conj(a_2) + a_1*conj(a_1)*conj(a_1)*c_2"},
      {"compose", "d", "d_1*conj(a_2) + c_1*conj(b_2) + a_1*conj(a_1)*conj(a_1)*d_2"},
      {"compose", "e", "e_1*a_2 + c_1*b_2 + a_1*conj(a_1)*conj(a_1)*e_2"},
      {"compose", "(4,4)", "a_1*conj(a_1)*conj(a_1)*a_2*conj(a_2)*conj(a_2)"},
      {"inverse", "(3,1)", "-b/(a*a*conj(a))"},
      {"inverse", "(3,2)", "-conj(b)/(a*conj(a)*conj(a))"},
      {"inverse", "(3,3)", "1/(a*conj(a))"},
      {"inverse", "(4,1)", "b*c/(a^4*conj(a)^2) - e/(a^3*conj(a))"},
      {"inverse", "(4,2)", "c*conj(b)/(a^3*conj(a)^3) - d/(a^2*conj(a)^2)"},
      {"inverse", "(4,3)", "-c/(a^3*conj(a)^2)"},
      {"inverse", "(4,4)", "1/(a^2*conj(a))"},
      {"inverse", "a", "1/a"},
      {"inverse", "b", "-b/(a*a*conj(a))"},
      {"inverse", "c", "-c/(a*a*a*a*conj(a))"},
      {"inverse", "d", "c*conj(b)/(a*a*a*a*conj(a)) - d/(a*a*a*conj(a))"},
      {"inverse", "e", "b*c/(a*a*a*a*conj(a)) - e/(a*a*a*conj(a))"},
  };
  return t;
}

GroupTemplate make_III1() {
  GroupTemplate t;
  t.id = GroupId::III1;
  t.n = 5;
  t.params = {{"a", CU, 1}, {"b", CF, 0}, {"c", CF, 0}, {"d", CF, 0}, {"e", CF, 0}};
  t.pattern = {kRow1, kRow2, kRow3, kRow4, {"conj(d)", "conj(e)", "conj(c)", "0", "a*conj(a)*conj(a)"}};
  t.positions = {{"a", {0, 0}}, {"b", {2, 0}}, {"c", {3, 2}}, {"d", {3, 1}}, {"e", {3, 0}}};
  t.expected_real_dim = 10;
  t.printed = {
      {"compose", "a", "a_1*a_2"},
      {"compose", "b", "b_1*a_2 + a_1*conj(a_1)*b_2"},
      {"compose", "c", "c_1*a_2*conj(a_2) + a_1*a_1*conj(a_1)*c_2"},
      {"compose", "d", "d_1*conj(a_2) + c_1*conj(b_2) + a_1*a_1*conj(a_1)*d_2"},
      {"compose", "e", "e_1*a_2 + c_1*b_2 + a_1*a_1*conj(a_1)*e_2"},
      {"inverse", "(3,1)", "-b/(a*conj(a))"},
      {"inverse", "(3,2)", "-conj(b)/(a*conj(a))"},
      {"inverse", "(3,3)", "1/(a*conj(a))"},
      {"inverse", "(4,1)", "b*c/(a^4*conj(a)^2) - e/(a^3*conj(a))"},
      {"inverse", "(4,2)", "c*conj(b)/(a^3*conj(a)^3) - d/(a^2*conj(a)^2)"},
      {"inverse", "(4,3)", "-c/(a^3*conj(a)^2)"},
      {"inverse", "(4,4)", "1/(a^2*conj(a))"},
      {"inverse", "(5,1)", "b*c/(a^3*conj(a)^3) - d/(a^2*conj(a)^2)"},
      {"inverse", "(5,2)", "b*c/(a^2*conj(a)^4) - e/(a*conj(a)^3)"},
      {"inverse", "(5,3)", "-c/(a^2*conj(a)^3)"},
      {"inverse", "(5,5)", "1/(a*conj(a)^2)"},
      {"inverse", "a", "1/a"},
      {"inverse", "b", "-b/(a*a*conj(a))"},
      {"inverse", "c", "-c/(a*a*a*a*conj(a))"},
      {"inverse", "d", "c*conj(b)/(a*a*a*a*conj(a)*conj(a)) - d/(a*a*conj(a))"},
      {"inverse", "e", "b*c/(a*a*a*a*conj(a)*conj(a)) - e/(a*a*a*conj(a))"},
  };
  return t;
}

GroupTemplate make_III2() {
  GroupTemplate t;
  t.id = GroupId::III2;
  t.n = 5;
  t.params = {{"a", CU, 1}, {"b", CF, 0}, {"c", CF, 0}, {"d", CF, 0}, {"e", CF, 0},
              {"f", CF, 0}, {"g", CF, 0}, {"h", CF, 0}, {"k", CF, 0}};
  t.pattern = {kRow1, kRow2, kRow3, kRow4, {"k", "h", "g", "f", "a*a*a*conj(a)"}};
  t.positions = {{"a", {0, 0}}, {"b", {2, 0}}, {"c", {3, 2}}, {"d", {3, 1}}, {"e", {3, 0}},
                 {"f", {4, 3}}, {"g", {4, 2}}, {"h", {4, 1}}, {"k", {4, 0}}};
  t.expected_real_dim = 18;
  t.printed = {
      {"compose", "a", "a_1*a_2"},
      {"compose", "b", "b_1*a_2 + a_1*conj(a_1)*b_2"},
      {"compose", "c", "c_1*a_2*conj(a_2) + a_1*a_1*conj(a_1)*c_2"},
      {"compose", "d", "d_1*conj(a_2) + c_1*conj(b_2) + a_1*a_1*conj(a_1)*d_2"},
      {"compose", "e", "e_1*a_2 + c_1*b_2 + a_1*a_1*conj(a_1)*e_2"},
      {"compose", "f", "f_1*a_2*a_2*conj(a_2) + a_1*a_1*a_1*conj(a_1)*f_2"},
      {"compose", "g", "g_1*a_2*conj(a_2) + f_1*c_2 + a_1*a_1*a_1*conj(a_1)*g_2"},
      {"compose", "h", "h_1*conj(a_2) + g_1*conj(b_2) + f_1*d_2 + a_1*a_1*a_1*conj(a_1)*h_2"},
      {"compose", "k", "k_1*a_2 + g_1*b_2 + f_1*e_2 + a_1*a_1*a_1*conj(a_1)*k_2"},
      {"compose", "(5,5)", "a_1*a_1*conj(a_1)*conj(a_1)*a_2*a_2*conj(a_2)*conj(a_2)"},
      {"inverse", "(3,1)", "-b/(a*a*conj(a))"},
      {"inverse", "(3,2)", "-conj(b)/(a*a*conj(a))"},
      {"inverse", "(3,3)", "1/(a*conj(a))"},
      {"inverse", "(4,1)", "b*c/(a^4*conj(a)^2) - e/(a^3*conj(a))"},
      {"inverse", "(4,2)", "c*conj(b)/(a^3*conj(a)^3) - d/(a^2*conj(a)^2)"},
      {"inverse", "(4,3)", "-c/(a^3*conj(a)^2)"},
      {"inverse", "(4,4)", "1/(a^2*conj(a))"},
      {"inverse", "(5,1)", "-b*c*f/(a^7*conj(a)^3) + b*g/(a^5*conj(a)^2) + e*f/(a^6*conj(a)^2) - k/(a^4*conj(a))"},
      {"inverse", "(5,2)",
       "-f*c*b/(a^6*conj(a)^4) + g*conj(b)/(a^4*conj(a)^3) + f*d/(a^5*conj(a)^3) - h/(a^3*conj(a)^2)"},
      {"inverse", "(5,3)", "f*c/(a^6*conj(a)^3) - g/(a^4*conj(a)^2)"},
      {"inverse", "(5,4)", "-f/(a^5*conj(a)^2)"},
      {"inverse", "(5,5)", "1/(a^3*conj(a))"},
      {"inverse", "a", "1/a"},
      {"inverse", "b", "-b/(a*a*conj(a))"},
      {"inverse", "c", "-c/(a*a*a*conj(a)*conj(a))"},
      {"inverse", "d", "c*conj(b)/(a*a*a*conj(a)*conj(a)*conj(a)) - d/(a*a*conj(a))"},
      {"inverse", "e", "b*c/(a*a*a*conj(a)*conj(a)*conj(a)) - e/(a*a*a*conj(a))"},
      {"inverse", "f", "-f/(a^5*conj(a)^2)"},
      {"inverse", "g", "c*f/(a^6*conj(a)^3) - g/(a^4*conj(a)^2)"},
      {"inverse", "h",
       "-f*c*b/(a^6*conj(a)^4) + g*conj(b)/(a^4*conj(a)^3) + f*d/(a^5*conj(a)^3) - h/(a^3*conj(a)^2)"},
      {"inverse", "k", "-b*c*f/(a^7*conj(a)^3) + b*g/(a^5*conj(a)^2) + e*f/(a^6*conj(a)^2) - k/(a^4*conj(a))"},
  };
  return t;
}

GroupTemplate make_IV1() {
  GroupTemplate t;
  t.id = GroupId::IV1;
  t.n = 5;
  t.params = {{"a11", CF, 1}, {"a12", CF, 0}, {"a21", CF, 0}, {"a22", CF, 1},
              {"b1", CF, 0},  {"b2", CF, 0},  {"c", RU, 1}};
  t.pattern = {{"a11", "a21", "0", "0", "0"},
               {"a12", "a22", "0", "0", "0"},
               {"0", "0", "conj(a11)", "conj(a21)", "0"},
               {"0", "0", "conj(a12)", "conj(a22)", "0"},
               {"b1", "b2", "conj(b1)", "conj(b2)", "c"}};
  t.positions = {{"a11", {0, 0}}, {"a21", {0, 1}}, {"a12", {1, 0}}, {"a22", {1, 1}},
                 {"b1", {4, 0}},  {"b2", {4, 1}},  {"c", {4, 4}}};
  t.derived_units = {{"Delta", "a11*a22 - a12*a21", "a11*a22"}};
  t.expected_real_dim = 13;
  return t;
}

GroupTemplate make_IV2() {
  GroupTemplate t;
  t.id = GroupId::IV2;
  t.n = 5;
  t.params = {{"a", CU, 1}, {"b", CF, 0}, {"c", CU, 1}, {"d", CF, 0}, {"e", CF, 0}};
  t.pattern = {{"c", "0", "0", "0", "0"},
               {"b", "a", "0", "0", "0"},
               {"0", "0", "conj(c)", "0", "0"},
               {"0", "0", "conj(b)", "conj(a)", "0"},
               {"e", "d", "conj(e)", "conj(d)", "a*conj(a)"}};
  t.positions = {{"c", {0, 0}}, {"b", {1, 0}}, {"a", {1, 1}}, {"e", {4, 0}}, {"d", {4, 1}}};
  t.expected_real_dim = 10;
  return t;
}

}  // namespace

const GroupTemplate& group_template(GroupId g) {
  static const std::vector<GroupTemplate> all = {make_I(), make_II(), make_III1(),
                                                 make_III2(), make_IV1(), make_IV2()};
  return all[static_cast<std::size_t>(g)];
}

}  // namespace crg
