#include <algorithm>
#include <istream>
#include <regex>
#include <set>
#include <sstream>

#include "crg/errors.hpp"
#include "crg/frames/frame_calculus.hpp"

namespace crg {

namespace {

const char* const kBuiltin = R"(# Frame-calculus presets for the six general classes.
pair L Lbar
pair T T
pair S Sbar
pair R Rbar
pair K Kbar
pair L1 L1bar
pair L2 L2bar

# Class I: M^3 in C^2
frame I L Lbar T
declare I units a
bracket I [L,Lbar] = -I*T
transfer I L' = a*L
recipe I T' = I*[L',Lbar']
name I T' L = b
name I T' Lbar = conj(b)
printed I row 1 = a, 0, 0
printed I row 2 = 0, conj(a), 0
printed I row 3 = b, conj(b), a*conj(a)
printed I coeff b = -I*conj(a)*L(a)

# Class II: M^4 in C^3
frame II L Lbar T S
declare II units a
bracket II [L,Lbar] = -I*T
bracket II [L,T] = S
transfer II L' = a*L
recipe II T' = I*[L',Lbar']
name II T' L = b
name II T' Lbar = conj(b)
recipe II S' = [L',T']
name II S' T = c
name II S' Lbar = d
name II S' L = e
printed II row 1 = a, 0, 0, 0
printed II row 2 = 0, conj(a), 0, 0
printed II row 3 = b, conj(b), a*conj(a), 0
printed II row 4 = e, d, c, a*conj(a)
printed II coeff b = -I*conj(a)*Lbar(a)
printed II coeff c = -I*a*conj(b) + a*L(a*conj(a))
printed II coeff d = a*L(conj(b))
printed II coeff e = a*L(b) - a*conj(a)*T(a) - conj(b)*Lbar(a) - b*L(a)

# Class III1: M^5 in C^4, fifth field Sbar = [Lbar,T]
frame III1 L Lbar T S Sbar
declare III1 units a
bracket III1 [L,Lbar] = -I*T
bracket III1 [L,T] = S
transfer III1 L' = a*L
recipe III1 T' = I*[L',Lbar']
name III1 T' L = b
name III1 T' Lbar = conj(b)
recipe III1 S' = [L',T']
name III1 S' T = c
name III1 S' Lbar = d
name III1 S' L = e
recipe III1 Sbar' = [Lbar',T']
name III1 Sbar' T = conj(c)
name III1 Sbar' L = conj(d)
name III1 Sbar' Lbar = conj(e)
printed III1 row 1 = a, 0, 0, 0, 0
printed III1 row 2 = 0, conj(a), 0, 0, 0
printed III1 row 3 = b, conj(b), a*conj(a), 0, 0
printed III1 row 4 = e, d, c, a*a*conj(a), 0
printed III1 row 5 = conj(d), conj(e), conj(c), 0, a*conj(a)*conj(a)

# Class III2: M^5 in C^4, R = [L,[L,T]]
frame III2 L Lbar T S R
declare III2 units a
bracket III2 [L,Lbar] = -I*T
bracket III2 [L,T] = S
bracket III2 [L,S] = R
transfer III2 L' = a*L
recipe III2 T' = I*[L',Lbar']
name III2 T' L = b
name III2 T' Lbar = conj(b)
recipe III2 S' = [L',T']
name III2 S' T = c
name III2 S' Lbar = d
name III2 S' L = e
recipe III2 R' = [L',S']
name III2 R' S = f
name III2 R' T = g
name III2 R' Lbar = h
name III2 R' L = k
printed III2 row 1 = a, 0, 0, 0, 0
printed III2 row 2 = 0, conj(a), 0, 0, 0
printed III2 row 3 = b, conj(b), a*conj(a), 0, 0
printed III2 row 4 = e, d, c, a*a*conj(a), 0
printed III2 row 5 = k, h, g, f, a*a*a*conj(a)
printed III2 coeff f = a*c + a*L(a*a*conj(a))
printed III2 coeff g = -I*a*d + a*L(c)
printed III2 coeff h = a*L(d)
printed III2 coeff k = a*L(e) - a*a*conj(a)*S(a) - c*T(a) - d*Lbar(a) - e*L(a)

# Class IV1: M^5 in C^3, Levi form of rank 2
frame IV1 L1 L2 L1bar L2bar T
declare IV1 reals C
declare IV1 real_units c
bracket IV1 I*[L1,L1bar] = T
bracket IV1 I*[L2,L1bar] = A*T + B1*L1bar + B2*L2bar + D1*L1 + D2*L2
bracket IV1 I*[L1,L2bar] = conj(A)*T + conj(D1)*L1bar + conj(D2)*L2bar + conj(B1)*L1 + conj(B2)*L2
bracket IV1 I*[L2,L2bar] = C*T + conj(E1)*L1bar + conj(E2)*L2bar + E1*L1 + E2*L2
transfer IV1 L1' = a11*L1 + a21*L2
transfer IV1 L2' = a12*L1 + a22*L2
recipe IV1 T' = I*[L1',L1bar']
name IV1 T' T = c
name IV1 T' L1 = b1
name IV1 T' L2 = b2
name IV1 T' L1bar = conj(b1)
name IV1 T' L2bar = conj(b2)
printed IV1 row 1 = a11, a21, 0, 0, 0
printed IV1 row 2 = a12, a22, 0, 0, 0
printed IV1 row 3 = 0, 0, conj(a11), conj(a21), 0
printed IV1 row 4 = 0, 0, conj(a21), conj(a22), 0
printed IV1 row 5 = b1, b2, conj(b1), conj(b2), c
printed IV1 coeff c = a11*conj(a11) + a21*conj(a11)*A + a11*conj(a21)*conj(A) + a21*conj(a21)*C
printed IV1 coeff b1 = a21*conj(a11)*D1 + a11*conj(a21)*conj(B1) + a21*conj(a21)*E1 - I*conj(a11)*L1bar(a11) - I*conj(a21)*L2bar(a11)
printed IV1 coeff b2 = a21*conj(a11)*D2 + a11*conj(a21)*conj(B2) + a21*conj(a21)*E2 - I*conj(a11)*L1bar(a21) - I*conj(a21)*L2bar(a21)

# Class IV2: M^5 in C^3, Levi kernel spanned by K
frame IV2 K L1 Kbar L1bar T
declare IV2 units a c
bracket IV2 I*[L1,L1bar] = T
bracket IV2 I*[K,L1bar] = A*K + B*L1 + C*Kbar + D*L1bar
bracket IV2 I*[L1,Kbar] = conj(C)*K + conj(D)*L1 + conj(A)*Kbar + conj(B)*L1bar
bracket IV2 I*[K,Kbar] = E*K + conj(E)*Kbar
transfer IV2 K' = c*K
transfer IV2 L1' = a*L1 + b*K
recipe IV2 T' = I*[L1',L1bar']
name IV2 T' L1 = d
name IV2 T' K = e
name IV2 T' L1bar = conj(d)
name IV2 T' Kbar = conj(e)
printed IV2 row 1 = c, 0, 0, 0, 0
printed IV2 row 2 = b, a, 0, 0, 0
printed IV2 row 3 = 0, 0, conj(c), 0, 0
printed IV2 row 4 = 0, 0, conj(b), conj(a), 0
printed IV2 row 5 = e, d, conj(e), conj(d), a*conj(a)
printed IV2 coeff d = b*conj(a)*B + a*conj(b)*D - I*conj(a)*L1bar(a) - I*conj(b)*Kbar(a)
printed IV2 coeff e = b*conj(a)*A + a*conj(b)*C + b*conj(b)*E - I*conj(a)*L1bar(b) - I*conj(b)*Kbar(b)
)";

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

class Loader {
 public:
  std::vector<ClassPreset> run(std::istream& in) {
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      const std::string text = trim(raw);
      if (text.empty()) continue;
      try {
        directive(text);
      } catch (const FormatError&) {
        throw;
      } catch (const Error& e) {
        fail(e.what());
      }
    }
    for (const auto& p : out_) check_complete(p);
    return out_;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw FormatError("preset line " + std::to_string(line_) + ": " + what);
  }

  ClassPreset& preset(const std::string& id) {
    const GroupId g = parse_group_id(id);
    for (auto& p : out_)
      if (p.id == g) return p;
    fail("class " + id + " has no frame line yet");
  }

  // Splits "lhs = rhs" at the first '='.
  std::pair<std::string, std::string> equation(const std::string& s) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) fail("expected '='");
    return {trim(s.substr(0, eq)), trim(s.substr(eq + 1))};
  }

  VectorExpr linear(const ClassPreset& p, const std::string& text) {
    const UnitFraction f = parse_expr(text, p.decl);
    if (!f.is_polynomial()) fail("'" + text + "' has a denominator");
    const StarPoly& num = f.numerator();
    std::vector<Symbol> frames;
    for (const Symbol& s : num.symbols())
      if (!s.is_atom() && !s.base_conjugated() && is_registered_derivation(s.base())) frames.push_back(s);
    VectorExpr v;
    StarPoly rest = num;
    for (const Symbol& s : frames) {
      const StarPoly c = num.partial(s);
      for (const Symbol& t : c.symbols())
        if (std::find(frames.begin(), frames.end(), t) != frames.end())
          fail("'" + text + "' is not linear in the frame fields");
      v.set(s.base(), c);
      rest -= c * StarPoly(s);
    }
    if (!rest.is_zero()) fail("'" + text + "' has a term without a frame field");
    return v;
  }

  GaussRat constant(const ClassPreset& p, const std::string& text) {
    if (text.empty()) return GaussRat(1);
    const UnitFraction f = parse_expr(text, p.decl);
    if (!f.is_constant()) fail("scale '" + text + "' is not a constant");
    return f.numerator().constant_term();
  }

  void directive(const std::string& text) {
    std::istringstream is(text);
    std::string kw;
    is >> kw;
    if (kw == "pair") {
      std::string x, y, extra;
      if (!(is >> x >> y) || (is >> extra)) fail("expected 'pair X Y'");
      register_derivation(x, y);
      return;
    }
    std::string id;
    if (!(is >> id)) fail("missing class after '" + kw + "'");
    std::string rest;
    std::getline(is, rest);
    rest = trim(rest);

    if (kw == "frame") {
      const GroupId g = parse_group_id(id);
      for (const auto& p : out_)
        if (p.id == g) fail("duplicate frame line for class " + id);
      ClassPreset p;
      p.id = g;
      p.decl.derivations = true;
      std::istringstream fs(rest);
      for (std::string f; fs >> f;) {
        if (!is_registered_derivation(f)) fail("frame field '" + f + "' has no pair line");
        p.frame.push_back(f);
      }
      if (p.frame.empty()) fail("empty frame");
      out_.push_back(std::move(p));
    } else if (kw == "declare") {
      ClassPreset& p = preset(id);
      std::istringstream ds(rest);
      std::string what;
      ds >> what;
      std::set<std::string>* target = what == "units"        ? &p.decl.units
                                      : what == "reals"      ? &p.decl.reals
                                      : what == "real_units" ? &p.decl.real_units
                                                             : nullptr;
      if (target == nullptr) fail("unknown declaration '" + what + "'");
      for (std::string n; ds >> n;) target->insert(n);
    } else if (kw == "bracket") {
      ClassPreset& p = preset(id);
      const auto [lhs, rhs] = equation(rest);
      static const std::regex re(R"(^(?:(.*)\*)?\[\s*(\w+)\s*,\s*(\w+)\s*\]$)");
      std::smatch m;
      if (!std::regex_match(lhs, m, re)) fail("expected [X,Y] or c*[X,Y] before '='");
      const GaussRat scale = constant(p, trim(m[1].str()));
      if (scale.is_zero()) fail("zero bracket scale");
      StarPoly inv(scale.inverse());
      p.table.add(m[2].str(), m[3].str(), inv * linear(p, rhs));
    } else if (kw == "transfer") {
      ClassPreset& p = preset(id);
      const auto [lhs, rhs] = equation(rest);
      if (lhs.size() < 2 || lhs.back() != '\'') fail("expected a primed field before '='");
      p.transfer[lhs.substr(0, lhs.size() - 1)] = linear(p, rhs);
    } else if (kw == "recipe") {
      ClassPreset& p = preset(id);
      const auto [lhs, rhs] = equation(rest);
      static const std::regex re(R"(^(?:(.*)\*)?\[\s*(\w+)'\s*,\s*(\w+)'\s*\]$)");
      std::smatch m;
      if (lhs.size() < 2 || lhs.back() != '\'' || !std::regex_match(rhs, m, re))
        fail("expected X' = [Y',Z'] or X' = c*[Y',Z']");
      RecipeStep step;
      step.target = lhs.substr(0, lhs.size() - 1);
      step.scale = constant(p, trim(m[1].str()));
      step.left = m[2].str();
      step.right = m[3].str();
      p.recipe.push_back(std::move(step));
    } else if (kw == "name") {
      ClassPreset& p = preset(id);
      const auto [lhs, rhs] = equation(rest);
      std::istringstream ns(lhs);
      std::string target, field, extra;
      if (!(ns >> target >> field) || (ns >> extra) || target.back() != '\'')
        fail("expected 'name C X' F = n'");
      target.pop_back();
      RecipeStep* step = nullptr;
      for (auto& s : p.recipe)
        if (s.target == target) step = &s;
      if (step == nullptr) fail("no recipe for " + target + "'");
      step->names.emplace_back(field, rhs);
    } else if (kw == "printed") {
      ClassPreset& p = preset(id);
      const auto [lhs, rhs] = equation(rest);
      std::istringstream ps(lhs);
      std::string what, label;
      ps >> what >> label;
      if (what == "row") {
        if (label != std::to_string(p.printed_matrix.size() + 1)) fail("rows must be numbered 1, 2, ... in order");
        std::vector<std::string> row;
        std::istringstream rs(rhs);
        for (std::string cell; std::getline(rs, cell, ',');) row.push_back(trim(cell));
        if (row.size() != p.frame.size()) fail("row has " + std::to_string(row.size()) + " entries");
        for (const auto& cell : row) parse_expr(cell, p.decl);
        p.printed_matrix.push_back(std::move(row));
      } else if (what == "coeff") {
        parse_expr(rhs, p.decl);
        p.printed_coefficients.push_back({label, rhs});
      } else {
        fail("expected 'printed C row N' or 'printed C coeff n'");
      }
    } else {
      fail("unknown directive '" + kw + "'");
    }
  }

  void check_complete(const ClassPreset& p) const {
    if (!p.printed_matrix.empty() && p.printed_matrix.size() != p.frame.size())
      throw FormatError("class " + p.name() + ": printed matrix has " + std::to_string(p.printed_matrix.size()) +
                        " rows for a frame of " + std::to_string(p.frame.size()));
  }

  std::vector<ClassPreset> out_;
  std::size_t line_ = 0;
};

}  // namespace

std::vector<ClassPreset> load_presets(std::istream& in) { return Loader().run(in); }

std::vector<ClassPreset> load_presets_text(const std::string& text) {
  std::istringstream in(text);
  return load_presets(in);
}

const std::string& builtin_preset_text() {
  static const std::string text = kBuiltin;
  return text;
}

const ClassPreset& builtin_preset(GroupId id) {
  static const std::vector<ClassPreset> presets = load_presets_text(builtin_preset_text());
  for (const auto& p : presets)
    if (p.id == id) return p;
  throw Error("no built-in preset for class " + to_string(id));
}

}  // namespace crg
