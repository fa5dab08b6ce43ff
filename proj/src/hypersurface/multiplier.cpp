#include <algorithm>
#include <istream>
#include <map>
#include <sstream>

#include "crg/errors.hpp"
#include "crg/hypersurface/hypersurface.hpp"
#include "crg/scalar/parser.hpp"

namespace crg {

const std::vector<Symbol>& primed_coordinates(Ambient a) {
  static const std::vector<Symbol> c2{Symbol::make("z'"), Symbol::make("w'")};
  static const std::vector<Symbol> c3{Symbol::make("z1'"), Symbol::make("z2'"), Symbol::make("w'")};
  return a == Ambient::C2 ? c2 : c3;
}

HoloMap identity_map(Ambient a) {
  HoloMap h{a, {}};
  for (const auto& s : primed_coordinates(a)) h.comps.emplace_back(s);
  return h;
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

const std::vector<std::string>& component_names(Ambient a) {
  static const std::vector<std::string> c2{"z", "w"};
  static const std::vector<std::string> c3{"z1", "z2", "w"};
  return a == Ambient::C2 ? c2 : c3;
}

}  // namespace

HoloMap load_map(std::istream& in) {
  struct Line {
    std::size_t no;
    std::string rhs;
  };
  std::map<std::string, Line> given;
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    const std::string text = trim(line.substr(0, line.find('#')));
    if (text.empty()) continue;
    const std::string where = "map line " + std::to_string(no) + ": ";
    std::size_t split = text.find("->");
    std::size_t width = 2;
    if (split == std::string::npos) {
      split = text.find('=');
      width = 1;
    }
    if (split == std::string::npos) throw FormatError(where + "expected '<component> -> <polynomial>'");
    std::string lhs = trim(text.substr(0, split));
    while (!lhs.empty() && lhs.back() == '\'') lhs.pop_back();
    if (lhs != "z" && lhs != "w" && lhs != "z1" && lhs != "z2")
      throw FormatError(where + "unknown component '" + lhs + "'");
    if (!given.emplace(lhs, Line{no, text.substr(split + width)}).second)
      throw FormatError(where + "component " + lhs + " given twice");
  }
  const Ambient a = given.count("z1") || given.count("z2") ? Ambient::C3 : Ambient::C2;
  HoloMap h{a, {}};
  const auto& primed = primed_coordinates(a);
  for (const auto& name : component_names(a)) {
    auto it = given.find(name);
    if (it == given.end()) throw FormatError("map has no line for component " + name);
    const std::string where = "map line " + std::to_string(it->second.no) + ": ";
    if (it->second.rhs.find("conj") != std::string::npos)
      throw FormatError(where + "the map must be holomorphic (no conj)");
    UnitFraction f;
    try {
      f = parse_expr(it->second.rhs);
    } catch (const SyntaxError& e) {
      throw FormatError(where + e.what());
    } catch (const NotAUnit& e) {
      throw FormatError(where + "components must be polynomials: " + e.what());
    }
    if (!f.denominator().is_one()) throw FormatError(where + "components must be polynomials");
    for (const auto& s : f.numerator().symbols())
      if (std::find(primed.begin(), primed.end(), s) == primed.end())
        throw FormatError(where + "'" + s.str() + "' is not a primed coordinate of " + to_string(a));
    h.comps.push_back(f.numerator());
    given.erase(it);
  }
  if (!given.empty()) throw FormatError("map mixes C2 and C3 component names");
  return h;
}

HoloMap load_map_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_map(in);
}

MultiplierResult multiplier_at(const HoloMap& h, const GraphedHypersurface& source,
                               const GraphedHypersurface& target, const Point& q) {
  if (h.ambient != Ambient::C2 || source.ambient != Ambient::C2 || target.ambient != Ambient::C2)
    throw Error("the multiplier is defined for maps between hypersurfaces in C2");
  const Binding at = point_binding(source, q);
  const auto& coords = real_coordinates(Ambient::C2);
  const GaussRat v = q.size() > coords.size() ? GaussRat(q.back()) : substitute(source.phi, at);

  const Symbol& zp = primed_coordinates(Ambient::C2)[0];
  const Symbol& wp = primed_coordinates(Ambient::C2)[1];
  Binding primed;
  primed.set(zp, at.value(coords[0]) + GaussRat::i() * at.value(coords[1]));
  primed.set(wp, at.value(coords[2]) + GaussRat::i() * v);

  const StarPoly& z = h.comps[0];
  const StarPoly& w = h.comps[1];
  const GaussRat a_src = generator_coefficients(source)[0].eval(at);
  const GaussRat two(2);

  MultiplierResult out;
  out.a = substitute(z.partial(zp), primed) + two * a_src * substitute(z.partial(wp), primed);
  if (out.a.is_zero())
    throw ZeroDenominator("a = z_{z'} + 2A' z_{w'} vanishes at (" + to_string(q) + "); the map is not a CR equivalence there");
  const GaussRat w_part = substitute(w.partial(zp), primed) + two * a_src * substitute(w.partial(wp), primed);

  const GaussRat zi = substitute(z, primed);
  const GaussRat wi = substitute(w, primed);
  out.image = {zi, wi};
  Binding image;
  image.set(coords[0], GaussRat(zi.re())).set(coords[1], GaussRat(zi.im())).set(coords[2], GaussRat(wi.re()));
  out.image_on_target = substitute(target.phi, image) == GaussRat(wi.im());
  out.residual = generator_coefficients(target)[0].eval(image) - w_part / (two * out.a);
  return out;
}

}  // namespace crg
