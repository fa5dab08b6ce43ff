#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "crg/errors.hpp"
#include "crg/hypersurface/hypersurface.hpp"
#include "crg/matrix/exact_rank.hpp"
#include "crg/scalar/parser.hpp"
#include "crg/util/parallel.hpp"

namespace crg {

std::string to_string(Ambient a) { return a == Ambient::C2 ? "C2" : "C3"; }

Ambient parse_ambient(std::string_view text) {
  if (text == "C2") return Ambient::C2;
  if (text == "C3") return Ambient::C3;
  throw FormatError("unknown ambient '" + std::string(text) + "' (expected C2 or C3)");
}

namespace {

std::vector<Symbol> make_reals(std::initializer_list<const char*> names) {
  std::vector<Symbol> out;
  for (const char* n : names) out.push_back(Symbol::make(n, SymbolKind{false, true}));
  return out;
}

std::size_t z_count(Ambient a) { return a == Ambient::C2 ? 1 : 2; }

std::size_t w_index(Ambient a) { return 2 * z_count(a); }

std::size_t conj_index(Ambient a, std::size_t j) {
  const std::size_t m = z_count(a);
  if (j < m) return j + m;
  if (j < 2 * m) return j - m;
  return j == 2 * m ? j + 1 : j - 1;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

const std::vector<Symbol>& real_coordinates(Ambient a) {
  static const std::vector<Symbol> c2 = make_reals({"x", "y", "u"});
  static const std::vector<Symbol> c3 = make_reals({"x1", "y1", "x2", "y2", "u"});
  return a == Ambient::C2 ? c2 : c3;
}

const std::vector<std::string>& basis_names(Ambient a) {
  static const std::vector<std::string> c2{"z", "zbar", "w", "wbar"};
  static const std::vector<std::string> c3{"z1", "z2", "zbar1", "zbar2", "w", "wbar"};
  return a == Ambient::C2 ? c2 : c3;
}

RationalFunc basis_derivative(Ambient a, std::size_t j, const RationalFunc& f) {
  const auto& xs = real_coordinates(a);
  const std::size_t m = z_count(a);
  if (j >= 2 * m + 2) throw Error("basis index out of range");
  if (j >= 2 * m) return f.partial(xs.back()) * RationalFunc(StarPoly(GaussRat(Rational(1, 2))));
  const std::size_t k = j % m;
  const GaussRat half(Rational(1, 2));
  const GaussRat tilt = j < m ? GaussRat(Rational(0), Rational(-1, 2)) : GaussRat(Rational(0), Rational(1, 2));
  const Symbol& x = xs[2 * k];
  const Symbol& y = xs[2 * k + 1];
  return f.apply([&](const StarPoly& p) { return p.partial(x) * half + p.partial(y) * tilt; });
}

// ---- vector fields ----

CoordVectorField CoordVectorField::zero(Ambient a) { return {a, std::vector<RationalFunc>(basis_names(a).size())}; }

CoordVectorField CoordVectorField::basis(Ambient a, const std::string& name) {
  CoordVectorField out = zero(a);
  out[name] = RationalFunc(StarPoly(1));
  return out;
}

namespace {
std::size_t basis_position(Ambient a, const std::string& name) {
  const auto& names = basis_names(a);
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw Error("no basis field '" + name + "' in " + to_string(a));
  return static_cast<std::size_t>(it - names.begin());
}

void require_same(const CoordVectorField& a, const CoordVectorField& b) {
  if (a.ambient != b.ambient) throw DimensionMismatch("vector fields live in different ambients");
}
}  // namespace

const RationalFunc& CoordVectorField::operator[](const std::string& name) const {
  return comps.at(basis_position(ambient, name));
}

RationalFunc& CoordVectorField::operator[](const std::string& name) { return comps.at(basis_position(ambient, name)); }

RationalFunc CoordVectorField::apply(const RationalFunc& f) const {
  RationalFunc out;
  for (std::size_t j = 0; j < comps.size(); ++j)
    if (!comps[j].is_zero()) out = out + comps[j] * basis_derivative(ambient, j, f);
  return out;
}

CoordVectorField CoordVectorField::conj() const {
  CoordVectorField out = zero(ambient);
  for (std::size_t j = 0; j < comps.size(); ++j) out.comps[conj_index(ambient, j)] = comps[j].conj();
  return out;
}

std::vector<GaussRat> CoordVectorField::eval(const Binding& at) const {
  std::vector<GaussRat> out;
  out.reserve(comps.size());
  for (const auto& c : comps) out.push_back(c.eval(at));
  return out;
}

CoordVectorField operator+(const CoordVectorField& a, const CoordVectorField& b) {
  require_same(a, b);
  CoordVectorField out = a;
  for (std::size_t j = 0; j < out.comps.size(); ++j) out.comps[j] = a.comps[j] + b.comps[j];
  return out;
}

CoordVectorField operator-(const CoordVectorField& a, const CoordVectorField& b) {
  require_same(a, b);
  CoordVectorField out = a;
  for (std::size_t j = 0; j < out.comps.size(); ++j) out.comps[j] = a.comps[j] - b.comps[j];
  return out;
}

CoordVectorField operator*(const RationalFunc& f, const CoordVectorField& x) {
  CoordVectorField out = x;
  for (auto& c : out.comps) c = f * c;
  return out;
}

bool operator==(const CoordVectorField& a, const CoordVectorField& b) {
  return a.ambient == b.ambient && a.comps == b.comps;
}

std::string CoordVectorField::str() const {
  std::string out;
  const auto& names = basis_names(ambient);
  for (std::size_t j = 0; j < comps.size(); ++j) {
    if (comps[j].is_zero()) continue;
    if (!out.empty()) out += " + ";
    const RationalFunc c = comps[j].normalized();
    out += (c == RationalFunc(StarPoly(1)) ? "" : "(" + c.str() + ")*") + "d/d" + names[j];
  }
  return out.empty() ? "0" : out;
}

CoordVectorField coord_bracket(const CoordVectorField& x, const CoordVectorField& y) {
  require_same(x, y);
  CoordVectorField out = CoordVectorField::zero(x.ambient);
  for (std::size_t j = 0; j < out.comps.size(); ++j) out.comps[j] = x.apply(y.comps[j]) - y.apply(x.comps[j]);
  return out;
}

// ---- hypersurfaces and points ----

GraphedHypersurface make_hypersurface(Ambient a, std::string_view phi) {
  if (phi.find("conj") != std::string_view::npos) throw FormatError("phi may not use conj");
  ParseOptions opts;
  for (const auto& s : real_coordinates(a)) opts.reals.insert(s.str());
  UnitFraction f;
  try {
    f = parse_expr(phi, opts);
  } catch (const NotAUnit& e) {
    throw FormatError(std::string("phi must be a polynomial: ") + e.what());
  }
  if (!f.denominator().is_one()) throw FormatError("phi must be a polynomial");
  const auto& coords = real_coordinates(a);
  for (const auto& s : f.numerator().symbols())
    if (std::find(coords.begin(), coords.end(), s) == coords.end())
      throw FormatError("phi uses '" + s.str() + "', which is not a real coordinate of " + to_string(a));
  if (f.numerator() != f.numerator().conj()) throw FormatError("phi must be real");
  return {a, f.numerator()};
}

GraphedHypersurface load_hypersurface(std::istream& in) {
  std::optional<Ambient> ambient;
  std::optional<GraphedHypersurface> out;
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    const std::string text = trim(line.substr(0, line.find('#')));
    if (text.empty()) continue;
    const std::string where = "manifold line " + std::to_string(no) + ": ";
    try {
      if (text.rfind("ambient", 0) == 0) {
        if (ambient) throw FormatError("ambient given twice");
        ambient = parse_ambient(trim(std::string_view(text).substr(7)));
      } else if (text.rfind("phi", 0) == 0) {
        const auto eq = text.find('=');
        if (eq == std::string::npos || trim(text.substr(3, eq - 3)) != "") throw FormatError("expected 'phi = <expr>'");
        if (!ambient) throw FormatError("'ambient' must come before phi");
        if (out) throw FormatError("phi given twice");
        out = make_hypersurface(*ambient, text.substr(eq + 1));
      } else {
        throw FormatError("unknown directive '" + text + "'");
      }
    } catch (const SyntaxError& e) {
      throw FormatError(where + e.what());
    } catch (const FormatError& e) {
      throw FormatError(where + e.what());
    }
  }
  if (!out) throw FormatError("manifold file has no phi line");
  return *out;
}

GraphedHypersurface load_hypersurface_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_hypersurface(in);
}

Point parse_point(std::string_view text) {
  Point out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const std::string item = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    try {
      out.push_back(parse_rational(item));
    } catch (const Error& e) {
      throw FormatError("point coordinate " + std::to_string(out.size() + 1) + ": " + e.what());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string to_string(const Point& q) {
  std::string out;
  for (const auto& c : q) out += (out.empty() ? "" : ",") + to_string(c);
  return out;
}

Binding point_binding(const GraphedHypersurface& m, const Point& q) {
  const auto& coords = real_coordinates(m.ambient);
  if (q.size() != coords.size() && q.size() != coords.size() + 1)
    throw FormatError("a point of a hypersurface in " + to_string(m.ambient) + " has " +
                      std::to_string(coords.size()) + " or " + std::to_string(coords.size() + 1) +
                      " coordinates, got " + std::to_string(q.size()));
  Binding b;
  for (std::size_t k = 0; k < coords.size(); ++k) b.set(coords[k], GaussRat(q[k]));
  if (q.size() > coords.size()) {
    const GaussRat v = substitute(m.phi, b);
    if (v != GaussRat(q.back()))
      throw PointNotOnM("point (" + to_string(q) + ") has v = " + to_string(q.back()) + " but phi = " + to_string(v));
  }
  return b;
}

// ---- generators and verdicts ----

std::vector<RationalFunc> generator_coefficients(const GraphedHypersurface& m) {
  const RationalFunc phi(m.phi);
  const RationalFunc den(StarPoly(GaussRat::i()) + m.phi.partial(real_coordinates(m.ambient).back()));
  std::vector<RationalFunc> out;
  for (std::size_t k = 0; k < z_count(m.ambient); ++k)
    out.push_back(-basis_derivative(m.ambient, k, phi) / den);
  return out;
}

std::vector<CoordVectorField> build_generators(const GraphedHypersurface& m) {
  const auto as = generator_coefficients(m);
  const auto& names = basis_names(m.ambient);
  std::vector<CoordVectorField> out;
  for (std::size_t k = 0; k < as.size(); ++k) {
    CoordVectorField l = CoordVectorField::basis(m.ambient, names[k]);
    l.comps[w_index(m.ambient)] = RationalFunc(StarPoly(2)) * as[k];
    out.push_back(std::move(l));
  }
  return out;
}

std::size_t rank_at_point(const GraphedHypersurface& m, const std::vector<CoordVectorField>& fields,
                          const Point& q) {
  const Binding at = point_binding(m, q);
  std::vector<std::vector<GaussRat>> rows;
  for (const auto& f : fields) {
    if (f.ambient != m.ambient) throw DimensionMismatch("field and hypersurface ambients differ");
    rows.push_back(f.eval(at));
  }
  return rank_over_qi(std::move(rows));
}

std::vector<std::vector<RationalFunc>> levi_matrix(const GraphedHypersurface& m,
                                                   const std::vector<CoordVectorField>& gens) {
  const auto as = generator_coefficients(m);
  const std::size_t w = w_index(m.ambient);
  const RationalFunc i_(StarPoly(GaussRat::i()));
  const RationalFunc two(StarPoly(2));
  std::vector<std::vector<RationalFunc>> h(gens.size(), std::vector<RationalFunc>(gens.size()));
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const CoordVectorField v = i_ * coord_bracket(gens[j], gens[k].conj());
      RationalFunc t = v.comps[w];
      for (std::size_t l = 0; l < as.size(); ++l)
        if (!v.comps[l].is_zero()) t = t - two * as[l] * v.comps[l];
      h[j][k] = t;
    }
  return h;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::ClassI:
      return "ClassI";
    case Verdict::Degenerate:
      return "Degenerate";
    case Verdict::ClassIV1:
      return "ClassIV1";
    case Verdict::ClassIV2Candidate:
      return "ClassIV2-candidate";
  }
  return "?";
}

Classification classify_point(const GraphedHypersurface& m, const Point& q) {
  Classification out;
  const auto gens = build_generators(m);
  if (m.ambient == Ambient::C2) {
    const CoordVectorField lbar = gens[0].conj();
    out.rank = rank_at_point(m, {gens[0], lbar, coord_bracket(gens[0], lbar)}, q);
    out.verdict = out.rank == 3 ? Verdict::ClassI : Verdict::Degenerate;
    out.notes.push_back("rank of (L, Lbar, [L,Lbar]) is " + std::to_string(out.rank));
    return out;
  }
  const Binding at = point_binding(m, q);
  std::vector<std::vector<GaussRat>> h;
  for (const auto& row : levi_matrix(m, gens)) {
    h.emplace_back();
    for (const auto& e : row) h.back().push_back(e.eval(at));
  }
  out.levi_det = h[0][0] * h[1][1] - h[0][1] * h[1][0];
  out.rank = rank_over_qi(h);
  out.verdict = out.rank == 2 ? Verdict::ClassIV1 : out.rank == 1 ? Verdict::ClassIV2Candidate : Verdict::Degenerate;
  out.notes.push_back("Levi matrix [[" + to_string(h[0][0]) + ", " + to_string(h[0][1]) + "], [" +
                      to_string(h[1][0]) + ", " + to_string(h[1][1]) + "]], rank " + std::to_string(out.rank));
  if (out.verdict == Verdict::ClassIV2Candidate)
    out.notes.push_back("class IV2 also needs the Levi rank to stay 1 near the point; a pointwise test cannot show that");
  return out;
}

std::vector<Classification> classify_batch(const GraphedHypersurface& m, const std::vector<Point>& qs) {
  std::vector<Classification> out(qs.size());
  parallel_for(qs.size(), [&](std::size_t i) { out[i] = classify_point(m, qs[i]); });
  return out;
}

std::vector<Classification> classify_batch_serial(const GraphedHypersurface& m, const std::vector<Point>& qs) {
  std::vector<Classification> out;
  out.reserve(qs.size());
  for (const auto& q : qs) out.push_back(classify_point(m, q));
  return out;
}

}  // namespace crg
