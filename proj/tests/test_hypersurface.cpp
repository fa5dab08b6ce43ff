#include <gtest/gtest.h>

#include "crg/errors.hpp"
#include "crg/hypersurface/hypersurface.hpp"
#include "crg/scalar/parser.hpp"
#include "support/random.hpp"

namespace crg {
namespace {

using testing::Gen;

ParseOptions coords(Ambient a) {
  ParseOptions o;
  for (const auto& s : real_coordinates(a)) o.reals.insert(s.str());
  return o;
}

RationalFunc R(Ambient a, const std::string& s) { return RationalFunc(parse_expr(s, coords(a)).numerator()); }

CoordVectorField field(Ambient a, std::initializer_list<std::pair<const char*, RationalFunc>> comps) {
  CoordVectorField f = CoordVectorField::zero(a);
  for (const auto& [name, c] : comps) f[name] = c;
  return f;
}

// Real polynomial in the real coordinates, total degree <= 3.
StarPoly random_phi(Gen& g, Ambient a, int max_terms = 4) {
  const auto& xs = real_coordinates(a);
  StarPoly p;
  const int n = g.integer(1, max_terms);
  for (int t = 0; t < n; ++t) {
    std::vector<Monomial::Factor> fs;
    const int deg = g.integer(1, 3);
    for (int k = 0; k < deg; ++k) fs.emplace_back(xs[static_cast<std::size_t>(g.integer(0, static_cast<int>(xs.size()) - 1))], 1u);
    p.add_term(Monomial::from_factors(std::move(fs)), GaussRat(g.rational()));
  }
  return p;
}

StarPoly random_complex_poly(Gen& g, Ambient a, int max_degree) {
  const auto& xs = real_coordinates(a);
  StarPoly p;
  const int n = g.integer(1, 3);
  for (int t = 0; t < n; ++t) {
    std::vector<Monomial::Factor> fs;
    const int deg = g.integer(0, max_degree);
    for (int k = 0; k < deg; ++k) fs.emplace_back(xs[static_cast<std::size_t>(g.integer(0, static_cast<int>(xs.size()) - 1))], 1u);
    p.add_term(Monomial::from_factors(std::move(fs)), g.gauss());
  }
  return p;
}

// On-graph point with v computed from phi.
Point random_point(Gen& g, const GraphedHypersurface& m) {
  Point q;
  Binding b;
  for (const auto& s : real_coordinates(m.ambient)) {
    q.push_back(g.rational());
    b.set(s, GaussRat(q.back()));
  }
  q.push_back(substitute(m.phi, b).re());
  return q;
}

// ---- RationalFunc ----

TEST(RationalFunc, CrossMultiplicationEquality) {
  const Ambient a = Ambient::C2;
  const RationalFunc f(R(a, "x*y + x").num(), R(a, "x").num());
  EXPECT_EQ(f, R(a, "y + 1"));
  EXPECT_NE(f, R(a, "y"));
  EXPECT_EQ(f.normalized().den(), StarPoly(1));
  EXPECT_THROW(RationalFunc(StarPoly(1), StarPoly()), Error);
}

TEST(RationalFunc, QuotientAndProductRules) {
  Gen g(11);
  const Ambient a = Ambient::C2;
  const Symbol& x = real_coordinates(a)[0];
  for (int n = 0; n < 40; ++n) {
    const RationalFunc p = random_complex_poly(g, a, 2);
    StarPoly d = random_complex_poly(g, a, 2);
    if (d.is_zero()) continue;
    const RationalFunc q(random_complex_poly(g, a, 2), d);
    EXPECT_EQ((p * q).partial(x), p.partial(x) * q + p * q.partial(x));
    if (!q.is_zero()) EXPECT_EQ((p / q) * q, p);
    EXPECT_EQ(q.conj().conj(), q);
  }
}

TEST(RationalFunc, EvalRaisesAtPole) {
  const Ambient a = Ambient::C2;
  const RationalFunc f(StarPoly(1), R(a, "x - 1").num());
  Binding b;
  b.set(real_coordinates(a)[0], GaussRat(1));
  EXPECT_THROW(f.eval(b), PoleAtPoint);
  b.set(real_coordinates(a)[0], GaussRat(3));
  EXPECT_EQ(f.eval(b), GaussRat(Rational(1, 2)));
}

// ---- generators ----

TEST(BuildGenerators, SphereLikeExample) {
  const auto m = make_hypersurface(Ambient::C2, "x^2 + y^2");
  // phi_z = x - i y, phi_u = 0, so A = -(x - iy)/i = i(x - iy).
  EXPECT_EQ(generator_coefficients(m)[0], R(Ambient::C2, "I*(x - I*y)"));
  const auto gens = build_generators(m);
  ASSERT_EQ(gens.size(), 1u);
  EXPECT_EQ(gens[0], field(Ambient::C2, {{"z", R(Ambient::C2, "1")}, {"w", R(Ambient::C2, "2*I*(x - I*y)")}}));
}

TEST(BuildGenerators, FlatAndC3Examples) {
  const auto flat = build_generators(make_hypersurface(Ambient::C2, "0"));
  EXPECT_EQ(flat[0], CoordVectorField::basis(Ambient::C2, "z"));
  const auto m3 = make_hypersurface(Ambient::C3, "x1^2 + y1^2");
  const auto as = generator_coefficients(m3);
  ASSERT_EQ(as.size(), 2u);
  EXPECT_EQ(as[0], R(Ambient::C3, "I*(x1 - I*y1)"));
  EXPECT_TRUE(as[1].is_zero());
}

// L(v) computed through the w, wbar components must equal L(phi): the
// generators are tangent to v = phi.
TEST(BuildGenerators, TangentToTheGraph) {
  Gen g(3);
  for (Ambient a : {Ambient::C2, Ambient::C3})
    for (int n = 0; n < 20; ++n) {
      const GraphedHypersurface m{a, random_phi(g, a)};
      for (const auto& l : build_generators(m))
        for (const auto& f : {l, l.conj()}) {
          const RationalFunc lv = (f["w"] - f["wbar"]) / RationalFunc(StarPoly(GaussRat(0, 2)));
          EXPECT_EQ(lv, f.apply(RationalFunc(m.phi))) << m.phi;
        }
    }
}

// ---- coord_bracket ----

TEST(CoordBracket, Examples) {
  const Ambient a = Ambient::C2;
  EXPECT_EQ(coord_bracket(CoordVectorField::basis(a, "z"), CoordVectorField::basis(a, "w")), CoordVectorField::zero(a));
  // phi = |z|^2: A = i zbar, so [L, Lbar] = -Lbar(2A) d/dw + L(2 Abar) d/dwbar = -2i (d/dw + d/dwbar).
  const auto l = build_generators(make_hypersurface(a, "x^2 + y^2"))[0];
  const CoordVectorField b = coord_bracket(l, l.conj());
  EXPECT_EQ(b, field(a, {{"w", R(a, "-2*I")}, {"wbar", R(a, "-2*I")}}));
}

CoordVectorField random_field(Gen& g, Ambient a) {
  CoordVectorField f = CoordVectorField::zero(a);
  for (auto& c : f.comps)
    if (g.coin()) c = RationalFunc(random_complex_poly(g, a, 2));
  return f;
}

TEST(CoordBracket, AntisymmetryAndJacobi) {
  Gen g(5);
  for (Ambient a : {Ambient::C2, Ambient::C3})
    for (int n = 0; n < 25; ++n) {
      const auto x = random_field(g, a);
      const auto y = random_field(g, a);
      const auto z = random_field(g, a);
      EXPECT_EQ(coord_bracket(x, y), CoordVectorField::zero(a) - coord_bracket(y, x));
      const auto jacobi = coord_bracket(x, coord_bracket(y, z)) + coord_bracket(y, coord_bracket(z, x)) +
                          coord_bracket(z, coord_bracket(x, y));
      EXPECT_EQ(jacobi, CoordVectorField::zero(a));
    }
}

// ---- rank and classification ----

std::vector<CoordVectorField> frame_and_bracket(const CoordVectorField& l) {
  return {l, l.conj(), coord_bracket(l, l.conj())};
}

TEST(RankAtPoint, SphereLikeIsRankThreeOnSamplePoints) {
  const auto m = make_hypersurface(Ambient::C2, "x^2 + y^2");
  const auto fields = frame_and_bracket(build_generators(m)[0]);
  for (int xi = -2; xi <= 2; ++xi)
    for (int yi = -2; yi <= 2; ++yi) {
      const Point q{Rational(xi, 2), Rational(yi, 3), Rational(1, 5), Rational(xi * xi, 4) + Rational(yi * yi, 9)};
      EXPECT_EQ(rank_at_point(m, fields, q), 3u) << to_string(q);
    }
}

TEST(RankAtPoint, FlatAndErrors) {
  const auto flat = make_hypersurface(Ambient::C2, "0");
  EXPECT_EQ(rank_at_point(flat, frame_and_bracket(build_generators(flat)[0]), {0, 0, 0, 0}), 2u);
  const auto m = make_hypersurface(Ambient::C2, "x^2 + y^2");
  const auto fields = frame_and_bracket(build_generators(m)[0]);
  EXPECT_THROW(rank_at_point(m, fields, {1, 0, 0, 0}), PointNotOnM);
  EXPECT_THROW(rank_at_point(m, fields, {1, 0}), FormatError);
  const auto pole = field(Ambient::C2, {{"z", RationalFunc(StarPoly(1), R(Ambient::C2, "x").num())}});
  EXPECT_THROW(rank_at_point(m, {pole}, {0, 0, 0, 0}), PoleAtPoint);
}

TEST(ClassifyPoint, Examples) {
  EXPECT_EQ(classify_point(make_hypersurface(Ambient::C2, "x^2 + y^2"), {0, 0, 0}).verdict, Verdict::ClassI);
  EXPECT_EQ(classify_point(make_hypersurface(Ambient::C2, "x^3"), {0, 1, 0}).verdict, Verdict::Degenerate);

  const auto iv1 = classify_point(make_hypersurface(Ambient::C3, "x1^2 + y1^2 + x2^2 + y2^2"), {0, 0, 0, 0, 0, 0});
  EXPECT_EQ(iv1.verdict, Verdict::ClassIV1);
  EXPECT_EQ(iv1.rank, 2u);
  // i[L_j, Lbar_k] = 2 delta_jk d/du for A_k = i conj(z_k): the Levi matrix is 2 Id.
  EXPECT_EQ(iv1.levi_det, GaussRat(4));

  const auto iv2 = classify_point(make_hypersurface(Ambient::C3, "x1^2 + y1^2"), {0, 0, 0, 0, 0, 0});
  EXPECT_EQ(iv2.verdict, Verdict::ClassIV2Candidate);
  EXPECT_EQ(iv2.levi_det, GaussRat(0));
  EXPECT_EQ(iv2.notes.size(), 2u);

  EXPECT_EQ(classify_point(make_hypersurface(Ambient::C3, "u*x1"), {0, 0, 0, 0, 0}).verdict, Verdict::Degenerate);
}

TEST(LeviMatrix, HandExpansionForASkewExample) {
  // phi = |z1|^2 + x1 x2 has phi_{z1} = conj(z1) + x2/2, phi_{z2} = x1/2 and
  // phi_u = 0, so A_k = i phi_{z_k} and H_jk = 2 phi_{z_j zbar_k}. With
  // phi_{z1 zbar1} = 1 and phi_{z1 zbar2} = phi_{z2 zbar1} = 1/4 this is [[2, 1/2], [1/2, 0]].
  const Ambient a = Ambient::C3;
  const auto m = make_hypersurface(a, "x1^2 + y1^2 + x1*x2");
  const auto h = levi_matrix(m, build_generators(m));
  EXPECT_EQ(h[0][0], R(a, "2"));
  EXPECT_EQ(h[0][1], R(a, "1/2"));
  EXPECT_EQ(h[1][0], R(a, "1/2"));
  EXPECT_TRUE(h[1][1].is_zero());
  EXPECT_EQ(classify_point(m, {1, 2, 3, 4, 5}).verdict, Verdict::ClassIV1);
}

TEST(RankAtPoint, InvariantUnderRescalingTheGenerator) {
  Gen g(17);
  std::size_t checked = 0;
  std::size_t degenerate = 0;
  for (int n = 0; n < 60; ++n) {
    // Every fourth case uses x^3 at x = 0, where the rank drops to 2.
    const bool cubic = n % 4 == 0;
    const GraphedHypersurface m{Ambient::C2, cubic ? R(Ambient::C2, "x^3").num() : random_phi(g, Ambient::C2)};
    Point q = random_point(g, m);
    if (cubic) q = {0, q[1], q[2], 0};
    const Binding at = point_binding(m, q);
    RationalFunc f;
    for (;;) {
      StarPoly num = random_complex_poly(g, Ambient::C2, 2);
      StarPoly den = random_complex_poly(g, Ambient::C2, 2);
      if (num.is_zero() || den.is_zero()) continue;
      f = RationalFunc(num, den);
      if (!substitute(num, at).is_zero() && !substitute(den, at).is_zero()) break;
    }
    const auto l = build_generators(m)[0];
    const std::size_t base = rank_at_point(m, frame_and_bracket(l), q);
    EXPECT_EQ(rank_at_point(m, frame_and_bracket(f * l), q), base) << m.phi << " at " << to_string(q);
    degenerate += base == 2;
    ++checked;
  }
  EXPECT_GE(checked, 50u);
  EXPECT_GE(degenerate, 15u);
}

TEST(LeviMatrix, VerdictInvariantUnderConstantFrameChange) {
  Gen g(23);
  for (int n = 0; n < 30; ++n) {
    const GraphedHypersurface m{Ambient::C3, n % 3 == 0 ? R(Ambient::C3, "x1^2 + y1^2").num()
                                                        : random_phi(g, Ambient::C3, 5)};
    const Point q = random_point(g, m);
    const Binding at = point_binding(m, q);
    GaussRat gm[2][2];
    do {
      for (auto& row : gm)
        for (auto& e : row) e = g.gauss();
    } while ((gm[0][0] * gm[1][1] - gm[0][1] * gm[1][0]).is_zero());
    const auto gens = build_generators(m);
    std::vector<CoordVectorField> moved;
    for (int j = 0; j < 2; ++j)
      moved.push_back(RationalFunc(StarPoly(gm[j][0])) * gens[0] + RationalFunc(StarPoly(gm[j][1])) * gens[1]);
    auto det_at = [&](const std::vector<CoordVectorField>& frame) {
      std::vector<std::vector<GaussRat>> h;
      for (const auto& row : levi_matrix(m, frame)) {
        h.emplace_back();
        for (const auto& e : row) h.back().push_back(e.eval(at));
      }
      return h[0][0] * h[1][1] - h[0][1] * h[1][0];
    };
    const GaussRat d0 = det_at(gens);
    const GaussRat d1 = det_at(moved);
    const GaussRat dg = gm[0][0] * gm[1][1] - gm[0][1] * gm[1][0];
    // H' = G H G^*, so det H' = |det G|^2 det H.
    EXPECT_EQ(d1, d0 * GaussRat(dg.norm())) << m.phi;
    EXPECT_EQ(d1.is_zero(), d0.is_zero());
  }
}

TEST(ClassifyBatch, ParallelMatchesSerial) {
  Gen g(29);
  const GraphedHypersurface m{Ambient::C3, random_phi(g, Ambient::C3, 6)};
  std::vector<Point> qs;
  for (int n = 0; n < 24; ++n) qs.push_back(random_point(g, m));
  const auto par = classify_batch(m, qs);
  const auto ser = classify_batch_serial(m, qs);
  ASSERT_EQ(par.size(), ser.size());
  for (std::size_t i = 0; i < par.size(); ++i) {
    EXPECT_EQ(par[i].verdict, ser[i].verdict);
    EXPECT_EQ(par[i].levi_det, ser[i].levi_det);
  }
}

// ---- files and points ----

TEST(Files, HypersurfaceFormat) {
  const auto m = load_hypersurface_text("# sphere-like\nambient C3\nphi = x1^2 + y1^2 + 2*u*x2\n");
  EXPECT_EQ(m.ambient, Ambient::C3);
  EXPECT_EQ(m.phi, R(Ambient::C3, "x1^2 + y1^2 + 2*u*x2").num());

  auto message = [](const std::string& text) {
    try {
      load_hypersurface_text(text);
    } catch (const FormatError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  EXPECT_EQ(message("ambient C2\nphi = x + z\n"),
            "manifold line 2: phi uses 'z', which is not a real coordinate of C2");
  EXPECT_EQ(message("ambient C4\n"), "manifold line 1: unknown ambient 'C4' (expected C2 or C3)");
  EXPECT_EQ(message("ambient C2\nphi = I*x\n"), "manifold line 2: phi must be real");
  EXPECT_EQ(message("ambient C2\nphi = conj(x)\n"), "manifold line 2: phi may not use conj");
  EXPECT_EQ(message("phi = x\n"), "manifold line 1: 'ambient' must come before phi");
  EXPECT_EQ(message("ambient C2\n"), "manifold file has no phi line");
  EXPECT_NE(message("ambient C2\nphi = x +\n").find("manifold line 2: "), std::string::npos);
  EXPECT_NE(message("ambient C2\nphi = 1/x\n").find("must be a polynomial"), std::string::npos);
}

TEST(Files, MapFormatAndPoints) {
  const HoloMap h = load_map_text("z' -> 2*z'\nw' -> 4*w' + z'^2\n");
  EXPECT_EQ(h.ambient, Ambient::C2);
  ASSERT_EQ(h.comps.size(), 2u);
  EXPECT_EQ(h.comps[1], parse_expr("4*w' + z'^2").numerator());
  EXPECT_EQ(load_map_text("z1 = z1'\nz2 = z2'\nw = w'\n").ambient, Ambient::C3);
  EXPECT_THROW(load_map_text("z -> z'\n"), FormatError);
  EXPECT_THROW(load_map_text("z -> conj(z')\nw -> w'\n"), FormatError);
  EXPECT_THROW(load_map_text("z -> x\nw -> w'\n"), FormatError);
  EXPECT_THROW(load_map_text("q -> z'\n"), FormatError);

  EXPECT_EQ(parse_point(" 1, -2/3 ,0"), (Point{1, Rational(-2, 3), 0}));
  EXPECT_THROW(parse_point("1,,2"), FormatError);
}

// ---- multiplier ----

TEST(Multiplier, IdentityIsOneEverywhere) {
  Gen g(31);
  for (int n = 0; n < 30; ++n) {
    const GraphedHypersurface m{Ambient::C2, random_phi(g, Ambient::C2)};
    const auto r = multiplier_at(identity_map(Ambient::C2), m, m, random_point(g, m));
    EXPECT_EQ(r.a, GaussRat(1));
    EXPECT_TRUE(r.residual.is_zero());
    EXPECT_TRUE(r.image_on_target);
  }
}

TEST(Multiplier, HeisenbergDilation) {
  const auto m = make_hypersurface(Ambient::C2, "x^2 + y^2");
  const GaussRat lambda(Rational(3, 2), Rational(-1));
  const std::string l = "(3/2 - I)";
  // z = lambda z', w = |lambda|^2 w' maps v' = |z'|^2 to v = |z|^2.
  const HoloMap h = load_map_text("z -> " + l + "*z'\nw -> " + to_string(GaussRat(lambda.norm())) + "*w'\n");
  Gen g(37);
  for (int n = 0; n < 10; ++n) {
    const auto r = multiplier_at(h, m, m, random_point(g, m));
    EXPECT_EQ(r.a, lambda);
    EXPECT_TRUE(r.residual.is_zero());
    EXPECT_TRUE(r.image_on_target);
  }
}

TEST(Multiplier, NonEquivalenceShowsUp) {
  const auto m = make_hypersurface(Ambient::C2, "x^2 + y^2");
  // z = 2z', w = w' does not preserve v = |z|^2.
  const auto r = multiplier_at(load_map_text("z -> 2*z'\nw -> w'\n"), m, m, {1, 0, 0, 1});
  EXPECT_EQ(r.a, GaussRat(2));
  EXPECT_FALSE(r.image_on_target);
  EXPECT_FALSE(r.residual.is_zero());
  EXPECT_THROW(multiplier_at(load_map_text("z -> z'^2\nw -> w'\n"), m, m, {0, 0, 0, 0}), ZeroDenominator);
  EXPECT_THROW(multiplier_at(identity_map(Ambient::C2), m, m, {1, 0, 0, 0}), PointNotOnM);
}

}  // namespace
}  // namespace crg
