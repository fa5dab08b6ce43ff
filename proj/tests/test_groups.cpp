#include <gtest/gtest.h>

#include "crg/errors.hpp"
#include "crg/groups/group_template.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

namespace crg {
namespace {

const GroupTemplate& T(GroupId g) { return group_template(g); }

UnitFraction in(const GroupTemplate& t, const std::string& s, std::initializer_list<const char*> suffixes = {""}) {
  ParseOptions o;
  for (const char* suf : suffixes) {
    const ParseOptions x = t.options(suf);
    o.units.insert(x.units.begin(), x.units.end());
    o.reals.insert(x.reals.begin(), x.reals.end());
    o.real_units.insert(x.real_units.begin(), x.real_units.end());
  }
  return parse_expr(s, o);
}

NumericTuple random_numeric(const GroupTemplate& t, testing::Gen& gen) {
  NumericTuple p;
  for (const auto& spec : t.params) {
    if (spec.is_real())
      p[spec.name] = GaussRat(Rational(gen.integer(1, 5), gen.integer(1, 3)));
    else
      p[spec.name] = spec.is_unit() ? gen.nonzero_gauss() : gen.gauss();
  }
  return p;
}

TEST(Embed, SpecExamples) {
  const GroupTemplate& g1 = T(GroupId::I);
  const RingMatrix m = embed(g1, generic_params(g1, ""));
  EXPECT_EQ(m(0, 0), in(g1, "a"));
  EXPECT_EQ(m(1, 1), in(g1, "conj(a)"));
  EXPECT_EQ(m(2, 0), in(g1, "b"));
  EXPECT_EQ(m(2, 1), in(g1, "conj(b)"));
  EXPECT_EQ(m(2, 2), in(g1, "a*conj(a)"));
  EXPECT_TRUE(m(0, 1).is_zero());

  EXPECT_TRUE(embed(T(GroupId::II), identity_params(T(GroupId::II))).is_identity());

  const GroupTemplate& g3 = T(GroupId::III2);
  const RingMatrix m3 = embed(g3, generic_params(g3, ""));
  const char* row[] = {"k", "h", "g", "f", "a*a*a*conj(a)"};
  for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ(m3(4, j), in(g3, row[j]));
}

TEST(Embed, IdentityParametersGiveIdentityForAllGroups) {
  for (GroupId g : all_groups()) EXPECT_TRUE(embed(T(g), identity_params(T(g))).is_identity()) << to_string(g);
}

TEST(Embed, Errors) {
  const GroupTemplate& t = T(GroupId::II);
  ParamTuple p = generic_params(t, "");
  p.erase("c");
  EXPECT_THROW(embed(t, p), MissingParam);
  ParamTuple z = identity_params(t);
  z["a"] = UnitFraction(0);
  EXPECT_THROW(embed(t, z), ZeroUnit);
  const GroupTemplate& iv1 = T(GroupId::IV1);
  ParamTuple r = identity_params(iv1);
  r["c"] = UnitFraction(GaussRat::i());
  EXPECT_THROW(embed(iv1, r), InconsistentConjugation);
}

TEST(ComposeParams, SpecExamples) {
  const GroupTemplate& g2 = T(GroupId::II);
  const ParamTuple c2 = compose_params(g2, generic_params(g2, "_1"), generic_params(g2, "_2"));
  EXPECT_EQ(c2.at("c"), in(g2, "c_1*a_2*conj(a_2) + a_1*a_1*conj(a_1)*c_2", {"_1", "_2"}));

  const GroupTemplate& g3 = T(GroupId::III2);
  const ParamTuple c3 = compose_params(g3, generic_params(g3, "_1"), generic_params(g3, "_2"));
  EXPECT_EQ(c3.at("k"), in(g3, "k_1*a_2 + g_1*b_2 + f_1*e_2 + a_1*a_1*a_1*conj(a_1)*k_2", {"_1", "_2"}));

  const GroupTemplate& g4 = T(GroupId::IV1);
  const ParamTuple p1 = generic_params(g4, "_1");
  EXPECT_TRUE(tuples_equal(g4, compose_params(g4, p1, identity_params(g4)), p1));
}

TEST(ComposeParams, AgreesWithNumericProduct) {
  testing::Gen gen(31);
  for (GroupId g : all_groups()) {
    const GroupTemplate& t = T(g);
    const ParamTuple law = compose_params(t, generic_params(t, "_1"), generic_params(t, "_2"));
    for (int k = 0; k < 10; ++k) {
      const NumericTuple x = random_numeric(t, gen);
      const NumericTuple y = random_numeric(t, gen);
      Binding b;
      for (const auto& spec : t.params) {
        b.set(t.symbol(spec.name, "_1"), x.at(spec.name));
        b.set(t.symbol(spec.name, "_2"), y.at(spec.name));
      }
      NumericTuple z;
      for (const auto& spec : t.params) z[spec.name] = substitute(law.at(spec.name), b);
      ASSERT_EQ(embed_numeric(t, z), testing::num_mul(embed_numeric(t, x), embed_numeric(t, y))) << t.name();
    }
  }
}

TEST(InvertParams, SpecExamples) {
  const GroupTemplate& g2 = T(GroupId::II);
  const ParamTuple q = invert_params(g2, generic_params(g2, ""));
  // Adjugate value; the printed display shows the same a^3 conj(a)^2.
  EXPECT_EQ(q.at("c"), in(g2, "-c/(a^3*conj(a)^2)"));

  const GroupTemplate& g3 = T(GroupId::III2);
  EXPECT_EQ(invert_params(g3, generic_params(g3, "")).at("f"), in(g3, "-f/(a^5*conj(a)^2)"));

  const GroupTemplate& g1 = T(GroupId::I);
  EXPECT_TRUE(tuples_equal(g1, invert_params(g1, identity_params(g1)), identity_params(g1)));
}

// The adjugate-derived inverse laws against Gauss-Jordan at random points.
TEST(InvertParams, AgreesWithGaussJordanOracle) {
  testing::Gen gen(41);
  for (GroupId g : all_groups()) {
    const GroupTemplate& t = T(g);
    const Relations rel = t.relations();
    const ParamTuple law = invert_params(t, generic_params(t, ""), &rel);
    for (int k = 0; k < 10; ++k) {
      const NumericTuple x = random_numeric(t, gen);
      const NumMatrix m = embed_numeric(t, x);
      Binding b;
      for (const auto& spec : t.params) b.set(t.symbol(spec.name), x.at(spec.name));
      for (const auto& d : t.derived_units) {
        // Delta = a11*a22 - a12*a21
        b.set(Symbol::make(d.name, {true, false}),
              x.at("a11") * x.at("a22") - x.at("a12") * x.at("a21"));
      }
      if (testing::num_det(m).is_zero()) continue;
      NumericTuple y;
      for (const auto& spec : t.params) y[spec.name] = substitute(law.at(spec.name), b);
      ASSERT_EQ(embed_numeric(t, y), testing::num_inverse(m)) << t.name();
    }
  }
}

TEST(VerifyGroup, AllChecksPassForAllGroups) {
  for (GroupId g : all_groups()) {
    const auto records = verify_group(T(g));
    ASSERT_EQ(records.size(), 4u);
    const char* names[] = {"closure", "inverse", "assoc", "identity"};
    for (std::size_t k = 0; k < 4; ++k) {
      EXPECT_EQ(records[k].check, names[k]);
      EXPECT_EQ(records[k].status, Status::Pass) << to_text(records[k]);
      EXPECT_EQ(records[k].residual_terms.value_or(99), 0u) << to_text(records[k]);
    }
  }
}

TEST(VerifyGroup, TamperedTemplateReportsClosureViolation) {
  GroupTemplate t = T(GroupId::I);
  t.pattern[2][1] = "b";
  const auto records = verify_group(t, "closure");
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].status, Status::Fail);
  EXPECT_GT(records[0].residual_terms.value_or(0), 0u);
  EXPECT_NE(records[0].details.at(0).find("ClosureViolation"), std::string::npos);
  EXPECT_THROW(compose_params(t, generic_params(t, "_1"), generic_params(t, "_2")), ClosureViolation);
}

TEST(VerifyGroup, SelectsSingleCheck) {
  const auto r = verify_group(T(GroupId::II), "assoc");
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].check, "assoc");
  EXPECT_THROW(verify_group(T(GroupId::II), "bogus"), Error);
}

TEST(Determinant, UnitUnderParameterConstraints) {
  for (GroupId g : all_groups()) {
    const GroupTemplate& t = T(g);
    const Relations rel = t.relations();
    const UnitFraction d = rel.reduce(mat_det(t.symbolic_matrix()));
    EXPECT_TRUE(d.is_unit()) << t.name() << ": " << d.str();
  }
}

TEST(LieBasis, SpecExamples) {
  const LieBasis b = lie_algebra_basis(T(GroupId::I));
  ASSERT_EQ(b.matrices.size(), 4u);
  // d/dt of (a, conj(a), a*conj(a)) along a = 1 + t is (1, 1, 2).
  NumMatrix re_a = testing::num_identity(3);
  re_a[2][2] = 2;
  EXPECT_EQ(b.labels[0], "Re(a)");
  EXPECT_EQ(b.matrices[0], re_a);
  NumMatrix re_b(3, std::vector<GaussRat>(3));
  re_b[2][0] = 1;
  re_b[2][1] = 1;
  EXPECT_EQ(b.labels[2], "Re(b)");
  EXPECT_EQ(b.matrices[2], re_b);
  EXPECT_EQ(lie_algebra_basis(T(GroupId::IV2)).matrices.size(), 10u);
}

// Central differences are exact for the degree <= 2 entries of G_I.
TEST(LieBasis, MatchesCentralDifferenceForGroupI) {
  const GroupTemplate& t = T(GroupId::I);
  const LieBasis b = lie_algebra_basis(t);
  const GaussRat h(Rational(1, 7));
  const GaussRat dirs[] = {GaussRat(1), GaussRat::i()};
  std::size_t k = 0;
  for (const char* p : {"a", "b"})
    for (const GaussRat& dir : dirs) {
      NumericTuple plus{{"a", GaussRat(1)}, {"b", GaussRat(0)}};
      NumericTuple minus = plus;
      plus[p] += h * dir;
      minus[p] -= h * dir;
      const NumMatrix up = embed_numeric(t, plus);
      const NumMatrix dn = embed_numeric(t, minus);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ((up[i][j] - dn[i][j]) / (h * 2), b.matrices[k][i][j]);
      ++k;
    }
}

TEST(LieDimension, ExpectedDimensions) {
  for (GroupId g : all_groups()) {
    const GroupTemplate& t = T(g);
    const LieBasis b = lie_algebra_basis(t);
    EXPECT_EQ(lie_dimension(b.matrices), static_cast<std::size_t>(t.expected_real_dim)) << t.name();
    EXPECT_TRUE(verify_lie_closure(b.matrices)) << t.name();
  }
  EXPECT_EQ(lie_dimension(lie_algebra_basis(T(GroupId::I)).matrices), 4u);
  EXPECT_EQ(lie_dimension(lie_algebra_basis(T(GroupId::III2)).matrices), 18u);
  EXPECT_EQ(lie_dimension(lie_algebra_basis(T(GroupId::IV1)).matrices), 13u);
}

TEST(LieClosure, NegativeControl) {
  LieBasis b = lie_algebra_basis(T(GroupId::I));
  // Upper-triangular entry: its commutator with Re(b) leaves the algebra.
  NumMatrix bad(3, std::vector<GaussRat>(3));
  bad[0][2] = 1;
  b.matrices[3] = bad;
  EXPECT_FALSE(verify_lie_closure(b.matrices));
}

TEST(PrintedLaws, ErrataAreReportedNotFailed) {
  const auto r1 = diff_printed_laws(T(GroupId::I));
  std::map<std::string, Status> s;
  for (const auto& r : r1) s[r.check] = r.status;
  EXPECT_EQ(s.at("printed compose b"), Status::Pass);
  EXPECT_EQ(s.at("printed inverse (3,1)"), Status::Erratum);
  EXPECT_EQ(s.at("printed inverse b"), Status::Erratum);
  EXPECT_EQ(s.at("printed inverse a"), Status::Pass);

  std::map<std::string, Status> s3;
  for (const auto& r : diff_printed_laws(T(GroupId::III2))) s3[r.check] = r.status;
  EXPECT_EQ(s3.at("printed inverse f"), Status::Pass);
  EXPECT_EQ(s3.at("printed inverse g"), Status::Pass);
  EXPECT_EQ(s3.at("printed inverse k"), Status::Pass);
  EXPECT_EQ(s3.at("printed inverse h"), Status::Erratum);
  EXPECT_EQ(s3.at("printed compose k"), Status::Pass);
  EXPECT_EQ(s3.at("printed compose (5,5)"), Status::Erratum);

  std::map<std::string, Status> s2;
  for (const auto& r : diff_printed_laws(T(GroupId::II))) s2[r.check] = r.status;
  EXPECT_EQ(s2.at("printed compose c"), Status::Erratum);
  EXPECT_EQ(s2.at("printed inverse (4,1)"), Status::Pass);
  EXPECT_EQ(s2.at("printed inverse c"), Status::Erratum);
}

TEST(GroupId, ParseRoundTrip) {
  for (GroupId g : all_groups()) EXPECT_EQ(parse_group_id(to_string(g)), g);
  EXPECT_THROW(parse_group_id("V"), Error);
}

}  // namespace
}  // namespace crg
