#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "algebras.hpp"
#include "omegalie/variety.hpp"

using namespace omegalie;
using namespace testsupport;

namespace {

FieldPtr Q() { return Field::rationals(); }

std::vector<std::string> texts(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

bool vanishes(const VarietyIdeal& vi, const std::vector<FieldElement>& pt) {
  for (const auto& g : vi.generators)
    if (!g.evaluate(pt).is_zero()) return false;
  return true;
}

void expect_kind(ErrorKind k, auto&& body) {
  try {
    body();
    ADD_FAILURE() << "no error thrown";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), k) << e.what();
  }
}

}  // namespace

TEST(DefiningIdeal, DimensionThree) {
  auto vi = defining_ideal(3, j2(Q()), Q());
  EXPECT_EQ(texts(vi.generators), (std::vector<std::string>{
                                      "x2*z1 + y3*z1 - x1*z2 - y1*z3",
                                      "x3*y1 - x1*y3 + x3*z2 - x2*z3 + 1",
                                      "x2*y1 - x1*y2 - y3*z2 + y2*z3",
                                  }));
  ASSERT_EQ(vi.trace.size(), 3u);
  for (const auto& src : vi.trace) {
    std::vector<std::size_t> t{src.i, src.j, src.k};
    std::sort(t.begin(), t.end());
    EXPECT_EQ(t, (std::vector<std::size_t>{1, 2, 3}));
  }
  // constant term 1 comes from the z-coordinate
  EXPECT_EQ(vi.trace[1].component, 3u);

  EXPECT_TRUE(vanishes(vi, structure_point(alg_d(Q()).sc)));
  EXPECT_FALSE(vanishes(vi, structure_point(heisenberg(Q()).sc)));

  auto lie = defining_ideal(3, SkewForm::zero(3, Q()), Q());
  EXPECT_TRUE(vanishes(lie, structure_point(heisenberg(Q()).sc)));
  EXPECT_FALSE(vanishes(lie, structure_point(alg_d(Q()).sc)));
}

TEST(DefiningIdeal, Errors) {
  expect_kind(ErrorKind::DimensionTooSmall, [] { defining_ideal(2, SkewForm(canonical_skew(2, 2, Q())), Q()); });
  expect_kind(ErrorKind::UnsupportedDimension, [] { defining_ideal(5, SkewForm(canonical_skew(5, 2, Q())), Q()); });
  Matrix w = canonical_skew(3, 2, Q());
  w(0, 1) = q(Q(), 2);
  w(1, 0) = q(Q(), -2);
  expect_kind(ErrorKind::NotSkew, [&] { defining_ideal(3, SkewForm(w), Q()); });
}

TEST(DefiningIdeal, DimensionFour) {
  auto vi = defining_ideal(4, SkewForm(canonical_skew(4, 4, Q())), Q());
  EXPECT_EQ(vi.ring->size(), 24u);
  EXPECT_FALSE(vi.generators.empty());
  // the abelian bracket fails with omega != 0; it is a point of the omega = 0 variety
  std::vector<FieldElement> origin(24, q(Q(), 0));
  EXPECT_FALSE(vanishes(vi, origin));
  EXPECT_TRUE(vanishes(defining_ideal(4, SkewForm::zero(4, Q()), Q()), origin));
}

TEST(DefiningIdeal, OrderIndependent) {
  // same residuals gathered over a shuffled triple order and normalized here
  auto ring = make_ring(structure_variables(3), Q());
  SymbolicBrackets br(3, ring);
  std::size_t v = 0;
  for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    PolyVector vec;
    for (int k = 0; k < 3; ++k) vec.push_back(Polynomial::variable(ring, v++));
    br.set(i, j, vec);
  }
  std::vector<std::array<std::size_t, 3>> triples;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) triples.push_back({i, j, k});
  std::mt19937_64 rng(5);
  std::shuffle(triples.begin(), triples.end(), rng);
  std::vector<std::string> seen;
  for (auto [i, j, k] : triples)
    for (const auto& p : br.jacobi(j2(Q()), i, j, k))
      if (!p.is_zero()) seen.push_back(p.monic().to_string());
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  auto mine = texts(defining_ideal(3, j2(Q()), Q()).generators);
  std::sort(mine.begin(), mine.end());
  EXPECT_EQ(seen, mine);
}

TEST(DefiningIdeal, Soundness) {
  std::mt19937_64 rng(11);
  for (auto f : {Q(), Field::prime(101)}) {
    auto vi = defining_ideal(3, j2(f), f);
    std::vector<OmegaAlgebra> canon{alg_a(f), alg_b(f), alg_d(f), alg_c(f, q(f, 2)), alg_c(f, q(f, -1, 2))};
    for (int t = 0; t < 500; ++t) {
      const OmegaAlgebra& c = canon[t % canon.size()];
      OmegaAlgebra img = transform(GroupElement(random_g_omega(rng, f)), c);
      ASSERT_TRUE(validate(img).ok());
      ASSERT_TRUE(vanishes(vi, structure_point(img.sc))) << t;
    }
  }
}

TEST(DefiningIdeal, Completeness) {
  // x_i, y_i random; f1 = f2 = f3 = 0 is linear in z with matrix
  // [[x2+y3, -x1, -y1], [0, x3, -x2], [0, -y3, y2]]
  auto f = Field::prime(101);
  auto vi = defining_ideal(3, j2(f), f);
  std::mt19937_64 rng(13);
  int done = 0;
  while (done < 1000) {
    std::vector<FieldElement> pt;
    for (int i = 0; i < 6; ++i) pt.push_back(random_element(rng, f));
    const auto &x1 = pt[0], &x2 = pt[1], &x3 = pt[2], &y1 = pt[3], &y2 = pt[4], &y3 = pt[5];
    Matrix m(3, 3, {x2 + y3, -x1, -y1, q(f, 0), x3, -x2, q(f, 0), -y3, y2});
    if (det(m).is_zero()) continue;
    Vector rhs{q(f, 0), -(x3 * y1 - x1 * y3 + q(f, 1)), -(x2 * y1 - x1 * y2)};
    SolveResult s = solve(m, rhs);
    for (const auto& z : s.x) pt.push_back(z);
    ASSERT_TRUE(vanishes(vi, pt));
    ASSERT_TRUE(validate(OmegaAlgebra(structure_from_point(pt), j2(f))).ok());
    ++done;
  }
}

TEST(Section3, AllChecksPass) {
  for (auto f : {Q(), Field::prime(101)}) {
    ReportTable t = verify_section3(f);
    EXPECT_TRUE(t.ok()) << t.to_string();
    for (const char* id : {"a.groebner-basis-B", "a.spolynomials", "b.f1-f2-groebner", "c.colon-delta",
                           "d.colon-det-m", "e.dimension", "f.regular-sequence", "g.aux-membership"}) {
      ASSERT_NE(t.find(id), nullptr) << id;
      EXPECT_EQ(t.find(id)->status, CheckStatus::Pass) << id;
    }
    EXPECT_EQ(t.find("d.aux-basis-size")->detail, "grevlex with z first: 26 elements, 5 free of z");
  }
}

TEST(Section3, MutatedF2) {
  ReportTable t = verify_section3(Q(), true);
  EXPECT_FALSE(t.ok());
  EXPECT_EQ(t.find("a.groebner-basis-B")->status, CheckStatus::Fail);
  EXPECT_NE(t.find("a.groebner-basis-B")->detail.find("counterexample: "), std::string::npos);
  // does not involve f2
  EXPECT_EQ(t.find("b.f1-f2-groebner")->status, CheckStatus::Pass);
}

TEST(Section3, ReportFormat) {
  ReportTable t;
  t.add({"x", CheckStatus::Pass, 3, ""});
  t.add({"y", CheckStatus::Fail, 0, "counterexample: x1"});
  t.info("z", "note");
  EXPECT_EQ(t.to_string(), "x PASS 3ms\ny FAIL 0ms counterexample: x1\nz INFO 0ms note\n");
}

TEST(Example51, Ideal) {
  Example51 ex = example51(Q());
  auto txt = texts(ex.jacobi.generators);
  EXPECT_NE(std::find(txt.begin(), txt.end(), "z4"), txt.end());
  EXPECT_NE(std::find(txt.begin(), txt.end(), "y4 - 1"), txt.end());

  ReportTable t = verify_example51(Q());
  EXPECT_EQ(t.find("ideal-equals-intersection")->status, CheckStatus::Pass);
  EXPECT_EQ(t.find("contained-in-p1")->status, CheckStatus::Pass);
  EXPECT_EQ(t.find("contained-in-p2")->status, CheckStatus::Pass);
  EXPECT_EQ(t.find("dimension-p1")->status, CheckStatus::Pass);
}

TEST(Example51, Dimensions) {
  Example51 ex = example51(Q());
  // p1: eight generators with distinct linear leading variables x1, x2, x4,
  // y2, y4, z1, z2, z4, leaving x3, y1, y3, z3 free
  EXPECT_EQ(quotient_dimension(ex.p1), 4u);
  // p2: x2 = x4*z3 and eight variables fixed, leaving x3, x4, z3 free
  EXPECT_EQ(quotient_dimension(ex.p2), 3u);
  // the variety is the union, of dimension max(4, 3)
  EXPECT_EQ(quotient_dimension(ex.jacobi.ideal()), 4u);
}

TEST(Example51, OmegaSensitivity) {
  ReportTable t = verify_example51(Q(), true);
  EXPECT_EQ(t.find("ideal-equals-intersection")->status, CheckStatus::Fail);
}

TEST(Example51, PrimeField) {
  ReportTable t = verify_example51(Field::prime(101));
  EXPECT_EQ(t.find("ideal-equals-intersection")->status, CheckStatus::Pass);
}
