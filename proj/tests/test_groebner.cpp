#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "omegalie/groebner.hpp"
#include "support.hpp"

using namespace omegalie;

namespace {

RingPtr ring9(const FieldPtr& f = Field::rationals()) {
  return make_ring({"x1", "x2", "x3", "y1", "y2", "y3", "z1", "z2", "z3"}, f);
}

struct Fixture {
  RingPtr r = ring9();
  Polynomial P(const char* s) const { return parse_polynomial(s, r); }
  Polynomial f1 = P("x2*z1 + y3*z1 - x1*z2 - y1*z3");
  Polynomial f2 = P("x3*y1 - x1*y3 + x3*z2 - x2*z3 + 1");
  Polynomial f3 = P("x2*y1 - x1*y2 - y3*z2 + y2*z3");
  Polynomial g = P("x1*y2*z1 + y1*y3*z1 - x1*y1*z2 + y3*z1*z2 - y1^2*z3 - y2*z1*z3");
  Polynomial h = P("x1*x3*y2 - x1*x2*y3 + x2*x3*z2 + x3*y3*z2 - x2^2*z3 - x3*y2*z3 + x2");
  Polynomial delta = P("x1*x2 + x3*y1");
};

Polynomial P(const RingPtr& r, const char* s) { return parse_polynomial(s, r); }

std::vector<unsigned> ev(std::initializer_list<unsigned> v) { return v; }

}  // namespace

TEST(Grevlex, Comparisons) {
  // x2*z1 vs x3*y1: the last differing variable is z1, where x3*y1 has the
  // smaller exponent, so x3*y1 is larger
  EXPECT_EQ(grevlex_cmp(ev({0, 1, 0, 0, 0, 0, 1, 0, 0}), ev({0, 0, 1, 1, 0, 0, 0, 0, 0})), -1);
  // f1's terms in descending order: x2*z1 > y3*z1 > x1*z2 > y1*z3
  EXPECT_EQ(grevlex_cmp(ev({0, 1, 0, 0, 0, 0, 1, 0, 0}), ev({0, 0, 0, 0, 0, 1, 1, 0, 0})), 1);
  EXPECT_EQ(grevlex_cmp(ev({0, 0, 0, 0, 0, 1, 1, 0, 0}), ev({1, 0, 0, 0, 0, 0, 0, 1, 0})), 1);
  EXPECT_EQ(grevlex_cmp(ev({1, 0, 0, 0, 0, 0, 0, 1, 0}), ev({0, 0, 0, 1, 0, 0, 0, 0, 1})), 1);
  EXPECT_EQ(grevlex_cmp(ev({1, 2}), ev({1, 2})), 0);
  EXPECT_EQ(grevlex_cmp(ev({2, 0}), ev({1, 1})), 1);
  try {
    grevlex_cmp(ev({1}), ev({1, 0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LengthMismatch);
  }
}

TEST(Polynomials, TextRoundTrip) {
  RingPtr r = ring9();
  const char* texts[] = {"x2*z1 + y3*z1 - x1*z2 - y1*z3", "x3*y1 - x1*y3 + x3*z2 - x2*z3 + 1",
                         "-3/2*x1^2*y3 + 7", "0", "x1"};
  for (const char* t : texts) EXPECT_EQ(P(r, t).to_string(), t);
  EXPECT_EQ(P(r, "1 - x1 + x1").to_string(), "1");
  EXPECT_EQ(P(r, "y1*x1*2").to_string(), "2*x1*y1");
  auto f7 = Field::prime(7);
  RingPtr r7 = make_ring({"a", "b"}, f7);
  EXPECT_EQ(P(r7, "a - b").to_string(), "a + 6*b");
  EXPECT_THROW(P(r, "x1 + w"), Error);
  EXPECT_THROW(P(r, "x1 +"), Error);
}

TEST(Polynomials, LeadingMonomials) {
  Fixture fx;
  EXPECT_EQ(Polynomial::from_terms(fx.r, {fx.f1.terms().front()}).to_string(), "x2*z1");
  EXPECT_EQ(Polynomial::from_terms(fx.r, {fx.f2.terms().front()}).to_string(), "x3*y1");
  EXPECT_EQ(Polynomial::from_terms(fx.r, {fx.f3.terms().front()}).to_string(), "x2*y1");
  EXPECT_TRUE(coprime(fx.f1.lm(), fx.f2.lm()));
}

TEST(Groebner, SPolynomials) {
  Fixture fx;
  EXPECT_EQ(s_polynomial(fx.f1, fx.f3), fx.g);
  EXPECT_EQ(fx.P("y1") * fx.f1 - fx.P("z1") * fx.f3, fx.g);
  EXPECT_EQ(s_polynomial(fx.f2, fx.f3), fx.h);
  EXPECT_EQ(fx.P("x2") * fx.f2 - fx.P("x3") * fx.f3, fx.h);
  EXPECT_TRUE(s_polynomial(fx.f1, fx.f1).is_zero());
  EXPECT_THROW(s_polynomial(fx.f1, Polynomial(fx.r)), Error);
}

TEST(Groebner, NormalForms) {
  Fixture fx;
  std::vector<Polynomial> f123{fx.f1, fx.f2, fx.f3};
  std::vector<Polynomial> b{fx.f1, fx.f2, fx.f3, fx.g, fx.h};
  EXPECT_EQ(normal_form(fx.g, f123), fx.g);
  EXPECT_TRUE(normal_form(fx.f1, {fx.f1}).is_zero());
  EXPECT_TRUE(normal_form(s_polynomial(fx.f1, fx.g), b).is_zero());
  // regular sequence checks
  EXPECT_FALSE(normal_form(fx.f2, {fx.f1}).is_zero());
  EXPECT_EQ(normal_form(fx.f3, {fx.f1, fx.f2}), fx.f3);
}

TEST(Groebner, DivisionInvariant) {
  Fixture fx;
  std::mt19937_64 rng(3);
  std::vector<Polynomial> b{fx.f1, fx.f2, fx.f3};
  std::vector<Polynomial> gb = buchberger(b);
  for (int i = 0; i < 30; ++i) {
    Polynomial f(fx.r);
    for (int k = 0; k < 4; ++k) {
      Monomial m;
      for (int v = 0; v < 3; ++v) m = m * Monomial::variable(rng() % 9);
      f += Polynomial::from_terms(fx.r, {{m, FieldElement::from_int(fx.r->field(), 1 + rng() % 5)}});
    }
    f = f * b[rng() % 3] + f;
    Polynomial rem = normal_form(f, b);
    for (const auto& t : rem.terms())
      for (const auto& g : b) ASSERT_FALSE(g.lm().divides(t.m));
    // f - rem lies in the ideal: reduces to zero against a Groebner basis
    ASSERT_TRUE(normal_form(f - rem, gb).is_zero());
  }
}

TEST(Groebner, Buchberger) {
  Fixture fx;
  auto gb = buchberger({fx.f1, fx.f2, fx.f3});
  EXPECT_TRUE(is_groebner_basis(gb));
  EXPECT_EQ(reduce_basis(gb), reduce_basis({fx.f1, fx.f2, fx.f3, fx.g, fx.h}));
  EXPECT_TRUE(is_groebner_basis({fx.f1, fx.f2, fx.f3, fx.g, fx.h}));
  auto gb12 = buchberger({fx.f1, fx.f2});
  EXPECT_EQ(gb12, (std::vector<Polynomial>{fx.f1, fx.f2}));
  EXPECT_EQ(buchberger({fx.P("x1")}), (std::vector<Polynomial>{fx.P("x1")}));
}

TEST(Groebner, ReduceBasis) {
  Fixture fx;
  auto two = FieldElement::from_int(fx.r->field(), 2);
  auto red = reduce_basis({fx.f1, fx.f1.scaled(two), fx.f2});
  std::vector<Polynomial> expected{fx.f1.monic(), fx.f2.monic()};
  std::sort(expected.begin(), expected.end(),
            [](const Polynomial& a, const Polynomial& b) { return grevlex_cmp(a.lm(), b.lm()) > 0; });
  EXPECT_EQ(red, expected);
  EXPECT_EQ(reduce_basis({fx.P("x1 + 1")}), (std::vector<Polynomial>{fx.P("x1 + 1")}));
  try {
    reduce_basis({fx.f1, fx.f3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAGroebnerBasis);
  }
  std::vector<Polynomial> gens{fx.f1, fx.f2, fx.f3};
  auto base = reduce_basis(buchberger(gens));
  std::sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) { return a.to_string() < b.to_string(); });
  do {
    EXPECT_EQ(reduce_basis(buchberger(gens)), base);
  } while (std::next_permutation(gens.begin(), gens.end(),
                                 [](const Polynomial& a, const Polynomial& b) { return a.to_string() < b.to_string(); }));
}

TEST(Groebner, Membership) {
  Fixture fx;
  Ideal p(fx.r, {fx.f1, fx.f2, fx.f3});
  EXPECT_TRUE(ideal_member(fx.g, p));
  EXPECT_TRUE(ideal_member(fx.h, p));
  EXPECT_TRUE(ideal_equal(p, Ideal(fx.r, {fx.f3, fx.f2, fx.f1})));
  EXPECT_FALSE(ideal_member(fx.P("x1"), p));
  // x1 is nonzero at a zero of the generators, so it cannot lie in the ideal
  std::vector<FieldElement> pt;
  for (long long v : {1, 0, 0, 0, 0, 1, 0, 0, 0}) pt.push_back(FieldElement::from_int(fx.r->field(), v));
  for (const auto& f : {fx.f1, fx.f2, fx.f3}) ASSERT_TRUE(f.evaluate(pt).is_zero());
  EXPECT_FALSE(fx.P("x1").evaluate(pt).is_zero());
  RingPtr other = make_ring({"a"}, Field::rationals());
  try {
    ideal_member(P(other, "a"), p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RingMismatch);
  }
}

TEST(Groebner, IntersectAndColon) {
  Fixture fx;
  Ideal i12(fx.r, {fx.f1, fx.f2});
  Ideal d(fx.r, {fx.delta});
  Ideal inter = intersect(i12, d);
  EXPECT_TRUE(ideal_equal(inter, Ideal(fx.r, {fx.delta * fx.f1, fx.delta * fx.f2})));
  EXPECT_TRUE(ideal_equal(colon(i12, fx.delta), i12));
  EXPECT_TRUE(ideal_equal(intersect(i12, i12), i12));
  EXPECT_TRUE(ideal_equal(colon(i12, fx.P("1")), i12));
  // I : x1 for I = <x1*x2> is <x2>
  Ideal mono(fx.r, {fx.P("x1*x2")});
  EXPECT_TRUE(ideal_equal(colon(mono, fx.P("x1")), Ideal(fx.r, {fx.P("x2")})));
  EXPECT_THROW(divide_exact(fx.P("x1 + 1"), fx.P("x2")), Error);
  EXPECT_EQ(divide_exact(fx.delta * fx.f2, fx.delta), fx.f2);
}

TEST(Groebner, Dimension) {
  Fixture fx;
  Ideal p(fx.r, {fx.f1, fx.f2, fx.f3});
  EXPECT_EQ(quotient_dimension(p), 6u);
  EXPECT_EQ(quotient_dimension(Ideal(fx.r, {})), 9u);
  EXPECT_EQ(quotient_dimension(Ideal(fx.r, {fx.P("x1"), fx.P("y2*z3")})), 7u);
  try {
    quotient_dimension(Ideal(fx.r, {fx.P("x1"), fx.P("x1 + 1")}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnitIdeal);
  }
}

TEST(Groebner, PrimeFieldAgrees) {
  RingPtr r = ring9(Field::prime(101));
  Ideal p(r, {P(r, "x2*z1 + y3*z1 - x1*z2 - y1*z3"), P(r, "x3*y1 - x1*y3 + x3*z2 - x2*z3 + 1"),
              P(r, "x2*y1 - x1*y2 - y3*z2 + y2*z3")});
  EXPECT_EQ(quotient_dimension(p), 6u);
  EXPECT_EQ(p.groebner().size(), 5u);
}

TEST(IdealFile, RoundTrip) {
  Fixture fx;
  std::string text = write_ideal(fx.r, {fx.f1, fx.f2, fx.g});
  IdealFile back = read_ideal(text);
  EXPECT_EQ(*back.ring, *fx.r);
  ASSERT_EQ(back.polys.size(), 3u);
  EXPECT_EQ(write_ideal(back.ring, back.polys), text);
  try {
    read_ideal("vars: a b\nfield: Q\na + c\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}
