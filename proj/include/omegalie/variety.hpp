#pragma once

// The variety of omega-Lie structures for a fixed canonical omega: its
// defining ideal from symbolic structure constants, and the Groebner-basis
// identities checked on it.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "omegalie/algebra.hpp"
#include "omegalie/groebner.hpp"
#include "omegalie/report.hpp"

namespace omegalie {

using PolyVector = std::vector<Polynomial>;

/// Antisymmetric bracket table with polynomial structure constants.
class SymbolicBrackets {
 public:
  SymbolicBrackets(std::size_t n, RingPtr ring) : n_(n), ring_(std::move(ring)) {
    table_.assign(n_ * n_, PolyVector(n_, Polynomial(ring_)));
  }

  std::size_t dim() const noexcept { return n_; }
  const RingPtr& ring() const noexcept { return ring_; }

  const PolyVector& bracket(std::size_t i, std::size_t j) const { return table_[i * n_ + j]; }

  void set(std::size_t i, std::size_t j, PolyVector v) {
    require(i != j && i < n_ && j < n_, ErrorKind::IndexOutOfRange, "bad bracket index");
    require(v.size() == n_, ErrorKind::LengthMismatch, "bracket vector length");
    PolyVector neg;
    for (const auto& p : v) neg.push_back(-p);
    table_[i * n_ + j] = std::move(v);
    table_[j * n_ + i] = std::move(neg);
  }

  /// Sets [e_i, e_j] to the constant vector v.
  void set_constant(std::size_t i, std::size_t j, const std::vector<long long>& v) {
    PolyVector p;
    for (long long c : v) p.push_back(Polynomial::constant(ring_, FieldElement::from_int(ring_->field(), c)));
    set(i, j, std::move(p));
  }

  /// Residual of the omega-Jacobi identity on (e_i, e_j, e_k).
  PolyVector jacobi(const SkewForm& omega, std::size_t i, std::size_t j, std::size_t k) const {
    PolyVector r(n_, Polynomial(ring_));
    auto cyc = [&](std::size_t a, std::size_t b, std::size_t c) {
      const PolyVector& ab = bracket(a, b);
      for (std::size_t l = 0; l < n_; ++l) {
        if (ab[l].is_zero() || l == c) continue;
        const PolyVector& lc = bracket(l, c);
        for (std::size_t m = 0; m < n_; ++m)
          if (!lc[m].is_zero()) r[m] += ab[l] * lc[m];
      }
      if (!omega(a, b).is_zero()) r[c] -= Polynomial::constant(ring_, omega(a, b));
    };
    cyc(i, j, k);
    cyc(j, k, i);
    cyc(k, i, j);
    return r;
  }

 private:
  std::size_t n_;
  RingPtr ring_;
  std::vector<PolyVector> table_;
};

/// Where a generator came from: basis triple and coordinate, 1-based.
struct GeneratorSource {
  std::size_t i, j, k, component;
};

struct VarietyIdeal {
  RingPtr ring;
  std::vector<Polynomial> generators;
  std::vector<GeneratorSource> trace;  ///< parallel to generators

  Ideal ideal() const { return Ideal(ring, generators); }
};

namespace detail {

inline bool poly_less(const Polynomial& a, const Polynomial& b) {
  const auto& s = a.terms();
  const auto& t = b.terms();
  for (std::size_t k = 0; k < s.size() && k < t.size(); ++k) {
    if (int c = a.ring()->cmp(s[k].m, t[k].m)) return c < 0;
    if (!(s[k].c == t[k].c)) return s[k].c.to_string() < t[k].c.to_string();
  }
  return s.size() < t.size();
}

}  // namespace detail

/// Expands the omega-Jacobi residual on every ordered triple, then makes each
/// generator monic, drops duplicates (so +-pairs collapse) and sorts by
/// leading monomial, smallest first.
inline VarietyIdeal jacobi_ideal(const SymbolicBrackets& br, const SkewForm& omega) {
  const std::size_t n = br.dim();
  require(omega.dim() == n, ErrorKind::DimensionMismatch, "form dimension");
  std::vector<std::pair<Polynomial, GeneratorSource>> found;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        PolyVector r = br.jacobi(omega, i, j, k);
        for (std::size_t l = 0; l < n; ++l) {
          if (r[l].is_zero()) continue;
          Polynomial p = r[l].monic();
          bool seen = false;
          for (const auto& [q, src] : found) seen = seen || q == p;
          if (!seen) found.push_back({std::move(p), {i + 1, j + 1, k + 1, l + 1}});
        }
      }
  std::stable_sort(found.begin(), found.end(),
                   [](const auto& a, const auto& b) { return detail::poly_less(a.first, b.first); });
  VarietyIdeal out;
  out.ring = br.ring();
  for (auto& [p, src] : found) {
    out.generators.push_back(std::move(p));
    out.trace.push_back(src);
  }
  return out;
}

/// True when omega is J_m for some even m.
inline bool is_canonical_form(const SkewForm& omega) {
  const std::size_t n = omega.dim();
  for (std::size_t m = 0; m <= n; m += 2)
    if (omega.matrix() == canonical_skew(n, m, omega.matrix().field())) return true;
  return false;
}

/// Variable names: n = 3 uses x_i, y_i, z_i for the coordinates of [e1,e2],
/// [e1,e3], [e2,e3]; n = 4 uses c<i><j>_<k>.
inline std::vector<std::string> structure_variables(std::size_t n) {
  std::vector<std::string> names;
  if (n == 3) {
    for (const char* p : {"x", "y", "z"})
      for (int i = 1; i <= 3; ++i) names.push_back(p + std::to_string(i));
    return names;
  }
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      for (std::size_t k = 1; k <= n; ++k)
        names.push_back("c" + std::to_string(i) + std::to_string(j) + "_" + std::to_string(k));
  return names;
}

inline VarietyIdeal defining_ideal(std::size_t n, const SkewForm& omega, const FieldPtr& field) {
  require(n >= 3, ErrorKind::DimensionTooSmall, "the variety is defined for n >= 3");
  require(n <= 4, ErrorKind::UnsupportedDimension, "n = " + std::to_string(n) + " is not supported (n <= 4)");
  require(omega.dim() == n, ErrorKind::DimensionMismatch, "form dimension");
  require(same_field(omega.matrix().field(), field), ErrorKind::DescriptorMismatch, "form over another field");
  require(is_canonical_form(omega), ErrorKind::NotSkew, "omega must be a canonical form J_m");
  RingPtr ring = make_ring(structure_variables(n), field);
  SymbolicBrackets br(n, ring);
  std::size_t v = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      PolyVector vec;
      for (std::size_t k = 0; k < n; ++k) vec.push_back(Polynomial::variable(ring, v++));
      br.set(i, j, std::move(vec));
    }
  return jacobi_ideal(br, omega);
}

/// Point of the n = 3 ring for a structure (x, y, z order).
inline std::vector<FieldElement> structure_point(const StructureConstants& sc) {
  require(sc.dim() == 3, ErrorKind::WrongDimension, "structure points are 3-dimensional");
  std::vector<FieldElement> pt;
  for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}})
    for (const auto& c : sc.bracket(i, j)) pt.push_back(c);
  return pt;
}

inline StructureConstants structure_from_point(const std::vector<FieldElement>& pt) {
  require(pt.size() == 9, ErrorKind::LengthMismatch, "expected 9 coordinates");
  StructureConstants sc(3, pt[0].field());
  sc.set(0, 1, {pt[0], pt[1], pt[2]});
  sc.set(0, 2, {pt[3], pt[4], pt[5]});
  sc.set(1, 2, {pt[6], pt[7], pt[8]});
  return sc;
}

// ---------------------------------------------------------------------------
// Dimension 3, omega = J_2

struct Section3 {
  RingPtr ring;
  Polynomial f1, f2, f3, g, h, delta, det_m;

  std::vector<Polynomial> b() const { return {f1, f2, f3, g, h}; }
};

inline Section3 section3_polynomials(const FieldPtr& field, bool mutate_f2 = false) {
  Section3 s;
  s.ring = make_ring(structure_variables(3), field);
  auto p = [&](const char* t) { return parse_polynomial(t, s.ring); };
  s.f1 = p("x2*z1 + y3*z1 - x1*z2 - y1*z3");
  s.f2 = p(mutate_f2 ? "x3*y1 - x1*y3 + x3*z2 - x2*z3" : "x3*y1 - x1*y3 + x3*z2 - x2*z3 + 1");
  s.f3 = p("x2*y1 - x1*y2 - y3*z2 + y2*z3");
  s.g = p("x1*y2*z1 + y1*y3*z1 - x1*y1*z2 + y3*z1*z2 - y1^2*z3 - y2*z1*z3");
  s.h = p("x1*x3*y2 - x1*x2*y3 + x2*x3*z2 + x3*y3*z2 - x2^2*z3 - x3*y2*z3 + x2");
  s.delta = p("x1*x2 + x3*y1");
  s.det_m = p("x2 + y3") * p("x3*y2 - x2*y3");
  return s;
}

/// Generators of t*<f1,f2> + (1-t)*<delta> known in closed form, in the
/// ring with the auxiliary variable `z` in front.
inline std::vector<Polynomial> delta_aux_polynomials(const RingPtr& aux_ring) {
  auto p = [&](const char* t) { return parse_polynomial(t, aux_ring); };
  return {p("z*x1*x2 + z*x1*y3 - z*x3*z2 + z*x2*z3 - x1*x2 - x3*y1 - z"),
          p("z*x1^2*z2 - z*x3*z1*z2 + z*x1*y1*z3 - z*y3*z1*z3 + z*x1*z2*z3 + z*y1*z3^2 - x1*x2*z1 - x3*y1*z1 - z*z1")};
}

/// Variables occurring anywhere in p, as a bit mask.
inline std::uint32_t support_of(const Polynomial& p) {
  std::uint32_t s = 0;
  for (const auto& t : p.terms()) s |= t.m.support();
  return s;
}

/// Reduced basis of z*I + (1-z)*<f> under plain grevlex with z first.
inline std::vector<Polynomial> grevlex_aux_basis(const Ideal& i, const Polynomial& f) {
  std::vector<std::string> names{"z"};
  for (const auto& v : i.ring()->vars()) names.push_back(v);
  RingPtr ring = make_ring(std::move(names), i.ring()->field());
  Polynomial z = Polynomial::variable(ring, 0);
  Polynomial one = Polynomial::constant(ring, FieldElement::one(ring->field()));
  std::vector<Polynomial> gens;
  for (const auto& g : i.generators()) gens.push_back(z * g.lifted(ring, 1));
  gens.push_back((one - z) * f.lifted(ring, 1));
  return Ideal(ring, std::move(gens)).groebner();
}

namespace detail {

inline std::pair<bool, std::string> counterexample(const Polynomial& p) { return {false, "counterexample: " + p.to_string()}; }

/// Equality of ideals with an element of one not in the other on failure.
inline std::pair<bool, std::string> compare_ideals(const Ideal& a, const Ideal& b) {
  if (ideal_equal(a, b)) return {true, ""};
  for (const auto& p : a.groebner())
    if (!ideal_member(p, b)) return counterexample(p);
  for (const auto& p : b.groebner())
    if (!ideal_member(p, a)) return counterexample(p);
  return {false, "reduced bases differ"};
}

inline std::pair<bool, std::string> contained(const std::vector<Polynomial>& gens, const Ideal& in) {
  for (const auto& p : gens)
    if (!ideal_member(p, in)) return counterexample(p);
  return {true, ""};
}

inline std::pair<bool, std::string> groebner_check(const std::vector<Polynomial>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      Polynomial r = normal_form(s_polynomial(basis[i], basis[j]), basis);
      if (!r.is_zero()) return counterexample(r);
    }
  return {true, ""};
}

inline std::pair<bool, std::string> expect_dimension(const Ideal& i, std::size_t want) {
  std::size_t got = quotient_dimension(i);
  return {got == want, "dimension " + std::to_string(got) + (got == want ? "" : ", expected " + std::to_string(want))};
}

}  // namespace detail

/// Sub-checks a-g over `field`.  mutate_f2 drops the constant term of f2.
inline ReportTable verify_section3(const FieldPtr& field, bool mutate_f2 = false) {
  Section3 s = section3_polynomials(field, mutate_f2);
  ReportTable t;
  const Ideal p(s.ring, {s.f1, s.f2, s.f3});
  const Ideal f12(s.ring, {s.f1, s.f2});

  t.check("a.groebner-basis-B", [&] {
    auto gb = detail::groebner_check(s.b());
    if (!gb.first) return gb;
    std::vector<Polynomial> rb = reduce_basis(s.b());
    if (rb == p.groebner()) return std::pair<bool, std::string>{true, ""};
    return detail::compare_ideals(Ideal(s.ring, rb), p);
  });
  t.check("a.spolynomials", [&] {
    Polynomial g = s_polynomial(s.f1, s.f3), h = s_polynomial(s.f2, s.f3);
    if (!(g == s.g)) return detail::counterexample(g - s.g);
    if (!(h == s.h)) return detail::counterexample(h - s.h);
    return std::pair<bool, std::string>{true, ""};
  });
  t.check("b.f1-f2-groebner", [&] { return detail::groebner_check({s.f1, s.f2}); });
  t.check("c.colon-delta", [&] {
    Intersection in = intersect_with_trace(f12, Ideal(s.ring, {s.delta}), "z");
    auto r = detail::compare_ideals(in.result, Ideal(s.ring, {s.delta * s.f1, s.delta * s.f2}));
    if (!r.first) return r;
    return detail::compare_ideals(colon(f12, s.delta), f12);
  });
  t.check("d.colon-det-m", [&] {
    std::vector<Polynomial> prod;
    for (const auto& f : s.b()) prod.push_back(s.det_m * f);
    Intersection in = intersect_with_trace(p, Ideal(s.ring, {s.det_m}), "z");
    auto r = detail::compare_ideals(in.result, Ideal(s.ring, prod));
    if (!r.first) return r;
    return detail::compare_ideals(colon(p, s.det_m), p);
  });
  {
    std::vector<Polynomial> aux = grevlex_aux_basis(p, s.det_m);
    std::size_t free = 0;
    for (const auto& q : aux) free += (q.is_zero() || !(support_of(q) & 1u)) ? 1 : 0;
    t.info("d.aux-basis-size", "grevlex with z first: " + std::to_string(aux.size()) + " elements, " +
                                   std::to_string(free) + " free of z");
  }
  t.check("e.dimension", [&] { return detail::expect_dimension(p, 6); });
  t.check("f.regular-sequence", [&] {
    Polynomial r2 = normal_form(s.f2, {s.f1});
    if (r2.is_zero()) return std::pair<bool, std::string>{false, "normal form of f2 mod f1 is zero"};
    Polynomial r3 = normal_form(s.f3, {s.f1, s.f2});
    if (r3.is_zero()) return std::pair<bool, std::string>{false, "normal form of f3 mod f1, f2 is zero"};
    if (!(r3 == s.f3)) return detail::counterexample(r3);
    return std::pair<bool, std::string>{true, ""};
  });
  t.check("g.aux-membership", [&] {
    // plain grevlex with z first, as the listed basis assumes
    std::vector<std::string> names{"z"};
    for (const auto& v : s.ring->vars()) names.push_back(v);
    RingPtr aux_ring = make_ring(std::move(names), field);
    Polynomial z = Polynomial::variable(aux_ring, 0);
    Polynomial one = Polynomial::constant(aux_ring, FieldElement::one(field));
    Polynomial d = s.delta.lifted(aux_ring, 1);
    const Ideal aux(aux_ring, {z * s.f1.lifted(aux_ring, 1), z * s.f2.lifted(aux_ring, 1), (one - z) * d});
    std::vector<Polynomial> listed = delta_aux_polynomials(aux_ring);
    auto r = detail::contained(listed, aux);
    if (!r.first) return r;
    for (const auto& f : {s.f1, s.f2}) {
      listed.push_back(d * f.lifted(aux_ring, 1));
      listed.push_back(z * f.lifted(aux_ring, 1));
    }
    r = detail::groebner_check(listed);
    if (!r.first) return r;
    return detail::compare_ideals(Ideal(aux_ring, listed), aux);
  });
  return t;
}

// ---------------------------------------------------------------------------
// Dimension 4: algebras containing [x,y]=y, [x,z]=0, [y,z]=z, with
// [x,e], [y,e], [z,e] symbolic over x_i, y_i, z_i.

struct Example51 {
  VarietyIdeal jacobi;
  Ideal p1, p2;
};

inline Example51 example51(const FieldPtr& field, bool omega_ze = false) {
  std::vector<std::string> names;
  for (const char* p : {"x", "y", "z"})
    for (int i = 1; i <= 4; ++i) names.push_back(p + std::to_string(i));
  RingPtr ring = make_ring(names, field);
  SymbolicBrackets br(4, ring);
  br.set_constant(0, 1, {0, 1, 0, 0});
  br.set_constant(0, 2, {0, 0, 0, 0});
  br.set_constant(1, 2, {0, 0, 1, 0});
  for (std::size_t b = 0; b < 3; ++b) {
    PolyVector v;
    for (std::size_t k = 0; k < 4; ++k) v.push_back(Polynomial::variable(ring, 4 * b + k));
    br.set(b, 3, std::move(v));
  }
  Matrix w = canonical_skew(4, 2, field);
  if (omega_ze) {
    w(2, 3) = FieldElement::one(field);
    w(3, 2) = -FieldElement::one(field);
  }
  auto p = [&](const char* t) { return parse_polynomial(t, ring); };
  Example51 ex;
  ex.jacobi = jacobi_ideal(br, SkewForm(std::move(w)));
  ex.p1 = Ideal(ring, {p("x1"), p("x2 + z3"), p("x4 + 1"), p("y2 - z3"), p("y4 - 1"), p("z1"), p("z2"), p("z4")});
  ex.p2 = Ideal(ring, {p("x4*z3 - x2"), p("x1"), p("y1"), p("y2 - z3"), p("y3"), p("y4 - 1"), p("z1"), p("z2"),
                       p("z4")});
  return ex;
}

inline ReportTable verify_example51(const FieldPtr& field, bool omega_ze = false) {
  Example51 ex = example51(field, omega_ze);
  const Ideal j = ex.jacobi.ideal();
  ReportTable t;
  t.check("ideal-equals-intersection", [&] { return detail::compare_ideals(j, intersect(ex.p1, ex.p2)); });
  t.check("contained-in-p1", [&] { return detail::contained(ex.jacobi.generators, ex.p1); });
  t.check("contained-in-p2", [&] { return detail::contained(ex.jacobi.generators, ex.p2); });
  t.check("dimension-p1", [&] { return detail::expect_dimension(ex.p1, 4); });
  t.check("dimension-p2", [&] { return detail::expect_dimension(ex.p2, 4); });
  t.info("primality", "p1 and p2 are taken as prime; primality is not checked");
  return t;
}

}  // namespace omegalie
