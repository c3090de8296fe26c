#pragma once

// Classification of 3-dimensional non-Lie omega-Lie algebras into the
// canonical forms A, B, C(alpha), D with an explicit witness.

#include <json.hpp>

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "omegalie/algebra.hpp"
#include "omegalie/report.hpp"

namespace omegalie {

struct CanonicalLabel {
  enum class Kind { A, B, C, D };
  Kind kind = Kind::A;
  FieldElement alpha;  ///< only for C

  static CanonicalLabel a() { return {Kind::A, {}}; }
  static CanonicalLabel b() { return {Kind::B, {}}; }
  static CanonicalLabel d() { return {Kind::D, {}}; }
  static CanonicalLabel c(FieldElement alpha) {
    require(!alpha.is_zero(), ErrorKind::InvalidAlpha, "C(0) is not a canonical form");
    return {Kind::C, std::move(alpha)};
  }

  std::string to_string() const {
    switch (kind) {
      case Kind::A: return "A";
      case Kind::B: return "B";
      case Kind::C: return "C:" + alpha.to_string();
      case Kind::D: return "D";
    }
    return "?";
  }

  friend bool operator==(const CanonicalLabel& x, const CanonicalLabel& y) {
    if (x.kind != y.kind) return false;
    return x.kind != Kind::C || x.alpha == y.alpha;
  }
};

/// "A", "B", "D" or "C:<alpha>".
inline CanonicalLabel parse_label(const std::string& text, const FieldPtr& f) {
  if (text == "A") return CanonicalLabel::a();
  if (text == "B") return CanonicalLabel::b();
  if (text == "D") return CanonicalLabel::d();
  if (text.rfind("C:", 0) == 0) return CanonicalLabel::c(parse_element(text.substr(2), f));
  fail(ErrorKind::ParseError, "unknown label '" + text + "'");
}

inline OmegaAlgebra canonical_algebra(const CanonicalLabel& label, const FieldPtr& f) {
  require(f->characteristic() != 2, ErrorKind::InvalidField, "characteristic 2");
  auto v = [&](long long a, long long b, long long c) {
    return Vector{FieldElement::from_int(f, a), FieldElement::from_int(f, b), FieldElement::from_int(f, c)};
  };
  const FieldElement half = FieldElement::from_int(f, 2).inverse();
  const FieldElement zero = FieldElement::zero(f);
  StructureConstants sc(3, f);
  switch (label.kind) {
    case CanonicalLabel::Kind::A:
      sc.set(0, 1, v(1, 1, 0));
      sc.set(0, 2, v(0, 1, 0));
      sc.set(1, 2, v(0, 0, 1));
      break;
    case CanonicalLabel::Kind::B:
      sc.set(0, 1, v(0, 0, 1));
      sc.set(0, 2, {-half, zero, zero});
      sc.set(1, 2, {FieldElement::one(f), -half, zero});
      break;
    case CanonicalLabel::Kind::C: {
      require(!label.alpha.is_zero(), ErrorKind::InvalidAlpha, "C(0) is not a canonical form");
      FieldElement a = embed(label.alpha, f);
      sc.set(0, 1, v(0, 0, 1));
      sc.set(0, 2, {a, zero, zero});
      sc.set(1, 2, {zero, -(a + FieldElement::one(f)), zero});
      break;
    }
    case CanonicalLabel::Kind::D:
      sc.set(0, 1, v(0, 1, 0));
      sc.set(0, 2, v(0, 0, 0));
      sc.set(1, 2, v(0, 0, 1));
      break;
  }
  return OmegaAlgebra(std::move(sc), SkewForm(canonical_skew(3, 2, f)));
}

/// Representative of {alpha, -(alpha+1)}: the one with the smaller text,
/// except that the pair {-1, 0} is always represented by -1.
inline FieldElement c_pair_representative(const FieldElement& alpha) {
  require(!alpha.is_zero(), ErrorKind::InvalidAlpha, "alpha must be nonzero");
  const FieldElement one = FieldElement::one(alpha.field());
  FieldElement partner = -(alpha + one);
  if (partner.is_zero()) return alpha;
  return partner.to_string() < alpha.to_string() ? partner : alpha;
}

/// The C-pair map x -> y, y -> -x, z -> z.
inline Matrix c_pair_bridge(const FieldPtr& f) { return Matrix::from_ints(f, {{0, -1, 0}, {1, 0, 0}, {0, 0, 1}}); }

struct TraceStep {
  std::string tag;
  Matrix g;  ///< applied with change_basis
};

struct ClassificationResult {
  CanonicalLabel label;
  Matrix witness;  ///< change_basis(witness, input) = canonical_algebra(label)
  std::optional<QuadraticMinpoly> extension;
  std::vector<TraceStep> trace;

  const FieldPtr& field() const { return witness.field(); }
};

namespace detail {

class Classifier {
 public:
  Classifier(const OmegaAlgebra& input, bool allow_extension, bool strict)
      : input_(input), allow_extension_(allow_extension), strict_(strict) {}

  ClassificationResult run() {
    require(input_.dim() == 3, ErrorKind::WrongDimension, "classification is for dimension 3");
    ValidationReport rep = validate(input_);
    require(rep.ok(), ErrorKind::NotOmegaLie, rep.to_string());
    require(!input_.omega.is_zero(), ErrorKind::IsLie, "omega = 0: the algebra is a Lie algebra");
    const FieldPtr& f = input_.field();
    require(f->characteristic() != 2, ErrorKind::InvalidField, "characteristic 2");
    cur_ = input_;
    w_ = Matrix::identity(3, f);

    CongruenceResult cr = skew_congruence_reduce(input_.omega);
    require(cr.rank == 2, ErrorKind::Internal, "omega of rank " + std::to_string(cr.rank));
    if (!cr.q.is_identity()) step("omega to J2", inverse(cr.q));
    check_relations();

    if (auto label = already_canonical()) return finish(*label);
    if (a(2).is_zero()) {
      normalize_a3_zero();
      make_a3_nonzero();
    }
    return finish(a3_nonzero());
  }

 private:
  FieldElement a(int i) const { return cur_.sc.coeff(0, 1, i); }
  FieldElement b(int i) const { return cur_.sc.coeff(0, 2, i); }
  FieldElement c(int i) const { return cur_.sc.coeff(1, 2, i); }
  FieldPtr field() const { return cur_.field(); }
  FieldElement num(long long v) const { return FieldElement::from_int(field(), v); }
  FieldElement zero() const { return FieldElement::zero(field()); }
  FieldElement one() const { return FieldElement::one(field()); }

  void step(const std::string& tag, const Matrix& g) {
    cur_ = change_basis(GroupElement(g), cur_);
    w_ = g * w_;
    trace_.push_back({tag, g});
  }

  /// New basis given by the columns of p.
  void rebase(const std::string& tag, const Matrix& p) { step(tag, inverse(p)); }

  Matrix basis(std::vector<FieldElement> x, std::vector<FieldElement> y, std::vector<FieldElement> z) const {
    return Matrix(3, 3, {x[0], y[0], z[0], x[1], y[1], z[1], x[2], y[2], z[2]});
  }

  void move_to(const FieldPtr& ext) {
    cur_ = cur_.embedded(ext);
    w_ = w_.embedded(ext);
    for (auto& s : trace_) s.g = s.g.embedded(ext);
  }

  void check_relations() const {
    FieldElement r1 = a(1) * c(0) + b(2) * c(0) - a(0) * c(1) - b(0) * c(2);
    FieldElement r2 = a(2) * b(0) - a(0) * b(2) + a(2) * c(1) - a(1) * c(2) + one();
    FieldElement r3 = a(1) * b(0) - a(0) * b(1) - b(2) * c(1) + b(1) * c(2);
    require(r1.is_zero() && r2.is_zero() && r3.is_zero(), ErrorKind::Internal,
            "structure constants off the defining relations");
  }

  std::optional<CanonicalLabel> already_canonical() {
    std::vector<CanonicalLabel> cands{CanonicalLabel::a(), CanonicalLabel::b(), CanonicalLabel::d()};
    if (a(0).is_zero() && a(1).is_zero() && a(2).is_one() && !b(0).is_zero() &&
        (strict_ || c_pair_representative(b(0)) == b(0)))
      cands.push_back(CanonicalLabel::c(b(0)));
    for (const auto& l : cands)
      if (cur_ == canonical_algebra(l, field())) {
        trace_.push_back({"already canonical", Matrix::identity(3, field())});
        return l;
      }
    return std::nullopt;
  }

  // a3 = 0: a1 = 1, a2 = 0, b3 = 1, c3 = 0.
  void normalize_a3_zero() {
    const FieldElement z = zero(), o = one();
    trace_.push_back({"a3=0", Matrix::identity(3, field())});
    if (a(0).is_zero()) rebase("a3=0: swap x, y", basis({z, o, z}, {-o, z, z}, {z, z, o}));
    FieldElement a1 = a(0);
    if (!a1.is_one()) rebase("a3=0: scale a1 to 1", basis({a1, z, z}, {z, a1.inverse(), z}, {z, z, o}));
    if (!a(1).is_zero()) rebase("a3=0: clear a2", basis({o, a(1), z}, {z, o, z}, {z, z, o}));
    require(b(2).is_one(), ErrorKind::Internal, "b3 != 1 after normalizing [x,y] = x");
    if (!c(2).is_zero()) rebase("a3=0: clear c3", basis({o, z, z}, {-c(2), o, z}, {z, z, o}));
  }

  // x -> x + t1 z, y -> y + t2 z over t in {0, 1, -1}^2.
  void make_a3_nonzero() {
    const FieldElement z = zero(), o = one();
    for (long long t1 : {0, 1, -1})
      for (long long t2 : {0, 1, -1}) {
        Matrix p = basis({o, z, num(t1)}, {z, o, num(t2)}, {z, z, o});
        OmegaAlgebra trial = change_basis(GroupElement(inverse(p)), cur_);
        if (!trial.sc.coeff(0, 1, 2).is_zero()) {
          rebase("a3=0: unipotent (" + std::to_string(t1) + ", " + std::to_string(t2) + ")", p);
          return;
        }
      }
    fail(ErrorKind::Internal, "no unipotent element makes the z-component of [x,y] nonzero");
  }

  CanonicalLabel a3_nonzero() {
    const FieldElement z = zero(), o = one();
    trace_.push_back({"a3!=0", Matrix::identity(3, field())});
    if (!a(2).is_one()) rebase("a3!=0: scale z", basis({o, z, z}, {z, o, z}, {z, z, a(2)}));
    FieldElement delta = b(0) * c(1) - b(1) * c(0);
    return delta.is_zero() ? delta_zero() : delta_nonzero();
  }

  CanonicalLabel delta_nonzero() {
    const FieldElement z = zero(), o = one();
    trace_.push_back({"Delta!=0", Matrix::identity(3, field())});
    // x -> x + t1 z, y -> y + t2 z, z -> d z with [x,y] = z afterwards
    Matrix t(3, 3, {c(0), -b(0), z, c(1), -b(1), z, c(2), -b(2), o});
    SolveResult s = solve(t, {a(0), a(1), o});
    require(s.unique(t), ErrorKind::Internal, "shift system not uniquely solvable");
    rebase("Delta!=0: [x,y] = z", basis({o, z, s.x[0]}, {z, o, s.x[1]}, {z, z, s.x[2]}));
    require(a(0).is_zero() && a(1).is_zero() && a(2).is_one() && b(2).is_zero() && c(2).is_zero(),
            ErrorKind::Internal, "[x,y] = z normalization failed");

    Matrix m(2, 2, {b(0), c(0), b(1), c(1)});
    Sl2Canonical sl = sl2_trace_minus_one_canonical(m, allow_extension_);
    if (sl.extension) {
      extension_ = sl.extension_minpoly;
      move_to(sl.extension);
    }
    const FieldPtr& f = field();
    const Matrix& p = sl.p;
    const FieldElement zf = FieldElement::zero(f), of = FieldElement::one(f);
    Matrix p3(3, 3, {p(0, 0), p(0, 1), zf, p(1, 0), p(1, 1), zf, zf, zf, of});
    if (!p3.is_identity()) rebase("Delta!=0: SL2 canonical form (" + to_string(sl.kind) + ")", p3);
    if (sl.kind == Sl2Canonical::Kind::JordanHalf) return CanonicalLabel::b();
    FieldElement alpha = sl.b;
    if (!strict_ && !(c_pair_representative(alpha) == alpha)) {
      step("C-pair bridge", c_pair_bridge(f));
      alpha = -(alpha + of);
    }
    return CanonicalLabel::c(alpha);
  }

  CanonicalLabel delta_zero() {
    const FieldElement z = zero(), o = one();
    trace_.push_back({"Delta=0", Matrix::identity(3, field())});
    bool b_xy = !b(0).is_zero() || !b(1).is_zero();
    bool c_xy = !c(0).is_zero() || !c(1).is_zero();
    if (!b_xy && c_xy) rebase("Delta=0: swap x, y", basis({z, o, z}, {-o, z, z}, {z, z, o}));
    if (!c(0).is_zero() || !c(1).is_zero()) {
      FieldElement k = !b(0).is_zero() ? c(0) / b(0) : c(1) / b(1);
      rebase("Delta=0: y -> y - cx", basis({o, z, z}, {-k, o, z}, {z, z, o}));
    }
    require(c(0).is_zero() && c(1).is_zero(), ErrorKind::Internal, "[y,z] not a multiple of z");

    if (c(2).is_zero() && b(0).is_zero() && b(1).is_zero()) {
      // [x,z] = b3 z, [y,z] = 0: turn to [x,z] = 0, [y,z] = z
      FieldElement b3 = b(2);
      rebase("Delta=0: rotate so [y,z] = z", basis({z, -b3, z}, {b3.inverse(), z, z}, {z, z, o}));
    }
    if (c(2).is_zero()) return c3_zero();
    return c3_nonzero();
  }

  CanonicalLabel c3_zero() {
    const FieldElement z = zero(), o = one();
    trace_.push_back({"c3=0", Matrix::identity(3, field())});
    FieldElement k = !b(0).is_zero() ? a(0) / b(0) : a(1) / b(1);
    rebase("c3=0: y -> y - cz", basis({o, z, z}, {z, o, -k}, {z, z, o}));
    if (!a(2).is_one()) rebase("c3=0: scale z", basis({o, z, z}, {z, o, z}, {z, z, a(2)}));
    require(a(0).is_zero() && a(1).is_zero() && (b(0) + o).is_zero(), ErrorKind::Internal, "c3=0 normalization");
    rebase("c3=0: x -> x - b2 y - b3 z", basis({o, -b(1), -b(2)}, {z, o, z}, {z, z, o}));
    return CanonicalLabel::c(-o);
  }

  CanonicalLabel c3_nonzero() {
    const FieldElement z = zero(), o = one();
    trace_.push_back({"c3!=0", Matrix::identity(3, field())});
    FieldElement c3 = c(2);
    if (!c3.is_one()) rebase("c3!=0: scale to c3 = 1", basis({c3, z, z}, {z, c3.inverse(), z}, {z, z, o}));
    if (!b(2).is_zero()) rebase("c3!=0: x -> x - b3 y", basis({o, -b(2), z}, {z, o, z}, {z, z, o}));
    require(b(0).is_zero() && a(1).is_one(), ErrorKind::Internal, "c3!=0 normalization");
    if (b(1).is_zero()) {
      trace_.push_back({"b2=0", Matrix::identity(3, field())});
      rebase("b2=0: y -> a1 x + y + a3 z", basis({o, z, z}, {a(0), o, a(2)}, {z, z, o}));
      return CanonicalLabel::d();
    }
    trace_.push_back({"b2!=0", Matrix::identity(3, field())});
    require(a(0).is_one(), ErrorKind::Internal, "a1 != 1 with b2 != 0");
    rebase("b2!=0: scale z", basis({o, z, z}, {z, o, z}, {z, z, b(1).inverse()}));
    FieldElement t = a(2) / num(2);
    rebase("b2!=0: N element, s = 0, t = a3/2", basis({o, z, t}, {z, o, z}, {z, z, o}));
    return CanonicalLabel::a();
  }

  ClassificationResult finish(const CanonicalLabel& label) {
    const FieldPtr& f = field();
    OmegaAlgebra canon = canonical_algebra(label, f);
    OmegaAlgebra in = input_.embedded(f);
    require(change_basis(GroupElement(w_), in) == canon, ErrorKind::Internal, "witness does not reach the canonical form");
    if (in.omega.matrix() == canonical_skew(3, 2, f)) {
      require(in_g_omega(w_, in.omega), ErrorKind::Internal, "witness outside G_omega");
      require(transform(GroupElement(w_), in) == canon, ErrorKind::Internal, "witness transform mismatch");
    }
    Matrix prod = Matrix::identity(3, f);
    for (const auto& s : trace_) prod = s.g * prod;
    require(prod == w_, ErrorKind::Internal, "trace does not compose to the witness");
    return {label, w_, extension_, trace_};
  }

  const OmegaAlgebra& input_;
  bool allow_extension_, strict_;
  OmegaAlgebra cur_;
  Matrix w_;
  std::vector<TraceStep> trace_;
  std::optional<QuadraticMinpoly> extension_;
};

}  // namespace detail

/// Without strict_c_labels, C labels are brought to c_pair_representative.
inline ClassificationResult classify(const OmegaAlgebra& alg, bool allow_extension = false,
                                     bool strict_c_labels = false) {
  return detail::Classifier(alg, allow_extension, strict_c_labels).run();
}

struct IsoResult {
  bool isomorphic = false;
  std::optional<Matrix> witness;  ///< change_basis(witness, alg1) = alg2
  bool used_c_pair_bridge = false;
  std::string reason;
};

inline IsoResult iso_witness(const OmegaAlgebra& alg1, const OmegaAlgebra& alg2, bool allow_extension = false) {
  IsoResult out;
  if (derived_dimension(alg1.sc) != derived_dimension(alg2.sc)) {
    out.reason = "derived algebras of dimension " + std::to_string(derived_dimension(alg1.sc)) + " and " +
                 std::to_string(derived_dimension(alg2.sc));
    return out;
  }
  ClassificationResult r1 = classify(alg1, allow_extension, true);
  ClassificationResult r2 = classify(alg2, allow_extension, true);
  FieldPtr f = r1.field();
  if (!same_field(f, r2.field())) f = f->is_extension() ? f : r2.field();
  Matrix w1 = r1.witness.embedded(f), w2 = r2.witness.embedded(f);
  CanonicalLabel l1 = r1.label, l2 = r2.label;
  if (l1.kind == CanonicalLabel::Kind::C) l1.alpha = embed(l1.alpha, f);
  if (l2.kind == CanonicalLabel::Kind::C) l2.alpha = embed(l2.alpha, f);

  Matrix bridge = Matrix::identity(3, f);
  if (!(l1 == l2)) {
    bool pair = l1.kind == CanonicalLabel::Kind::C && l2.kind == CanonicalLabel::Kind::C &&
                l2.alpha == -(l1.alpha + FieldElement::one(f));
    if (!pair) {
      out.reason = "labels " + l1.to_string() + " and " + l2.to_string();
      return out;
    }
    bridge = c_pair_bridge(f);
    out.used_c_pair_bridge = true;
  }
  Matrix w = inverse(w2) * bridge * w1;
  require(change_basis(GroupElement(w), alg1.embedded(f)) == alg2.embedded(f), ErrorKind::Internal,
          "composed witness is not an isomorphism");
  out.isomorphic = true;
  out.witness = std::move(w);
  out.reason = "labels " + l1.to_string() + " and " + l2.to_string();
  return out;
}

/// True when x -> y, y -> -x, z -> z maps C(alpha) onto C(-(alpha+1)),
/// preserving omega and brackets.
inline bool c_pair_map_is_isomorphism(const FieldElement& alpha) {
  const FieldPtr& f = alpha.field();
  Matrix g = c_pair_bridge(f);
  OmegaAlgebra src = canonical_algebra(CanonicalLabel::c(alpha), f);
  FieldElement partner = -(alpha + FieldElement::one(f));
  if (partner.is_zero()) return false;
  OmegaAlgebra dst = canonical_algebra(CanonicalLabel::c(partner), f);
  if (!in_g_omega(g, src.omega)) return false;
  // g[u, v] = [g u, g v]' on basis pairs
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Vector lhs = g.apply(src.sc.bracket(i, j));
      Vector rhs = dst.sc.bracket(g.column(i), g.column(j));
      if (lhs != rhs) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Report

namespace detail {

/// g = [[S, 0], [T, d]] with det S = 1, entries from a small range.
inline Matrix sample_g_omega(std::mt19937_64& rng, const FieldPtr& f) {
  std::uniform_int_distribution<long long> r(-7, 7);
  auto e = [&] { return FieldElement::from_int(f, r(rng)); };
  Matrix g(3, 3, f);
  for (;;) {
    FieldElement s1 = e(), s2 = e(), s3 = e();
    if (s1.is_zero()) continue;
    g(0, 0) = s1, g(0, 1) = s3, g(1, 0) = s2;
    g(1, 1) = (FieldElement::one(f) + s2 * s3) / s1;
    break;
  }
  g(2, 0) = e(), g(2, 1) = e();
  do g(2, 2) = e();
  while (g(2, 2).is_zero());
  return g;
}

inline std::vector<CanonicalLabel> sample_labels(const FieldPtr& f) {
  std::vector<CanonicalLabel> out{CanonicalLabel::a(), CanonicalLabel::b(), CanonicalLabel::d()};
  for (long long a : {-1, 2, 5}) out.push_back(CanonicalLabel::c(c_pair_representative(FieldElement::from_int(f, a))));
  out.push_back(CanonicalLabel::c(-FieldElement::from_int(f, 2).inverse()));
  return out;
}

}  // namespace detail

/// Classification checks over `field`: fixed points, orbit round trips,
/// separation, derived dimensions and the C-pair map.
inline ReportTable verify_section4(const FieldPtr& field, std::size_t orbit_samples = 100, std::uint64_t seed = 1) {
  ReportTable t;
  std::mt19937_64 rng(seed);
  const auto labels = detail::sample_labels(field);
  t.check("canonical-fixed", [&]() -> std::pair<bool, std::string> {
    for (const auto& l : labels) {
      ClassificationResult r = classify(canonical_algebra(l, field));
      if (!(r.label == l) || !r.witness.is_identity()) return {false, l.to_string() + " -> " + r.label.to_string()};
    }
    return {true, std::to_string(labels.size()) + " labels"};
  });
  t.check("orbit-round-trip", [&]() -> std::pair<bool, std::string> {
    for (std::size_t i = 0; i < orbit_samples; ++i) {
      const CanonicalLabel& l = labels[i % labels.size()];
      OmegaAlgebra in = transform(GroupElement(detail::sample_g_omega(rng, field)), canonical_algebra(l, field));
      ClassificationResult r = classify(in);
      if (!(r.label == l)) return {false, l.to_string() + " -> " + r.label.to_string()};
      if (!(transform(GroupElement(r.witness), in) == canonical_algebra(l, field)))
        return {false, "witness mismatch for " + l.to_string()};
    }
    return {true, std::to_string(orbit_samples) + " samples"};
  });
  t.check("separation", [&]() -> std::pair<bool, std::string> {
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (std::size_t j = 0; j < labels.size(); ++j) {
        IsoResult r = iso_witness(canonical_algebra(labels[i], field), canonical_algebra(labels[j], field));
        if (r.isomorphic != (i == j)) return {false, labels[i].to_string() + " vs " + labels[j].to_string()};
      }
    return {true, ""};
  });
  t.check("derived-dimension", [&]() -> std::pair<bool, std::string> {
    std::string seen;
    for (const auto& l : labels) {
      std::size_t d = derived_dimension(canonical_algebra(l, field).sc);
      bool two = l.kind == CanonicalLabel::Kind::D ||
                 (l.kind == CanonicalLabel::Kind::C && l.alpha == -FieldElement::one(field));
      if (d != (two ? 2u : 3u)) return {false, l.to_string() + ": " + std::to_string(d)};
      if (two) seen += (seen.empty() ? "" : ", ") + l.to_string();
    }
    return {true, "dimension 2 for " + seen + ", 3 otherwise"};
  });
  t.check("c-pair-map", [&]() -> std::pair<bool, std::string> {
    for (long long a : {2, 3, 5, -3}) {
      FieldElement alpha = FieldElement::from_int(field, a);
      if (!c_pair_map_is_isomorphism(alpha)) return {false, "alpha = " + alpha.to_string()};
    }
    return {true, "x -> y, y -> -x, z -> z maps C(a) onto C(-(a+1))"};
  });
  t.info("c-pair-tension",
         "C(a) and C(-(a+1)) are isomorphic, so the C family is labelled by one representative per pair");
  return t;
}

// ---------------------------------------------------------------------------
// Serialization

inline nlohmann::ordered_json result_to_json(const ClassificationResult& r) {
  nlohmann::ordered_json j;
  j["label"] = r.label.to_string();
  j["field"] = r.field()->to_string();
  j["witness"] = r.witness.to_strings();
  if (r.extension)
    j["extension"] = {{"c0", r.extension->c0.to_string()}, {"c1", r.extension->c1.to_string()}};
  else
    j["extension"] = nullptr;
  nlohmann::ordered_json tr = nlohmann::ordered_json::array();
  for (const auto& s : r.trace) tr.push_back({{"tag", s.tag}, {"matrix", s.g.to_strings()}});
  j["trace"] = tr;
  return j;
}

inline ClassificationResult result_from_json(const nlohmann::ordered_json& j) {
  try {
    FieldPtr f = parse_field(j.at("field").get<std::string>());
    ClassificationResult r;
    r.label = parse_label(j.at("label").get<std::string>(), f);
    r.witness = Matrix::from_strings(j.at("witness").get<std::vector<std::vector<std::string>>>(), f);
    if (!j.at("extension").is_null()) {
      const FieldPtr& base = f->is_extension() ? f->base() : f;
      r.extension = QuadraticMinpoly{parse_element(j["extension"].at("c0").get<std::string>(), base),
                                     parse_element(j["extension"].at("c1").get<std::string>(), base)};
    }
    for (const auto& s : j.at("trace"))
      r.trace.push_back({s.at("tag").get<std::string>(),
                         Matrix::from_strings(s.at("matrix").get<std::vector<std::vector<std::string>>>(), f)});
    return r;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("classification record: ") + e.what());
  }
}

/// Applies the trace to input step by step and compares with the label's
/// canonical algebra.
inline bool replay(const ClassificationResult& r, const OmegaAlgebra& input) {
  const FieldPtr& f = r.field();
  OmegaAlgebra cur = input.embedded(f);
  Matrix prod = Matrix::identity(3, f);
  for (const auto& s : r.trace) {
    cur = change_basis(GroupElement(s.g), cur);
    prod = s.g * prod;
  }
  return prod == r.witness && cur == canonical_algebra(r.label, f);
}

}  // namespace omegalie
