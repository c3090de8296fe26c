#pragma once

// Skew-symmetric forms up to congruence, and trace -1 2x2 matrices up to
// SL_2 conjugacy.

#include <optional>
#include <string>
#include <utility>

#include "omegalie/matrix.hpp"

namespace omegalie {

/// Skew-symmetric bilinear form given by its Gram matrix.
class SkewForm {
 public:
  SkewForm() = default;

  explicit SkewForm(Matrix a) : a_(std::move(a)) {
    require(a_.square(), ErrorKind::NotSkew, "form matrix is " + a_.shape());
    for (std::size_t i = 0; i < a_.rows(); ++i) {
      require(a_(i, i).is_zero(), ErrorKind::NotSkew, "nonzero diagonal entry " + std::to_string(i + 1));
      for (std::size_t j = i + 1; j < a_.cols(); ++j)
        require(a_(i, j) == -a_(j, i), ErrorKind::NotSkew,
                "entries (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") and (" +
                    std::to_string(j + 1) + "," + std::to_string(i + 1) + ") are not opposite");
    }
  }

  static SkewForm zero(std::size_t n, const FieldPtr& f) { return SkewForm(Matrix(n, n, f)); }

  std::size_t dim() const noexcept { return a_.rows(); }
  const Matrix& matrix() const noexcept { return a_; }
  const FieldElement& operator()(std::size_t i, std::size_t j) const { return a_(i, j); }
  bool is_zero() const { return a_.is_zero(); }

  friend bool operator==(const SkewForm& a, const SkewForm& b) { return a.a_ == b.a_; }

 private:
  Matrix a_;
};

/// J_m = dia{J, ..., J, 0, ..., 0} with m/2 blocks J = [[0,1],[-1,0]].
inline Matrix canonical_skew(std::size_t n, std::size_t m, const FieldPtr& f) {
  require(m % 2 == 0 && m <= n, ErrorKind::NotSkew, "rank must be even and at most n");
  Matrix j(n, n, f);
  for (std::size_t k = 0; k + 1 < m; k += 2) {
    j(k, k + 1) = FieldElement::one(f);
    j(k + 1, k) = -FieldElement::one(f);
  }
  return j;
}

struct CongruenceResult {
  Matrix q;
  std::size_t rank = 0;
};

/// Finds invertible Q with Q^t A Q = J_m, m = rank(A).  Each round moves the
/// first nonzero entry (row-major) of the trailing block to its top-left
/// corner, scales it to 1, then clears the off-diagonal blocks with the
/// unipotent [[I, a^{-1} J B], [0, I]].
inline CongruenceResult skew_congruence_reduce(const SkewForm& form) {
  const Matrix& a0 = form.matrix();
  const std::size_t n = form.dim();
  const FieldPtr& f = a0.field();
  Matrix a = a0;
  Matrix q = Matrix::identity(n, f);

  auto congruence_step = [&](const Matrix& step) {
    a = step.transpose() * a * step;
    q = q * step;
  };
  auto swap_basis = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    Matrix p = Matrix::identity(n, f);
    p(i, i) = p(j, j) = FieldElement::zero(f);
    p(i, j) = p(j, i) = FieldElement::one(f);
    congruence_step(p);
  };

  std::size_t r = 0;
  while (r + 1 < n) {
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t i = r; i < n && !pivot; ++i)
      for (std::size_t j = r; j < n; ++j)
        if (!a(i, j).is_zero()) {
          pivot = {i, j};
          break;
        }
    if (!pivot) break;
    auto [pi, pj] = *pivot;  // pi < pj because the diagonal is zero
    swap_basis(r, pi);
    if (pj == r) pj = pi;
    swap_basis(r + 1, pj);

    Matrix scale = Matrix::identity(n, f);
    scale(r + 1, r + 1) = a(r, r + 1).inverse();
    congruence_step(scale);

    // Now the corner block is J; B = rows r..r+1, columns r+2..n-1.
    Matrix clear = Matrix::identity(n, f);
    for (std::size_t c = r + 2; c < n; ++c) {
      // (J B)_{0,c} = B_{1,c}; (J B)_{1,c} = -B_{0,c}
      clear(r, c) = a(r + 1, c);
      clear(r + 1, c) = -a(r, c);
    }
    congruence_step(clear);
    r += 2;
  }
  require(a == canonical_skew(n, r, f), ErrorKind::Internal, "congruence reduction did not reach J_m");
  return {std::move(q), r};
}

/// SL_2 canonical form of a trace -1 matrix: P^{-1} M P is dia{b, -(b+1)},
/// -I/2, or [[-1/2, 1], [0, -1/2]], with det P = 1.
struct Sl2Canonical {
  enum class Kind { DistinctDiag, ScalarHalf, JordanHalf };
  Kind kind = Kind::DistinctDiag;
  FieldElement b;  ///< first diagonal entry of the canonical matrix
  Matrix p;
  std::optional<QuadraticMinpoly> extension_minpoly;
  FieldPtr extension;  ///< field of p and b when an extension was built

  Matrix canonical() const {
    const FieldPtr& f = p.field();
    Matrix c(2, 2, f);
    const FieldElement one = FieldElement::one(f);
    const FieldElement half = FieldElement::from_int(f, 2).inverse();
    switch (kind) {
      case Kind::DistinctDiag:
        c(0, 0) = b;
        c(1, 1) = -(b + one);
        break;
      case Kind::ScalarHalf:
        c(0, 0) = c(1, 1) = -half;
        break;
      case Kind::JordanHalf:
        c(0, 0) = c(1, 1) = -half;
        c(0, 1) = one;
        break;
    }
    return c;
  }
};

inline std::string to_string(Sl2Canonical::Kind k) {
  switch (k) {
    case Sl2Canonical::Kind::DistinctDiag: return "DistinctDiag";
    case Sl2Canonical::Kind::ScalarHalf: return "ScalarHalf";
    case Sl2Canonical::Kind::JordanHalf: return "JordanHalf";
  }
  return "?";
}

namespace detail {

inline std::vector<FieldElement> eigenvector2(const Matrix& m, const FieldElement& lambda) {
  FieldElement k00 = m(0, 0) - lambda, k01 = m(0, 1), k10 = m(1, 0), k11 = m(1, 1) - lambda;
  if (!k00.is_zero() || !k01.is_zero()) return {k01, -k00};
  return {k11, -k10};
}

inline Matrix columns2(const std::vector<FieldElement>& v, const std::vector<FieldElement>& w) {
  return Matrix(2, 2, {v[0], w[0], v[1], w[1]});
}

}  // namespace detail

inline Sl2Canonical sl2_trace_minus_one_canonical(const Matrix& m_in, bool allow_extension = false) {
  require(m_in.rows() == 2 && m_in.cols() == 2, ErrorKind::ShapeMismatch, "expected 2x2, got " + m_in.shape());
  const FieldPtr& f0 = m_in.field();
  require((m_in(0, 0) + m_in(1, 1)) == -FieldElement::one(f0), ErrorKind::InvalidAlpha,
          "trace is not -1");
  Sl2Canonical out;
  RootReport roots = quadratic_roots(det(m_in), false);
  Matrix m = m_in;

  if (roots.kind == RootReport::Kind::DoubleRoot) {
    const FieldElement half = FieldElement::from_int(f0, 2).inverse();
    Matrix n = m;
    n(0, 0) += half;
    n(1, 1) += half;
    if (n.is_zero()) {
      out.kind = Sl2Canonical::Kind::ScalarHalf;
      out.b = -half;
      out.p = Matrix::identity(2, f0);
      return out;
    }
    out.kind = Sl2Canonical::Kind::JordanHalf;
    std::vector<FieldElement> w{FieldElement::one(f0), FieldElement::zero(f0)};
    if (n.apply(w)[0].is_zero() && n.apply(w)[1].is_zero()) std::swap(w[0], w[1]);
    std::vector<FieldElement> v = n.apply(w);
    Matrix p = detail::columns2(v, w);
    FieldElement d = det(p);
    SqrtReport s = sqrt_or_extend(d);
    FieldElement c;
    if (s.found()) {
      c = *s.root;
    } else {
      if (!allow_extension) throw ExtensionRequired(*s.minpoly, "Jordan-case rescaling");
      out.extension = make_quadratic_extension(*s.minpoly);
      out.extension_minpoly = s.minpoly;
      p = p.embedded(out.extension);
      c = generator(out.extension);
    }
    out.p = c.inverse() * p;
    out.b = -FieldElement::from_int(out.p.field(), 2).inverse();
    return out;
  }

  out.kind = Sl2Canonical::Kind::DistinctDiag;
  if (roots.kind == RootReport::Kind::NeedsExtension) {
    if (!allow_extension) throw ExtensionRequired(*roots.minpoly, "eigenvalues of the trace -1 block");
    roots = quadratic_roots(det(m_in), true);
    out.extension = roots.extension;
    out.extension_minpoly = roots.minpoly;
    m = m.embedded(out.extension);
  }
  const FieldPtr& f = m.field();
  if (m(0, 1).is_zero() && m(1, 0).is_zero()) {
    out.b = m(0, 0);
    out.p = Matrix::identity(2, f);
    return out;
  }
  out.b = roots.roots[0];
  Matrix p = detail::columns2(detail::eigenvector2(m, roots.roots[0]), detail::eigenvector2(m, roots.roots[1]));
  FieldElement dinv = det(p).inverse();
  p(0, 1) *= dinv;
  p(1, 1) *= dinv;
  out.p = std::move(p);
  return out;
}

}  // namespace omegalie
