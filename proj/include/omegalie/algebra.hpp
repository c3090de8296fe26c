#pragma once

// omega-Lie algebras: structure constants, the omega-Jacobi identity, and
// the G_omega action on brackets.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omegalie/forms.hpp"

namespace omegalie {

using Vector = std::vector<FieldElement>;

inline Vector zero_vector(std::size_t n, const FieldPtr& f) { return Vector(n, FieldElement::zero(f)); }

/// c[i][j][k] with [e_i, e_j] = sum_k c[i][j][k] e_k.  Only i < j is stored.
class StructureConstants {
 public:
  StructureConstants() = default;

  StructureConstants(std::size_t n, FieldPtr f) : n_(n), field_(std::move(f)) {
    require(n_ >= 1, ErrorKind::DimensionTooSmall, "dimension must be positive");
    data_.assign(n_ * (n_ - 1) / 2, zero_vector(n_, field_));
  }

  std::size_t dim() const noexcept { return n_; }
  const FieldPtr& field() const noexcept { return field_; }

  /// [e_i, e_j] as a coordinate vector (0-based indices).
  Vector bracket(std::size_t i, std::size_t j) const {
    check_index(i);
    check_index(j);
    if (i == j) return zero_vector(n_, field_);
    if (i < j) return data_[slot(i, j)];
    Vector v = data_[slot(j, i)];
    for (auto& x : v) x = -x;
    return v;
  }

  FieldElement coeff(std::size_t i, std::size_t j, std::size_t k) const {
    check_index(k);
    return bracket(i, j)[k];
  }

  void set(std::size_t i, std::size_t j, Vector v) {
    check_index(i);
    check_index(j);
    require(i != j, ErrorKind::IndexOutOfRange, "[e_i, e_i] is always zero");
    require(v.size() == n_, ErrorKind::LengthMismatch, "bracket vector length");
    for (const auto& x : v)
      require(same_field(x.field(), field_), ErrorKind::DescriptorMismatch, "bracket over another field");
    if (i > j) {
      for (auto& x : v) x = -x;
      std::swap(i, j);
    }
    data_[slot(i, j)] = std::move(v);
  }

  /// Bilinear extension: [u, v] for coordinate vectors u, v.
  Vector bracket(const Vector& u, const Vector& v) const {
    Vector out = zero_vector(n_, field_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (u[i].is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (i == j || v[j].is_zero()) continue;
        FieldElement s = u[i] * v[j];
        Vector b = bracket(i, j);
        for (std::size_t k = 0; k < n_; ++k)
          if (!b[k].is_zero()) out[k] += s * b[k];
      }
    }
    return out;
  }

  StructureConstants embedded(const FieldPtr& target) const {
    StructureConstants s(n_, target);
    for (std::size_t p = 0; p < data_.size(); ++p)
      for (std::size_t k = 0; k < n_; ++k) s.data_[p][k] = embed(data_[p][k], target);
    return s;
  }

  friend bool operator==(const StructureConstants& a, const StructureConstants& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
  }

 private:
  std::size_t slot(std::size_t i, std::size_t j) const { return i * n_ - i * (i + 1) / 2 + (j - i - 1); }

  void check_index(std::size_t i) const {
    require(i < n_, ErrorKind::IndexOutOfRange, "basis index " + std::to_string(i + 1) + " > " + std::to_string(n_));
  }

  std::size_t n_ = 0;
  FieldPtr field_;
  std::vector<Vector> data_;
};

struct OmegaAlgebra {
  StructureConstants sc;
  SkewForm omega;

  OmegaAlgebra() = default;
  OmegaAlgebra(StructureConstants s, SkewForm w) : sc(std::move(s)), omega(std::move(w)) {
    require(sc.dim() == omega.dim(), ErrorKind::DimensionMismatch, "bracket and form dimensions differ");
    require(same_field(sc.field(), omega.matrix().field()), ErrorKind::DescriptorMismatch,
            "bracket and form over different fields");
  }

  std::size_t dim() const noexcept { return sc.dim(); }
  const FieldPtr& field() const noexcept { return sc.field(); }

  OmegaAlgebra embedded(const FieldPtr& target) const {
    return OmegaAlgebra(sc.embedded(target), SkewForm(omega.matrix().embedded(target)));
  }

  friend bool operator==(const OmegaAlgebra& a, const OmegaAlgebra& b) {
    return a.sc == b.sc && a.omega == b.omega;
  }
};

/// Coordinates of [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
///   - w(e_i,e_j) e_k - w(e_j,e_k) e_i - w(e_k,e_i) e_j.
inline Vector jacobi_residual(const StructureConstants& sc, const SkewForm& omega, std::size_t i, std::size_t j,
                              std::size_t k) {
  const std::size_t n = sc.dim();
  require(omega.dim() == n, ErrorKind::DimensionMismatch, "form dimension");
  for (std::size_t t : {i, j, k})
    require(t < n, ErrorKind::IndexOutOfRange, "basis index " + std::to_string(t + 1) + " > " + std::to_string(n));
  const FieldPtr& f = sc.field();
  auto unit = [&](std::size_t a) {
    Vector e = zero_vector(n, f);
    e[a] = FieldElement::one(f);
    return e;
  };
  Vector r = zero_vector(n, f);
  auto add = [&](const Vector& v) {
    for (std::size_t a = 0; a < n; ++a) r[a] += v[a];
  };
  add(sc.bracket(sc.bracket(i, j), unit(k)));
  add(sc.bracket(sc.bracket(j, k), unit(i)));
  add(sc.bracket(sc.bracket(k, i), unit(j)));
  r[k] -= omega(i, j);
  r[i] -= omega(j, k);
  r[j] -= omega(k, i);
  return r;
}

struct JacobiFailure {
  std::size_t i, j, k;  ///< 1-based
  Vector residual;
};

struct ValidationReport {
  bool antisymmetric = true;
  bool omega_skew = true;
  std::vector<JacobiFailure> failures;
  bool ok() const noexcept { return antisymmetric && omega_skew && failures.empty(); }

  std::string to_string() const {
    if (ok()) return "valid";
    std::string s;
    if (!antisymmetric) s += "bracket not antisymmetric; ";
    if (!omega_skew) s += "omega not skew; ";
    for (const auto& fl : failures) {
      s += "triple (" + std::to_string(fl.i) + "," + std::to_string(fl.j) + "," + std::to_string(fl.k) + ") residual [";
      for (std::size_t a = 0; a < fl.residual.size(); ++a) s += (a ? ", " : "") + fl.residual[a].to_string();
      s += "]; ";
    }
    return s.substr(0, s.size() - 2);
  }
};

/// Checks antisymmetry, skewness of omega and the omega-Jacobi identity on
/// every ordered triple, repeated indices included.
inline ValidationReport validate(const OmegaAlgebra& alg) {
  ValidationReport rep;
  const std::size_t n = alg.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!(alg.omega(i, j) == -alg.omega(j, i))) rep.omega_skew = false;
      for (std::size_t k = 0; k < n; ++k)
        if (!(alg.sc.coeff(i, j, k) == -alg.sc.coeff(j, i, k))) rep.antisymmetric = false;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector r = jacobi_residual(alg.sc, alg.omega, i, j, k);
        bool zero = true;
        for (const auto& x : r) zero = zero && x.is_zero();
        if (!zero) rep.failures.push_back({i + 1, j + 1, k + 1, std::move(r)});
      }
  return rep;
}

/// The unique omega making sc an omega-Lie algebra, if any (n >= 3).
inline std::optional<SkewForm> recover_omega(const StructureConstants& sc) {
  const std::size_t n = sc.dim();
  require(n >= 3, ErrorKind::DimensionTooSmall, "omega is not determined in dimension " + std::to_string(n));
  const FieldPtr& f = sc.field();
  std::vector<std::pair<std::size_t, std::size_t>> unknowns;
  std::vector<std::vector<std::size_t>> index(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      index[i][j] = unknowns.size();
      unknowns.emplace_back(i, j);
    }
  // w(a,b) as (unknown, sign)
  auto term = [&](std::size_t a, std::size_t b) {
    return a < b ? std::make_pair(index[a][b], 1) : std::make_pair(index[b][a], -1);
  };
  SkewForm zero = SkewForm::zero(n, f);
  std::vector<std::vector<FieldElement>> rows;
  Vector rhs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector jac = jacobi_residual(sc, zero, i, j, k);  // plain Jacobi sum
        for (std::size_t l = 0; l < n; ++l) {
          std::vector<FieldElement> row(unknowns.size(), FieldElement::zero(f));
          auto put = [&](std::size_t a, std::size_t b, std::size_t at) {
            if (at != l) return;
            auto [u, sgn] = term(a, b);
            row[u] += FieldElement::from_int(f, sgn);
          };
          put(i, j, k);
          put(j, k, i);
          put(k, i, j);
          rows.push_back(std::move(row));
          rhs.push_back(jac[l]);
        }
      }
  Matrix a(rows.size(), unknowns.size(), f);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < unknowns.size(); ++c) a(r, c) = rows[r][c];
  SolveResult sol;
  try {
    sol = solve(a, rhs);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InconsistentSystem) return std::nullopt;
    throw;
  }
  require(sol.unique(a), ErrorKind::Internal, "omega not uniquely determined");
  Matrix w(n, n, f);
  for (std::size_t u = 0; u < unknowns.size(); ++u) {
    auto [i, j] = unknowns[u];
    w(i, j) = sol.x[u];
    w(j, i) = -sol.x[u];
  }
  return SkewForm(std::move(w));
}

/// Invertible matrix acting on the basis (column j is the image of e_j).
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(Matrix g) : g_(std::move(g)) {
    require(g_.square(), ErrorKind::ShapeMismatch, "group element must be square");
    inv_ = inverse(g_);
  }

  static GroupElement identity(std::size_t n, const FieldPtr& f) { return GroupElement(Matrix::identity(n, f)); }

  const Matrix& matrix() const noexcept { return g_; }
  const Matrix& inverse_matrix() const noexcept { return inv_; }
  std::size_t dim() const noexcept { return g_.rows(); }
  GroupElement inverse_element() const { return GroupElement(inv_, g_); }

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    return GroupElement(a.g_ * b.g_, b.inv_ * a.inv_);
  }

  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.g_ == b.g_; }

 private:
  GroupElement(Matrix g, Matrix inv) : g_(std::move(g)), inv_(std::move(inv)) {}
  Matrix g_, inv_;
};

inline bool in_g_omega(const Matrix& g, const SkewForm& omega) {
  require(g.rows() == omega.dim(), ErrorKind::DimensionMismatch, "group element vs form dimension");
  return g.transpose() * omega.matrix() * g == omega.matrix();
}

namespace detail {

inline StructureConstants transport_brackets(const GroupElement& g, const StructureConstants& sc) {
  const std::size_t n = sc.dim();
  require(g.dim() == n, ErrorKind::DimensionMismatch,
          "group element of size " + std::to_string(g.dim()) + " on a " + std::to_string(n) + "-dimensional algebra");
  StructureConstants out(n, sc.field());
  const Matrix& gi = g.inverse_matrix();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.set(i, j, g.matrix().apply(sc.bracket(gi.column(i), gi.column(j))));
  return out;
}

}  // namespace detail

/// [x, y]_g = g [g^{-1} x, g^{-1} y]; omega is left unchanged.
inline OmegaAlgebra transform(const GroupElement& g, const OmegaAlgebra& alg) {
  OmegaAlgebra out(detail::transport_brackets(g, alg.sc), alg.omega);
#ifdef OMEGALIE_CHECK_INVARIANTS
  if (in_g_omega(g.matrix(), alg.omega) && validate(alg).ok())
    require(validate(out).ok(), ErrorKind::Internal, "G_omega image fails the omega-Jacobi identity");
#endif
  return out;
}

/// Transports bracket and form along g, so the result is isomorphic to alg
/// for every invertible g: omega'(u, v) = omega(g^{-1} u, g^{-1} v).
inline OmegaAlgebra change_basis(const GroupElement& g, const OmegaAlgebra& alg) {
  const Matrix& gi = g.inverse_matrix();
  return OmegaAlgebra(detail::transport_brackets(g, alg.sc), SkewForm(gi.transpose() * alg.omega.matrix() * gi));
}

enum class Stabilizer { G_omega, H_omega, N_omega };

/// G_omega: g^t Omega g = Omega (any n).  H_omega and N_omega are the block
/// shapes at n = 3 with omega = J_2: H = dia{S, 1} with det S = 1, and N the
/// matrices [[1,0,0],[s,1,0],[t,s,1]].
inline bool in_stabilizer(const GroupElement& g, Stabilizer which, const SkewForm& omega) {
  if (which == Stabilizer::G_omega) return in_g_omega(g.matrix(), omega);
  require(omega.dim() == 3 && g.dim() == 3, ErrorKind::WrongDimension, "H/N stabilizers are defined for n = 3");
  require(omega.matrix() == canonical_skew(3, 2, omega.matrix().field()), ErrorKind::WrongDimension,
          "H/N stabilizers assume omega = J_2");
  const Matrix& m = g.matrix();
  if (which == Stabilizer::H_omega)
    return m(0, 2).is_zero() && m(1, 2).is_zero() && m(2, 0).is_zero() && m(2, 1).is_zero() && m(2, 2).is_one() &&
           (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).is_one();
  return m(0, 0).is_one() && m(1, 1).is_one() && m(2, 2).is_one() && m(0, 1).is_zero() && m(0, 2).is_zero() &&
         m(1, 2).is_zero() && m(1, 0) == m(2, 1);
}

/// dim [L, L].
inline std::size_t derived_dimension(const StructureConstants& sc) {
  const std::size_t n = sc.dim();
  if (n < 2) return 0;
  Matrix rows(n * (n - 1) / 2, n, sc.field());
  std::size_t r = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++r) {
      Vector b = sc.bracket(i, j);
      for (std::size_t k = 0; k < n; ++k) rows(r, k) = b[k];
    }
  return rank(rows);
}

}  // namespace omegalie
