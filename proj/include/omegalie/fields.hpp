#pragma once

// Exact scalars: the rationals, prime fields F_p (p odd), and a single
// quadratic extension step over either.  Elements carry a shared handle to
// their field descriptor; arithmetic between different descriptors is an
// error, never an implicit coercion.

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "omegalie/errors.hpp"

namespace omegalie {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

namespace detail {

inline std::int64_t mod_floor(const Integer& v, std::int64_t p) {
  Integer r = v % p;
  if (r < 0) r += p;
  return static_cast<std::int64_t>(r);
}

inline std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  // a is a nonzero residue; p prime.
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  return t < 0 ? t + p : t;
}

inline bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline std::int64_t as_residue(const Rational& v) {
  return static_cast<std::int64_t>(boost::multiprecision::numerator(v));
}

// Reduce an arbitrary rational into [0, p); the denominator must be a unit.
inline Rational reduce_mod(const Rational& v, std::int64_t p) {
  std::int64_t num = mod_floor(boost::multiprecision::numerator(v), p);
  std::int64_t den = mod_floor(boost::multiprecision::denominator(v), p);
  require(den != 0, ErrorKind::DivisionByZero, "denominator vanishes mod " + std::to_string(p));
  if (den == 1) return Rational(num);
  return Rational(static_cast<std::int64_t>(static_cast<__int128>(num) * mod_inverse(den, p) % p));
}

// Ground-field (depth 0) scalar arithmetic; p == 0 means the rationals.
inline Rational g_add(std::int64_t p, const Rational& a, const Rational& b) {
  if (p == 0) return a + b;
  std::int64_t s = as_residue(a) + as_residue(b);
  return Rational(s >= p ? s - p : s);
}

inline Rational g_sub(std::int64_t p, const Rational& a, const Rational& b) {
  if (p == 0) return a - b;
  std::int64_t s = as_residue(a) - as_residue(b);
  return Rational(s < 0 ? s + p : s);
}

inline Rational g_neg(std::int64_t p, const Rational& a) {
  if (p == 0) return -a;
  std::int64_t s = as_residue(a);
  return Rational(s == 0 ? 0 : p - s);
}

inline Rational g_mul(std::int64_t p, const Rational& a, const Rational& b) {
  if (p == 0) return a * b;
  auto prod = static_cast<__int128>(as_residue(a)) * as_residue(b);
  return Rational(static_cast<std::int64_t>(prod % p));
}

inline Rational g_inv(std::int64_t p, const Rational& a) {
  require(a != 0, ErrorKind::DivisionByZero, "inverse of zero");
  if (p == 0) return 1 / a;
  return Rational(mod_inverse(as_residue(a), p));
}

inline std::string rational_text(const Rational& v) {
  const auto& den = boost::multiprecision::denominator(v);
  if (den == 1) return boost::multiprecision::numerator(v).str();
  return boost::multiprecision::numerator(v).str() + "/" + den.str();
}

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

inline Integer parse_integer(std::string_view text) {
  std::string s = trim(text);
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  require(i < s.size(), ErrorKind::ParseError, "empty integer '" + s + "'");
  for (std::size_t k = i; k < s.size(); ++k)
    require(std::isdigit(static_cast<unsigned char>(s[k])) != 0, ErrorKind::ParseError,
            "bad integer '" + s + "'");
  return Integer(s[0] == '+' ? s.substr(1) : s);
}

inline Rational parse_rational(std::string_view text) {
  std::string s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(s));
  Integer num = parse_integer(std::string_view(s).substr(0, slash));
  Integer den = parse_integer(std::string_view(s).substr(slash + 1));
  require(den != 0, ErrorKind::DivisionByZero, "zero denominator in '" + s + "'");
  return Rational(num) / Rational(den);
}

}  // namespace detail

/// Field descriptor.  Depth-0 fields are Q and F_p; a QuadExt adjoins a root
/// theta of theta^2 + c1*theta + c0 to a depth-0 base.
class Field {
 public:
  enum class Kind { Rationals, Prime, QuadExt };

  static FieldPtr rationals() {
    static const FieldPtr q(new Field(Kind::Rationals, 0, nullptr, 0, 0));
    return q;
  }

  static FieldPtr prime(std::int64_t p) {
    require(p > 2 && p < (std::int64_t{1} << 31) && detail::is_prime(p), ErrorKind::InvalidField,
            "F_p needs an odd prime p < 2^31, got " + std::to_string(p));
    return FieldPtr(new Field(Kind::Prime, p, nullptr, 0, 0));
  }

  Kind kind() const noexcept { return kind_; }
  bool is_extension() const noexcept { return kind_ == Kind::QuadExt; }
  /// 0 for the rationals and their extensions.
  std::int64_t characteristic() const noexcept { return p_; }
  const FieldPtr& base() const noexcept { return base_; }
  const Rational& c0() const noexcept { return c0_; }
  const Rational& c1() const noexcept { return c1_; }

  std::string to_string() const {
    switch (kind_) {
      case Kind::Rationals: return "Q";
      case Kind::Prime: return "Fp:" + std::to_string(p_);
      case Kind::QuadExt:
        return "QuadExt:" + base_->to_string() + ":" + detail::rational_text(c0_) + "," +
               detail::rational_text(c1_);
    }
    return "?";
  }

  friend bool operator==(const Field& a, const Field& b) {
    if (&a == &b) return true;
    if (a.kind_ != b.kind_ || a.p_ != b.p_) return false;
    if (a.kind_ != Kind::QuadExt) return true;
    return *a.base_ == *b.base_ && a.c0_ == b.c0_ && a.c1_ == b.c1_;
  }

 private:
  friend FieldPtr make_quadratic_extension_unchecked(const FieldPtr&, Rational, Rational);

  Field(Kind k, std::int64_t p, FieldPtr base, Rational c0, Rational c1)
      : kind_(k), p_(p), base_(std::move(base)), c0_(std::move(c0)), c1_(std::move(c1)) {}

  Kind kind_;
  std::int64_t p_;
  FieldPtr base_;
  Rational c0_, c1_;
};

inline FieldPtr make_quadratic_extension_unchecked(const FieldPtr& base, Rational c0, Rational c1) {
  return FieldPtr(new Field(Field::Kind::QuadExt, base->characteristic(), base, std::move(c0),
                            std::move(c1)));
}

inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

/// Value re + im*theta; im is always zero over a depth-0 field.  Fractions
/// are kept in lowest terms by the Rational type, residues in [0, p).
class FieldElement {
 public:
  FieldElement() = default;

  FieldElement(FieldPtr f, const Rational& re, const Rational& im = 0) : field_(std::move(f)) {
    require(field_ != nullptr, ErrorKind::InvalidField, "element without a field");
    const std::int64_t p = field_->characteristic();
    require(field_->is_extension() || im == 0, ErrorKind::InvalidField,
            "theta component over a non-extension field");
    re_ = p ? detail::reduce_mod(re, p) : re;
    im_ = p ? detail::reduce_mod(im, p) : im;
  }

  static FieldElement zero(const FieldPtr& f) { return FieldElement(f, 0); }
  static FieldElement one(const FieldPtr& f) { return FieldElement(f, 1); }
  static FieldElement from_int(const FieldPtr& f, long long v) { return FieldElement(f, Rational(v)); }

  const FieldPtr& field() const noexcept { return field_; }
  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return re_ == 0 && im_ == 0; }
  bool is_one() const noexcept { return re_ == 1 && im_ == 0; }
  /// True when the value lies in the ground field (theta component zero).
  bool in_base() const noexcept { return im_ == 0; }

  FieldElement operator-() const {
    FieldElement r = *this;
    const std::int64_t p = field_->characteristic();
    r.re_ = detail::g_neg(p, re_);
    r.im_ = detail::g_neg(p, im_);
    return r;
  }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    const std::int64_t p = a.field_->characteristic();
    return raw(a.field_, detail::g_add(p, a.re_, b.re_), detail::g_add(p, a.im_, b.im_));
  }

  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    const std::int64_t p = a.field_->characteristic();
    return raw(a.field_, detail::g_sub(p, a.re_, b.re_), detail::g_sub(p, a.im_, b.im_));
  }

  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    const Field& f = *a.field_;
    const std::int64_t p = f.characteristic();
    if (!f.is_extension()) return raw(a.field_, detail::g_mul(p, a.re_, b.re_), 0);
    // theta^2 = -c1*theta - c0
    Rational ac = detail::g_mul(p, a.re_, b.re_);
    Rational bd = detail::g_mul(p, a.im_, b.im_);
    Rational cross = detail::g_add(p, detail::g_mul(p, a.re_, b.im_), detail::g_mul(p, a.im_, b.re_));
    Rational re = detail::g_sub(p, ac, detail::g_mul(p, bd, f.c0()));
    Rational im = detail::g_sub(p, cross, detail::g_mul(p, bd, f.c1()));
    return raw(a.field_, std::move(re), std::move(im));
  }

  FieldElement inverse() const {
    require(field_ != nullptr, ErrorKind::InvalidField, "element without a field");
    require(!is_zero(), ErrorKind::DivisionByZero, "division by zero in " + field_->to_string());
    const Field& f = *field_;
    const std::int64_t p = f.characteristic();
    if (!f.is_extension()) return raw(field_, detail::g_inv(p, re_), 0);
    // conj(a + b theta) = (a - b c1) - b theta; the product is the norm.
    Rational cre = detail::g_sub(p, re_, detail::g_mul(p, im_, f.c1()));
    Rational cim = detail::g_neg(p, im_);
    FieldElement conj = raw(field_, cre, cim);
    FieldElement norm = *this * conj;
    require(norm.im_ == 0 && norm.re_ != 0, ErrorKind::Internal, "norm not in base field");
    Rational ninv = detail::g_inv(p, norm.re_);
    return raw(field_, detail::g_mul(p, cre, ninv), detail::g_mul(p, cim, ninv));
  }

  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    check_same(a, b);
    return a * b.inverse();
  }

  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }
  FieldElement& operator/=(const FieldElement& o) { return *this = *this / o; }

  FieldElement pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElement result = one(field_), base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.re_ == b.re_ && a.im_ == b.im_ && same_field(a.field_, b.field_);
  }

  /// Canonical text: integers or a/b; residues in [0, p); "[a, b]" over a QuadExt.
  std::string to_string() const {
    if (field_ && field_->is_extension())
      return "[" + detail::rational_text(re_) + ", " + detail::rational_text(im_) + "]";
    return detail::rational_text(re_);
  }

 private:
  static FieldElement raw(const FieldPtr& f, Rational re, Rational im) {
    FieldElement r;
    r.field_ = f;
    r.re_ = std::move(re);
    r.im_ = std::move(im);
    return r;
  }

  static void check_same(const FieldElement& a, const FieldElement& b) {
    if (!same_field(a.field_, b.field_))
      fail(ErrorKind::DescriptorMismatch,
           (a.field_ ? a.field_->to_string() : std::string("<none>")) + " vs " +
               (b.field_ ? b.field_->to_string() : std::string("<none>")));
  }

  FieldPtr field_;
  Rational re_ = 0;
  Rational im_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

/// Monic quadratic t^2 + c1 t + c0 over a field.
struct QuadraticMinpoly {
  FieldElement c0;
  FieldElement c1;

  FieldElement discriminant() const {
    const auto& f = c0.field();
    return c1 * c1 - FieldElement::from_int(f, 4) * c0;
  }

  std::string to_string() const {
    return "t^2 + (" + c1.to_string() + ")*t + (" + c0.to_string() + ") over " +
           c0.field()->to_string();
  }
};

/// Raised when a root or square root lives outside the current field and the
/// caller did not permit (or the depth budget does not allow) an extension.
class ExtensionRequired : public Error {
 public:
  explicit ExtensionRequired(QuadraticMinpoly mp, const std::string& context = "")
      : Error(ErrorKind::ExtensionRequired,
              (context.empty() ? std::string() : context + ": ") + "needs a root of " + mp.to_string()),
        minpoly_(std::move(mp)) {}

  const QuadraticMinpoly& minpoly() const noexcept { return minpoly_; }

 private:
  QuadraticMinpoly minpoly_;
};

/// Outcome of a square-root request: either a root, or the minimal polynomial
/// t^2 - s of the missing one.
struct SqrtReport {
  std::optional<FieldElement> root;
  std::optional<QuadraticMinpoly> minpoly;
  bool found() const noexcept { return root.has_value(); }
};

namespace detail {

inline std::optional<Rational> ground_sqrt(std::int64_t p, const Rational& s) {
  if (p == 0) {
    if (s < 0) return std::nullopt;
    Integer n = boost::multiprecision::numerator(s), d = boost::multiprecision::denominator(s);
    Integer rn = boost::multiprecision::sqrt(n), rd = boost::multiprecision::sqrt(d);
    if (rn * rn != n || rd * rd != d) return std::nullopt;
    return Rational(rn) / Rational(rd);
  }
  std::int64_t v = as_residue(s);
  if (v == 0) return Rational(0);
  // Euler's criterion, then the smallest residue in [0, p/2].
  std::int64_t e = (p - 1) / 2, acc = 1, b = v;
  while (e > 0) {
    if (e & 1) acc = static_cast<std::int64_t>(static_cast<__int128>(acc) * b % p);
    b = static_cast<std::int64_t>(static_cast<__int128>(b) * b % p);
    e >>= 1;
  }
  if (acc != 1) return std::nullopt;
  for (std::int64_t r = 1; r <= p / 2; ++r)
    if (static_cast<__int128>(r) * r % p == v) return Rational(r);
  return std::nullopt;
}

}  // namespace detail

/// Square root of a nonzero s, or NeedsExtension(t^2 - s).  Over F_p the
/// returned root is the smaller of the two residues.  Over a QuadExt the
/// search covers ground-field inputs (always) and, for small p, everything.
inline SqrtReport sqrt_or_extend(const FieldElement& s) {
  require(s.field() != nullptr, ErrorKind::InvalidField, "element without a field");
  require(!s.is_zero(), ErrorKind::ZeroInput, "square root of zero requested");
  const FieldPtr& f = s.field();
  const std::int64_t p = f->characteristic();
  SqrtReport rep;
  if (!f->is_extension()) {
    if (auto r = detail::ground_sqrt(p, s.re())) rep.root = FieldElement(f, *r);
  } else if (s.in_base()) {
    if (auto r = detail::ground_sqrt(p, s.re())) {
      rep.root = FieldElement(f, *r);
    } else {
      // s = (s/D) * D with D the minpoly discriminant, sqrt(D) = 2 theta + c1.
      Rational disc = detail::g_sub(p, detail::g_mul(p, f->c1(), f->c1()),
                                    detail::g_mul(p, Rational(4), f->c0()));
      Rational ratio = p ? detail::g_mul(p, s.re(), detail::g_inv(p, disc)) : s.re() / disc;
      if (auto r = detail::ground_sqrt(p, ratio))
        rep.root = FieldElement(f, detail::g_mul(p, *r, f->c1()), detail::g_mul(p, *r, Rational(2)));
    }
  } else if (p != 0 && p <= 2000) {
    for (std::int64_t a = 0; a < p && !rep.root; ++a)
      for (std::int64_t b = 1; b < p; ++b) {
        FieldElement c(f, Rational(a), Rational(b));
        if (c * c == s) {
          rep.root = c;
          break;
        }
      }
  }
  if (!rep.root) rep.minpoly = QuadraticMinpoly{-s, FieldElement::zero(f)};
  return rep;
}

inline bool is_square(const FieldElement& s) { return s.is_zero() || sqrt_or_extend(s).found(); }

/// Builds base(theta) with theta^2 + c1 theta + c0 = 0.  Refuses to stack a
/// second extension and refuses reducible minimal polynomials.
inline FieldPtr make_quadratic_extension(const QuadraticMinpoly& mp) {
  const FieldPtr& base = mp.c0.field();
  require(base && same_field(base, mp.c1.field()), ErrorKind::DescriptorMismatch,
          "minpoly coefficients over different fields");
  if (base->is_extension()) throw ExtensionRequired(mp, "extension depth budget (1) exhausted");
  FieldElement disc = mp.discriminant();
  require(!disc.is_zero() && !sqrt_or_extend(disc).found(), ErrorKind::InvalidField,
          "minpoly " + mp.to_string() + " is reducible");
  return make_quadratic_extension_unchecked(base, mp.c0.re(), mp.c1.re());
}

/// theta of an extension field.
inline FieldElement generator(const FieldPtr& ext) {
  require(ext && ext->is_extension(), ErrorKind::InvalidField, "generator of a non-extension field");
  return FieldElement(ext, 0, 1);
}

/// Image of x under the inclusion of a ground field into `target`
/// (identity when target is x's own field).
inline FieldElement embed(const FieldElement& x, const FieldPtr& target) {
  if (same_field(x.field(), target)) return x;
  require(target && target->is_extension() && same_field(target->base(), x.field()),
          ErrorKind::DescriptorMismatch,
          "cannot embed " + x.field()->to_string() + " into " + (target ? target->to_string() : "<none>"));
  return FieldElement(target, x.re(), 0);
}

/// Roots of t^2 + t + delta (trace -1, determinant delta).
struct RootReport {
  enum class Kind { TwoRootsInBase, DoubleRoot, NeedsExtension };
  Kind kind = Kind::TwoRootsInBase;
  /// Two entries (b, c) with b + c = -1, bc = delta; for DoubleRoot both are
  /// -1/2; for NeedsExtension filled only when the extension was built.
  std::vector<FieldElement> roots;
  std::optional<QuadraticMinpoly> minpoly;
  FieldPtr extension;
};

inline RootReport quadratic_roots(const FieldElement& delta, bool construct_extension = false) {
  const FieldPtr& f = delta.field();
  require(f != nullptr, ErrorKind::InvalidField, "element without a field");
  const FieldElement one = FieldElement::one(f);
  const FieldElement half = FieldElement::from_int(f, 2).inverse();
  const FieldElement disc = one - FieldElement::from_int(f, 4) * delta;
  RootReport rep;
  if (disc.is_zero()) {
    rep.kind = RootReport::Kind::DoubleRoot;
    rep.roots = {-half, -half};
    return rep;
  }
  SqrtReport s = sqrt_or_extend(disc);
  if (s.found()) {
    rep.kind = RootReport::Kind::TwoRootsInBase;
    rep.roots = {(-one + *s.root) * half, (-one - *s.root) * half};
    return rep;
  }
  rep.kind = RootReport::Kind::NeedsExtension;
  rep.minpoly = QuadraticMinpoly{delta, one};
  if (construct_extension) {
    rep.extension = make_quadratic_extension(*rep.minpoly);
    FieldElement theta = generator(rep.extension);
    rep.roots = {theta, -FieldElement::one(rep.extension) - theta};
  }
  return rep;
}

/// Parses "Q", "Fp:<p>", "QuadExt:<base>:<c0>,<c1>".
inline FieldPtr parse_field(std::string_view text) {
  std::string s = detail::trim(text);
  if (s == "Q") return Field::rationals();
  if (s.rfind("Fp:", 0) == 0) {
    Integer p = detail::parse_integer(std::string_view(s).substr(3));
    require(p > 2 && p < (Integer(1) << 31), ErrorKind::InvalidField, "bad prime in '" + s + "'");
    return Field::prime(static_cast<std::int64_t>(p));
  }
  if (s.rfind("QuadExt:", 0) == 0) {
    std::string rest = s.substr(8);
    auto colon = rest.rfind(':');
    require(colon != std::string::npos, ErrorKind::ParseError, "bad extension descriptor '" + s + "'");
    FieldPtr base = parse_field(rest.substr(0, colon));
    std::string coeffs = rest.substr(colon + 1);
    auto comma = coeffs.find(',');
    require(comma != std::string::npos, ErrorKind::ParseError, "bad extension descriptor '" + s + "'");
    FieldElement c0(base, detail::parse_rational(coeffs.substr(0, comma)));
    FieldElement c1(base, detail::parse_rational(coeffs.substr(comma + 1)));
    return make_quadratic_extension(QuadraticMinpoly{c0, c1});
  }
  fail(ErrorKind::ParseError, "unknown field descriptor '" + s + "'");
}

/// Parses an integer, a fraction a/b, or "[a, b]" (extension fields only).
inline FieldElement parse_element(std::string_view text, const FieldPtr& f) {
  std::string s = detail::trim(text);
  require(!s.empty(), ErrorKind::ParseError, "empty field element");
  if (s.front() == '[') {
    require(s.back() == ']', ErrorKind::ParseError, "unterminated pair '" + s + "'");
    require(f->is_extension(), ErrorKind::ParseError, "pair element over " + f->to_string());
    std::string inner = s.substr(1, s.size() - 2);
    auto comma = inner.find(',');
    require(comma != std::string::npos, ErrorKind::ParseError, "bad pair '" + s + "'");
    return FieldElement(f, detail::parse_rational(inner.substr(0, comma)),
                        detail::parse_rational(inner.substr(comma + 1)));
  }
  return FieldElement(f, detail::parse_rational(s));
}

}  // namespace omegalie
