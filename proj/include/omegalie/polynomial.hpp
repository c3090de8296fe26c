#pragma once

// Sparse multivariate polynomials under grevlex.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "omegalie/fields.hpp"

namespace omegalie {

inline constexpr std::size_t kMaxVars = 32;

/// Exponent vector with cached total degree.
class Monomial {
 public:
  Monomial() { e_.fill(0); }

  static Monomial variable(std::size_t i, unsigned power = 1) {
    require(i < kMaxVars, ErrorKind::IndexOutOfRange, "variable index " + std::to_string(i));
    Monomial m;
    m.set(i, power);
    return m;
  }

  unsigned operator[](std::size_t i) const { return e_[i]; }
  unsigned degree() const noexcept { return deg_; }
  bool is_one() const noexcept { return deg_ == 0; }

  void set(std::size_t i, unsigned power) {
    require(power <= 255, ErrorKind::IndexOutOfRange, "exponent overflow");
    deg_ = deg_ - e_[i] + power;
    e_[i] = static_cast<std::uint8_t>(power);
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      unsigned s = unsigned(a.e_[i]) + b.e_[i];
      require(s <= 255, ErrorKind::IndexOutOfRange, "exponent overflow");
      m.e_[i] = static_cast<std::uint8_t>(s);
    }
    m.deg_ = a.deg_ + b.deg_;
    return m;
  }

  bool divides(const Monomial& b) const {
    if (deg_ > b.deg_) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e_[i] > b.e_[i]) return false;
    return true;
  }

  /// b / a, assuming a divides b.
  friend Monomial quotient(const Monomial& b, const Monomial& a) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.e_[i] = static_cast<std::uint8_t>(b.e_[i] - a.e_[i]);
    m.deg_ = b.deg_ - a.deg_;
    return m;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    unsigned d = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      m.e_[i] = std::max(a.e_[i], b.e_[i]);
      d += m.e_[i];
    }
    m.deg_ = d;
    return m;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (a.e_[i] && b.e_[i]) return false;
    return true;
  }

  /// Bit i set when variable i occurs.
  std::uint32_t support() const {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e_[i]) s |= std::uint32_t{1} << i;
    return s;
  }

  /// Moves every exponent `by` slots up (room for new leading variables).
  Monomial shifted(std::size_t by) const {
    Monomial m;
    for (std::size_t i = 0; i + by < kMaxVars; ++i) m.e_[i + by] = e_[i];
    for (std::size_t i = kMaxVars - by; i < kMaxVars; ++i)
      require(e_[i] == 0, ErrorKind::IndexOutOfRange, "too many variables");
    m.deg_ = deg_;
    return m;
  }

  Monomial unshifted(std::size_t by) const {
    Monomial m;
    for (std::size_t i = by; i < kMaxVars; ++i) m.e_[i - by] = e_[i];
    m.deg_ = deg_;
    for (std::size_t i = 0; i < by; ++i) m.deg_ -= e_[i];
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.deg_ == b.deg_ && a.e_ == b.e_; }

  /// grevlex: degree first, then the last differing variable decides and the
  /// smaller exponent there is the larger monomial.
  friend int grevlex_cmp(const Monomial& a, const Monomial& b) {
    if (a.deg_ != b.deg_) return a.deg_ > b.deg_ ? 1 : -1;
    for (std::size_t i = kMaxVars; i-- > 0;)
      if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i] ? 1 : -1;
    return 0;
  }

 private:
  std::array<std::uint8_t, kMaxVars> e_;
  unsigned deg_ = 0;
};

/// Grevlex on plain exponent vectors: 1 if a > b, -1 if a < b, 0 if equal.
inline int grevlex_cmp(std::span<const unsigned> a, std::span<const unsigned> b) {
  require(a.size() == b.size(), ErrorKind::LengthMismatch,
          "exponent vectors of length " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  unsigned da = 0, db = 0;
  for (unsigned v : a) da += v;
  for (unsigned v : b) db += v;
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

/// Polynomial ring K[v_1, ..., v_n] with grevlex and v_1 > ... > v_n.  With
/// elim = k > 0 the order first compares the total degree in v_1..v_k, which
/// makes it an elimination order for those variables.
class PolyRing {
 public:
  PolyRing(std::vector<std::string> vars, FieldPtr field, std::size_t elim = 0)
      : vars_(std::move(vars)), field_(std::move(field)), elim_(elim) {
    require(vars_.size() <= kMaxVars, ErrorKind::IndexOutOfRange, "at most 32 variables");
    require(elim_ <= vars_.size(), ErrorKind::IndexOutOfRange, "elimination block larger than the ring");
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      require(!vars_[i].empty(), ErrorKind::ParseError, "empty variable name");
      for (std::size_t j = 0; j < i; ++j)
        require(vars_[i] != vars_[j], ErrorKind::ParseError, "duplicate variable " + vars_[i]);
    }
  }

  std::size_t size() const noexcept { return vars_.size(); }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  const std::string& var(std::size_t i) const { return vars_.at(i); }
  const FieldPtr& field() const noexcept { return field_; }
  std::size_t elimination_block() const noexcept { return elim_; }

  /// Term order of this ring: 1 if a > b, -1 if a < b, 0 if equal.
  int cmp(const Monomial& a, const Monomial& b) const {
    if (elim_) {
      unsigned da = 0, db = 0;
      for (std::size_t i = 0; i < elim_; ++i) {
        da += a[i];
        db += b[i];
      }
      if (da != db) return da > db ? 1 : -1;
    }
    return grevlex_cmp(a, b);
  }

  std::size_t index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return i;
    fail(ErrorKind::ParseError, "unknown variable '" + std::string(name) + "'");
  }

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.vars_ == b.vars_ && a.elim_ == b.elim_ && same_field(a.field_, b.field_);
  }

 private:
  std::vector<std::string> vars_;
  FieldPtr field_;
  std::size_t elim_ = 0;
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline RingPtr make_ring(std::vector<std::string> vars, FieldPtr field, std::size_t elim = 0) {
  return std::make_shared<const PolyRing>(std::move(vars), std::move(field), elim);
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && *a == *b); }

struct Term {
  Monomial m;
  FieldElement c;
};

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(const RingPtr& ring, const FieldElement& c) {
    Polynomial p(ring);
    if (!c.is_zero()) p.terms_.push_back({Monomial(), c});
    return p;
  }

  static Polynomial variable(const RingPtr& ring, std::size_t i) {
    require(i < ring->size(), ErrorKind::IndexOutOfRange, "variable index " + std::to_string(i));
    Polynomial p(ring);
    p.terms_.push_back({Monomial::variable(i), FieldElement::one(ring->field())});
    return p;
  }

  static Polynomial variable(const RingPtr& ring, std::string_view name) {
    return variable(ring, ring->index_of(name));
  }

  /// Builds from arbitrary terms; sorts and merges duplicates.
  static Polynomial from_terms(const RingPtr& ring, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return ring->cmp(a.m, b.m) > 0; });
    Polynomial p(ring);
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().m == t.m)
        p.terms_.back().c += t.c;
      else
        p.terms_.push_back(std::move(t));
      if (p.terms_.back().c.is_zero()) p.terms_.pop_back();
    }
    return p;
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }

  const Monomial& lm() const {
    require(!is_zero(), ErrorKind::ZeroPolynomial, "leading monomial of zero");
    return terms_.front().m;
  }
  const FieldElement& lc() const {
    require(!is_zero(), ErrorKind::ZeroPolynomial, "leading coefficient of zero");
    return terms_.front().c;
  }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.m.degree());
    return d;
  }

  Polynomial operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.c = -t.c;
    return p;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, true); }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

  /// c * m * this.
  Polynomial mul_term(const FieldElement& c, const Monomial& m) const {
    Polynomial p(ring_);
    if (c.is_zero()) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.m * m, t.c * c});
    return p;
  }

  Polynomial scaled(const FieldElement& c) const { return mul_term(c, Monomial()); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_ring(a, b);
    std::vector<Term> all;
    all.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) all.push_back({s.m * t.m, s.c * t.c});
    return from_terms(a.ring_, std::move(all));
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial monic() const {
    if (is_zero() || lc().is_one()) return *this;
    return scaled(lc().inverse());
  }

  FieldElement evaluate(const std::vector<FieldElement>& point) const {
    require(point.size() == ring_->size(), ErrorKind::LengthMismatch, "evaluation point length");
    FieldElement sum = FieldElement::zero(ring_->field());
    for (const auto& t : terms_) {
      FieldElement v = t.c;
      for (std::size_t i = 0; i < point.size(); ++i)
        if (t.m[i]) v *= point[i].pow(t.m[i]);
      sum += v;
    }
    return sum;
  }

  /// Same polynomial in `target`, whose variable list is `shift` new names
  /// followed by this ring's names.
  Polynomial lifted(const RingPtr& target, std::size_t shift) const {
    Polynomial p(target);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.m.shifted(shift), t.c});
    return p;
  }

  /// Inverse of lifted for polynomials free of the first `shift` variables.
  Polynomial lowered(const RingPtr& target, std::size_t shift) const {
    Polynomial p(target);
    for (const auto& t : terms_) {
      for (std::size_t i = 0; i < shift; ++i)
        require(t.m[i] == 0, ErrorKind::Internal, "polynomial still involves an eliminated variable");
      p.terms_.push_back({t.m.unshifted(shift), t.c});
    }
    return p;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].m == b.terms_[i].m) || !(a.terms_[i].c == b.terms_[i].c)) return false;
    return true;
  }

  std::string to_string() const;

 private:
  static void check_ring(const Polynomial& a, const Polynomial& b) {
    require(same_ring(a.ring_, b.ring_), ErrorKind::RingMismatch, "polynomials from different rings");
  }

  static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract) {
    check_ring(a, b);
    Polynomial p(a.ring_);
    p.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      int c = i == a.size() ? -1 : j == b.size() ? 1 : a.ring_->cmp(a.terms_[i].m, b.terms_[j].m);
      if (c > 0) {
        p.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        const Term& t = b.terms_[j++];
        p.terms_.push_back({t.m, subtract ? -t.c : t.c});
      } else {
        FieldElement s = subtract ? a.terms_[i].c - b.terms_[j].c : a.terms_[i].c + b.terms_[j].c;
        if (!s.is_zero()) p.terms_.push_back({a.terms_[i].m, std::move(s)});
        ++i, ++j;
      }
    }
    return p;
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

namespace detail {

inline std::string monomial_text(const PolyRing& ring, const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += "*";
    s += ring.var(i);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s;
}

inline bool is_var_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace detail

/// Canonical text: terms in grevlex order joined by " + " / " - "; unit
/// coefficients omitted; over Q a negative coefficient prints as " - ".
inline std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  const bool signed_field = ring_->field()->kind() == Field::Kind::Rationals;
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const Term& t = terms_[k];
    FieldElement c = t.c;
    bool negative = signed_field && c.re() < 0;
    if (negative) c = -c;
    if (k == 0)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string mono = detail::monomial_text(*ring_, t.m);
    if (mono.empty())
      out += c.to_string();
    else if (c.is_one())
      out += mono;
    else
      out += c.to_string() + "*" + mono;
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

/// Parses sums of products of coefficients and powers of ring variables,
/// e.g. "x2*z1 + 3/2*y1^2 - 1" or "[1, 2]*t".  Accepts the canonical form
/// and the looser hand-written variants.
inline Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  std::string s = detail::trim(text);
  require(!s.empty(), ErrorKind::ParseError, "empty polynomial");
  const FieldPtr& f = ring->field();
  std::vector<Term> terms;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  bool first = true;
  while (true) {
    skip_ws();
    if (pos >= s.size()) break;
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') {
      neg = s[pos] == '-';
      ++pos;
      skip_ws();
    } else {
      require(first, ErrorKind::ParseError, "expected + or - at offset " + std::to_string(pos) + " in '" + s + "'");
    }
    first = false;
    FieldElement coeff = FieldElement::one(f);
    Monomial mono;
    bool any = false;
    while (true) {
      skip_ws();
      require(pos < s.size(), ErrorKind::ParseError, "dangling operator in '" + s + "'");
      if (s[pos] == '[') {
        std::size_t close = s.find(']', pos);
        require(close != std::string::npos, ErrorKind::ParseError, "unterminated '[' in '" + s + "'");
        coeff *= parse_element(std::string_view(s).substr(pos, close - pos + 1), f);
        pos = close + 1;
      } else if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
        std::size_t b = pos;
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
        coeff *= parse_element(std::string_view(s).substr(b, pos - b), f);
      } else if (detail::is_var_start(s[pos])) {
        std::size_t b = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
        std::size_t v = ring->index_of(std::string_view(s).substr(b, pos - b));
        unsigned power = 1;
        skip_ws();
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          skip_ws();
          std::size_t e = pos;
          while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
          require(pos > e && pos - e <= 3, ErrorKind::ParseError, "bad exponent in '" + s + "'");
          power = static_cast<unsigned>(std::stoul(s.substr(e, pos - e)));
        }
        mono = mono * Monomial::variable(v, power);
      } else {
        fail(ErrorKind::ParseError, "unexpected '" + std::string(1, s[pos]) + "' in '" + s + "'");
      }
      any = true;
      skip_ws();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    require(any, ErrorKind::ParseError, "empty term in '" + s + "'");
    terms.push_back({mono, neg ? -coeff : coeff});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace omegalie
