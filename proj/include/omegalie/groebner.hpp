#pragma once

// Buchberger's algorithm and the ideal operations built on it.

#include <algorithm>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "omegalie/polynomial.hpp"

namespace omegalie {

/// spol(f, g) = LC(g) (t/LM f) f - LC(f) (t/LM g) g,  t = lcm(LM f, LM g).
inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  require(!f.is_zero() && !g.is_zero(), ErrorKind::ZeroPolynomial, "S-polynomial of zero");
  require(same_ring(f.ring(), g.ring()), ErrorKind::RingMismatch, "S-polynomial across rings");
  Monomial t = lcm(f.lm(), g.lm());
  return f.mul_term(g.lc(), quotient(t, f.lm())) - g.mul_term(f.lc(), quotient(t, g.lm()));
}

namespace detail {

// work holds terms in ascending order; subtracts c*m*g (g descending).
inline void sub_multiple_asc(std::vector<Term>& work, const FieldElement& c, const Monomial& m,
                             const Polynomial& g) {
  std::vector<Term> out;
  out.reserve(work.size() + g.size());
  const auto& gt = g.terms();
  std::size_t i = 0;
  std::size_t j = gt.size();
  while (i < work.size() || j > 0) {
    int cmp;
    Monomial gm;
    if (j > 0) gm = gt[j - 1].m * m;
    if (i == work.size())
      cmp = -1;
    else if (j == 0)
      cmp = 1;
    else
      cmp = g.ring()->cmp(gm, work[i].m);
    if (cmp > 0) {
      out.push_back(std::move(work[i++]));
    } else if (cmp < 0) {
      out.push_back({gm, -(gt[j - 1].c * c)});
      --j;
    } else {
      FieldElement v = work[i].c - gt[j - 1].c * c;
      if (!v.is_zero()) out.push_back({gm, std::move(v)});
      ++i;
      --j;
    }
  }
  work = std::move(out);
}

inline const Polynomial* find_reducer(const Monomial& m, const std::vector<Polynomial>& basis) {
  for (const auto& g : basis)
    if (g.lm().divides(m)) return &g;
  return nullptr;
}

}  // namespace detail

/// Remainder of multivariate division of f by `basis` (full reduction: no
/// term of the result is divisible by a leading monomial of the basis).
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
  for (const auto& g : basis) {
    require(!g.is_zero(), ErrorKind::ZeroPolynomial, "zero polynomial in a division basis");
    require(same_ring(g.ring(), f.ring()), ErrorKind::RingMismatch, "division across rings");
  }
  std::vector<Term> work(f.terms().rbegin(), f.terms().rend());
  std::vector<Term> rem;
  while (!work.empty()) {
    Term& lead = work.back();
    if (const Polynomial* g = detail::find_reducer(lead.m, basis)) {
      FieldElement c = lead.c / g->lc();
      Monomial m = quotient(lead.m, g->lm());
      detail::sub_multiple_asc(work, c, m, *g);
    } else {
      rem.push_back(std::move(lead));
      work.pop_back();
    }
  }
  return Polynomial::from_terms(f.ring(), std::move(rem));
}

/// Exact quotient f / d; throws InexactDivision when d does not divide f.
inline Polynomial divide_exact(const Polynomial& f, const Polynomial& d) {
  require(!d.is_zero(), ErrorKind::DivisionByZero, "polynomial division by zero");
  require(same_ring(f.ring(), d.ring()), ErrorKind::RingMismatch, "division across rings");
  std::vector<Term> work(f.terms().rbegin(), f.terms().rend());
  std::vector<Term> q;
  while (!work.empty()) {
    const Term& lead = work.back();
    require(d.lm().divides(lead.m), ErrorKind::InexactDivision,
            "(" + f.to_string() + ") is not divisible by (" + d.to_string() + ")");
    FieldElement c = lead.c / d.lc();
    Monomial m = quotient(lead.m, d.lm());
    q.push_back({m, c});
    detail::sub_multiple_asc(work, c, m, d);
  }
  return Polynomial::from_terms(f.ring(), std::move(q));
}

inline bool is_groebner_basis(const std::vector<Polynomial>& basis) {
  std::vector<Polynomial> g;
  for (const auto& p : basis)
    if (!p.is_zero()) g.push_back(p);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (coprime(g[i].lm(), g[j].lm())) continue;
      if (!normal_form(s_polynomial(g[i], g[j]), g).is_zero()) return false;
    }
  return true;
}

/// Buchberger with the normal selection strategy (smallest lcm first), the
/// product criterion and the chain criterion.  Output elements are monic;
/// the inputs come first, in order, followed by the new elements.
inline std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> g;
  for (const auto& p : gens)
    if (!p.is_zero()) g.push_back(p.monic());
  if (g.empty()) return g;
  for (const auto& p : g)
    if (p.is_constant()) return {p};

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> open;
  auto add_pairs = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      pending.push_back({i, k, lcm(g[i].lm(), g[k].lm())});
      open.insert({i, k});
    }
  };
  for (std::size_t k = 0; k < g.size(); ++k) add_pairs(k);

  auto is_open = [&](std::size_t a, std::size_t b) { return open.count({std::min(a, b), std::max(a, b)}) > 0; };

  const RingPtr ring = g.front().ring();
  while (!pending.empty()) {
    auto best = std::min_element(pending.begin(), pending.end(), [&](const Pair& a, const Pair& b) {
      int c = ring->cmp(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    Pair pr = *best;
    pending.erase(best);
    open.erase({pr.i, pr.j});

    if (coprime(g[pr.i].lm(), g[pr.j].lm())) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k)
      chain = k != pr.i && k != pr.j && g[k].lm().divides(pr.lcm) && !is_open(pr.i, k) && !is_open(pr.j, k);
    if (chain) continue;

    Polynomial r = normal_form(s_polynomial(g[pr.i], g[pr.j]), g);
    if (r.is_zero()) continue;
    if (r.is_constant()) return {r.monic()};
    g.push_back(r.monic());
    add_pairs(g.size() - 1);
  }
#ifdef OMEGALIE_CHECK_INVARIANTS
  require(is_groebner_basis(g), ErrorKind::Internal, "Buchberger output fails the S-pair test");
#endif
  return g;
}

/// Unique reduced Groebner basis from any Groebner basis: monic, minimal,
/// interreduced, sorted by leading monomial (largest first).
inline std::vector<Polynomial> reduce_basis(const std::vector<Polynomial>& basis) {
  require(is_groebner_basis(basis), ErrorKind::NotAGroebnerBasis, "an S-polynomial has a nonzero normal form");
  std::vector<Polynomial> g;
  for (const auto& p : basis)
    if (!p.is_zero()) g.push_back(p.monic());
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j || !g[j].lm().divides(g[i].lm())) continue;
      redundant = !(g[j].lm() == g[i].lm()) || j < i;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial lead = Polynomial::from_terms(minimal[i].ring(), {minimal[i].terms().front()});
    Polynomial tail = minimal[i] - lead;
    reduced.push_back(lead + normal_form(tail, others));
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const Polynomial& a, const Polynomial& b) { return a.ring()->cmp(a.lm(), b.lm()) > 0; });
  return reduced;
}

/// Generators plus a lazily computed, shared reduced Groebner basis.
class Ideal {
 public:
  Ideal() = default;

  Ideal(RingPtr ring, std::vector<Polynomial> gens)
      : ring_(std::move(ring)), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
    for (const auto& p : gens_)
      require(same_ring(p.ring(), ring_), ErrorKind::RingMismatch, "generator from another ring");
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }

  const std::vector<Polynomial>& groebner() const {
    std::call_once(cache_->once, [this] { cache_->gb = reduce_basis(buchberger(gens_)); });
    return cache_->gb;
  }

  bool is_unit() const {
    const auto& gb = groebner();
    return gb.size() == 1 && gb.front().is_constant();
  }

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Polynomial> gb;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

inline bool ideal_member(const Polynomial& f, const Ideal& i) {
  require(same_ring(f.ring(), i.ring()), ErrorKind::RingMismatch, "membership across rings");
  return normal_form(f, i.groebner()).is_zero();
}

inline bool ideal_equal(const Ideal& a, const Ideal& b) {
  require(same_ring(a.ring(), b.ring()), ErrorKind::RingMismatch, "ideal comparison across rings");
  return a.groebner() == b.groebner();
}

/// Full data of the elimination step behind intersect.
struct Intersection {
  RingPtr aux_ring;                    ///< aux variable first, then the original ones
  std::vector<Polynomial> aux_basis;   ///< reduced basis of t*I + (1-t)*J
  Ideal result;
};

inline Intersection intersect_with_trace(const Ideal& a, const Ideal& b, const std::string& aux = "t") {
  require(same_ring(a.ring(), b.ring()), ErrorKind::RingMismatch, "intersection across rings");
  const RingPtr& ring = a.ring();
  std::vector<std::string> names{aux};
  for (const auto& v : ring->vars()) {
    require(v != aux, ErrorKind::ParseError, "auxiliary variable name '" + aux + "' already in use");
    names.push_back(v);
  }
  RingPtr big = make_ring(std::move(names), ring->field(), 1);
  Polynomial t = Polynomial::variable(big, 0);
  Polynomial one_minus_t = Polynomial::constant(big, FieldElement::one(ring->field())) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * f.lifted(big, 1));
  for (const auto& f : b.generators()) gens.push_back(one_minus_t * f.lifted(big, 1));
  Intersection out;
  out.aux_ring = big;
  out.aux_basis = reduce_basis(buchberger(gens));
  std::vector<Polynomial> kept;
  for (const auto& p : out.aux_basis)
    if (p.lm()[0] == 0) kept.push_back(p.lowered(ring, 1));
  out.result = Ideal(ring, std::move(kept));
  return out;
}

inline Ideal intersect(const Ideal& a, const Ideal& b, const std::string& aux = "t") {
  return intersect_with_trace(a, b, aux).result;
}

/// I : f, computed as (I cap <f>) / f.
inline Ideal colon(const Ideal& i, const Polynomial& f, const std::string& aux = "t") {
  require(!f.is_zero(), ErrorKind::ZeroPolynomial, "colon by zero");
  Ideal inter = intersect(i, Ideal(i.ring(), {f}), aux);
  std::vector<Polynomial> gens;
  for (const auto& g : inter.generators()) gens.push_back(divide_exact(g, f));
  return Ideal(i.ring(), std::move(gens));
}

/// Krull dimension of R/I: the largest set of variables containing the
/// support of no leading monomial of the reduced basis.
inline std::size_t quotient_dimension(const Ideal& ideal) {
  const auto& gb = ideal.groebner();
  require(!ideal.is_unit(), ErrorKind::UnitIdeal, "quotient by the unit ideal is zero");
  const std::size_t n = ideal.ring()->size();
  std::vector<std::uint32_t> supports;
  for (const auto& p : gb) supports.push_back(p.lm().support());
  std::size_t best = 0;
  auto admissible = [&](std::uint32_t s) {
    for (auto m : supports)
      if ((m & ~s) == 0) return false;
    return true;
  };
  auto search = [&](auto&& self, std::size_t v, std::uint32_t chosen, std::size_t count) -> void {
    if (count + (n - v) <= best) return;
    if (v == n) {
      best = count;
      return;
    }
    std::uint32_t with = chosen | (std::uint32_t{1} << v);
    if (admissible(with)) self(self, v + 1, with, count + 1);
    self(self, v + 1, chosen, count);
  };
  search(search, 0, 0, 0);
  return best;
}

/// Ideal file: "vars: ..." and "field: ..." header lines, then one
/// polynomial per line.
struct IdealFile {
  RingPtr ring;
  std::vector<Polynomial> polys;
};

inline std::string write_ideal(const RingPtr& ring, const std::vector<Polynomial>& polys) {
  std::string s = "vars:";
  for (const auto& v : ring->vars()) s += " " + v;
  s += "\nfield: " + ring->field()->to_string() + "\n";
  for (const auto& p : polys) s += p.to_string() + "\n";
  return s;
}

inline IdealFile read_ideal(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::vector<std::string> vars;
  FieldPtr field;
  bool have_vars = false;
  IdealFile out;
  auto at = [&](const std::string& msg) { return "line " + std::to_string(lineno) + ": " + msg; };
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = detail::trim(line);
    if (t.empty() || t[0] == '#') continue;
    try {
      if (t.rfind("vars:", 0) == 0) {
        std::istringstream vs(t.substr(5));
        std::string v;
        vars.clear();
        while (vs >> v) vars.push_back(v);
        have_vars = true;
      } else if (t.rfind("field:", 0) == 0) {
        field = parse_field(t.substr(6));
      } else {
        require(have_vars && field, ErrorKind::ParseError, "polynomial before the vars/field header");
        if (!out.ring) out.ring = make_ring(vars, field);
        out.polys.push_back(parse_polynomial(t, out.ring));
      }
    } catch (const ExtensionRequired&) {
      throw;
    } catch (const Error& e) {
      fail(e.kind(), at(e.what()));
    }
  }
  require(have_vars && field, ErrorKind::ParseError, "missing vars/field header");
  if (!out.ring) out.ring = make_ring(vars, field);
  return out;
}

}  // namespace omegalie
