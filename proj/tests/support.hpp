#pragma once

#include <random>

#include "omegalie/matrix.hpp"

namespace testsupport {

using namespace omegalie;

inline FieldElement random_element(std::mt19937_64& rng, const FieldPtr& f, int span = 20) {
  std::uniform_int_distribution<long long> num(-span, span), den(1, span);
  if (f->characteristic() != 0) {
    std::uniform_int_distribution<long long> r(0, f->characteristic() - 1);
    if (f->is_extension()) return FieldElement(f, Rational(r(rng)), Rational(r(rng)));
    return FieldElement::from_int(f, r(rng));
  }
  Rational re = Rational(num(rng)) / Rational(den(rng));
  if (f->is_extension()) return FieldElement(f, re, Rational(num(rng)) / Rational(den(rng)));
  return FieldElement(f, re);
}

inline FieldElement random_nonzero(std::mt19937_64& rng, const FieldPtr& f, int span = 20) {
  for (;;) {
    FieldElement x = random_element(rng, f, span);
    if (!x.is_zero()) return x;
  }
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, const FieldPtr& f, int span = 20) {
  Matrix m(r, c, f);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_element(rng, f, span);
  return m;
}

inline Matrix random_invertible(std::mt19937_64& rng, std::size_t n, const FieldPtr& f, int span = 5) {
  for (;;) {
    Matrix m = random_matrix(rng, n, n, f, span);
    if (!det(m).is_zero()) return m;
  }
}

}  // namespace testsupport
