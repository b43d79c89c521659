#pragma once

#include <cstdint>
#include <random>

#include "triweights/barypoly.hpp"
#include "triweights/geometry.hpp"

// Seed for randomized property tests; FEEC_WEIGHTS_SEED overrides.
std::uint64_t test_seed();

namespace testsup {

inline triweights::Rational random_rational(std::mt19937_64& rng, long max_num = 9,
                                            long max_den = 9) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  return triweights::ratio(num(rng), den(rng));
}

inline triweights::BaryPoint random_bary_point(std::mt19937_64& rng) {
  // Random rational point of the plane lambda0+lambda1+lambda2 == 1,
  // not necessarily inside the triangle.
  triweights::Rational l1 = random_rational(rng);
  triweights::Rational l2 = random_rational(rng);
  return triweights::BaryPoint(1 - l1 - l2, l1, l2);
}

inline triweights::BaryPoint random_interior_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(0, 12);
  long a = num(rng), b = num(rng);
  triweights::Rational l1 = triweights::ratio(a, 24);
  triweights::Rational l2 = triweights::ratio(b, 24);
  if (l1 + l2 > 1) {
    l1 = 1 - l1;
    l2 = 1 - l2;
  }
  return triweights::BaryPoint(1 - l1 - l2, l1, l2);
}

inline triweights::Triangle random_triangle(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coord(-6, 6);
  std::uniform_int_distribution<long> den(1, 3);
  for (;;) {
    triweights::Vec2 a{triweights::ratio(coord(rng), den(rng)),
                       triweights::ratio(coord(rng), den(rng))};
    triweights::Vec2 b{triweights::ratio(coord(rng), den(rng)),
                       triweights::ratio(coord(rng), den(rng))};
    triweights::Vec2 c{triweights::ratio(coord(rng), den(rng)),
                       triweights::ratio(coord(rng), den(rng))};
    triweights::Rational d = cross(b - a, c - a);
    if (d == 0) continue;
    if (d < 0) std::swap(b, c);
    return triweights::Triangle(a, b, c);
  }
}

inline triweights::BaryPolynomial random_polynomial(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  triweights::BaryPolynomial p;
  int d = deg(rng);
  for (const auto& a : triweights::indices_of_degree(d))
    p += triweights::BaryPolynomial::monomial(a, random_rational(rng, 5, 5));
  return p;
}

}  // namespace testsup
