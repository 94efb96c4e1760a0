#pragma once

#include <random>

#include "yangian/ncpoly.hpp"

namespace yangian::testing {

inline Gen random_gen(std::mt19937_64& rng, int max_level = 3) {
  std::uniform_int_distribution<int> fam(0, 2), lev(1, max_level);
  Family f = static_cast<Family>(fam(rng));
  return Gen{f, 1, lev(rng), 0};
}

template <class C>
C random_coeff(std::mt19937_64& rng);

template <>
inline Rational random_coeff<Rational>(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> n(-5, 5), d(1, 4);
  int a = n(rng);
  if (a == 0) a = 1;
  Rational q(a, d(rng));
  q.canonicalize();
  return q;
}

template <>
inline HPoly random_coeff<HPoly>(std::mt19937_64& rng) {
  HPoly h = HPoly::hbar_pow(std::uniform_int_distribution<int>(0, 2)(rng));
  return HPoly(random_coeff<Rational>(rng)) * h;
}

template <class C>
NCPoly<C> random_poly(std::mt19937_64& rng, int terms = 3, int max_len = 3, int max_level = 3) {
  NCPoly<C> p;
  std::uniform_int_distribution<int> len(0, max_len);
  for (int t = 0; t < terms; ++t) {
    Word w;
    int l = len(rng);
    for (int k = 0; k < l; ++k) w.push_back(pack(random_gen(rng, max_level)));
    p.add_term(w, random_coeff<C>(rng));
  }
  return p;
}

}  // namespace yangian::testing
