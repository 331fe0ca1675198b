#pragma once

#include "floq/polynomial.hpp"

#include <random>

namespace floq::testing {

inline Monomial random_monomial(std::mt19937_64& rng, const TablePtr& table, int max_exp = 3) {
  Monomial m(table->size());
  std::uniform_int_distribution<int> d(0, max_exp);
  for (size_t i = 0; i < table->size(); ++i)
    if (table->kind(i) == VarKind::Ordinary) m.e[i] = d(rng);
  return m;
}

inline MultiPoly<Rat> random_poly(std::mt19937_64& rng, const TablePtr& table,
                                  int max_terms = 6, int max_exp = 3) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<long> coeff(-9, 9);
  MultiPoly<Rat> p(table);
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) p.accumulate(random_monomial(rng, table, max_exp), Rat(coeff(rng)));
  return p;
}

}  // namespace floq::testing
