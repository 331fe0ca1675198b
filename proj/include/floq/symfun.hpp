#pragma once

// Elementary and complete homogeneous symmetric polynomials, including the
// squared-variable analogues used by the specialized (anti-palindromic)
// system.

#include "floq/polynomial.hpp"

#include <functional>

namespace floq {

namespace detail {

// Enumerate multisets a <= j_1 <= ... <= j_b <= n (1-based variable indices).
inline void for_each_multiset(int a, int b, int n, std::vector<int>& pick,
                              const std::function<void(const std::vector<int>&)>& fn) {
  if ((int)pick.size() == b) {
    fn(pick);
    return;
  }
  int lo = pick.empty() ? a : pick.back();
  for (int j = lo; j <= n; ++j) {
    pick.push_back(j);
    for_each_multiset(a, b, n, pick, fn);
    pick.pop_back();
  }
}

}  // namespace detail

//! e_k over the first nvars ordinary variables; exp_mult = 2 builds the
//! squared-variable analogue e'_k.
template <class C = Rat>
MultiPoly<C> elementary_sym(const TablePtr& table, int nvars, int k, int exp_mult = 1) {
  if (nvars < 0 || nvars > (int)table->size())
    throw std::invalid_argument("elementary_sym: bad variable count");
  if (k < 0 || k > nvars) throw std::invalid_argument("elementary_sym: index out of range");
  MultiPoly<C> r(table);
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k == 0) return MultiPoly<C>::constant(table, domain_traits<C>::one());
  while (true) {
    Monomial m(table->size());
    for (int i : idx) m.e[i] = exp_mult;
    r.accumulate(std::move(m), domain_traits<C>::one());
    int i = k - 1;
    while (i >= 0 && idx[i] == nvars - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return r;
}

//! H(a, b): complete homogeneous of degree b on variables v_a..v_nvars
//! (1-based a), with H(a, 0) = 1. exp_mult = 2 builds H'(a, b).
template <class C = Rat>
MultiPoly<C> complete_hom(const TablePtr& table, int nvars, int a, int b, int exp_mult = 1) {
  if (nvars < 0 || nvars > (int)table->size())
    throw std::invalid_argument("complete_hom: bad variable count");
  if (a < 1 || a > nvars) throw std::invalid_argument("complete_hom: start index out of range");
  if (b < 0) throw std::invalid_argument("complete_hom: negative degree");
  MultiPoly<C> r(table);
  if (b == 0) return MultiPoly<C>::constant(table, domain_traits<C>::one());
  std::vector<int> pick;
  detail::for_each_multiset(a, b, nvars, pick, [&](const std::vector<int>& js) {
    Monomial m(table->size());
    for (int j : js) m.e[j - 1] += exp_mult;
    r.accumulate(std::move(m), domain_traits<C>::one());
  });
  return r;
}

}  // namespace floq
