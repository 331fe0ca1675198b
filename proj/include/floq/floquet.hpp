#pragma once

// Floquet matrices for the period-n problem on the one-dimensional lattice,
// their characteristic polynomials, and the spectral-invariant systems
// (full, anti-palindromic specialization, and the t-extended family).
//
// The characteristic polynomial uses the cycle structure of the matrix:
// two continuant recurrences plus the corner correction. A naive Leibniz
// determinant is kept in the test suite as an independent oracle.

#include "floq/polynomial.hpp"
#include "floq/symfun.hpp"

#include <cassert>
#include <optional>
#include <string>
#include <vector>

namespace floq {

enum class Variant { Full, Specialized, ExtendedT };

inline std::string variant_name(Variant v) {
  switch (v) {
    case Variant::Full: return "full";
    case Variant::Specialized: return "specialized";
    case Variant::ExtendedT: return "extended";
  }
  return "?";
}

inline Variant variant_from_name(const std::string& s) {
  if (s == "full") return Variant::Full;
  if (s == "specialized") return Variant::Specialized;
  if (s == "extended") return Variant::ExtendedT;
  throw std::invalid_argument("unknown variant: " + s);
}

template <class C>
struct SymbolicMatrix {
  TablePtr table;
  int n = 0;
  std::vector<MultiPoly<C>> entries;  // row-major, n*n

  SymbolicMatrix(TablePtr t, int size)
      : table(std::move(t)), n(size), entries(size * size, MultiPoly<C>(table)) {}

  MultiPoly<C>& at(int i, int j) { return entries[i * n + j]; }
  const MultiPoly<C>& at(int i, int j) const { return entries[i * n + j]; }
};

enum class ZMode { One, Symbolic };

//! Periodic tridiagonal Floquet matrix: diagonal v_1..v_n, off-diagonal 1,
//! corners z^{-1} (top right) and z (bottom left). n >= 3.
inline SymbolicMatrix<Rat> build_floquet_1d(int n, ZMode z = ZMode::One) {
  if (n < 3)
    throw std::invalid_argument("build_floquet_1d: period must be at least 3");
  TablePtr table = make_period_table(n, /*with_lambda=*/true, z == ZMode::Symbolic);
  SymbolicMatrix<Rat> M(table, n);
  auto one = MultiPoly<Rat>::constant(table, Rat(1));
  for (int i = 0; i < n; ++i) {
    M.at(i, i) = MultiPoly<Rat>::variable(table, i);
    M.at(i, (i + 1) % n) = one;
    M.at((i + 1) % n, i) = one;
  }
  if (z == ZMode::Symbolic) {
    size_t zi = table->require("z");
    M.at(0, n - 1) = MultiPoly<Rat>::variable(table, zi, -1);
    M.at(n - 1, 0) = MultiPoly<Rat>::variable(table, zi, 1);
  }
  return M;
}

namespace detail {

template <class C>
bool has_cycle_shape(const SymbolicMatrix<C>& M) {
  const int n = M.n;
  if (n < 3) return false;
  auto one = MultiPoly<C>::constant(M.table, domain_traits<C>::one());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      bool adj = (j == i + 1 || j == i - 1);
      bool corner = (i == 0 && j == n - 1) || (i == n - 1 && j == 0);
      const auto& e = M.at(i, j);
      if (adj && !corner) {
        if (!(e == one)) return false;
      } else if (!corner) {
        if (!e.is_zero()) return false;
      }
    }
  // Path off-diagonals must be 1; the two corners may be anything.
  return true;
}

// det over column subset `cols` of the leading rows, minor expansion with
// memoization on the column bitmask. Efficient for banded matrices.
template <class C>
MultiPoly<C> det_minor(const SymbolicMatrix<C>& A,
                       std::unordered_map<uint32_t, MultiPoly<C>>& memo, uint32_t cols,
                       int row) {
  if (row == A.n) return MultiPoly<C>::constant(A.table, domain_traits<C>::one());
  auto it = memo.find(cols);
  if (it != memo.end()) return it->second;
  MultiPoly<C> acc(A.table);
  int pos = 0;
  for (int j = 0; j < A.n; ++j) {
    if (!(cols & (1u << j))) continue;
    const auto& e = A.at(row, j);
    if (!e.is_zero()) {
      MultiPoly<C> sub = det_minor(A, memo, cols & ~(1u << j), row + 1);
      MultiPoly<C> contrib = e * sub;
      acc = (pos % 2 == 0) ? acc + contrib : acc - contrib;
    }
    ++pos;
  }
  memo.emplace(cols, acc);
  return acc;
}

}  // namespace detail

//! det(M) by minor expansion (memoized over column subsets). n <= 20.
template <class C>
MultiPoly<C> determinant(const SymbolicMatrix<C>& M) {
  if (M.n > 20) throw std::invalid_argument("determinant: matrix too large");
  std::unordered_map<uint32_t, MultiPoly<C>> memo;
  uint32_t all = (1u << M.n) - 1;
  return detail::det_minor(M, memo, all, 0);
}

//! Characteristic polynomial det(M - lambda I). requires a "lambda" Aux
//! variable in M's table. Cycle-shaped matrices use the continuant
//! recurrences; everything else falls back to minor expansion.
template <class C>
MultiPoly<C> char_poly(const SymbolicMatrix<C>& M) {
  size_t li = M.table->require("lambda");
  auto lambda = MultiPoly<C>::variable(M.table, li);
  if (detail::has_cycle_shape(M)) {
    const int n = M.n;
    // d_j = v_j - lambda; continuants P(a..b) with off-diagonal weight 1.
    std::vector<MultiPoly<C>> d;
    d.reserve(n);
    for (int i = 0; i < n; ++i) d.push_back(M.at(i, i) - lambda);
    auto continuant = [&](int a, int b) {
      MultiPoly<C> pm2 = MultiPoly<C>::constant(M.table, domain_traits<C>::one());
      if (b < a) return pm2;
      MultiPoly<C> pm1 = d[a];
      for (int j = a + 1; j <= b; ++j) {
        MultiPoly<C> p = d[j] * pm1 - pm2;
        pm2 = std::move(pm1);
        pm1 = std::move(p);
      }
      return pm1;
    };
    MultiPoly<C> outer = continuant(0, n - 1);
    MultiPoly<C> inner = continuant(1, n - 2);
    const auto& c_top = M.at(0, n - 1);
    const auto& c_bot = M.at(n - 1, 0);
    MultiPoly<C> det = outer - c_top * c_bot * inner;
    MultiPoly<C> cycles = c_top + c_bot;
    if (n % 2 == 0) cycles = -cycles;
    return det + cycles;
  }
  SymbolicMatrix<C> A = M;
  for (int i = 0; i < M.n; ++i) A.at(i, i) = A.at(i, i) - lambda;
  return determinant(A);
}

//! The spectral-invariant system of a period: generators p_k, p'_k, or h_k.
template <class C = Rat>
struct InvariantSystem {
  Variant variant = Variant::Full;
  int n = 0;       // period
  int nvars = 0;   // number of system variables (n, m, or n ignoring t)
  TablePtr table;
  std::vector<MultiPoly<C>> gens;
  std::vector<Rat> vprime;  // extended variant only

  const MultiPoly<C>& gen(int k) const { return gens.at(k - 1); }
};

namespace detail {

template <class C>
void check_invariant_system(const InvariantSystem<C>& sys) {
  for (size_t k = 1; k <= sys.gens.size(); ++k) {
    const auto& p = sys.gen(k);
    if (!domain_traits<C>::is_zero(p.constant_term()))
      throw std::logic_error("invariant " + std::to_string(k) + " has a constant term");
    int mult = sys.variant == Variant::Specialized ? 2 : 1;
    auto lead = p.leading_form();
    auto ek = elementary_sym<C>(sys.table, sys.nvars, (int)k, mult);
    if (sys.variant != Variant::ExtendedT && !(lead == ek))
      throw std::logic_error("invariant " + std::to_string(k) +
                             ": leading form is not the elementary symmetric polynomial");
  }
}

}  // namespace detail

//! zeta_V = D_V - D_0 for the period-n problem at z = 1.
inline MultiPoly<Rat> zeta_poly(int n) {
  auto M = build_floquet_1d(n, ZMode::One);
  MultiPoly<Rat> dv = char_poly(M);
  MultiPoly<Rat> d0 = dv;
  for (int i = 0; i < n; ++i) d0 = d0.substitute(i, Rat(0));
  return dv - d0;
}

//! p_k = (-1)^{n-k} [lambda^{n-k}] zeta_V, k = 1..n.
inline InvariantSystem<Rat> spectral_invariants(int n) {
  if (n < 3) throw std::invalid_argument("spectral_invariants: period must be at least 3");
  MultiPoly<Rat> zeta = zeta_poly(n);
  size_t li = zeta.table()->require("lambda");
  InvariantSystem<Rat> sys;
  sys.variant = Variant::Full;
  sys.n = n;
  sys.nvars = n;
  sys.table = zeta.table();
  for (int k = 1; k <= n; ++k) {
    MultiPoly<Rat> p = zeta.coeff_extract(li, n - k);
    if ((n - k) % 2 == 1) p = -p;
    sys.gens.push_back(std::move(p));
  }
  detail::check_invariant_system(sys);
  return sys;
}

//! zeta of the specialized potential U = (u_1..u_m, [0,] -u_m..-u_1),
//! mapped into the u-variable table.
inline MultiPoly<Rat> zeta_specialized(int n) {
  if (n < 4) throw std::invalid_argument("specialized system needs n >= 4");
  const int m = n / 2;
  MultiPoly<Rat> zeta = zeta_poly(n);
  TablePtr vt = zeta.table();
  TablePtr ut = make_specialized_table(m);
  size_t li_u = ut->require("lambda");
  size_t li_v = vt->require("lambda");
  MultiPoly<Rat> out(ut);
  for (const auto& [mono, c] : zeta.terms()) {
    Monomial mu(ut->size());
    Rat coeff = c;
    bool dead = false;
    for (int j = 0; j < n; ++j) {
      int32_t e = mono.e[j];
      if (e == 0) continue;
      if (j < m) {
        mu.e[j] += e;
      } else if (n % 2 == 1 && j == m) {
        dead = true;  // middle vertex carries the constant 0
        break;
      } else {
        int mirrored = n - 1 - j;
        mu.e[mirrored] += e;
        if (e % 2 == 1) coeff = -coeff;
      }
    }
    if (dead) continue;
    mu.e[li_u] = mono.e[li_v];
    out.accumulate(std::move(mu), std::move(coeff));
  }
  return out;
}

//! p'_k = (-1)^{n+k} [lambda^{n-2k}] zeta_U, k = 1..m, m = floor(n/2).
inline InvariantSystem<Rat> specialized_invariants(int n) {
  const MultiPoly<Rat> zu = zeta_specialized(n);
  const int m = n / 2;
  size_t li = zu.table()->require("lambda");
  // Odd lambda-coefficients cancel identically under the specialization.
  for (int k = 0; 2 * k + 1 <= n; ++k)
    if (!zu.coeff_extract(li, n - 2 * k - 1).is_zero())
      throw std::logic_error("specialized zeta has a nonzero odd lambda coefficient");
  InvariantSystem<Rat> sys;
  sys.variant = Variant::Specialized;
  sys.n = n;
  sys.nvars = m;
  sys.table = zu.table();
  for (int k = 1; k <= m; ++k) {
    MultiPoly<Rat> p = zu.coeff_extract(li, n - 2 * k);
    if ((n + k) % 2 == 1) p = -p;
    sys.gens.push_back(std::move(p));
  }
  detail::check_invariant_system(sys);
  return sys;
}

//! h_k(v, t) = p_k(v) - p_k(t v'), over v_1 > ... > v_n > t. The reference
//! point v' must have pairwise distinct coordinates.
inline InvariantSystem<Rat> extended_invariants(int n, const std::vector<Rat>& vprime) {
  if ((int)vprime.size() != n)
    throw std::invalid_argument("extended_invariants: reference point has wrong dimension");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (vprime[i] == vprime[j])
        throw std::invalid_argument(
            "extended_invariants: reference point coordinates must be pairwise distinct");
  InvariantSystem<Rat> full = spectral_invariants(n);
  TablePtr xt = make_extended_table(n);
  size_t ti = xt->require("t");
  std::vector<size_t> var_map(full.table->size());
  for (int i = 0; i < n; ++i) var_map[i] = i;
  var_map[full.table->require("lambda")] = xt->require("lambda");

  InvariantSystem<Rat> sys;
  sys.variant = Variant::ExtendedT;
  sys.n = n;
  sys.nvars = n;
  sys.table = xt;
  sys.vprime = vprime;
  std::vector<Rat> pt(vprime);
  for (int k = 1; k <= n; ++k) {
    MultiPoly<Rat> h = full.gen(k).map_to(xt, var_map);
    // p_k(t v') = sum_d T_d(p_k)(v') t^d.
    for (int d = 0; d <= k; ++d) {
      Rat cd = full.gen(k).homogeneous_part(d).evaluate_point(pt);
      if (!cd.is_zero())
        h.accumulate(Monomial::unit(xt->size(), ti, d), -cd);
    }
    sys.gens.push_back(std::move(h));
  }
  detail::check_invariant_system(sys);
  return sys;
}

struct IsoReportExact {
  bool isospectral = false;
  std::vector<GaussRat> residuals;
};

struct IsoReportNumeric {
  bool isospectral = false;
  std::vector<double> residuals;
  double max_residual = 0.0;
};

//! Exact isospectrality check: evaluates every p_k at a Gaussian-rational
//! potential and decides equality with the zero spectrum.
inline IsoReportExact verify_isospectral_exact(int n, const std::vector<GaussRat>& V) {
  if ((int)V.size() != n)
    throw std::invalid_argument("verify_isospectral: potential has wrong dimension");
  InvariantSystem<Rat> sys = spectral_invariants(n);
  IsoReportExact rep;
  rep.isospectral = true;
  for (int k = 1; k <= n; ++k) {
    GaussRat r = to_gauss_poly(sys.gen(k)).evaluate_point(V);
    if (!r.is_zero()) rep.isospectral = false;
    rep.residuals.push_back(std::move(r));
  }
  return rep;
}

inline IsoReportNumeric verify_isospectral_numeric(int n, const std::vector<CD>& V,
                                                   double tol = 1e-8) {
  if ((int)V.size() != n)
    throw std::invalid_argument("verify_isospectral: potential has wrong dimension");
  InvariantSystem<Rat> sys = spectral_invariants(n);
  IsoReportNumeric rep;
  for (int k = 1; k <= n; ++k) {
    double r = std::abs(to_complex_poly(sys.gen(k)).evaluate_point(V));
    rep.residuals.push_back(r);
    rep.max_residual = std::max(rep.max_residual, r);
  }
  rep.isospectral = rep.max_residual <= tol;
  return rep;
}

//! The explicit isospectral potential for even n = 2m: values 1+i, 1-i at
//! sites 1, 2 and -1+i, -1-i at sites m+1, m+2 (1-based), zero elsewhere.
inline std::vector<GaussRat> flmrp_potential(int n) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("flmrp potential requires even n >= 4");
  const int m = n / 2;
  std::vector<GaussRat> V(n, GaussRat());
  V[0] = GaussRat(Rat(1), Rat(1));
  V[1] = GaussRat(Rat(1), Rat(-1));
  V[m] = GaussRat(Rat(-1), Rat(1));
  V[m + 1] = GaussRat(Rat(-1), Rat(-1));
  return V;
}

}  // namespace floq
