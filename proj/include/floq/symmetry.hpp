#pragma once

// Group actions on potentials and solution points: the dihedral group of the
// n-cycle extended by negation and conjugation (order 8n), applied with
// exact or tolerance-based equality. Coincidences between group elements on
// a particular point are handled by deduplication, not by quotienting.

#include "floq/coeff.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace floq {

struct SymmetryElement {
  int rotation = 0;        // 0..n-1, applied after the optional reflection
  bool reflect = false;
  bool negate = false;
  bool conjugate = false;
};

namespace detail {

inline int mod(int a, int n) { return ((a % n) + n) % n; }

// index j of the result reads index idx(j) of the argument
inline int source_index(const SymmetryElement& g, int j, int n) {
  int i = mod(j - g.rotation, n);
  return g.reflect ? n - 1 - i : i;
}

inline CD sym_conj(const CD& x) { return std::conj(x); }
inline GaussRat sym_conj(const GaussRat& x) { return x.conj(); }

}  // namespace detail

template <class T>
std::vector<T> apply_symmetry(const SymmetryElement& g, const std::vector<T>& v) {
  const int n = (int)v.size();
  std::vector<T> out(n);
  for (int j = 0; j < n; ++j) {
    T x = v[detail::source_index(g, j, n)];
    if (g.negate) x = -x;
    if (g.conjugate) x = detail::sym_conj(x);
    out[j] = x;
  }
  return out;
}

inline SymmetryElement compose(const SymmetryElement& g, const SymmetryElement& h, int n) {
  // apply_symmetry(compose(g,h), v) == apply_symmetry(g, apply_symmetry(h, v))
  SymmetryElement r;
  r.reflect = g.reflect != h.reflect;
  r.negate = g.negate != h.negate;
  r.conjugate = g.conjugate != h.conjugate;
  // source_index of the composite at j is idx_h(idx_g(j)); recover the
  // rotation from its value at j = 0.
  int i0 = detail::source_index(h, detail::source_index(g, 0, n), n);
  r.rotation = r.reflect ? detail::mod(-(n - 1 - i0), n) : detail::mod(-i0, n);
  return r;
}

inline std::vector<SymmetryElement> dihedral_group(int n) {
  std::vector<SymmetryElement> g;
  for (int r = 0; r < n; ++r)
    for (int f = 0; f < 2; ++f) g.push_back({r, f == 1, false, false});
  return g;
}

//! D_n x <negation> x <conjugation>, order exactly 8n.
inline std::vector<SymmetryElement> full_group(int n) {
  std::vector<SymmetryElement> g;
  for (int r = 0; r < n; ++r)
    for (int f = 0; f < 2; ++f)
      for (int s = 0; s < 2; ++s)
        for (int c = 0; c < 2; ++c) g.push_back({r, f == 1, s == 1, c == 1});
  return g;
}

//! Symmetries inherited by the specialized system: negation and conjugation
//! acting coordinatewise on the u variables.
inline std::vector<SymmetryElement> sign_conj_group() {
  std::vector<SymmetryElement> g;
  for (int s = 0; s < 2; ++s)
    for (int c = 0; c < 2; ++c) g.push_back({0, false, s == 1, c == 1});
  return g;
}

inline std::vector<SymmetryElement> group_for_variant(bool specialized, int n) {
  return specialized ? sign_conj_group() : full_group(n);
}

inline bool points_close(const std::vector<CD>& a, const std::vector<CD>& b, double tol) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > tol) return false;
  return true;
}

template <class T>
bool points_equal_exact(const std::vector<T>& a, const std::vector<T>& b) {
  return a == b;
}

//! All distinct images of V under the group; tolerance-based distinctness.
inline std::vector<std::vector<CD>> orbit(const std::vector<CD>& v,
                                          const std::vector<SymmetryElement>& group,
                                          double tol) {
  std::vector<std::vector<CD>> out;
  for (const auto& g : group) {
    auto w = apply_symmetry(g, v);
    bool seen = false;
    for (const auto& x : out)
      if (points_close(x, w, tol)) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(std::move(w));
  }
  return out;
}

//! Exact-equality orbit for Gaussian-rational points.
inline std::vector<std::vector<GaussRat>> orbit_exact(
    const std::vector<GaussRat>& v, const std::vector<SymmetryElement>& group) {
  std::vector<std::vector<GaussRat>> out;
  for (const auto& g : group) {
    auto w = apply_symmetry(g, v);
    if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(std::move(w));
  }
  return out;
}

namespace detail {

// Deterministic complex ordering: compare re, then im, coordinatewise, on a
// snapped grid so that float noise below the tolerance cannot flip it.
inline bool lex_less(const std::vector<CD>& a, const std::vector<CD>& b, double snap) {
  auto q = [snap](double x) { return std::llround(x / snap); };
  for (size_t i = 0; i < a.size(); ++i) {
    if (q(a[i].real()) != q(b[i].real())) return q(a[i].real()) < q(b[i].real());
    if (q(a[i].imag()) != q(b[i].imag())) return q(a[i].imag()) < q(b[i].imag());
  }
  return false;
}

}  // namespace detail

//! Lexicographically smallest orbit element under the fixed complex order.
inline std::vector<CD> canonicalize(const std::vector<CD>& v,
                                    const std::vector<SymmetryElement>& group,
                                    double tol) {
  double snap = std::max(tol, 1e-9);
  std::vector<CD> best = v;
  for (const auto& g : group) {
    auto w = apply_symmetry(g, v);
    if (detail::lex_less(w, best, snap)) best = std::move(w);
  }
  return best;
}

enum class ConjectureForm {
  C1Antipalindromic,   // v_j = -v_{n-j+1}
  C2ConjPalindromic,   // v_j = conj(v_{n-j+1})
};

inline bool conjecture_form_check(const std::vector<CD>& v, ConjectureForm form,
                                  double tol) {
  const int n = (int)v.size();
  for (int j = 0; j < n; ++j) {
    CD partner = v[n - 1 - j];
    CD expect = form == ConjectureForm::C1Antipalindromic ? -partner : std::conj(partner);
    if (std::abs(v[j] - expect) > tol) return false;
  }
  return true;
}

inline bool conjecture_form_check_exact(const std::vector<GaussRat>& v, ConjectureForm form) {
  const int n = (int)v.size();
  for (int j = 0; j < n; ++j) {
    GaussRat partner = v[n - 1 - j];
    GaussRat expect = form == ConjectureForm::C1Antipalindromic ? -partner : partner.conj();
    if (!(v[j] == expect)) return false;
  }
  return true;
}

}  // namespace floq
