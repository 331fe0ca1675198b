#pragma once

// Coefficient domains for the polynomial core: exact big rationals, exact
// Gaussian rationals, and complex doubles, behind a single traits interface.

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace floq {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using CD = std::complex<double>;

inline std::string double_str(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

inline std::string rat_str(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "p", "p/q", with optional leading sign.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  try {
    Rat r(s);
    return r;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

//! Exact complex number with rational real and imaginary parts.
struct GaussRat {
  Rat re;
  Rat im;

  GaussRat() = default;
  GaussRat(Rat r) : re(std::move(r)) {}
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  GaussRat(long r) : re(r) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussRat conj() const { return {re, -im}; }
  Rat norm2() const { return re * re + im * im; }
  GaussRat inv() const {
    Rat n = norm2();
    if (n.is_zero()) throw std::domain_error("division by zero GaussRat");
    return {re / n, -im / n};
  }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
    return a * b.inv();
  }
};

inline std::string gauss_str(const GaussRat& g) {
  if (g.is_zero()) return "0";
  if (g.im.is_zero()) return rat_str(g.re);
  std::string imag = rat_str(abs(g.im)) + "*i";
  if (g.re.is_zero()) return (g.im < 0 ? "-" : "") + imag;
  return rat_str(g.re) + (g.im < 0 ? "-" : "+") + imag;
}

inline std::string cd_str(const CD& c) {
  if (c.imag() == 0.0) return double_str(c.real());
  std::string imag = double_str(std::abs(c.imag())) + "*i";
  if (c.real() == 0.0) return (c.imag() < 0 ? "-" : "") + imag;
  return double_str(c.real()) + (c.imag() < 0 ? "-" : "+") + imag;
}

template <class C>
struct domain_traits;

template <>
struct domain_traits<Rat> {
  static constexpr const char* label = "BigRational";
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
  static Rat from_int(long v) { return Rat(v); }
  static bool is_zero(const Rat& c) { return c.is_zero(); }
  static Rat conj(const Rat& c) { return c; }
  static Rat inv(const Rat& c) {
    if (c.is_zero()) throw std::domain_error("division by zero rational");
    return Rat(1) / c;
  }
  static CD to_cd(const Rat& c) { return CD(c.convert_to<double>(), 0.0); }
  static std::string str(const Rat& c) { return rat_str(c); }
};

template <>
struct domain_traits<GaussRat> {
  static constexpr const char* label = "GaussianRational";
  static GaussRat zero() { return GaussRat(); }
  static GaussRat one() { return GaussRat(Rat(1)); }
  static GaussRat from_int(long v) { return GaussRat(Rat(v)); }
  static bool is_zero(const GaussRat& c) { return c.is_zero(); }
  static GaussRat conj(const GaussRat& c) { return c.conj(); }
  static GaussRat inv(const GaussRat& c) { return c.inv(); }
  static CD to_cd(const GaussRat& c) {
    return CD(c.re.convert_to<double>(), c.im.convert_to<double>());
  }
  static std::string str(const GaussRat& c) { return gauss_str(c); }
};

template <>
struct domain_traits<CD> {
  static constexpr const char* label = "ComplexDouble";
  static CD zero() { return CD(0.0, 0.0); }
  static CD one() { return CD(1.0, 0.0); }
  static CD from_int(long v) { return CD(double(v), 0.0); }
  static bool is_zero(const CD& c) { return c == CD(0.0, 0.0); }
  static CD conj(const CD& c) { return std::conj(c); }
  static CD inv(const CD& c) {
    if (c == CD(0.0, 0.0)) throw std::domain_error("division by zero complex");
    return CD(1.0, 0.0) / c;
  }
  static CD to_cd(const CD& c) { return c; }
  static std::string str(const CD& c) { return cd_str(c); }
};

template <class C>
C coeff_pow(C base, long e) {
  if (e < 0) {
    base = domain_traits<C>::inv(base);
    e = -e;
  }
  C acc = domain_traits<C>::one();
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

}  // namespace floq
