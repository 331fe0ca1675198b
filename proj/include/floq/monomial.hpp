#pragma once

// Variable tables and exponent vectors. Grevlex ordering is defined over the
// ordinary variables only; lambda-like bookkeeping variables and Laurent
// phase variables are excluded from degrees and from the term order.

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace floq {

enum class VarKind : uint8_t {
  Ordinary,  // participates in grevlex; exponents >= 0
  Aux,       // excluded from ordering (lambda); exponents >= 0
  Laurent,   // excluded from ordering (z phases); exponents may be negative
};

class VariableTable {
 public:
  VariableTable(std::vector<std::string> names, std::vector<VarKind> kinds)
      : names_(std::move(names)), kinds_(std::move(kinds)) {
    if (names_.size() != kinds_.size())
      throw std::invalid_argument("variable table: names/kinds size mismatch");
    for (size_t i = 0; i < names_.size(); ++i)
      for (size_t j = i + 1; j < names_.size(); ++j)
        if (names_[i] == names_[j])
          throw std::invalid_argument("variable table: duplicate name " + names_[i]);
  }

  size_t size() const { return names_.size(); }
  const std::string& name(size_t i) const { return names_.at(i); }
  VarKind kind(size_t i) const { return kinds_.at(i); }

  std::optional<size_t> index_of(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  size_t require(const std::string& name) const {
    auto i = index_of(name);
    if (!i) throw std::invalid_argument("unknown variable: " + name);
    return *i;
  }

  friend bool operator==(const VariableTable& a, const VariableTable& b) {
    return a.names_ == b.names_ && a.kinds_ == b.kinds_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<VarKind> kinds_;
};

using TablePtr = std::shared_ptr<const VariableTable>;

inline bool same_table(const TablePtr& a, const TablePtr& b) {
  return a == b || (a && b && *a == *b);
}

// v_1..v_n (ordinary), lambda, and optionally the Floquet phase z.
inline TablePtr make_period_table(int n, bool with_lambda = true, bool with_z = false) {
  std::vector<std::string> names;
  std::vector<VarKind> kinds;
  for (int i = 1; i <= n; ++i) {
    names.push_back("v" + std::to_string(i));
    kinds.push_back(VarKind::Ordinary);
  }
  if (with_lambda) {
    names.push_back("lambda");
    kinds.push_back(VarKind::Aux);
  }
  if (with_z) {
    names.push_back("z");
    kinds.push_back(VarKind::Laurent);
  }
  return std::make_shared<VariableTable>(std::move(names), std::move(kinds));
}

// u_1..u_m, lambda.
inline TablePtr make_specialized_table(int m, bool with_lambda = true) {
  std::vector<std::string> names;
  std::vector<VarKind> kinds;
  for (int i = 1; i <= m; ++i) {
    names.push_back("u" + std::to_string(i));
    kinds.push_back(VarKind::Ordinary);
  }
  if (with_lambda) {
    names.push_back("lambda");
    kinds.push_back(VarKind::Aux);
  }
  return std::make_shared<VariableTable>(std::move(names), std::move(kinds));
}

// v_1..v_n, t (ordinary, after v_n so that v_1 > ... > v_n > t), lambda.
inline TablePtr make_extended_table(int n) {
  std::vector<std::string> names;
  std::vector<VarKind> kinds;
  for (int i = 1; i <= n; ++i) {
    names.push_back("v" + std::to_string(i));
    kinds.push_back(VarKind::Ordinary);
  }
  names.push_back("t");
  kinds.push_back(VarKind::Ordinary);
  names.push_back("lambda");
  kinds.push_back(VarKind::Aux);
  return std::make_shared<VariableTable>(std::move(names), std::move(kinds));
}

// v_1..v_N, lambda, Laurent phases z1, z2.
inline TablePtr make_lattice_table(int n_sites) {
  std::vector<std::string> names;
  std::vector<VarKind> kinds;
  for (int i = 1; i <= n_sites; ++i) {
    names.push_back("v" + std::to_string(i));
    kinds.push_back(VarKind::Ordinary);
  }
  names.push_back("lambda");
  kinds.push_back(VarKind::Aux);
  names.push_back("z1");
  kinds.push_back(VarKind::Laurent);
  names.push_back("z2");
  kinds.push_back(VarKind::Laurent);
  return std::make_shared<VariableTable>(std::move(names), std::move(kinds));
}

//! Exponent vector, indexed by a VariableTable.
struct Monomial {
  std::vector<int32_t> e;

  Monomial() = default;
  explicit Monomial(size_t nvars) : e(nvars, 0) {}
  explicit Monomial(std::vector<int32_t> exps) : e(std::move(exps)) {}

  static Monomial unit(size_t nvars, size_t var, int32_t exp = 1) {
    Monomial m(nvars);
    m.e[var] = exp;
    return m;
  }

  bool is_constant() const {
    for (int32_t x : e)
      if (x != 0) return false;
    return true;
  }

  // Total degree over the ordinary variables.
  int degree(const VariableTable& t) const {
    int d = 0;
    for (size_t i = 0; i < e.size(); ++i)
      if (t.kind(i) == VarKind::Ordinary) d += e[i];
    return d;
  }

  bool ordinary_only(const VariableTable& t) const {
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0 && t.kind(i) != VarKind::Ordinary) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.e.size() != b.e.size())
      throw std::invalid_argument("monomial product: size mismatch");
    Monomial r(a.e.size());
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
  }

  bool divides(const Monomial& m) const {
    if (e.size() != m.e.size()) return false;
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }

  // Quotient m / this, assuming divisibility.
  Monomial quotient_of(const Monomial& m) const {
    Monomial r(m.e.size());
    for (size_t i = 0; i < e.size(); ++i) r.e[i] = m.e[i] - e[i];
    return r;
  }
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const {
    uint64_t h = 1469598103934665603ull;
    for (int32_t x : m.e) {
      h ^= static_cast<uint64_t>(static_cast<uint32_t>(x));
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

//! Graded reverse lexicographic comparison over the ordinary variables.
//! Both monomials must be free of Aux/Laurent content.
inline std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b,
                                            const VariableTable& t) {
  if (a.e.size() != t.size() || b.e.size() != t.size())
    throw std::invalid_argument("grevlex: exponent vector does not match table");
  if (!a.ordinary_only(t) || !b.ordinary_only(t))
    throw std::invalid_argument("grevlex: ordering is defined over ordinary variables only");
  int da = a.degree(t), db = b.degree(t);
  if (da != db) return da <=> db;
  // Rightmost nonzero entry of a-b negative => a > b.
  for (size_t i = t.size(); i-- > 0;) {
    if (t.kind(i) != VarKind::Ordinary) continue;
    int32_t d = a.e[i] - b.e[i];
    if (d != 0) return d < 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

struct GrevlexLess {
  const VariableTable* table;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_compare(a, b, *table) == std::strong_ordering::less;
  }
};

struct GrevlexGreater {
  const VariableTable* table;
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_compare(a, b, *table) == std::strong_ordering::greater;
  }
};

}  // namespace floq
