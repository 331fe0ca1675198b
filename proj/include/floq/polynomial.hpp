#pragma once

// Sparse multivariate (Laurent-capable) polynomials over a pluggable
// coefficient domain. Terms live in a hash map keyed by exponent vectors;
// grevlex-sorted views are produced on demand. Values are immutable in
// spirit: all operations return fresh polynomials.

#include "floq/coeff.hpp"
#include "floq/monomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>
#include <utility>
#include <vector>

namespace floq {

template <class C>
class MultiPoly {
 public:
  using TermMap = std::unordered_map<Monomial, C, MonomialHash>;

  MultiPoly() = default;
  explicit MultiPoly(TablePtr table) : table_(std::move(table)) {}

  static MultiPoly constant(TablePtr table, C c) {
    MultiPoly p(std::move(table));
    if (!domain_traits<C>::is_zero(c)) p.terms_.emplace(Monomial(p.table_->size()), std::move(c));
    return p;
  }

  static MultiPoly variable(TablePtr table, size_t var, int32_t exp = 1) {
    MultiPoly p(table);
    p.add_term(Monomial::unit(table->size(), var, exp), domain_traits<C>::one());
    return p;
  }

  static MultiPoly term(TablePtr table, Monomial m, C c) {
    MultiPoly p(table);
    p.add_term(std::move(m), std::move(c));
    return p;
  }

  const TablePtr& table() const { return table_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t num_terms() const { return terms_.size(); }

  void add_term(Monomial m, C c) {
    if (m.e.size() != table_->size())
      throw std::invalid_argument("term does not match variable table");
    for (size_t i = 0; i < m.e.size(); ++i)
      if (m.e[i] < 0 && table_->kind(i) != VarKind::Laurent)
        throw std::invalid_argument("negative exponent on non-Laurent variable " +
                                    table_->name(i));
    if (domain_traits<C>::is_zero(c)) return;
    auto [it, fresh] = terms_.emplace(std::move(m), std::move(c));
    if (!fresh) {
      it->second = it->second + c;
      if (domain_traits<C>::is_zero(it->second)) terms_.erase(it);
    }
  }

  C coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? domain_traits<C>::zero() : it->second;
  }

  C constant_term() const { return coefficient(Monomial(table_->size())); }

  //! Max total degree over ordinary variables (zero polynomial: -1).
  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree(*table_));
    return d;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    a.check_same(b);
    MultiPoly r = a;
    for (const auto& [m, c] : b.terms_) r.accumulate(m, c);
    return r;
  }

  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    a.check_same(b);
    MultiPoly r = a;
    for (const auto& [m, c] : b.terms_) r.accumulate(m, -c);
    return r;
  }

  friend MultiPoly operator-(const MultiPoly& a) {
    MultiPoly r(a.table_);
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
    return r;
  }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_same(b);
    MultiPoly r(a.table_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.accumulate(ma * mb, ca * cb);
    return r;
  }

  MultiPoly scaled(const C& c) const {
    MultiPoly r(table_);
    if (domain_traits<C>::is_zero(c)) return r;
    for (const auto& [m, k] : terms_) {
      C v = k * c;
      if (!domain_traits<C>::is_zero(v)) r.terms_.emplace(m, std::move(v));
    }
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (!same_table(a.table_, b.table_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (const auto& [m, c] : a.terms_) {
      auto it = b.terms_.find(m);
      if (it == b.terms_.end() || !(it->second == c)) return false;
    }
    return true;
  }

  //! Terms sorted grevlex-descending. Requires ordinary-variable support.
  std::vector<std::pair<Monomial, C>> sorted_terms() const {
    std::vector<std::pair<Monomial, C>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [this](const auto& x, const auto& y) {
      return grevlex_compare(x.first, y.first, *table_) == std::strong_ordering::greater;
    });
    return v;
  }

  //! Grevlex-leading term. Throws on the zero polynomial.
  std::pair<Monomial, C> leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    auto it = terms_.begin();
    auto best = it;
    for (++it; it != terms_.end(); ++it)
      if (grevlex_compare(it->first, best->first, *table_) == std::strong_ordering::greater)
        best = it;
    return {best->first, best->second};
  }

  //! Coefficient of var^k as a polynomial in the remaining variables.
  MultiPoly coeff_extract(size_t var, int32_t k) const {
    MultiPoly r(table_);
    for (const auto& [m, c] : terms_) {
      if (m.e[var] != k) continue;
      Monomial m2 = m;
      m2.e[var] = 0;
      r.terms_.emplace(std::move(m2), c);
    }
    return r;
  }

  int32_t max_exponent(size_t var) const {
    int32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.e[var]);
    return d;
  }

  //! Degree-d homogeneous part over ordinary variables; content in Aux or
  //! Laurent variables is rejected.
  MultiPoly homogeneous_part(int d) const {
    MultiPoly r(table_);
    for (const auto& [m, c] : terms_) {
      if (!m.ordinary_only(*table_))
        throw std::invalid_argument("homogeneous part: non-ordinary variables present");
      if (m.degree(*table_) == d) r.terms_.emplace(m, c);
    }
    return r;
  }

  //! T_max: the top-degree homogeneous part.
  MultiPoly leading_form() const {
    if (terms_.empty()) return MultiPoly(table_);
    return homogeneous_part(degree());
  }

  MultiPoly derivative(size_t var) const {
    MultiPoly r(table_);
    for (const auto& [m, c] : terms_) {
      if (m.e[var] == 0) continue;
      Monomial m2 = m;
      int32_t k = m2.e[var];
      m2.e[var] -= 1;
      r.accumulate(std::move(m2), c * domain_traits<C>::from_int(k));
    }
    return r;
  }

  //! Full evaluation. Every variable occurring in the polynomial must have a
  //! value; Laurent exponents invert the value.
  C evaluate(const std::vector<std::optional<C>>& assign) const {
    if (assign.size() != table_->size())
      throw std::invalid_argument("evaluate: assignment size mismatch");
    C total = domain_traits<C>::zero();
    for (const auto& [m, c] : terms_) {
      C prod = c;
      for (size_t i = 0; i < m.e.size(); ++i) {
        if (m.e[i] == 0) continue;
        if (!assign[i])
          throw std::invalid_argument("evaluate: missing value for " + table_->name(i));
        prod = prod * coeff_pow(*assign[i], m.e[i]);
      }
      total = total + prod;
    }
    return total;
  }

  //! Evaluate a polynomial supported on the first k ordinary variables.
  C evaluate_point(const std::vector<C>& point) const {
    std::vector<std::optional<C>> assign(table_->size());
    for (size_t i = 0; i < point.size() && i < assign.size(); ++i) assign[i] = point[i];
    return evaluate(assign);
  }

  //! Partial evaluation of one variable at a constant.
  MultiPoly substitute(size_t var, const C& value) const {
    MultiPoly r(table_);
    for (const auto& [m, c] : terms_) {
      Monomial m2 = m;
      int32_t k = m2.e[var];
      m2.e[var] = 0;
      r.accumulate(std::move(m2), k == 0 ? c : c * coeff_pow(value, k));
    }
    return r;
  }

  //! Substitute a polynomial for a non-Laurent variable.
  MultiPoly substitute(size_t var, const MultiPoly& g) const {
    if (table_->kind(var) == VarKind::Laurent)
      throw std::invalid_argument("polynomial substitution into Laurent variable");
    check_same(g);
    // Group by exponent of var, then Horner over ascending powers of g.
    std::map<int32_t, MultiPoly> slices;
    for (const auto& [m, c] : terms_) {
      Monomial m2 = m;
      int32_t k = m2.e[var];
      m2.e[var] = 0;
      auto [it, fresh] = slices.try_emplace(k, table_);
      it->second.accumulate(std::move(m2), c);
    }
    MultiPoly r(table_);
    MultiPoly gpow = constant(table_, domain_traits<C>::one());
    int32_t cur = 0;
    for (const auto& [k, slice] : slices) {
      while (cur < k) {
        gpow = gpow * g;
        ++cur;
      }
      r = r + slice * gpow;
    }
    return r;
  }

  //! Map this polynomial onto another table. var_map[i] gives the index in
  //! the new table of variable i; exponents are carried over unchanged.
  MultiPoly map_to(const TablePtr& target, const std::vector<size_t>& var_map) const {
    if (var_map.size() != table_->size())
      throw std::invalid_argument("map_to: variable map size mismatch");
    MultiPoly r(target);
    for (const auto& [m, c] : terms_) {
      Monomial m2(target->size());
      for (size_t i = 0; i < m.e.size(); ++i) {
        if (m.e[i] == 0) continue;
        m2.e[var_map[i]] += m.e[i];
      }
      r.accumulate(std::move(m2), c);
    }
    return r;
  }

  template <class D, class Fn>
  MultiPoly<D> convert(const Fn& fn) const {
    MultiPoly<D> r(table_);
    for (const auto& [m, c] : terms_) r.add_term(m, fn(c));
    return r;
  }

  //! Text form with explicit variable names; deterministic term order
  //! (degree descending, then lexicographic on exponents).
  std::string str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Monomial, C>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [this](const auto& a, const auto& b) {
      int da = display_degree(a.first), db = display_degree(b.first);
      if (da != db) return da > db;
      return std::lexicographical_compare(b.first.e.begin(), b.first.e.end(),
                                          a.first.e.begin(), a.first.e.end());
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : v) {
      std::string cs = domain_traits<C>::str(c);
      bool neg = !cs.empty() && cs[0] == '-' &&
                 cs.find('+') == std::string::npos &&
                 cs.find('-', 1) == std::string::npos;
      if (first) {
        first = false;
        if (neg) {
          os << "-";
          cs = cs.substr(1);
        }
      } else {
        os << (neg ? " - " : " + ");
        if (neg) cs = cs.substr(1);
      }
      std::string ms = mono_str(m);
      bool complex_coeff = cs.find('+') != std::string::npos ||
                           cs.find('-', 1) != std::string::npos;
      if (ms.empty()) {
        os << (complex_coeff ? "(" + cs + ")" : cs);
      } else if (cs == "1") {
        os << ms;
      } else if (complex_coeff) {
        os << "(" << cs << ")*" << ms;
      } else {
        os << cs << "*" << ms;
      }
    }
    return os.str();
  }

  void accumulate(Monomial m, C c) {
    if (domain_traits<C>::is_zero(c)) return;
    auto [it, fresh] = terms_.try_emplace(std::move(m), c);
    if (!fresh) {
      it->second = it->second + c;
      if (domain_traits<C>::is_zero(it->second)) terms_.erase(it);
    }
  }

 private:
  void check_same(const MultiPoly& other) const {
    if (!same_table(table_, other.table_))
      throw std::invalid_argument("polynomial operation across different variable tables");
  }

  int display_degree(const Monomial& m) const {
    int d = 0;
    for (size_t i = 0; i < m.e.size(); ++i)
      if (table_->kind(i) != VarKind::Laurent) d += m.e[i];
    return d;
  }

  std::string mono_str(const Monomial& m) const {
    std::string s;
    for (size_t i = 0; i < m.e.size(); ++i) {
      if (m.e[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += table_->name(i);
      if (m.e[i] != 1) s += "^" + std::to_string(m.e[i]);
    }
    return s;
  }

  TablePtr table_;
  TermMap terms_;
};

using PolyQ = MultiPoly<Rat>;
using PolyG = MultiPoly<GaussRat>;
using PolyC = MultiPoly<CD>;

template <class C>
MultiPoly<CD> to_complex_poly(const MultiPoly<C>& p) {
  return p.template convert<CD>([](const C& c) { return domain_traits<C>::to_cd(c); });
}

inline MultiPoly<GaussRat> to_gauss_poly(const MultiPoly<Rat>& p) {
  return p.convert<GaussRat>([](const Rat& c) { return GaussRat(c); });
}

}  // namespace floq
