#include <catch2/catch_amalgamated.hpp>

#include "floq/groebner.hpp"
#include "test_util.hpp"

using namespace floq;

namespace {

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Oracle for H(a, b): direct multiset enumeration, independent of the
// library's iterator.
PolyQ hom_oracle(const TablePtr& t, int n, int a, int b) {
  PolyQ r(t);
  std::vector<int> js(b, a);
  if (b == 0) return PolyQ::constant(t, Rat(1));
  while (true) {
    bool sorted = true;
    for (int i = 1; i < b; ++i)
      if (js[i] < js[i - 1]) sorted = false;
    bool in_range = true;
    for (int x : js)
      if (x < a || x > n) in_range = false;
    if (sorted && in_range) {
      Monomial m(t->size());
      for (int x : js) m.e[x - 1] += 1;
      r.accumulate(std::move(m), Rat(1));
    }
    int i = 0;
    while (i < b && ++js[i] > n) js[i++] = a;
    if (i == b) break;
  }
  return r;
}

}  // namespace

TEST_CASE("symmetric bases") {
  auto t = make_period_table(3, false);
  SECTION("H(2,2) for n=3 enumerates 2 <= j1 <= j2 <= 3") {
    auto v2 = PolyQ::variable(t, 1);
    auto v3 = PolyQ::variable(t, 2);
    CHECK(complete_hom(t, 3, 2, 2) == v2 * v2 + v2 * v3 + v3 * v3);
    CHECK(complete_hom(t, 3, 2, 2) == hom_oracle(t, 3, 2, 2));
  }
  SECTION("H(a,0) = 1") {
    for (int a = 1; a <= 3; ++a)
      CHECK(complete_hom(t, 3, a, 0) == PolyQ::constant(t, Rat(1)));
  }
  SECTION("e_2 for n=3") {
    auto v1 = PolyQ::variable(t, 0);
    auto v2 = PolyQ::variable(t, 1);
    auto v3 = PolyQ::variable(t, 2);
    CHECK(elementary_sym(t, 3, 2) == v1 * v2 + v1 * v3 + v2 * v3);
  }
  SECTION("H oracle agreement on a sweep") {
    auto t5 = make_period_table(5, false);
    for (int a = 1; a <= 5; ++a)
      for (int b = 0; b <= 4; ++b)
        CHECK(complete_hom(t5, 5, a, b) == hom_oracle(t5, 5, a, b));
  }
  SECTION("out-of-range indices") {
    CHECK_THROWS_AS(complete_hom(t, 3, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(complete_hom(t, 3, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(elementary_sym(t, 3, 5), std::invalid_argument);
  }
}

TEST_CASE("closed-form basis construction") {
  SECTION("g_1 = p_1") {
    for (int n = 3; n <= 6; ++n) {
      auto sys = spectral_invariants(n);
      auto G = groebner_generators(sys);
      CHECK(G.gen(1) == sys.gen(1));
    }
  }
  SECTION("g_2 for n=3 is H(2,2)") {
    auto sys = spectral_invariants(3);
    auto G = groebner_generators(sys);
    CHECK(G.gen(2) == complete_hom(sys.table, 3, 2, 2));
  }
  SECTION("T_max(g_k) = H(k,k) and LT(g_k) = v_k^k for n <= 8") {
    for (int n = 3; n <= 8; ++n) {
      auto G = groebner_generators(spectral_invariants(n));
      for (int k = 1; k <= n; ++k) {
        CHECK(G.gen(k).leading_form() == complete_hom(G.table, n, k, k));
        auto [m, c] = G.gen(k).leading_term();
        CHECK(m == Monomial::unit(G.table->size(), k - 1, k));
        CHECK(c == Rat(1));
      }
    }
  }
  SECTION("leading monomials pairwise coprime") {
    auto G = groebner_generators(spectral_invariants(6));
    for (size_t a = 0; a < G.lead.size(); ++a)
      for (size_t b = a + 1; b < G.lead.size(); ++b) {
        bool coprime = true;
        for (size_t i = 0; i < G.lead[a].e.size(); ++i)
          if (G.lead[a].e[i] > 0 && G.lead[b].e[i] > 0) coprime = false;
        CHECK(coprime);
      }
  }
  SECTION("specialized: the signed combination is the one that verifies") {
    for (int n : {6, 8}) {
      auto G = groebner_generators(specialized_invariants(n));
      CHECK_FALSE(G.paper_sign_form);
      int m = n / 2;
      for (int k = 1; k <= m; ++k) {
        CHECK(G.gen(k).leading_form() == complete_hom(G.table, m, k, k, 2));
        auto [mono, c] = G.gen(k).leading_term();
        CHECK(mono == Monomial::unit(G.table->size(), k - 1, 2 * k));
        CHECK(c == Rat(1));
      }
    }
  }
  SECTION("extended: LT(g_k) = v_k^k unchanged") {
    std::vector<Rat> vp = {Rat(1), Rat(2), Rat(-1), Rat(3), Rat(5)};
    auto G = groebner_generators(extended_invariants(5, vp));
    for (int k = 1; k <= 5; ++k) {
      auto [m, c] = G.gen(k).leading_term();
      CHECK(m == Monomial::unit(G.table->size(), k - 1, k));
      CHECK(c == Rat(1));
    }
    CHECK(G.t_unbounded);
  }
}

TEST_CASE("normal form") {
  SECTION("normal_form(p_k, G) = 0 for n <= 7") {
    for (int n = 3; n <= 7; ++n) {
      auto sys = spectral_invariants(n);
      auto G = groebner_generators(sys);
      for (int k = 1; k <= n; ++k)
        CHECK(normal_form(sys.gen(k), G).is_zero());
    }
  }
  SECTION("normal_form(v_1, G) lies in span(B)") {
    auto G = groebner_generators(spectral_invariants(4));
    auto r = normal_form(PolyQ::variable(G.table, 0), G);
    CHECK_FALSE(r.is_zero());
    for (const auto& [m, c] : r.terms()) {
      bool in_basis = false;
      for (const auto& b : G.basis)
        if (b == m) in_basis = true;
      CHECK(in_basis);
    }
  }
  SECTION("standard monomials are fixed points") {
    auto G = groebner_generators(spectral_invariants(4));
    for (const auto& b : G.basis) {
      auto f = PolyQ::term(G.table, b, Rat(1));
      CHECK(normal_form(f, G) == f);
    }
  }
  SECTION("closure: normal_form(v_i b, G) is supported on B") {
    for (int n = 3; n <= 5; ++n) {
      auto G = groebner_generators(spectral_invariants(n));
      for (const auto& b : G.basis)
        for (int i = 0; i < n; ++i) {
          auto f = PolyQ::term(G.table, b * Monomial::unit(G.table->size(), i), Rat(1));
          auto r = normal_form(f, G);
          for (const auto& [m, c] : r.terms()) {
            bool in_basis = false;
            for (const auto& bb : G.basis)
              if (bb == m) in_basis = true;
            CHECK(in_basis);
          }
        }
    }
  }
  SECTION("ideal membership both ways (Lemma 3.2)") {
    // g_k is a combination of the p_j by construction; check the reverse
    // inclusion p_k ->_G 0 and the defining combination via exact algebra.
    for (int n : {4, 6}) {
      auto sys = spectral_invariants(n);
      auto G = groebner_generators(sys);
      for (int k = 1; k <= n; ++k) {
        PolyQ combo(sys.table);
        for (int j = 1; j <= k; ++j) {
          auto h = complete_hom(sys.table, n, k, k - j);
          auto c = h * sys.gen(j);
          combo = (j % 2 == 1) ? combo + c : combo - c;
        }
        CHECK(combo == G.gen(k));
        CHECK(normal_form(sys.gen(k), G).is_zero());
      }
    }
    // specialized, larger period
    for (int n : {9, 11}) {
      auto sys = specialized_invariants(n);
      auto G = groebner_generators(sys);
      for (int k = 1; k <= n / 2; ++k)
        CHECK(normal_form(sys.gen(k), G).is_zero());
    }
  }
}

TEST_CASE("standard monomials and Hilbert data") {
  SECTION("n=3: the six standard monomials") {
    auto G = groebner_generators(spectral_invariants(3));
    REQUIRE(G.basis.size() == 6);
    auto t = G.table;
    std::vector<Monomial> expect;
    auto mk = [&](int32_t a, int32_t b, int32_t c) {
      Monomial m(t->size());
      m.e[0] = a;
      m.e[1] = b;
      m.e[2] = c;
      return m;
    };
    // {1, v2, v3, v2 v3, v3^2, v2 v3^2}
    expect = {mk(0, 0, 0), mk(0, 1, 0), mk(0, 0, 1),
              mk(0, 1, 1), mk(0, 0, 2), mk(0, 1, 2)};
    for (const auto& m : expect) {
      bool found = false;
      for (const auto& b : G.basis)
        if (b == m) found = true;
      CHECK(found);
    }
  }
  SECTION("|B| = n!") {
    for (int n = 3; n <= 6; ++n)
      CHECK(groebner_generators(spectral_invariants(n)).basis.size() ==
            (size_t)factorial(n));
  }
  SECTION("|B'| = 2^m m!") {
    for (int n = 4; n <= 9; ++n) {
      int m = n / 2;
      CHECK(groebner_generators(specialized_invariants(n)).basis.size() ==
            (size_t)((1LL << m) * factorial(m)));
    }
  }
  SECTION("basis is sorted grevlex-ascending") {
    auto G = groebner_generators(spectral_invariants(4));
    for (size_t i = 1; i < G.basis.size(); ++i)
      CHECK(grevlex_compare(G.basis[i - 1], G.basis[i], *G.table) ==
            std::strong_ordering::less);
  }
  SECTION("Hilbert function stabilizes at n!") {
    auto G = groebner_generators(spectral_invariants(4));
    CHECK(hilbert_function(G, 0) == 1);
    CHECK(hilbert_function(G, 6) == 24);
    CHECK(hilbert_function(G, 10) == 24);
    // max basis degree is C(n,2) = 6
    CHECK(hilbert_function(G, 5) < 24);
  }
  SECTION("extended Hilbert polynomial: n! s - n!(n(n-1)-4)/4") {
    std::vector<Rat> vp = {Rat(1), Rat(2), Rat(-2), Rat(4)};
    auto G = groebner_generators(extended_invariants(4, vp));
    CHECK(hilbert_function(G, 10) == 24 * 10 - 48);
    CHECK(hilbert_function(G, 20) == 24 * 20 - 48);
  }
}
