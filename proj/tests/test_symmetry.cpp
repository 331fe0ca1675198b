#include <catch2/catch_amalgamated.hpp>

#include "floq/floquet.hpp"
#include "floq/symmetry.hpp"

#include <random>

using namespace floq;

namespace {

std::vector<CD> to_cd_point(const std::vector<GaussRat>& v) {
  std::vector<CD> out;
  for (const auto& x : v) out.push_back(domain_traits<GaussRat>::to_cd(x));
  return out;
}

SymmetryElement random_element(std::mt19937_64& rng, int n) {
  return {(int)(rng() % n), (rng() & 1) != 0, (rng() & 2) != 0, (rng() & 4) != 0};
}

}  // namespace

TEST_CASE("apply") {
  SECTION("rotation by 1 of (1,2,3,4) is (4,1,2,3)") {
    std::vector<CD> v = {1, 2, 3, 4};
    auto w = apply_symmetry({1, false, false, false}, v);
    CHECK(w == std::vector<CD>{4, 1, 2, 3});
  }
  SECTION("reflection reverses") {
    std::vector<CD> v = {1, 2, 3, 4};
    auto w = apply_symmetry({0, true, false, false}, v);
    CHECK(w == std::vector<CD>{4, 3, 2, 1});
  }
  SECTION("negate+conjugate of the n=4 potential is its rotation by 2") {
    auto v = to_cd_point(flmrp_potential(4));
    auto w = apply_symmetry({0, false, true, true}, v);
    auto r2 = apply_symmetry({2, false, false, false}, v);
    CHECK(points_close(w, r2, 1e-15));
  }
  SECTION("reflection of the specialized potential U is -U") {
    for (int n : {4, 5, 6, 7}) {
      int m = n / 2;
      std::vector<CD> U(n);
      for (int j = 0; j < m; ++j) {
        U[j] = CD(j + 1, 0.5 * j - 1);
        U[n - 1 - j] = -U[j];
      }
      if (n % 2 == 1) U[m] = 0;
      auto refl = apply_symmetry({0, true, false, false}, U);
      auto neg = apply_symmetry({0, false, true, false}, U);
      CHECK(points_close(refl, neg, 1e-15));
    }
  }
}

TEST_CASE("group law: apply_symmetry(g, apply_symmetry(h, V)) = apply_symmetry(compose(g,h), V)") {
  std::mt19937_64 rng(99);
  for (int n : {3, 4, 5, 6}) {
    for (int iter = 0; iter < 100; ++iter) {
      auto g = random_element(rng, n);
      auto h = random_element(rng, n);
      std::vector<CD> v(n);
      for (auto& x : v)
        x = CD((double)(rng() % 17) - 8, (double)(rng() % 17) - 8);
      auto lhs = apply_symmetry(g, apply_symmetry(h, v));
      auto rhs = apply_symmetry(compose(g, h, n), v);
      CHECK(points_close(lhs, rhs, 1e-12));
    }
  }
}

TEST_CASE("orbits") {
  SECTION("full orbit of the n=4 potential has 8 distinct points") {
    auto v = to_cd_point(flmrp_potential(4));
    auto orb = orbit(v, full_group(4), 1e-9);
    CHECK(orb.size() == 8);
  }
  SECTION("dihedral orbit of 0 is {0}") {
    std::vector<CD> zero(5, CD(0, 0));
    CHECK(orbit(zero, dihedral_group(5), 1e-9).size() == 1);
    CHECK(orbit(zero, full_group(5), 1e-9).size() == 1);
  }
  SECTION("orbit sizes divide 8n and are at most 8n") {
    std::mt19937_64 rng(5);
    for (int n : {3, 4, 5}) {
      auto group = full_group(n);
      CHECK(group.size() == (size_t)(8 * n));
      for (int iter = 0; iter < 10; ++iter) {
        std::vector<CD> v(n);
        for (auto& x : v)
          x = CD((double)(rng() % 9) - 4, (double)(rng() % 9) - 4);
        auto orb = orbit(v, group, 1e-9);
        CHECK(orb.size() <= (size_t)(8 * n));
        CHECK((8 * n) % orb.size() == 0);
      }
    }
  }
  SECTION("exact orbits on Gaussian rationals") {
    auto orb = orbit_exact(flmrp_potential(4), full_group(4));
    CHECK(orb.size() == 8);
  }
}

TEST_CASE("canonicalize") {
  std::mt19937_64 rng(31);
  SECTION("orbit invariance") {
    for (int iter = 0; iter < 40; ++iter) {
      int n = 4 + (int)(rng() % 3);
      auto group = full_group(n);
      std::vector<CD> v(n);
      for (auto& x : v)
        x = CD((double)(rng() % 9) - 4, 0.5 * (double)(rng() % 9));
      auto g = random_element(rng, n);
      auto c1 = canonicalize(v, group, 1e-9);
      auto c2 = canonicalize(apply_symmetry(g, v), group, 1e-9);
      CHECK(points_close(c1, c2, 1e-12));
    }
  }
  SECTION("the n=4 potential orbit has one canonical form") {
    auto v = to_cd_point(flmrp_potential(4));
    auto group = full_group(4);
    auto canon = canonicalize(v, group, 1e-9);
    for (const auto& w : orbit(v, group, 1e-9))
      CHECK(points_close(canonicalize(w, group, 1e-9), canon, 1e-12));
  }
  SECTION("canonicalize(0) = 0") {
    std::vector<CD> zero(4, CD(0, 0));
    CHECK(points_close(canonicalize(zero, full_group(4), 1e-9), zero, 0.0));
  }
}

TEST_CASE("conjecture form predicates") {
  SECTION("the n=4 potential is antipalindromic; its rotation by one is conj-palindromic") {
    auto V = flmrp_potential(4);
    auto v = to_cd_point(V);
    CHECK(conjecture_form_check(v, ConjectureForm::C1Antipalindromic, 1e-12));
    CHECK(conjecture_form_check_exact(V, ConjectureForm::C1Antipalindromic));
    // (1+i, 1-i, -1+i, -1-i) itself is not conj-palindromic ...
    CHECK_FALSE(conjecture_form_check(v, ConjectureForm::C2ConjPalindromic, 1e-12));
    // ... but the cycle applied m-1 = 1 times yields (-1-i, 1+i, 1-i, -1+i),
    // which is.
    auto W = apply_symmetry({1, false, false, false}, V);
    CHECK(conjecture_form_check_exact(W, ConjectureForm::C2ConjPalindromic));
    CHECK_FALSE(conjecture_form_check_exact(W, ConjectureForm::C1Antipalindromic));
  }
  SECTION("(1,2,3,4) satisfies neither") {
    std::vector<CD> v = {1, 2, 3, 4};
    CHECK_FALSE(conjecture_form_check(v, ConjectureForm::C1Antipalindromic, 1e-9));
    CHECK_FALSE(conjecture_form_check(v, ConjectureForm::C2ConjPalindromic, 1e-9));
  }
  SECTION("0 satisfies both") {
    std::vector<CD> zero(6, CD(0, 0));
    CHECK(conjecture_form_check(zero, ConjectureForm::C1Antipalindromic, 1e-12));
    CHECK(conjecture_form_check(zero, ConjectureForm::C2ConjPalindromic, 1e-12));
  }
  SECTION("odd n: middle coordinate must vanish for c1") {
    std::vector<CD> v = {CD(1, 1), CD(0.5, 0), CD(-0.5, 0), CD(-1, -1)};
    v.insert(v.begin() + 2, CD(0.3, 0));  // nonzero middle
    CHECK_FALSE(conjecture_form_check(v, ConjectureForm::C1Antipalindromic, 1e-9));
    v[2] = 0;
    CHECK(conjecture_form_check(v, ConjectureForm::C1Antipalindromic, 1e-9));
  }
}

TEST_CASE("isospectrality is preserved along orbits (exact, n=4)") {
  auto V = flmrp_potential(4);
  REQUIRE(verify_isospectral_exact(4, V).isospectral);
  for (const auto& g : full_group(4)) {
    auto W = apply_symmetry(g, V);
    CHECK(verify_isospectral_exact(4, W).isospectral);
  }
}
