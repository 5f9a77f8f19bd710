#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "psrank/apolarity.hpp"
#include "psrank/constructions.hpp"
#include "psrank/flatten.hpp"

using namespace psrank;

TEST_CASE("single-factor flattening equals the catalecticant") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> coeff(-4, 4);
  for (int trial = 0; trial < 20; ++trial) {
    int d = 1 + static_cast<int>(rng() % 6);
    BinaryForm<Rational> f(d);
    for (auto& c : f.c) c = Rational(coeff(rng));
    PSTensor<Rational> t = to_tensor(f);
    for (int e = 0; e <= d; ++e) CHECK(flattening_matrix(t, {e}) == catalecticant(f, e));
  }
}

TEST_CASE("flattening validates its spec") {
  PSTensor<Rational> t = w_product({3, 3});
  CHECK_THROWS_AS(flattening_matrix(t, {1}), std::invalid_argument);
  CHECK_THROWS_AS(flattening_matrix(t, {1, 4}), std::invalid_argument);
  CHECK_THROWS_AS(flattening_matrix(t, {-1, 1}), std::invalid_argument);
}

TEST_CASE("flattening lower bound on W states and their products") {
  LowerBoundCertificate c1 = cactus_lower_bound(w_product({3}));
  CHECK(c1.value == 2);
  CHECK(c1.method == "flattening");
  CHECK(c1.flattening_spec == std::vector<int>{1});

  LowerBoundCertificate c2 = cactus_lower_bound(w_product({3, 3}));
  CHECK(c2.value == 4);
  CHECK(c2.flattening_spec == std::vector<int>{1, 1});

  // the middle flattening of the tensor product is the Kronecker product
  CHECK(rank(flattening_matrix(w_product({3, 3}), {1, 1})) == 4);
}

TEST_CASE("polarization agrees with classical identities") {
  // trivial split: one full part returns the form itself
  BinaryForm<Rational> w3 = w_state(3);
  CHECK(polarize(w3, {3}) == to_tensor(w3));

  // full polarization of x^2 y: weight 1/3 on each placement of the y slot
  PSTensor<Rational> full = polarize(w3, {1, 1, 1});
  CHECK(full.at({1, 0, 0}) == Rational(1, 3));
  CHECK(full.at({0, 1, 0}) == Rational(1, 3));
  CHECK(full.at({0, 0, 1}) == Rational(1, 3));
  CHECK(full.at({0, 0, 0}) == Rational(0));
  CHECK(full.at({1, 1, 0}) == Rational(0));

  CHECK_THROWS_AS(polarize(w3, {2, 2}), std::invalid_argument);
}

TEST_CASE("polarization preserves border rank information") {
  // rank of the flattening separating the parts equals the catalecticant rank
  BinaryForm<Rational> f(4);
  f.c = {Rational(1), Rational(0), Rational(2), Rational(0), Rational(-1)};
  PSTensor<Rational> split = polarize(f, {2, 2});
  CHECK(rank(flattening_matrix(split, {2, 0})) == rank(catalecticant(f, 2)));
}

TEST_CASE("merge of the smallest product") {
  PSTensor<Rational> merged = merge_map(w_product({2, 2}), 1);
  CHECK(merged == polarize(w_state(3), {1, 1, 1}));
}

TEST_CASE("merge certificate for the cubic pair") {
  LowerBoundCertificate cert = merge_lower_bound({3, 3});
  CHECK(cert.value == 5);
  CHECK(cert.method == "merge");
  CHECK(cert.merge_positions == std::vector<int>{1});
}

TEST_CASE("merge certificates across formats") {
  // value is d1 + ... + dk - k + 1
  CHECK(merge_lower_bound({2, 2}).value == 3);
  CHECK(merge_lower_bound({3, 4}).value == 6);
  CHECK(merge_lower_bound({3, 3, 3}).value == 7);
  CHECK(merge_lower_bound({2, 3, 4}).value == 7);
  CHECK(merge_lower_bound({4}).value == 4);
}

TEST_CASE("merge sends rank-one tensors to rank-one-or-zero tensors") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    int k = 2 + static_cast<int>(rng() % 2);
    std::vector<int> md;
    for (int i = 0; i < k; ++i) md.push_back(1 + static_cast<int>(rng() % 3));
    RankOneTerm<Rational> t;
    t.weight = Rational(1 + static_cast<long>(rng() % 4));
    for (int i = 0; i < k; ++i)
      t.vectors.push_back(LinearForm<Rational>(Rational(static_cast<long>(rng() % 5) - 2),
                                               Rational(static_cast<long>(rng() % 5) - 2)));
    PSTensor<Rational> one = expand_rank_one(t, md);
    int pos = 1 + static_cast<int>(rng() % (k - 1));
    PSTensor<Rational> merged = merge_map(one, pos);
    bool zero = true;
    for (const auto& c : merged.coeffs) zero = zero && c == 0;
    if (!zero) CHECK(cactus_lower_bound(merged).value == 1);
  }
}

TEST_CASE("polarization is injective") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    int d = 3 + static_cast<int>(rng() % 4);
    BinaryForm<Rational> f(d), g(d);
    for (int j = 0; j <= d; ++j) {
      f.c[j] = Rational(static_cast<long>(rng() % 7) - 3);
      g.c[j] = Rational(static_cast<long>(rng() % 7) - 3);
    }
    std::vector<int> parts;
    int rest = d;
    while (rest > 0) {
      int a = 1 + static_cast<int>(rng() % rest);
      parts.push_back(a);
      rest -= a;
    }
    PSTensor<Rational> pf = polarize(f, parts);
    PSTensor<Rational> pg = polarize(g, parts);
    CHECK((f.c == g.c) == (pf.coeffs == pg.coeffs));
  }
}

TEST_CASE("every decomposition bounds its own cactus certificate") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    int k = 1 + static_cast<int>(rng() % 3);
    std::vector<int> md;
    for (int i = 0; i < k; ++i) md.push_back(1 + static_cast<int>(rng() % 3));
    Decomposition<Rational> dec;
    dec.multidegree = md;
    int terms = 1 + static_cast<int>(rng() % 4);
    for (int s = 0; s < terms; ++s) {
      RankOneTerm<Rational> t;
      t.weight = Rational(static_cast<long>(rng() % 5) - 2);
      for (int i = 0; i < k; ++i)
        t.vectors.push_back(LinearForm<Rational>(Rational(static_cast<long>(rng() % 5) - 2),
                                                 Rational(static_cast<long>(rng() % 5) - 2)));
      dec.terms.push_back(t);
    }
    PSTensor<Rational> tens = expand(dec);
    bool zero = true;
    for (const auto& c : tens.coeffs) zero = zero && c == 0;
    if (!zero) CHECK(cactus_lower_bound(tens).value <= dec.term_count());
  }
}
