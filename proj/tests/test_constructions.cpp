#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "psrank/apolarity.hpp"
#include "psrank/constructions.hpp"
#include "psrank/exactla.hpp"

using namespace psrank;

TEST_CASE("W states and their products") {
  BinaryForm<Rational> w3 = w_state(3);
  CHECK(w3.degree == 3);
  CHECK(w3.c == std::vector<Rational>{Rational(0), Rational(1), Rational(0), Rational(0)});

  PSTensor<Rational> t = w_product({3, 4});
  CHECK(t.multidegree == std::vector<int>{3, 4});
  for (size_t i = 0; i < t.coeffs.size(); ++i)
    CHECK(t.coeffs[i] == (i == flat_index({3, 4}, {1, 1}) ? Rational(1) : Rational(0)));
  CHECK_THROWS_AS(w_state(0), std::invalid_argument);
}

TEST_CASE("coupling coefficients") {
  XiScheme s({Rational(2), Rational(3)});
  CHECK(s.a(0, 1) == Rational(-2));
  CHECK(s.a(1, 0) == Rational(3));
  CHECK(s.a_matrix()[0][0] == Rational(0));
  CHECK_THROWS_AS(XiScheme({Rational(2), Rational(2)}), std::invalid_argument);
  CHECK_THROWS_AS(XiScheme({Rational(0), Rational(2)}), std::invalid_argument);
  CHECK_THROWS_AS(XiScheme({Rational(1), Rational(2)}), std::invalid_argument);
}

TEST_CASE("coupling condition holds for valid schemes and detects corruption") {
  std::mt19937_64 rng(23);
  for (int k = 2; k <= 6; ++k) {
    XiScheme s(default_xi(k));
    auto a = s.a_matrix();
    CHECK(check_condition_33(a).ok);
    a[0][1] += Rational(1);
    Check33Report bad = check_condition_33(a);
    CHECK(!bad.ok);
    CHECK(bad.failing_subset == std::vector<int>{1, 2});
    for (int trial = 0; trial < 20; ++trial) {
      XiScheme r(random_xi(k, rng));
      CHECK(check_condition_33(r.a_matrix()).ok);
    }
  }
}

TEST_CASE("factor form stays exact through six factors") {
  for (int k = 4; k <= 6; ++k) {
    Thm33Result t = thm33_decomposition(k);
    CHECK(t.factor_check.ok);
    CHECK(t.factor_check.residual == 0.0);
    CHECK(t.split_count == (2 + k) * (1L << (k - 1)));
  }
}

TEST_CASE("factor-form decomposition of cubic products") {
  Thm33Result t = thm33_decomposition(2);
  CHECK(t.k == 2);
  CHECK(t.factor_form.terms.size() == 3);  // one coupled product and two corrections
  CHECK(t.factor_check.ok);
  CHECK(t.factor_check.residual == 0.0);
  CHECK(t.split_count == 8);
  CHECK(t.rank_one_check.ok);
  CHECK(t.rank_one_check.term_count == 8);

  // factor ranks: the coupled product splits 2x2, each correction 1x2
  long total = 0;
  for (const auto& term : t.factor_form.terms) {
    long prod = 1;
    for (int r : term.factor_ranks) prod *= r;
    total += prod;
  }
  CHECK(total == 8);
}

TEST_CASE("factor-form decomposition accepts one factor and custom schemes") {
  Thm33Result t1 = thm33_decomposition(1);
  CHECK(t1.split_count == 3);
  CHECK(t1.factor_check.ok);
  CHECK(t1.rank_one_check.ok);

  Thm33Result t3 = thm33_decomposition(3, std::vector<Rational>{Rational(5), Rational(7), Rational(11)});
  CHECK(t3.split_count == 20);
  CHECK(t3.factor_check.ok);
  CHECK(t3.rank_one_check.ok);
}

TEST_CASE("curve union solves the smallest products exactly") {
  CurveResult r = curve_union_decomposition({3, 3});
  CHECK(r.available_points == 13);
  CHECK(r.check.ok);
  CHECK(r.check.residual == 0.0);
  CHECK(r.decomposition.term_count() <= 13);
  CHECK_THROWS_AS(curve_union_decomposition({2, 3}), std::invalid_argument);
}

TEST_CASE("curve union rejects malformed parameter sets") {
  CurvePointSet ps = default_curve_points({3, 3});
  ps.lists[2].second[1] = ps.lists[2].second[2];  // collide two parameters
  CHECK_THROWS(curve_union_decomposition({3, 3}, ps));
  CurvePointSet shifted = default_curve_points({3, 3});
  shifted.lists[0].second[0] = Rational(1);  // origin must stay at zero
  CHECK_THROWS_AS(curve_union_decomposition({3, 3}, shifted), std::invalid_argument);
}

TEST_CASE("greedy pruning with default parameters and its precondition") {
  PSTensor<Rational> target = w_product({3, 3});
  std::vector<RankOneTerm<Rational>> pts = curve_support(default_curve_points({3, 3}));
  PruneResult pr = prune_support(pts, target);
  CHECK(pr.decomposition.term_count() == 12);  // integer parameters stall above 11
  CHECK(verify(pr.decomposition, target).ok);
  CHECK(pr.kept.size() == static_cast<size_t>(pr.decomposition.term_count()));

  // target outside the span is a precondition violation
  std::vector<RankOneTerm<Rational>> one = {pts[0]};
  CHECK_THROWS_AS(prune_support(one, target), std::invalid_argument);
}

TEST_CASE("scheme basis is independent and supports the W product") {
  auto basis = z_scheme_basis({3, 3});
  REQUIRE(basis.size() == 4);
  std::vector<std::vector<Rational>> rows;
  for (const auto& t : basis) rows.push_back(t.coeffs);
  Matrix<Rational> m(4, static_cast<int>(rows[0].size()));
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
  CHECK(rank(m) == 4);
  CHECK(in_span(rows, w_product({3, 3}).coeffs));
}

TEST_CASE("generic format bound and its exceptional formats") {
  CHECK(generic_rank_bound({3, 3}) == 12);   // 2 ceil(16/3)
  CHECK(generic_rank_bound({3, 4}) == 14);   // 2 ceil(20/3)
  CHECK(generic_rank_bound({2, 3}) == 8);    // 2 ceil(12/3)
  CHECK(!generic_rank_bound({2, 2}));
  CHECK(!generic_rank_bound({2, 4}));
  CHECK(!generic_rank_bound({4, 2}));        // order must not matter
  CHECK(!generic_rank_bound({1, 1, 2}));
  CHECK(!generic_rank_bound({1, 1, 1}));
  CHECK(!generic_rank_bound({1, 1, 1, 1}));
  CHECK(generic_rank_bound({2, 5}) == 2 * ((3 * 6 + 2) / 3));
  CHECK_THROWS_AS(generic_rank_bound({3}), std::invalid_argument);
}

TEST_CASE("monomial curve bound") {
  CHECK(monomial_curve_bound(4, 4, 2, 2) == 19);
  CHECK(monomial_curve_bound(6, 4, 2, 2) == 23);
  CHECK_THROWS_AS(monomial_curve_bound(4, 4, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(monomial_curve_bound(4, 4, 3, 2), std::invalid_argument);
}

TEST_CASE("curve ideal membership") {
  for (int k = 2; k <= 6; ++k) CHECK(ideal_membership_check(k));
}

TEST_CASE("cited values by format") {
  auto kv33 = known_values({3, 3});
  bool exact8 = false, lower5 = false, upper8 = false;
  for (const auto& v : kv33) {
    if (v.kind == "exact" && v.value == 8) exact8 = true;
    if (v.kind == "lower" && v.value == 5) lower5 = true;
    if (v.kind == "upper" && v.value == 8) upper8 = true;
    CHECK(!v.statement.empty());
  }
  CHECK(exact8);
  CHECK(lower5);
  CHECK(upper8);

  auto kv24 = known_values({2, 4});
  bool exact_2d = false;
  for (const auto& v : kv24)
    if (v.kind == "exact" && v.value == 8) exact_2d = true;
  CHECK(exact_2d);

  auto kv1 = known_values({5});
  REQUIRE(kv1.size() == 1);
  CHECK(kv1[0].kind == "exact");
  CHECK(kv1[0].value == 5);
}

TEST_CASE("curve union sweep over small formats") {
  std::vector<std::vector<int>> formats;
  for (int d1 : {3, 4, 5})
    for (int d2 : {3, 4, 5}) formats.push_back({d1, d2});
  for (int d1 : {3, 4, 5})
    for (int d2 : {3, 4, 5})
      for (int d3 : {3, 4, 5})
        if (d1 <= d2 && d2 <= d3) formats.push_back({d1, d2, d3});
  for (const auto& md : formats) {
    CurveResult r = curve_union_decomposition(md);
    long total = 0;
    for (int d : md) total += d;
    long cap = 1 + (1L << (md.size() - 1)) * total;
    CHECK(r.check.ok);
    CHECK(r.check.residual == 0.0);
    CHECK(r.decomposition.term_count() <= cap);
    CHECK(r.available_points == cap);
  }
}

TEST_CASE("scheme basis across formats") {
  for (const auto& md : std::vector<std::vector<int>>{{2, 2}, {2, 3}, {3, 4}, {2, 2, 2}}) {
    auto basis = z_scheme_basis(md);
    REQUIRE(basis.size() == (size_t(1) << md.size()));
    std::vector<std::vector<Rational>> rows;
    for (const auto& t : basis) rows.push_back(t.coeffs);
    Matrix<Rational> m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int r = 0; r < m.rows; ++r)
      for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
    CHECK(rank(m) == m.rows);
    CHECK(in_span(rows, w_product(md).coeffs));
  }
}
