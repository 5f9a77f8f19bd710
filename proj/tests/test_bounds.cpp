#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "json.hpp"
#include "psrank/bounds.hpp"
#include "psrank/json_io.hpp"

using namespace psrank;
using nlohmann::json;

static std::optional<long> candidate_value(const BoundReport& r, const std::string& method) {
  for (const auto& c : r.upper_candidates)
    if (c.method == method) return c.value;
  return std::nullopt;
}

TEST_CASE("two cubic factors: every route, best is the factor form") {
  BoundReport r = bound_report({3, 3});
  CHECK(r.naive == 9);
  CHECK(r.upper == 8);
  CHECK(r.upper_method == "thm33");
  CHECK(candidate_value(r, "thm33") == 8);
  CHECK(candidate_value(r, "curve+prune") == 10);
  CHECK(candidate_value(r, "combine") == 9);
  CHECK(candidate_value(r, "generic") == 12);
  REQUIRE(r.witness_factor.has_value());
  CHECK(r.witness_check.ok);
  CHECK(r.witness_check.term_count == 8);
  CHECK(r.lower.value == 5);
  CHECK(r.lower.method == "merge");
  CHECK(r.final_lower == 8);   // cited exact value closes the gap
  CHECK(r.final_upper == 8);
  CHECK(r.gap == 0);
  CHECK(r.exact);
  CHECK(r.submultiplicative);
  CHECK(!r.note.empty());  // computed certificates stop short of the cited value
}

TEST_CASE("two quadratic factors: no savings over the naive product") {
  BoundReport r = bound_report({2, 2});
  CHECK(r.naive == 4);
  CHECK(r.upper == 4);
  CHECK(r.upper_method == "combine");
  CHECK(!candidate_value(r, "generic"));
  CHECK(!candidate_value(r, "thm33"));
  REQUIRE(r.witness_exact.has_value());
  CHECK(r.witness_check.ok);
  CHECK(r.final_lower == 4);
  CHECK(r.final_upper == 4);
  CHECK(r.exact);
  CHECK(!r.submultiplicative);
}

TEST_CASE("mixed quadratic-cubic: combining factor decompositions is best") {
  BoundReport r = bound_report({2, 3});
  CHECK(r.naive == 6);
  CHECK(r.upper == 6);
  CHECK(r.upper_method == "combine");
  CHECK(candidate_value(r, "generic") == 8);
  CHECK(r.final_lower == 6);
  CHECK(r.final_upper == 6);
  CHECK(r.exact);
  CHECK(!r.submultiplicative);
}

TEST_CASE("two quartic factors: curated curve pruning beats both formulas") {
  BoundReport r = bound_report({4, 4});
  CHECK(r.naive == 16);
  CHECK(r.upper <= 15);
  CHECK(r.upper_method == "curve+prune");
  REQUIRE(r.witness_exact.has_value());
  CHECK(r.witness_check.ok);
  CHECK(r.submultiplicative);
  auto c = candidate_value(r, "combine");
  REQUIRE(c.has_value());
  CHECK(*c == 16);
  CHECK(candidate_value(r, "generic") == 18);
}

TEST_CASE("three cubic factors") {
  BoundReport r = bound_report({3, 3, 3});
  CHECK(r.naive == 27);
  CHECK(r.upper == 20);
  CHECK(r.upper_method == "thm33");
  CHECK(r.lower.value == 8);
  CHECK(r.lower.method == "flattening");
  CHECK(r.final_lower >= 8);
  CHECK(r.submultiplicative);
}

TEST_CASE("curated parameter lists exist only where they are needed") {
  CHECK(tuned_curve_points({3, 3}).has_value());
  CHECK(tuned_curve_points({4, 4}).has_value());
  CHECK(!tuned_curve_points({3, 4}).has_value());
  CHECK(!tuned_curve_points({5, 5}).has_value());

  // the curated lists must themselves solve exactly
  CurveResult r = curve_union_decomposition({3, 3}, tuned_curve_points({3, 3}));
  CHECK(r.check.ok);
  PruneResult pr = prune_support(curve_support(r.points), w_product({3, 3}));
  CHECK(pr.decomposition.term_count() == 10);
}

TEST_CASE("diagonal sweep table") {
  auto rows = submultiplicativity_table(2, 3);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].multidegree == std::vector<int>{2, 2});
  CHECK(rows[0].gap == 0);
  CHECK(!rows[0].submultiplicative);
  CHECK(rows[1].multidegree == std::vector<int>{3, 3});
  CHECK(rows[1].upper == 8);
  CHECK(rows[1].lower == 8);
  CHECK(rows[1].gap == 0);
  CHECK(rows[1].submultiplicative);
  CHECK_THROWS_AS(submultiplicativity_table(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(submultiplicativity_table(2, 9), std::invalid_argument);
}

TEST_CASE("reports serialize deterministically") {
  std::string a = json(bound_report({3, 3})).dump(2);
  std::string b = json(bound_report({3, 3})).dump(2);
  CHECK(a == b);
  json j = json::parse(a);
  CHECK(j["upper"] == 8);
  CHECK(j["naive"] == 9);
  CHECK(j["exact"] == true);
  CHECK(j.contains("witness"));
  CHECK(j["witness_check"]["ok"] == true);
}

TEST_CASE("witnesses re-verify from their serialized JSON") {
  for (const auto& md : std::vector<std::vector<int>>{{3, 3}, {2, 3}, {4, 4}}) {
    json j = json(bound_report(md));
    REQUIRE(j.contains("witness"));
    PSTensor<Rational> target = w_product(md);
    const json& w = j["witness"];
    if (w.contains("terms") && w["terms"].size() > 0 && w["terms"][0].contains("factors")) {
      auto dec = parse_factor_decomposition<Rational>(w);
      VerifyReport rep = verify(dec, target);
      CHECK(rep.ok);
      CHECK(rep.term_count == j["upper"].get<long>());
    } else {
      auto dec = parse_decomposition<Rational>(w);
      VerifyReport rep = verify(dec, target);
      CHECK(rep.ok);
      CHECK(rep.term_count == j["upper"].get<long>());
    }
  }
}
