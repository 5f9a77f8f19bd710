#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "doctest.h"
#include "psrank/constructions.hpp"
#include "psrank/json_io.hpp"

using namespace psrank;
using nlohmann::json;

TEST_CASE("rational scalars") {
  CHECK(parse_rational(json("3/4"), "x") == Rational(3, 4));
  CHECK(parse_rational(json("-6/8"), "x") == Rational(-3, 4));
  CHECK(parse_rational(json(5), "x") == Rational(5));
  CHECK(scalar_to_json(Rational(3, 4)) == json("3/4"));
  CHECK(scalar_to_json(Rational(-2)) == json("-2/1"));  // denominator always shown
  CHECK_THROWS_AS(parse_rational(json(0.5), "x"), JsonError);
  CHECK_THROWS_AS(parse_rational(json("1/0"), "x"), JsonError);
  CHECK_THROWS_AS(parse_rational(json("abc"), "x"), JsonError);
  CHECK_THROWS_AS(parse_rational(json::array(), "x"), JsonError);
}

TEST_CASE("gaussian scalars accept plain rationals") {
  GaussianRational z = parse_gaussian(json{{"re", "1/2"}, {"im", "-3/1"}}, "z");
  CHECK(z == GaussianRational(Rational(1, 2), Rational(-3)));
  CHECK(parse_gaussian(json("2/3"), "z") == GaussianRational(Rational(2, 3)));
  CHECK(parse_gaussian(json(4), "z") == GaussianRational(Rational(4)));
  json back = scalar_to_json(z);
  CHECK(back["re"] == "1/2");
  CHECK(back["im"] == "-3/1");
  CHECK_THROWS_AS(parse_gaussian(json{{"re", 0.5}}, "z"), JsonError);
}

TEST_CASE("numeric scalars accept every lower encoding") {
  ApproxComplex a = parse_numeric_scalar(json::array({1.5, -2.0}), "w");
  CHECK(a == ApproxComplex(1.5, -2.0));
  CHECK(parse_numeric_scalar(json(0.25), "w") == ApproxComplex(0.25));
  CHECK(parse_numeric_scalar(json("1/4"), "w") == ApproxComplex(0.25));
  CHECK(parse_numeric_scalar(json{{"re", "1/2"}, {"im", "1/1"}}, "w") == ApproxComplex(0.5, 1.0));
  json back = scalar_to_json(ApproxComplex(1.5, -2.0));
  CHECK(back.is_array());
  CHECK(back[0] == 1.5);
  CHECK(back[1] == -2.0);
}

TEST_CASE("field sniffing picks the weakest encoding present") {
  json qt = json(w_product({2, 2}));
  CHECK(payload_field(qt) == FieldKind::rational);

  json dec = json(curve_union_decomposition({3, 3}).decomposition);
  CHECK(payload_field(dec) == FieldKind::rational);

  json gt = qt;
  gt["coeffs"][0] = json{{"re", "0/1"}, {"im", "1/1"}};
  CHECK(payload_field(gt) == FieldKind::gaussian);

  json nt = qt;
  nt["coeffs"][0] = 0.5;
  CHECK(payload_field(nt) == FieldKind::numeric);

  json mixed = gt;
  mixed["coeffs"][1] = json::array({0.0, 1.0});
  CHECK(payload_field(mixed) == FieldKind::numeric);
}

TEST_CASE("tensor round trips at each tier") {
  PSTensor<Rational> t = w_product({2, 3});
  json j = json(t);
  PSTensor<Rational> back = parse_tensor<Rational>(j);
  CHECK(back.multidegree == t.multidegree);
  CHECK(back.coeffs == t.coeffs);

  // the rational payload loads at both higher tiers
  PSTensor<GaussianRational> g = parse_tensor<GaussianRational>(j);
  CHECK(g.coeffs[flat_index({2, 3}, {1, 1})] == GaussianRational(Rational(1)));
  PSTensor<ApproxComplex> n = parse_tensor<ApproxComplex>(j);
  CHECK(n.coeffs[flat_index({2, 3}, {1, 1})] == ApproxComplex(1.0));

  json round = json(parse_tensor<Rational>(json::parse(j.dump())));
  CHECK(round.dump() == j.dump());
}

TEST_CASE("decomposition round trip preserves verification") {
  Decomposition<Rational> dec = curve_union_decomposition({3, 3}).decomposition;
  json j = json(dec);
  Decomposition<Rational> back = parse_decomposition<Rational>(j);
  CHECK(back.term_count() == dec.term_count());
  CHECK(verify(back, w_product({3, 3})).ok);
  CHECK(json(back).dump() == j.dump());
}

TEST_CASE("malformed payloads name the offending field") {
  json t = json(w_product({2, 2}));

  t.erase("coeffs");
  try {
    parse_tensor<Rational>(t);
    FAIL("expected JsonError");
  } catch (const JsonError& e) {
    CHECK(std::string(e.what()).find("coeffs") != std::string::npos);
  }

  json bad_md = json(w_product({2, 2}));
  bad_md["multidegree"][1] = 0;
  try {
    parse_tensor<Rational>(bad_md);
    FAIL("expected JsonError");
  } catch (const JsonError& e) {
    CHECK(std::string(e.what()).find("multidegree") != std::string::npos);
  }

  json dec = json(curve_union_decomposition({3, 3}).decomposition);
  dec["terms"][0]["vectors"] = "oops";
  try {
    parse_decomposition<Rational>(dec);
    FAIL("expected JsonError");
  } catch (const JsonError& e) {
    CHECK(std::string(e.what()).find("vectors") != std::string::npos);
  }

  json wrong_len = json(w_product({2, 2}));
  wrong_len["coeffs"].push_back("0/1");
  CHECK_THROWS_AS(parse_tensor<Rational>(wrong_len), JsonError);
}

TEST_CASE("binary forms") {
  BinaryForm<Rational> f = w_state(4);
  json j = json(f);
  CHECK(j["degree"] == 4);
  BinaryForm<Rational> back = parse_binary_form<Rational>(j);
  CHECK(back.c == f.c);
  json bad = j;
  bad["coeffs"] = json::array({"1/1"});  // degree 4 needs 5 coefficients
  CHECK_THROWS_AS(parse_binary_form<Rational>(bad), JsonError);
}

TEST_CASE("factor forms round trip and re-verify") {
  FactorDecomposition<Rational> fd = thm33_decomposition(2).factor_form;
  json j = json(fd);
  CHECK(is_factor_decomposition(j));
  CHECK(!is_factor_decomposition(json(curve_union_decomposition({3, 3}).decomposition)));
  CHECK(payload_field(j) == FieldKind::rational);
  FactorDecomposition<Rational> back = parse_factor_decomposition<Rational>(j);
  CHECK(back.term_count() == fd.term_count());
  CHECK(verify(back, w_product({3, 3})).ok);
  CHECK(json(back).dump() == j.dump());

  json bad = j;
  bad["terms"][0].erase("factor_ranks");
  CHECK_THROWS_AS(parse_factor_decomposition<Rational>(bad), JsonError);
  json wrong = j;
  wrong["terms"][1]["factors"][0]["coeffs"] = json::array({"1/1", "0/1"});  // degree 1 != 3
  CHECK_THROWS_AS(parse_factor_decomposition<Rational>(wrong), JsonError);
}
