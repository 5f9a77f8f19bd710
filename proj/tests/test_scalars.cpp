#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "psrank/scalars.hpp"

using namespace psrank;

TEST_CASE("rational strings round trip and canonicalize") {
  CHECK(rational_to_string(rational_from_string("3/6")) == "1/2");
  CHECK(rational_to_string(rational_from_string("-4/2")) == "-2/1");
  CHECK(rational_to_string(rational_from_string("7")) == "7/1");
  CHECK(rational_to_string(Rational(0)) == "0/1");
  CHECK(make_rational(2, -4) == Rational(-1, 2));
  CHECK_THROWS_AS(rational_from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("x"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
}

TEST_CASE("Gaussian rational arithmetic") {
  GaussianRational i = GaussianRational::unit_i();
  CHECK(i * i == GaussianRational(-1));
  GaussianRational z(Rational(1), Rational(1));
  CHECK(z * z.conj() == GaussianRational(2));
  CHECK(z.norm() == Rational(2));
  CHECK((z / z) == GaussianRational(1));
  GaussianRational w(Rational(2), Rational(-3));
  CHECK(w * z / z == w);
  CHECK(is_zero(w - w));
  CHECK(!is_zero(w));
}

TEST_CASE("exact square roots are sign-normalized") {
  CHECK(exact_sqrt(Rational(49, 64)) == Rational(7, 8));
  CHECK(exact_sqrt(Rational(0)) == Rational(0));
  CHECK(!exact_sqrt(Rational(2)));
  CHECK(!exact_sqrt(Rational(-4)));

  CHECK(exact_sqrt(GaussianRational(-4)) == GaussianRational(Rational(0), Rational(2)));
  CHECK(exact_sqrt(GaussianRational(Rational(0), Rational(2))) ==
        GaussianRational(Rational(1), Rational(1)));
  CHECK(exact_sqrt(GaussianRational(Rational(0), Rational(-2))) ==
        GaussianRational(Rational(1), Rational(-1)));
  CHECK(!exact_sqrt(GaussianRational(3)));
  CHECK(!exact_sqrt(GaussianRational::unit_i()));
  // root * root == value whenever a root is returned
  for (long re = -3; re <= 3; ++re)
    for (long im = -3; im <= 3; ++im) {
      GaussianRational z{Rational(re), Rational(im)};
      if (auto s = exact_sqrt(z)) CHECK(*s * *s == z);
    }
}

TEST_CASE("quadratic roots in exact fields") {
  auto r = quadratic_roots(Rational(-5), Rational(6));
  REQUIRE(r.has_value());
  CHECK(r->first == Rational(3));
  CHECK(r->second == Rational(2));
  CHECK(!quadratic_roots(Rational(0), Rational(-2)));

  auto g = quadratic_roots(GaussianRational(0), GaussianRational(1));
  REQUIRE(g.has_value());
  CHECK(g->first == GaussianRational::unit_i());
  CHECK(g->second == -GaussianRational::unit_i());

  auto n = quadratic_roots_numeric(ApproxComplex(0.0), ApproxComplex(-2.0));
  CHECK(std::abs(n.first.real() - std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(n.second.real() + std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("field names") {
  CHECK(std::string(field_traits<Rational>::name) == "Q");
  CHECK(std::string(field_traits<GaussianRational>::name) == "Q(i)");
  CHECK(std::string(field_traits<ApproxComplex>::name) == "numeric");
  CHECK(std::string(field_kind_name(FieldKind::rational)) == "Q");
  CHECK(std::string(field_kind_name(FieldKind::gaussian)) == "Q(i)");
  CHECK(std::string(field_kind_name(FieldKind::numeric)) == "numeric");
  CHECK(field_traits<Rational>::exact);
  CHECK(field_traits<GaussianRational>::exact);
  CHECK(!field_traits<ApproxComplex>::exact);
}

TEST_CASE("ring axioms hold exactly on random inputs") {
  std::mt19937_64 rng(29);
  auto rq = [&]() {
    long n = static_cast<long>(rng() % 19) - 9;
    long d = 1 + static_cast<long>(rng() % 7);
    return make_rational(n, d);
  };
  for (int trial = 0; trial < 40; ++trial) {
    Rational a = rq(), b = rq(), c = rq();
    CHECK(Rational((a + b) + c) == Rational(a + (b + c)));
    CHECK(Rational((a * b) * c) == Rational(a * (b * c)));
    CHECK(Rational(a * (b + c)) == Rational(a * b + a * c));
    if (a != 0) CHECK(Rational(a * (Rational(1) / a)) == Rational(1));

    GaussianRational x(a, b), y(b, c), z(c, a);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    if (!is_zero(x)) CHECK(x * (GaussianRational(Rational(1)) / x) == GaussianRational(Rational(1)));
  }
}

TEST_CASE("quadratic roots reconstruct their quadratic") {
  std::mt19937_64 rng(31);
  auto rq = [&]() {
    long n = static_cast<long>(rng() % 13) - 6;
    long d = 1 + static_cast<long>(rng() % 4);
    return make_rational(n, d);
  };
  int reconstructed = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Rational p = rq(), q = rq();
    auto roots = quadratic_roots(p, q);
    if (!roots) continue;
    ++reconstructed;
    // t^2 + p t + q = (t - r1)(t - r2)
    CHECK(Rational(roots->first + roots->second) == Rational(-p));
    CHECK(Rational(roots->first * roots->second) == q);

    GaussianRational gp(p), gq(q);
    auto groots = quadratic_roots(gp, gq);
    REQUIRE(groots.has_value() == true);  // rational splits embed in Q(i)
    CHECK(groots->first + groots->second == GaussianRational(Rational(-1)) * gp);
    CHECK(groots->first * groots->second == gq);
  }
  CHECK(reconstructed > 5);  // perfect-square discriminants do occur
}
