#include "psrank/scalars.hpp"

#include <stdexcept>

namespace psrank {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rational_from_string: empty string");
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("rational_from_string: malformed rational '" + s + "'");
  if (sgn(q.get_den()) == 0)
    throw std::invalid_argument("rational_from_string: zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  Rational n = o.norm();
  if (is_zero(n)) throw std::domain_error("GaussianRational: division by zero");
  GaussianRational c = o.conj();
  *this *= c;
  re /= n;
  im /= n;
  return *this;
}

const char* field_kind_name(FieldKind f) {
  switch (f) {
    case FieldKind::rational: return field_traits<Rational>::name;
    case FieldKind::gaussian: return field_traits<GaussianRational>::name;
    case FieldKind::numeric: return field_traits<ApproxComplex>::name;
  }
  return "?";
}

namespace {

// Nonnegative integer square root if n is a perfect square.
std::optional<mpz_class> mpz_exact_sqrt(const mpz_class& n) {
  if (sgn(n) < 0) return std::nullopt;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

}  // namespace

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  auto num = mpz_exact_sqrt(q.get_num());
  if (!num) return std::nullopt;
  auto den = mpz_exact_sqrt(q.get_den());
  if (!den) return std::nullopt;
  return Rational(*num, *den);
}

std::optional<GaussianRational> exact_sqrt(const GaussianRational& z) {
  if (is_zero(z.im)) {
    // sqrt of a plain rational inside Q(i): either sqrt(re) or i*sqrt(-re).
    if (auto r = exact_sqrt(z.re)) return GaussianRational(*r, Rational(0));
    if (auto r = exact_sqrt(Rational(-z.re))) return GaussianRational(Rational(0), *r);
    return std::nullopt;
  }
  // (u + vi)^2 = z needs |z| rational, u^2 = (re + |z|)/2 a rational square.
  auto n = exact_sqrt(z.norm());
  if (!n) return std::nullopt;
  auto u = exact_sqrt(Rational((z.re + *n) / 2));
  if (!u) return std::nullopt;
  if (is_zero(*u)) return std::nullopt;  // would need im = 0, handled above
  Rational v = z.im / (2 * (*u));
  GaussianRational root(*u, v);
  if (sgn(root.re) < 0 || (sgn(root.re) == 0 && sgn(root.im) < 0)) root = -root;
  return root;
}

}  // namespace psrank
