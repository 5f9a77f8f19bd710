#pragma once

// Scalar fields used throughout: exact rationals Q (GMP-backed), the
// Gaussian rationals Q(i), and double-precision complex numbers as the
// approximate fallback. Conventions:
//   - Rational values are kept canonical: gcd(num, den) = 1, den > 0.
//   - exact_sqrt returns the sign-normalized root: re > 0, or re = 0 and
//     im >= 0 (for plain rationals: the nonnegative root).
//   - quadratic_roots(p, q) solves t^2 + p t + q = 0 and orders the roots
//     as ((-p + s)/2, (-p - s)/2) with s the normalized root of p^2 - 4q.

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>

namespace psrank {

using Rational = mpq_class;
using ApproxComplex = std::complex<double>;

// den must be nonzero; result is canonicalized.
Rational make_rational(long num, long den = 1);

// Accepts "num" or "num/den" with optional sign, arbitrary precision.
// Throws std::invalid_argument on malformed input or zero denominator.
Rational rational_from_string(const std::string& s);

// Canonical "num/den" (always includes the denominator, e.g. "3/1").
std::string rational_to_string(const Rational& q);

struct GaussianRational {
  Rational re, im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(int n) : re(n), im(0) {}
  GaussianRational(long n) : re(n), im(0) {}
  GaussianRational(const Rational& r) : re(r), im(0) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational unit_i() { return GaussianRational(Rational(0), Rational(1)); }

  GaussianRational conj() const { return GaussianRational(re, -im); }
  Rational norm() const { return re * re + im * im; }  // |z|^2

  GaussianRational operator-() const { return GaussianRational(-re, -im); }
  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const GaussianRational& z) { return is_zero(z.re) && is_zero(z.im); }
inline bool is_zero(const ApproxComplex& z) { return z.real() == 0.0 && z.imag() == 0.0; }

// Magnitude as a double, for residual reporting only.
inline double abs_approx(const Rational& q) { return std::abs(q.get_d()); }
inline double abs_approx(const GaussianRational& z) { return std::sqrt(z.norm().get_d()); }
inline double abs_approx(const ApproxComplex& z) { return std::abs(z); }

inline ApproxComplex to_approx(const Rational& q) { return ApproxComplex(q.get_d(), 0.0); }
inline ApproxComplex to_approx(const GaussianRational& z) {
  return ApproxComplex(z.re.get_d(), z.im.get_d());
}
inline ApproxComplex to_approx(const ApproxComplex& z) { return z; }

template <class K>
struct field_traits;

template <>
struct field_traits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "Q";
};
template <>
struct field_traits<GaussianRational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "Q(i)";
};
template <>
struct field_traits<ApproxComplex> {
  static constexpr bool exact = false;
  static constexpr const char* name = "numeric";
};

enum class FieldKind : std::uint8_t { rational, gaussian, numeric };

const char* field_kind_name(FieldKind f);

std::optional<Rational> exact_sqrt(const Rational& q);
std::optional<GaussianRational> exact_sqrt(const GaussianRational& z);

template <class K>
std::optional<std::pair<K, K>> quadratic_roots(const K& p, const K& q) {
  auto s = exact_sqrt(K(p * p - K(4) * q));
  if (!s) return std::nullopt;
  K half = K(1) / K(2);
  return std::make_pair((-p + *s) * half, (-p - *s) * half);
}

inline std::pair<ApproxComplex, ApproxComplex> quadratic_roots_numeric(const ApproxComplex& p,
                                                                       const ApproxComplex& q) {
  ApproxComplex s = std::sqrt(p * p - 4.0 * q);
  if (s.real() < 0 || (s.real() == 0 && s.imag() < 0)) s = -s;
  return {(-p + s) / 2.0, (-p - s) / 2.0};
}

}  // namespace psrank
