#pragma once

// Apolarity for binary forms: catalecticant matrices, border rank, and
// Sylvester's algorithm. Dual forms g = sum_i v_i X^(e-i) Y^i act as the
// differential operators sum_i v_i dx^(e-i) dy^i; a simple finite root s of
// the dehomogenization p(s) = g(1,s) corresponds to the point x + s*y, and
// a drop in degree (X | g) to the point y.

#include <optional>
#include <stdexcept>
#include <vector>

#include "psrank/exactla.hpp"
#include "psrank/forms.hpp"

namespace psrank {

namespace detail {

// Dense univariate polynomials, coefficients low to high.
template <class K>
using Poly = std::vector<K>;

template <class K>
int poly_degree(const Poly<K>& p) {
  for (size_t i = p.size(); i-- > 0;)
    if (!is_zero(p[i])) return static_cast<int>(i);
  return -1;
}

template <class K>
void poly_trim(Poly<K>& p) {
  p.resize(static_cast<size_t>(poly_degree(p) + 1));
}

template <class K>
Poly<K> poly_derivative(const Poly<K>& p) {
  Poly<K> d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(K(K(static_cast<long>(i)) * p[i]));
  return d;
}

template <class K>
K poly_eval(const Poly<K>& p, const K& s) {
  K v(0);
  for (size_t i = p.size(); i-- > 0;) v = K(v * s + p[i]);
  return v;
}

// Remainder of a by b (b nonzero), both trimmed.
template <class K>
Poly<K> poly_rem(Poly<K> a, const Poly<K>& b) {
  int db = poly_degree(b);
  K lead = b[db];
  while (poly_degree(a) >= db) {
    int da = poly_degree(a);
    K f = K(a[da] / lead);
    for (int i = 0; i <= db; ++i) a[da - db + i] = K(a[da - db + i] - f * b[i]);
    a[da] = K(0);  // guard against residue from inexact cancellation patterns
    poly_trim(a);
    if (a.empty()) break;
  }
  return a;
}

template <class K>
bool poly_squarefree(const Poly<K>& p) {
  int d = poly_degree(p);
  if (d <= 0) return true;
  if (d == 1) return true;
  Poly<K> a = p, b = poly_derivative(p);
  poly_trim(a);
  while (poly_degree(b) >= 0) {
    Poly<K> r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_degree(a) == 0;  // gcd(p, p') is a nonzero constant
}

// Divide out a known root: p = (s - root) * q, returns q.
template <class K>
Poly<K> poly_deflate(const Poly<K>& p, const K& root) {
  int d = poly_degree(p);
  Poly<K> q(static_cast<size_t>(d), K(0));
  K carry = p[d];
  for (int i = d - 1; i >= 0; --i) {
    q[i] = carry;
    carry = K(p[i] + root * carry);
  }
  if (!is_zero(carry)) throw std::logic_error("poly_deflate: not a root");
  return q;
}

}  // namespace detail

// (d-e+1) x (e+1) matrix of the apolarity pairing at order e: column i is
// the operator dx^(e-i) dy^i applied to f, rows indexed by the y-exponent
// of the target monomial.
template <class K>
Matrix<K> catalecticant(const BinaryForm<K>& f, int e) {
  if (e < 0 || e > f.degree) throw std::invalid_argument("catalecticant: order out of range");
  int d = f.degree;
  Matrix<K> m(d - e + 1, e + 1);
  for (int u = 0; u <= d - e; ++u)
    for (int i = 0; i <= e; ++i) {
      long long fac = detail::diff_op_factor(d, e, u + i, i);
      if (fac != 0) m.at(u, i) = K(K(static_cast<long>(fac)) * f.c[u + i]);
    }
  return m;
}

// Rank of the middle catalecticant; for binary forms this equals the border
// (= cactus) rank.
template <class K>
int border_rank(const BinaryForm<K>& f) {
  if (f.is_zero_form()) throw std::invalid_argument("border_rank: zero form");
  return rank(catalecticant(f, f.degree / 2));
}

// First kernel basis vector of the catalecticant at order r, as a dual
// binary form; nullopt when the kernel is trivial.
template <class K>
std::optional<BinaryForm<K>> apolar_form(const BinaryForm<K>& f, int r) {
  auto basis = kernel_basis(catalecticant(f, r));
  if (basis.empty()) return std::nullopt;
  return BinaryForm<K>(r, basis.front());
}

template <class K>
bool is_squarefree(const BinaryForm<K>& g) {
  static_assert(field_traits<K>::exact, "is_squarefree requires an exact field");
  if (g.is_zero_form()) throw std::invalid_argument("is_squarefree: zero form");
  // g = X^(e - deg p) * homog(p) with p(s) = g(1, s).
  detail::Poly<K> p(g.c.begin(), g.c.end());
  int m = detail::poly_degree(p);
  if (g.degree - m >= 2) return false;
  return detail::poly_squarefree(p);
}

template <class K>
struct SylvesterInfo {
  int degree = 0;
  int border = 0;        // rank of the middle catalecticant
  int rank = 0;
  int kernel_dim = 0;    // kernel dimension of the catalecticant at order `border`
  bool squarefree_found = false;
  std::optional<BinaryForm<K>> squarefree_apolar;
};

// Deterministic search for a squarefree element of the kernel span: the
// single generator when the kernel is a line, otherwise combinations
// sum_j rho^j basis[j] for rho = 1..8.
template <class K>
std::optional<BinaryForm<K>> find_squarefree_in_kernel(const std::vector<std::vector<K>>& basis,
                                                       int degree) {
  if (basis.empty()) return std::nullopt;
  if (basis.size() == 1) {
    BinaryForm<K> g(degree, basis.front());
    if (is_squarefree(g)) return g;
    return std::nullopt;
  }
  for (int rho = 1; rho <= 8; ++rho) {
    std::vector<K> v(basis.front().size(), K(0));
    K w(1);
    for (const auto& b : basis) {
      for (size_t i = 0; i < v.size(); ++i) v[i] = K(v[i] + w * b[i]);
      w = K(w * K(static_cast<long>(rho)));
    }
    BinaryForm<K> g(degree, std::move(v));
    if (!g.is_zero_form() && is_squarefree(g)) return g;
  }
  return std::nullopt;
}

// Sylvester dichotomy: with r the border rank, the symmetric rank is r if
// the degree-r part of the apolar ideal contains a squarefree form, else
// d + 2 - r. A kernel of dimension >= 2 only occurs at the even-degree
// boundary (border = d/2 + 1), where a generic combination is squarefree.
template <class K>
SylvesterInfo<K> sylvester_analyze(const BinaryForm<K>& f) {
  static_assert(field_traits<K>::exact, "sylvester_analyze requires an exact field");
  if (f.degree < 1) throw std::invalid_argument("sylvester_analyze: degree must be positive");
  if (f.is_zero_form()) throw std::invalid_argument("sylvester_analyze: zero form");
  SylvesterInfo<K> info;
  info.degree = f.degree;
  info.border = border_rank(f);
  auto basis = kernel_basis(catalecticant(f, info.border));
  info.kernel_dim = static_cast<int>(basis.size());
  auto g = find_squarefree_in_kernel(basis, info.border);
  info.squarefree_found = g.has_value();
  info.squarefree_apolar = std::move(g);
  info.rank = info.squarefree_found ? info.border : f.degree + 2 - info.border;
  return info;
}

template <class K>
int sylvester_rank(const BinaryForm<K>& f) {
  return sylvester_analyze(f).rank;
}

// --- decomposition -----------------------------------------------------

namespace detail {

// All roots of p that lie in K, found by bounded rational-root search plus
// exact quadratic splitting; nullopt when p does not split over K.
std::optional<std::vector<Rational>> split_over_field(const Poly<Rational>& p);
std::optional<std::vector<GaussianRational>> split_over_field(const Poly<GaussianRational>& p);

}  // namespace detail

// Power-sum decomposition read off a squarefree apolar form g: one point
// per root of g, weights solved exactly. nullopt when g does not split
// into linear factors over K.
template <class K>
std::optional<Decomposition<K>> decompose_from_apolar(const BinaryForm<K>& f,
                                                      const BinaryForm<K>& g) {
  detail::Poly<K> p(g.c.begin(), g.c.end());
  int m = detail::poly_degree(p);
  if (m < 0) throw std::invalid_argument("decompose_from_apolar: zero apolar form");
  p.resize(static_cast<size_t>(m) + 1);
  std::vector<LinearForm<K>> points;
  if (g.degree - m >= 1) points.emplace_back(K(0), K(1));  // root at infinity: the point y
  if (m >= 1) {
    auto roots = detail::split_over_field(p);
    if (!roots) return std::nullopt;
    for (const K& s : *roots) points.emplace_back(K(1), s);
  }
  // Solve f = sum_u lambda_u (a_u x + b_u y)^d.
  Matrix<K> A(f.degree + 1, static_cast<int>(points.size()));
  for (size_t u = 0; u < points.size(); ++u) {
    std::vector<K> col = power_coeffs(points[u], f.degree);
    for (int j = 0; j <= f.degree; ++j) A.at(j, static_cast<int>(u)) = col[j];
  }
  auto lam = solve(A, f.c);
  if (!lam) return std::nullopt;
  Decomposition<K> dec;
  dec.multidegree = {f.degree};
  for (size_t u = 0; u < points.size(); ++u) {
    if (is_zero((*lam)[u])) continue;
    RankOneTerm<K> t;
    t.weight = (*lam)[u];
    t.vectors = {points[u]};
    dec.terms.push_back(std::move(t));
  }
  return dec;
}

struct SylvesterOutcome {
  int degree = 0;
  int border = 0;
  int rank = 0;
  bool boundary_kernel = false;  // kernel dimension >= 2 at the border order
  FieldKind requested = FieldKind::rational;
  FieldKind achieved = FieldKind::rational;
  std::optional<Decomposition<Rational>> dec_q;
  std::optional<Decomposition<GaussianRational>> dec_qi;
  std::optional<Decomposition<ApproxComplex>> dec_c;
  VerifyReport check;
  long term_count() const;
};

// Full Sylvester pipeline over the requested field, falling back to the
// numeric tier (companion-matrix roots, residual-certified) when the apolar
// form does not split exactly.
SylvesterOutcome sylvester_decompose(const BinaryForm<Rational>& f, FieldKind field,
                                     double tol = 1e-9);

// Numeric roots of p (low-to-high coefficients) via the companion matrix.
std::vector<ApproxComplex> poly_roots_numeric(const std::vector<ApproxComplex>& p);

}  // namespace psrank
