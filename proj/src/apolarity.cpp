#include "psrank/apolarity.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <utility>

namespace psrank {

namespace {

// All positive divisors, via trial division; nullopt when the cofactor
// cannot be certified prime or the divisor list explodes. Callers treat
// nullopt as "root search failed", which cascades to the numeric tier.
std::optional<std::vector<mpz_class>> divisors_of(mpz_class n) {
  n = abs(n);
  if (n == 0) return std::nullopt;
  std::vector<std::pair<mpz_class, int>> fac;
  mpz_class m = n;
  for (mpz_class q = 2; q <= 100000 && q * q <= m; ++q) {
    if (m % q == 0) {
      int e = 0;
      while (m % q == 0) {
        m /= q;
        ++e;
      }
      fac.emplace_back(q, e);
    }
  }
  if (m > 1) {
    bool small_enough = m < mpz_class(100000) * mpz_class(100000);
    if (!small_enough && mpz_probab_prime_p(m.get_mpz_t(), 25) == 0) return std::nullopt;
    fac.emplace_back(m, 1);
  }
  std::vector<mpz_class> divs{1};
  for (const auto& [q, e] : fac) {
    size_t base = divs.size();
    mpz_class pk = 1;
    for (int t = 1; t <= e; ++t) {
      pk *= q;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
    if (divs.size() > 512) return std::nullopt;
  }
  return divs;
}

// One rational root of p (deg >= 1, p[0] != 0), by the rational root test.
std::optional<Rational> find_rational_root(const detail::Poly<Rational>& p) {
  int d = detail::poly_degree(p);
  mpz_class ell = 1;
  for (int i = 0; i <= d; ++i) ell = lcm(ell, p[i].get_den());
  std::vector<mpz_class> a(d + 1);
  for (int i = 0; i <= d; ++i) a[i] = p[i].get_num() * (ell / p[i].get_den());
  auto d0 = divisors_of(a[0]);
  auto dm = divisors_of(a[d]);
  if (!d0 || !dm) return std::nullopt;
  std::vector<Rational> cands;
  for (const mpz_class& nu : *d0)
    for (const mpz_class& de : *dm) {
      Rational c(nu, de);
      c.canonicalize();
      cands.push_back(c);
      cands.push_back(Rational(-c));
    }
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  for (const Rational& c : cands)
    if (is_zero(detail::poly_eval(p, c))) return c;
  return std::nullopt;
}

}  // namespace

namespace detail {

std::optional<std::vector<Rational>> split_over_field(const Poly<Rational>& p_in) {
  Poly<Rational> p = p_in;
  poly_trim(p);
  std::vector<Rational> roots;
  while (true) {
    int d = poly_degree(p);
    if (d <= 0) break;
    if (d == 1) {
      roots.push_back(Rational(-p[0] / p[1]));
      break;
    }
    if (d == 2) {
      auto rr = quadratic_roots(Rational(p[1] / p[2]), Rational(p[0] / p[2]));
      if (!rr) return std::nullopt;
      roots.push_back(rr->first);
      roots.push_back(rr->second);
      break;
    }
    if (is_zero(p[0])) {
      roots.push_back(Rational(0));
      p.erase(p.begin());
      continue;
    }
    auto r = find_rational_root(p);
    if (!r) return std::nullopt;
    roots.push_back(*r);
    p = poly_deflate(p, *r);
  }
  return roots;
}

std::optional<std::vector<GaussianRational>> split_over_field(const Poly<GaussianRational>& p_in) {
  Poly<GaussianRational> p = p_in;
  poly_trim(p);
  std::vector<GaussianRational> roots;
  while (true) {
    int d = poly_degree(p);
    if (d <= 0) break;
    if (d == 1) {
      roots.push_back(GaussianRational(-p[0] / p[1]));
      break;
    }
    if (d == 2) {
      auto rr = quadratic_roots(GaussianRational(p[1] / p[2]), GaussianRational(p[0] / p[2]));
      if (!rr) return std::nullopt;
      roots.push_back(rr->first);
      roots.push_back(rr->second);
      break;
    }
    if (is_zero(p[0])) {
      roots.push_back(GaussianRational(0));
      p.erase(p.begin());
      continue;
    }
    bool all_real = true;
    for (const auto& c : p) all_real = all_real && is_zero(c.im);
    if (!all_real) return std::nullopt;  // no Gaussian root search beyond degree 2
    Poly<Rational> pr(p.size());
    for (size_t i = 0; i < p.size(); ++i) pr[i] = p[i].re;
    auto r = find_rational_root(pr);
    if (!r) return std::nullopt;
    roots.push_back(GaussianRational(*r));
    p = poly_deflate(p, GaussianRational(*r));
  }
  return roots;
}

}  // namespace detail

std::vector<ApproxComplex> poly_roots_numeric(const std::vector<ApproxComplex>& p_in) {
  std::vector<ApproxComplex> p = p_in;
  while (!p.empty() && is_zero(p.back())) p.pop_back();
  if (p.size() <= 1) return {};
  int d = static_cast<int>(p.size()) - 1;
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) comp(i, d - 1) = -p[i] / p[d];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("poly_roots_numeric: eigensolver failed");
  std::vector<ApproxComplex> roots(solver.eigenvalues().data(),
                                   solver.eigenvalues().data() + d);
  std::sort(roots.begin(), roots.end(), [](const ApproxComplex& a, const ApproxComplex& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return roots;
}

namespace {

template <class K>
std::optional<Decomposition<K>> weights_for_points(const BinaryForm<K>& f,
                                                   const std::vector<LinearForm<K>>& points) {
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

// The symmetric integer set of the given size: 0, +-1, +-2, ...
std::vector<long> symmetric_nodes(int count) {
  std::vector<long> nodes;
  if (count % 2 == 1) nodes.push_back(0);
  for (long l = 1; l <= count / 2; ++l) {
    nodes.push_back(l);
    nodes.push_back(-l);
  }
  return nodes;
}

// Integer node sets give apolar forms that split with small rational roots;
// membership in the kernel is checked exactly, so this is a sound fast
// path, not a heuristic answer. Two candidates per rank R: all R nodes
// finite, or the point at infinity (the vector y) plus R-1 finite nodes.
template <class K>
std::optional<Decomposition<K>> try_symmetric_nodes(const BinaryForm<K>& f, int R) {
  Matrix<K> M = catalecticant(f, R);
  for (int at_infinity = 0; at_infinity <= 1; ++at_infinity) {
    std::vector<long> nodes = symmetric_nodes(R - at_infinity);
    detail::Poly<K> p{K(1)};  // prod_t (t - s)
    for (long t : nodes) {
      detail::Poly<K> np(p.size() + 1, K(0));
      for (size_t i = 0; i < p.size(); ++i) {
        np[i] = K(np[i] + K(t) * p[i]);
        np[i + 1] = K(np[i + 1] - p[i]);
      }
      p = std::move(np);
    }
    p.resize(static_cast<size_t>(R) + 1, K(0));  // X * homog(p) when a node sits at infinity
    bool member = true;
    for (int u = 0; u < M.rows && member; ++u) {
      K acc(0);
      for (int i = 0; i <= R; ++i) acc = K(acc + M.at(u, i) * p[i]);
      member = is_zero(acc);
    }
    if (!member) continue;
    std::vector<LinearForm<K>> points;
    if (at_infinity) points.emplace_back(K(0), K(1));
    for (long t : nodes) points.emplace_back(K(1), K(t));
    auto dec = weights_for_points(f, points);
    if (!dec) throw std::logic_error("try_symmetric_nodes: kernel member failed to interpolate");
    return dec;
  }
  return std::nullopt;
}

// Squarefree dual form of degree rank(f), over the exact field K.
template <class K>
std::optional<BinaryForm<K>> splitting_candidate(const BinaryForm<K>& f,
                                                 const SylvesterInfo<K>& info) {
  if (info.rank == info.border) return info.squarefree_apolar;
  auto basis = kernel_basis(catalecticant(f, info.rank));
  return find_squarefree_in_kernel(basis, info.rank);
}

template <class K>
std::optional<Decomposition<K>> try_exact(const BinaryForm<K>& f) {
  auto info = sylvester_analyze(f);
  if (auto dec = try_symmetric_nodes(f, info.rank)) return dec;
  auto g = splitting_candidate(f, info);
  if (!g) return std::nullopt;
  return decompose_from_apolar(f, *g);
}

Decomposition<ApproxComplex> numeric_decompose(const BinaryForm<Rational>& f,
                                               const SylvesterInfo<Rational>& info) {
  auto g = splitting_candidate(f, info);
  if (!g) throw std::runtime_error("sylvester: no squarefree apolar form found in search");
  detail::Poly<Rational> pq(g->c.begin(), g->c.end());
  int m = detail::poly_degree(pq);
  std::vector<ApproxComplex> p(m + 1);
  for (int i = 0; i <= m; ++i) p[i] = to_approx(pq[i]);
  std::vector<LinearForm<ApproxComplex>> points;
  if (g->degree - m >= 1) points.emplace_back(ApproxComplex(0), ApproxComplex(1));
  for (const ApproxComplex& s : poly_roots_numeric(p)) points.emplace_back(ApproxComplex(1), s);

  Eigen::MatrixXcd A(f.degree + 1, static_cast<int>(points.size()));
  Eigen::VectorXcd b(f.degree + 1);
  for (size_t u = 0; u < points.size(); ++u) {
    std::vector<ApproxComplex> col = power_coeffs(points[u], f.degree);
    for (int j = 0; j <= f.degree; ++j) A(j, static_cast<int>(u)) = col[j];
  }
  for (int j = 0; j <= f.degree; ++j) b(j) = to_approx(f.c[j]);
  Eigen::VectorXcd lam = A.colPivHouseholderQr().solve(b);

  Decomposition<ApproxComplex> dec;
  dec.multidegree = {f.degree};
  for (size_t u = 0; u < points.size(); ++u) {
    RankOneTerm<ApproxComplex> t;
    t.weight = lam(static_cast<int>(u));
    t.vectors = {points[u]};
    dec.terms.push_back(std::move(t));
  }
  return dec;
}

}  // namespace

long SylvesterOutcome::term_count() const {
  if (dec_q) return dec_q->term_count();
  if (dec_qi) return dec_qi->term_count();
  if (dec_c) return dec_c->term_count();
  return 0;
}

SylvesterOutcome sylvester_decompose(const BinaryForm<Rational>& f, FieldKind field, double tol) {
  auto info = sylvester_analyze(f);
  SylvesterOutcome out;
  out.degree = f.degree;
  out.border = info.border;
  out.rank = info.rank;
  out.boundary_kernel = info.kernel_dim >= 2;
  out.requested = field;

  if (field == FieldKind::rational) {
    if (auto dec = try_exact(f)) {
      out.dec_q = std::move(*dec);
      out.achieved = FieldKind::rational;
      out.check = verify(*out.dec_q, to_tensor(f));
      return out;
    }
  } else if (field == FieldKind::gaussian) {
    BinaryForm<GaussianRational> fi = form_cast<GaussianRational>(f);
    if (auto dec = try_exact(fi)) {
      out.dec_qi = std::move(*dec);
      out.achieved = FieldKind::gaussian;
      out.check = verify(*out.dec_qi, to_tensor(fi));
      return out;
    }
  }
  out.dec_c = numeric_decompose(f, info);
  out.achieved = FieldKind::numeric;
  out.check = verify(*out.dec_c, tensor_cast<ApproxComplex>(to_tensor(f)), tol);
  return out;
}

}  // namespace psrank
