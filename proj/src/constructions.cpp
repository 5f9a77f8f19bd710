#include "psrank/constructions.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace psrank {

BinaryForm<Rational> w_state(int d) {
  if (d < 1) throw std::invalid_argument("w_state: degree must be >= 1");
  BinaryForm<Rational> f(d);
  f.c[1] = Rational(1);
  return f;
}

PSTensor<Rational> w_product(const std::vector<int>& multidegree) {
  if (multidegree.empty()) throw std::invalid_argument("w_product: empty multidegree");
  for (int d : multidegree)
    if (d < 1) throw std::invalid_argument("w_product: degrees must be >= 1");
  PSTensor<Rational> t(multidegree);
  t.at(std::vector<int>(multidegree.size(), 1)) = Rational(1);
  return t;
}

XiScheme::XiScheme(std::vector<Rational> xi_values) : xi(std::move(xi_values)) {
  if (xi.empty()) throw std::invalid_argument("XiScheme: xi must be nonempty");
  for (size_t i = 0; i < xi.size(); ++i) {
    if (xi[i] == 0 || xi[i] == 1)
      throw std::invalid_argument("XiScheme: xi values must avoid 0 and 1");
    for (size_t j = i + 1; j < xi.size(); ++j)
      if (xi[i] == xi[j]) throw std::invalid_argument("XiScheme: xi values must be distinct");
  }
}

Rational XiScheme::a(int i, int j) const {
  if (i < 0 || j < 0 || i >= k() || j >= k() || i == j)
    throw std::invalid_argument("XiScheme::a: indices must be distinct and in range");
  return Rational(xi[i] / (xi[i] - xi[j]));
}

std::vector<std::vector<Rational>> XiScheme::a_matrix() const {
  std::vector<std::vector<Rational>> m(k(), std::vector<Rational>(k(), Rational(0)));
  for (int i = 0; i < k(); ++i)
    for (int j = 0; j < k(); ++j)
      if (i != j) m[i][j] = a(i, j);
  return m;
}

std::vector<Rational> default_xi(int k) {
  if (k < 1) throw std::invalid_argument("default_xi: k must be >= 1");
  std::vector<Rational> v;
  for (int i = 0; i < k; ++i) v.emplace_back(i + 2);
  return v;
}

std::vector<Rational> random_xi(int k, std::mt19937_64& rng) {
  if (k < 1) throw std::invalid_argument("random_xi: k must be >= 1");
  std::uniform_int_distribution<int> num(-40, 40), den(1, 7);
  std::vector<Rational> v;
  while (static_cast<int>(v.size()) < k) {
    Rational c(num(rng), den(rng));
    c.canonicalize();
    if (c == 0 || c == 1) continue;
    if (std::find(v.begin(), v.end(), c) != v.end()) continue;
    v.push_back(c);
  }
  return v;
}

Check33Report check_condition_33(const std::vector<std::vector<Rational>>& a) {
  int k = static_cast<int>(a.size());
  if (k < 2) throw std::invalid_argument("check_condition_33: need k >= 2");
  if (k > 20) throw std::invalid_argument("check_condition_33: k too large for subset sweep");
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != k)
      throw std::invalid_argument("check_condition_33: matrix must be k x k");
  Check33Report rep;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    if (std::popcount(mask) < 2) continue;
    Rational sum(0);
    for (int p = 0; p < k; ++p) {
      if (!(mask >> p & 1)) continue;
      Rational prod(1);
      for (int q = 0; q < k; ++q)
        if ((mask >> q & 1) && q != p) prod *= a[p][q];
      sum += prod;
    }
    if (sum != 1) {
      rep.ok = false;
      for (int p = 0; p < k; ++p)
        if (mask >> p & 1) rep.failing_subset.push_back(p + 1);
      return rep;
    }
  }
  return rep;
}

namespace {

BinaryForm<Rational> w3_plus(const Rational& c) {
  BinaryForm<Rational> f(3);
  f.c[1] = Rational(1);
  f.c[3] = c;
  return f;
}

int tier_order(FieldKind f) { return static_cast<int>(f); }

// Smallest field in which the cubic splits into linear powers.
FieldKind best_tier(const BinaryForm<Rational>& f) {
  if (sylvester_decompose(f, FieldKind::rational).achieved == FieldKind::rational)
    return FieldKind::rational;
  if (sylvester_decompose(f, FieldKind::gaussian).achieved == FieldKind::gaussian)
    return FieldKind::gaussian;
  return FieldKind::numeric;
}

template <class K>
Decomposition<K> get_tier_decomposition(const SylvesterOutcome& out);

template <>
Decomposition<Rational> get_tier_decomposition<Rational>(const SylvesterOutcome& out) {
  return out.dec_q.value();
}
template <>
Decomposition<GaussianRational> get_tier_decomposition<GaussianRational>(const SylvesterOutcome& out) {
  return out.dec_qi.value();
}
template <>
Decomposition<ApproxComplex> get_tier_decomposition<ApproxComplex>(const SylvesterOutcome& out) {
  return out.dec_c.value();
}

template <class K>
Decomposition<K> split_factor_form(const FactorDecomposition<Rational>& form, FieldKind request) {
  std::map<std::vector<Rational>, Decomposition<K>> cache;
  for (const auto& term : form.terms)
    for (const auto& f : term.factors)
      if (!cache.count(f.c))
        cache.emplace(f.c, get_tier_decomposition<K>(sylvester_decompose(f, request)));
  Decomposition<K> out;
  out.multidegree = form.multidegree;
  for (const auto& term : form.terms) {
    std::vector<const Decomposition<K>*> parts;
    std::vector<int> radix;
    for (const auto& f : term.factors) {
      parts.push_back(&cache.at(f.c));
      radix.push_back(static_cast<int>(parts.back()->terms.size()) - 1);
    }
    std::vector<int> idx(parts.size(), 0);
    do {
      RankOneTerm<K> t;
      t.weight = scalar_cast<K, Rational>(term.weight);
      for (size_t s = 0; s < parts.size(); ++s) {
        const RankOneTerm<K>& rt = parts[s]->terms[idx[s]];
        t.weight = K(t.weight * rt.weight);
        t.vectors.push_back(rt.vectors[0]);
      }
      out.terms.push_back(std::move(t));
    } while (next_index(radix, idx));
  }
  return out;
}

}  // namespace

Thm33Result thm33_decomposition(int k, std::optional<std::vector<Rational>> xi) {
  if (k < 1) throw std::invalid_argument("thm33_decomposition: k must be >= 1");
  XiScheme scheme(xi ? std::move(*xi) : default_xi(k));
  if (scheme.k() != k) throw std::invalid_argument("thm33_decomposition: xi length must equal k");

  Thm33Result res;
  res.k = k;
  res.xi = scheme.xi;
  if (k >= 2) {
    auto rep = check_condition_33(scheme.a_matrix());
    if (!rep.ok) throw std::logic_error("thm33_decomposition: coupling identity failed");
  }

  BinaryForm<Rational> ycube(3);
  ycube.c[3] = Rational(1);

  FactorDecomposition<Rational>& form = res.factor_form;
  form.multidegree.assign(k, 3);
  FactorTerm<Rational> g;
  g.weight = Rational(1);
  g.factors.assign(k, w3_plus(Rational(1)));
  g.factor_ranks.assign(k, 2);
  form.terms.push_back(std::move(g));
  for (int i = 0; i < k; ++i) {
    FactorTerm<Rational> h;
    h.weight = Rational(-1);
    for (int j = 0; j < k; ++j) {
      if (j == i) {
        h.factors.push_back(ycube);
        h.factor_ranks.push_back(1);
      } else {
        h.factors.push_back(w3_plus(scheme.a(i, j)));
        h.factor_ranks.push_back(2);
      }
    }
    form.terms.push_back(std::move(h));
  }
  res.split_count = form.term_count();

  PSTensor<Rational> target = w_product(std::vector<int>(k, 3));
  res.factor_check = verify(form, target);

  // Validate every rank annotation and settle the rank-one tier.
  FieldKind tier = FieldKind::rational;
  std::map<std::vector<Rational>, FieldKind> fields;
  for (const auto& term : form.terms)
    for (size_t s = 0; s < term.factors.size(); ++s) {
      const auto& f = term.factors[s];
      if (sylvester_rank(f) != term.factor_ranks[s])
        throw std::logic_error("thm33_decomposition: factor rank annotation mismatch");
      if (!fields.count(f.c)) fields.emplace(f.c, best_tier(f));
      if (tier_order(fields.at(f.c)) > tier_order(tier)) tier = fields.at(f.c);
    }
  res.tier = tier;
  for (const auto& [coeffs, fk] : fields) {
    std::string desc;
    for (size_t i = 0; i < coeffs.size(); ++i)
      desc += (i ? "," : "") + rational_to_string(coeffs[i]);
    res.factor_fields.push_back(desc + " -> " + field_kind_name(fk));
  }

  if (tier == FieldKind::rational) {
    res.rank_one_q = split_factor_form<Rational>(form, FieldKind::rational);
    res.rank_one_check = verify(*res.rank_one_q, target);
  } else if (tier == FieldKind::gaussian) {
    res.rank_one_qi = split_factor_form<GaussianRational>(form, FieldKind::gaussian);
    res.rank_one_check = verify(*res.rank_one_qi, tensor_cast<GaussianRational>(target));
  } else {
    res.rank_one_c = split_factor_form<ApproxComplex>(form, FieldKind::numeric);
    res.rank_one_check = verify(*res.rank_one_c, tensor_cast<ApproxComplex>(target));
  }
  if (res.rank_one_check.term_count != res.split_count)
    throw std::logic_error("thm33_decomposition: split term count mismatch");
  return res;
}

CurvePointSet default_curve_points(const std::vector<int>& multidegree) {
  int k = static_cast<int>(multidegree.size());
  if (k < 1) throw std::invalid_argument("default_curve_points: empty multidegree");
  if (k > 20) throw std::invalid_argument("default_curve_points: too many factors");
  CurvePointSet ps;
  ps.multidegree = multidegree;
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    int dl = 0;
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1) dl += multidegree[i];
    std::vector<Rational> ts;
    for (int j = 0; j <= dl; ++j) ts.emplace_back(j);
    ps.lists.emplace_back(mask, std::move(ts));
  }
  return ps;
}

RankOneTerm<Rational> curve_point(const std::vector<int>& multidegree, std::uint32_t mask,
                                  const Rational& t) {
  RankOneTerm<Rational> p;
  p.weight = Rational(1);
  for (size_t i = 0; i < multidegree.size(); ++i)
    p.vectors.emplace_back(Rational(1), (mask >> i & 1) ? t : Rational(0));
  return p;
}

std::vector<RankOneTerm<Rational>> curve_support(const CurvePointSet& ps) {
  std::vector<RankOneTerm<Rational>> points;
  points.push_back(curve_point(ps.multidegree, 0, Rational(0)));
  for (const auto& [mask, ts] : ps.lists)
    for (size_t j = 1; j < ts.size(); ++j) points.push_back(curve_point(ps.multidegree, mask, ts[j]));
  return points;
}

CurveResult curve_union_decomposition(const std::vector<int>& multidegree,
                                      const std::optional<CurvePointSet>& params) {
  int k = static_cast<int>(multidegree.size());
  if (k < 1) throw std::invalid_argument("curve_union_decomposition: empty multidegree");
  for (int d : multidegree)
    if (d < 3) throw std::invalid_argument("curve_union_decomposition: degrees must be >= 3");
  CurveResult res;
  res.points = params ? *params : default_curve_points(multidegree);
  const CurvePointSet& ps = res.points;
  if (ps.multidegree != multidegree)
    throw std::invalid_argument("curve_union_decomposition: point set multidegree mismatch");
  if (ps.lists.size() != (1u << k) - 1)
    throw std::invalid_argument("curve_union_decomposition: need one list per nonempty subset");
  for (size_t m = 0; m < ps.lists.size(); ++m) {
    const auto& [mask, ts] = ps.lists[m];
    if (mask != m + 1)
      throw std::invalid_argument("curve_union_decomposition: subset masks must ascend from 1");
    int dl = 0;
    for (int i = 0; i < k; ++i)
      if (mask >> i & 1) dl += multidegree[i];
    if (static_cast<int>(ts.size()) != dl + 1)
      throw std::invalid_argument("curve_union_decomposition: parameter list length must be d_subset+1");
    if (ts.empty() || !is_zero(ts[0]))
      throw std::invalid_argument("curve_union_decomposition: parameter lists must start at 0");
    for (size_t i = 0; i < ts.size(); ++i)
      for (size_t j = i + 1; j < ts.size(); ++j)
        if (ts[i] == ts[j])
          throw std::invalid_argument("curve_union_decomposition: parameters must be distinct");
  }

  std::vector<RankOneTerm<Rational>> points = curve_support(ps);
  res.available_points = static_cast<long>(points.size());

  PSTensor<Rational> target = w_product(multidegree);
  Matrix<Rational> A(static_cast<int>(target.coeffs.size()), static_cast<int>(points.size()));
  for (size_t u = 0; u < points.size(); ++u) {
    PSTensor<Rational> col = expand_rank_one(points[u], multidegree);
    for (size_t r = 0; r < col.coeffs.size(); ++r)
      A.at(static_cast<int>(r), static_cast<int>(u)) = col.coeffs[r];
  }
  auto lam = solve(A, target.coeffs);
  if (!lam)
    throw std::runtime_error(
        "curve_union_decomposition: exact system inconsistent (parameter collision?)");

  res.decomposition.multidegree = multidegree;
  for (size_t u = 0; u < points.size(); ++u) {
    if (is_zero((*lam)[u])) continue;
    RankOneTerm<Rational> t = points[u];
    t.weight = (*lam)[u];
    res.decomposition.terms.push_back(std::move(t));
  }
  res.check = verify(res.decomposition, target);
  return res;
}

PruneResult prune_support(const std::vector<RankOneTerm<Rational>>& points,
                          const PSTensor<Rational>& target) {
  // Input weights are ignored: rows are the unit-weight expansions and the
  // output weights are re-solved on the survivors.
  size_t n = points.size();
  std::vector<std::vector<Rational>> rows;
  rows.reserve(n);
  for (const auto& p : points) {
    RankOneTerm<Rational> unit;
    unit.weight = Rational(1);
    unit.vectors = p.vectors;
    rows.push_back(expand_rank_one(unit, target.multidegree).coeffs);
  }
  std::vector<bool> kept(n, true);
  auto live_rows = [&](size_t skip) {
    std::vector<std::vector<Rational>> out;
    for (size_t i = 0; i < n; ++i)
      if (kept[i] && i != skip) out.push_back(rows[i]);
    return out;
  };
  if (!in_span(live_rows(n), target.coeffs))
    throw std::invalid_argument("prune_support: target not in the span of the points");
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = n; i-- > 0;) {
      if (!kept[i]) continue;
      if (in_span(live_rows(i), target.coeffs)) {
        kept[i] = false;
        changed = true;
      }
    }
  }

  PruneResult res;
  for (size_t i = 0; i < n; ++i)
    if (kept[i]) res.kept.push_back(i);
  Matrix<Rational> A(static_cast<int>(target.coeffs.size()), static_cast<int>(res.kept.size()));
  for (size_t u = 0; u < res.kept.size(); ++u)
    for (size_t r = 0; r < target.coeffs.size(); ++r)
      A.at(static_cast<int>(r), static_cast<int>(u)) = rows[res.kept[u]][r];
  auto lam = solve(A, target.coeffs);
  if (!lam) throw std::logic_error("prune_support: surviving set lost the target");
  res.decomposition.multidegree = target.multidegree;
  for (size_t u = 0; u < res.kept.size(); ++u) {
    RankOneTerm<Rational> t;
    t.weight = (*lam)[u];
    t.vectors = points[res.kept[u]].vectors;
    res.decomposition.terms.push_back(std::move(t));
  }
  return res;
}

std::vector<PSTensor<Rational>> z_scheme_basis(const std::vector<int>& multidegree) {
  int k = static_cast<int>(multidegree.size());
  if (k < 1) throw std::invalid_argument("z_scheme_basis: empty multidegree");
  if (k > 20) throw std::invalid_argument("z_scheme_basis: too many factors");
  for (int d : multidegree)
    if (d < 1) throw std::invalid_argument("z_scheme_basis: degrees must be >= 1");
  std::vector<PSTensor<Rational>> out;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    PSTensor<Rational> acc(std::vector<int>{}, {Rational(1)});
    for (int i = 0; i < k; ++i) {
      BinaryForm<Rational> f(multidegree[i]);
      if (mask >> i & 1)
        f.c[1] = Rational(1);  // W state
      else
        f.c[0] = Rational(1);  // x^d
      acc = tensor_product(acc, to_tensor(f));
    }
    out.push_back(std::move(acc));
  }
  return out;
}

std::optional<long> generic_rank_bound(const std::vector<int>& multidegree) {
  int k = static_cast<int>(multidegree.size());
  if (k < 2) throw std::invalid_argument("generic_rank_bound: need k >= 2");
  for (int d : multidegree)
    if (d < 1) throw std::invalid_argument("generic_rank_bound: degrees must be >= 1");
  std::vector<int> s = multidegree;
  std::sort(s.begin(), s.end());
  bool exception = (k == 2 && s[0] == 2 && s[1] % 2 == 0) ||
                   (k == 3 && s[0] == 1 && s[1] == 1 && s[2] % 2 == 0) ||
                   (s == std::vector<int>{1, 1, 1}) || (s == std::vector<int>{1, 1, 1, 1});
  if (exception) return std::nullopt;
  long n = tensor_size(s);
  return 2 * ((n + k) / (k + 1));
}

long monomial_curve_bound(int d1, int d2, int b1, int b2) {
  if (b1 < 2 || b2 < 2 || 2 * b1 > d1 || 2 * b2 > d2)
    throw std::invalid_argument("monomial_curve_bound: need 2 <= b_i <= d_i/2");
  return static_cast<long>(d1) * b2 + static_cast<long>(d2) * b1 +
         static_cast<long>(b1) * b2 - 1;
}

bool ideal_membership_check(int k) {
  if (k < 2) throw std::invalid_argument("ideal_membership_check: need k >= 2");
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      // n_i n_j (n_i - n_j) expands to two monomials; each must have an
      // exponent >= 2 somewhere.
      for (int which = 0; which < 2; ++which) {
        std::vector<int> expo(k, 0);
        expo[i] = which == 0 ? 2 : 1;
        expo[j] = which == 0 ? 1 : 2;
        bool covered = false;
        for (int t = 0; t < k; ++t) covered = covered || expo[t] >= 2;
        if (!covered) return false;
      }
    }
  return true;
}

std::vector<KnownValue> known_values(const std::vector<int>& multidegree) {
  if (multidegree.empty()) throw std::invalid_argument("known_values: empty multidegree");
  for (int d : multidegree)
    if (d < 1) throw std::invalid_argument("known_values: degrees must be >= 1");
  std::vector<int> s = multidegree;
  std::sort(s.begin(), s.end());
  int k = static_cast<int>(s.size());
  long total = std::accumulate(s.begin(), s.end(), 0L);

  std::vector<KnownValue> out;
  if (k == 1) out.push_back({"exact", s[0], "R(W_d) = d"});
  if (k == 2 && s == std::vector<int>{3, 3}) out.push_back({"exact", 8, "R(W_3 (x) W_3) = 8"});
  if (k == 2 && s[0] == 2) out.push_back({"exact", 2L * s[1], "R(W_2 (x) W_d) = 2d"});
  if (k >= 2 && std::all_of(s.begin(), s.end(), [](int d) { return d == 3; }))
    out.push_back({"upper", (2L + k) << (k - 1), "(2+k) 2^(k-1) cubic factor-form construction"});
  if (k >= 2 && s[0] >= 3)
    out.push_back({"upper", (1L << (k - 1)) * total, "2^(k-1) (d_1+...+d_k) curve-union bound"});
  if (k >= 2)
    out.push_back({"lower", total - k + 1, "d_1+...+d_k - k + 1 merge lower bound"});
  return out;
}

}  // namespace psrank
