#pragma once

// Explicit upper-bound constructions for W-state products: the cubic
// factor-form decomposition of W3^(x)k, the curve-union decomposition with
// greedy support pruning, the cactus-span basis, and closed-form bounds.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "psrank/apolarity.hpp"
#include "psrank/flatten.hpp"
#include "psrank/forms.hpp"

namespace psrank {

// W_d = x^(d-1) y.
BinaryForm<Rational> w_state(int d);

// W_{d1} (x) ... (x) W_{dk}: single coefficient 1 at (1,...,1).
PSTensor<Rational> w_product(const std::vector<int>& multidegree);

// Coupling coefficients a[i][j] = xi_i / (xi_i - xi_j) built from distinct
// rationals xi_i, none 0 or 1; i, j are 0-based here.
struct XiScheme {
  std::vector<Rational> xi;

  explicit XiScheme(std::vector<Rational> xi_values);

  int k() const { return static_cast<int>(xi.size()); }
  Rational a(int i, int j) const;
  std::vector<std::vector<Rational>> a_matrix() const;  // diagonal entries zero
};

// Default scheme xi_i = i + 2 (0-based), i.e. 2, 3, ..., k+1.
std::vector<Rational> default_xi(int k);

// Deterministic pseudo-random valid xi list for property tests.
std::vector<Rational> random_xi(int k, std::mt19937_64& rng);

struct Check33Report {
  bool ok = true;
  std::vector<int> failing_subset;  // 1-based indices of the first failure
};

// For every subset S = {s1..sl} with l >= 2, checks
// sum_{p in S} prod_{q in S, q != p} a[s_p][s_q] == 1 exactly.
Check33Report check_condition_33(const std::vector<std::vector<Rational>>& a);

struct Thm33Result {
  int k = 0;
  std::vector<Rational> xi;
  FactorDecomposition<Rational> factor_form;  // G - sum_i H_i, exact over Q
  long split_count = 0;                       // rank-one terms after splitting
  VerifyReport factor_check;                  // exact comparison with the W product
  FieldKind tier = FieldKind::numeric;        // field of the rank-one tier
  std::vector<std::string> factor_fields;     // field per distinct cubic factor
  std::optional<Decomposition<Rational>> rank_one_q;
  std::optional<Decomposition<GaussianRational>> rank_one_qi;
  std::optional<Decomposition<ApproxComplex>> rank_one_c;
  VerifyReport rank_one_check;
};

// The (2+k) 2^(k-1) decomposition of W3^(x)k: G = (x)_j (W3 + y^3) minus
// H_i with y^3 in slot i and W3 + a[i][j] y^3 elsewhere. The factor form is
// exact over Q; the rank-one tier splits each cubic factor via Sylvester
// and lands in the smallest field all factors admit.
Thm33Result thm33_decomposition(int k, std::optional<std::vector<Rational>> xi = std::nullopt);

struct CurvePointSet {
  std::vector<int> multidegree;
  // One entry per nonempty subset of slots (bitmask over 0-based slot
  // indices, ascending); each parameter list starts with t0 = 0 (the shared
  // point with every factor x) and has sum_{i in mask}(d_i) + 1 distinct
  // entries.
  std::vector<std::pair<std::uint32_t, std::vector<Rational>>> lists;
};

CurvePointSet default_curve_points(const std::vector<int>& multidegree);

// Rank-one point of the subset curve: factor i gets x + t y when i is in
// the mask, else x.
RankOneTerm<Rational> curve_point(const std::vector<int>& multidegree, std::uint32_t mask,
                                  const Rational& t);

// Full unit-weight point list of a curve point set: the shared origin
// first, then each list's nonzero parameters in order. This is the order
// curve_union_decomposition solves on and prune_support walks backwards.
std::vector<RankOneTerm<Rational>> curve_support(const CurvePointSet& points);

struct CurveResult {
  CurvePointSet points;
  long available_points = 0;             // distinct points in the set
  Decomposition<Rational> decomposition;  // zero-weight points dropped
  VerifyReport check;                     // exact, against the W product
};

// Exact decomposition of the W product supported on the union of subset
// curves; at most 1 + 2^(k-1) sum(d_i) terms.
CurveResult curve_union_decomposition(const std::vector<int>& multidegree,
                                      const std::optional<CurvePointSet>& params = std::nullopt);

struct PruneResult {
  std::vector<size_t> kept;               // indices into the input point list
  Decomposition<Rational> decomposition;  // solved on the surviving points
};

// Greedy support minimization: walk the points last-added first, dropping
// any whose removal keeps the target in the span; repeat until stable.
// The surviving points are independent, so the solved weights are unique
// and nonzero.
PruneResult prune_support(const std::vector<RankOneTerm<Rational>>& points,
                          const PSTensor<Rational>& target);

// The 2^k products (x)_i f_i with f_i in {x^(d_i), W_(d_i)}, in ascending
// bitmask order (bit i set selects the W state in slot i).
std::vector<PSTensor<Rational>> z_scheme_basis(const std::vector<int>& multidegree);

// 2 ceil(N / (k+1)) with N = prod(d_i + 1): a rank bound valid for every
// tensor of the format except four small multidegrees (checked on the
// ascending sort), where nullopt is returned.
std::optional<long> generic_rank_bound(const std::vector<int>& multidegree);

// d1 b2 + d2 b1 + b1 b2 - 1, for 2 <= b_i <= d_i / 2: the monomial-curve
// bound for x^(d1-b1) y^(b1) (x) x^(d2-b2) y^(b2).
long monomial_curve_bound(int d1, int d2, int b1, int b2);

// Each generator n_i^2 n_j - n_i n_j^2 of the curve ideal lies in the
// monomial ideal (n_1^2, ..., n_k^2): every monomial has some exponent >= 2.
bool ideal_membership_check(int k);

struct KnownValue {
  std::string kind;  // "exact", "upper", or "lower"
  long value = 0;
  std::string statement;
};

// Cited rank facts matching the given W-product multidegree.
std::vector<KnownValue> known_values(const std::vector<int>& multidegree);

}  // namespace psrank
