#include "psrank/bounds.hpp"

#include <algorithm>
#include <numeric>

namespace psrank {

std::optional<CurvePointSet> tuned_curve_points(const std::vector<int>& md) {
  auto rat = [](long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
  };
  CurvePointSet ps;
  ps.multidegree = md;
  if (md == std::vector<int>{3, 3}) {
    ps.lists.emplace_back(1u, std::vector<Rational>{rat(0), rat(1), rat(2), rat(3)});
    ps.lists.emplace_back(2u, std::vector<Rational>{rat(0), rat(1), rat(2), rat(3)});
    ps.lists.emplace_back(3u, std::vector<Rational>{rat(0), rat(1), rat(2), rat(3), rat(-1),
                                                    rat(3, 2), rat(4)});
    return ps;
  }
  if (md == std::vector<int>{4, 4}) {
    ps.lists.emplace_back(1u, std::vector<Rational>{rat(0), rat(1), rat(2), rat(3), rat(4)});
    ps.lists.emplace_back(2u, std::vector<Rational>{rat(0), rat(1), rat(2), rat(3), rat(4)});
    ps.lists.emplace_back(3u, std::vector<Rational>{rat(0), rat(1), rat(2), rat(3), rat(4),
                                                    rat(-1), rat(-2), rat(4, 5), rat(5)});
    return ps;
  }
  return std::nullopt;
}

BoundReport bound_report(const std::vector<int>& multidegree) {
  BoundReport rep;
  rep.multidegree = multidegree;
  PSTensor<Rational> target = w_product(multidegree);  // validates the descriptor
  int k = static_cast<int>(multidegree.size());
  rep.naive = 1;
  for (int d : multidegree) rep.naive *= d;

  // --- computed lower bounds -------------------------------------------
  if (tensor_size(multidegree) <= 2000)
    rep.lower_candidates.push_back(cactus_lower_bound(target));
  rep.lower_candidates.push_back(merge_lower_bound(multidegree));
  rep.lower = rep.lower_candidates.front();
  for (const auto& c : rep.lower_candidates)
    if (c.value > rep.lower.value) rep.lower = c;

  // --- computed upper bounds -------------------------------------------
  std::optional<FactorDecomposition<Rational>> thm33_witness;
  std::optional<Decomposition<Rational>> exact_witness_curve, exact_witness_combine;
  std::optional<Decomposition<ApproxComplex>> numeric_witness;

  bool all_three = std::all_of(multidegree.begin(), multidegree.end(),
                               [](int d) { return d == 3; });
  if (all_three) {
    Thm33Result t = thm33_decomposition(k);
    thm33_witness = std::move(t.factor_form);
    rep.upper_candidates.push_back({t.split_count, "thm33", true, "Q"});
  }

  bool curve_ok = std::all_of(multidegree.begin(), multidegree.end(),
                              [](int d) { return d >= 3; });
  long total = std::accumulate(multidegree.begin(), multidegree.end(), 0L);
  long curve_points_count = 1 + (1L << (k - 1)) * total;
  if (curve_ok && curve_points_count <= 60 && tensor_size(multidegree) <= 300) {
    auto params = tuned_curve_points(multidegree);
    CurveResult cur = curve_union_decomposition(multidegree, params);
    PruneResult pr = prune_support(curve_support(cur.points), target);
    long count = pr.decomposition.term_count();
    exact_witness_curve = std::move(pr.decomposition);
    rep.upper_candidates.push_back({count, "curve+prune", true, "Q"});
  }

  if (k >= 2) {
    if (auto g = generic_rank_bound(multidegree))
      rep.upper_candidates.push_back({*g, "generic", false, ""});
  }

  {
    std::vector<SylvesterOutcome> parts;
    bool all_rational = true;
    for (int d : multidegree) {
      parts.push_back(sylvester_decompose(w_state(d), FieldKind::rational));
      all_rational = all_rational && parts.back().achieved == FieldKind::rational;
    }
    if (all_rational) {
      Decomposition<Rational> acc = parts.front().dec_q.value();
      for (size_t i = 1; i < parts.size(); ++i) acc = combine(acc, parts[i].dec_q.value());
      rep.upper_candidates.push_back({acc.term_count(), "combine", true, "Q"});
      exact_witness_combine = std::move(acc);
    } else {
      Decomposition<ApproxComplex> acc =
          parts.front().dec_c ? parts.front().dec_c.value()
                              : decomposition_cast<ApproxComplex>(parts.front().dec_q.value());
      for (size_t i = 1; i < parts.size(); ++i) {
        const auto& p = parts[i];
        acc = combine(acc, p.dec_c ? p.dec_c.value()
                                   : decomposition_cast<ApproxComplex>(p.dec_q.value()));
      }
      rep.upper_candidates.push_back({acc.term_count(), "combine", true, "numeric"});
      numeric_witness = std::move(acc);
    }
  }

  const UpperCandidate* best = &rep.upper_candidates.front();
  for (const auto& c : rep.upper_candidates)
    if (c.value < best->value) best = &c;
  rep.upper = best->value;
  rep.upper_method = best->method;
  if (best->method == "thm33") {
    rep.witness_factor = std::move(thm33_witness);
    rep.witness_check = verify(*rep.witness_factor, target);
  } else if (best->method == "curve+prune") {
    rep.witness_exact = std::move(exact_witness_curve);
    rep.witness_check = verify(*rep.witness_exact, target);
  } else if (best->method == "combine") {
    if (exact_witness_combine) {
      rep.witness_exact = std::move(exact_witness_combine);
      rep.witness_check = verify(*rep.witness_exact, target);
    } else {
      rep.witness_numeric = std::move(numeric_witness);
      rep.witness_check = verify(*rep.witness_numeric, tensor_cast<ApproxComplex>(target));
    }
  }
  if (best->has_witness) {
    if (!rep.witness_check.ok)
      throw std::logic_error("bound_report: selected witness failed verification");
    if (rep.witness_check.term_count != rep.upper)
      throw std::logic_error("bound_report: witness term count disagrees with the bound");
  }
  if (rep.lower.value > rep.upper)
    throw std::logic_error("bound_report: computed lower bound exceeds computed upper bound");

  // --- cited values ------------------------------------------------------
  rep.known = known_values(multidegree);
  rep.final_lower = rep.lower.value;
  rep.final_upper = rep.upper;
  long cited_exact = 0;
  for (const auto& kv : rep.known) {
    if (kv.kind == "exact") {
      cited_exact = kv.value;
      rep.final_lower = std::max(rep.final_lower, kv.value);
      rep.final_upper = std::min(rep.final_upper, kv.value);
    } else if (kv.kind == "lower") {
      rep.final_lower = std::max(rep.final_lower, kv.value);
    } else if (kv.kind == "upper") {
      rep.final_upper = std::min(rep.final_upper, kv.value);
    }
  }
  if (rep.final_lower > rep.final_upper)
    throw std::logic_error("bound_report: cited values contradict computed bounds");
  rep.gap = rep.final_upper - rep.final_lower;
  rep.exact = rep.gap == 0;
  rep.submultiplicative = rep.final_upper < rep.naive;
  if (rep.exact && cited_exact > rep.lower.value)
    rep.note = "exact value relies on a cited fact; the computed lower bound (" +
               std::to_string(rep.lower.value) + ") does not reach it";
  return rep;
}

std::vector<TableRow> submultiplicativity_table(int max_k, int max_d) {
  if (max_k < 2 || max_k > 4 || max_d < 2 || max_d > 8)
    throw std::invalid_argument("submultiplicativity_table: limits are 2..4 factors, degrees 2..8");
  std::vector<TableRow> rows;
  for (int k = 2; k <= max_k; ++k)
    for (int d = 2; d <= max_d; ++d) {
      BoundReport rep = bound_report(std::vector<int>(k, d));
      TableRow row;
      row.multidegree = rep.multidegree;
      row.naive = rep.naive;
      row.upper = rep.upper;
      row.upper_method = rep.upper_method;
      row.lower = rep.final_lower;
      row.gap = row.upper - row.lower;
      row.submultiplicative = rep.submultiplicative;
      rows.push_back(std::move(row));
    }
  return rows;
}

}  // namespace psrank
