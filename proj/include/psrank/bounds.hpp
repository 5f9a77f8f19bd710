#pragma once

// Aggregated bound reports for W-state products: best computed lower
// certificate, best constructive upper bound with a verified witness, and
// cited known values folded in separately from computed results.

#include <optional>
#include <string>
#include <vector>

#include "psrank/constructions.hpp"

namespace psrank {

struct UpperCandidate {
  long value = 0;
  std::string method;         // "thm33", "curve+prune", "generic", "combine"
  bool has_witness = false;   // formula-only bounds carry none
  std::string witness_field;  // "Q", "Q(i)", "numeric", or "" without witness
};

struct BoundReport {
  std::vector<int> multidegree;
  long naive = 0;  // product of the factor ranks d_i

  std::vector<LowerBoundCertificate> lower_candidates;
  LowerBoundCertificate lower;  // best computed certificate

  std::vector<UpperCandidate> upper_candidates;
  long upper = 0;  // best computed upper bound
  std::string upper_method;
  std::optional<FactorDecomposition<Rational>> witness_factor;  // thm33 winner
  std::optional<Decomposition<Rational>> witness_exact;         // curve+prune / combine winner
  std::optional<Decomposition<ApproxComplex>> witness_numeric;  // numeric combine fallback
  VerifyReport witness_check;

  std::vector<KnownValue> known;  // cited facts, displayed apart from computed ones

  long final_lower = 0;  // computed lower joined with cited exact/lower values
  long final_upper = 0;  // computed upper joined with cited exact/upper values
  long gap = 0;
  bool exact = false;
  bool submultiplicative = false;  // final upper beats the naive product
  std::string note;
};

// Curated curve parameter lists for the (3,3) and (4,4) diagonals. The
// tail entries are chosen so that a hyperplane-section relation among the
// diagonal points lets the greedy prune reach 2d1+2d2-1 terms, which the
// default integer parameters provably cannot; nullopt for every other
// multidegree.
std::optional<CurvePointSet> tuned_curve_points(const std::vector<int>& multidegree);

// Bounds for the W-state product of the given multidegree. Candidate
// policy: thm33 on all-3 formats; curve-union plus greedy pruning when the
// point system stays small (with the curated parameter lists where they
// exist); the generic-format formula; and the product of per-factor
// Sylvester decompositions. Every non-formula upper bound carries a
// witness that re-verifies.
BoundReport bound_report(const std::vector<int>& multidegree);

struct TableRow {
  std::vector<int> multidegree;
  long naive = 0;
  long upper = 0;
  std::string upper_method;
  long lower = 0;  // final lower (cited exacts included)
  long gap = 0;
  bool submultiplicative = false;
};

// Rows (d,...,d) for k = 2..max_k, d = 2..max_d; limits 2 <= max_k <= 4,
// 2 <= max_d <= 8.
std::vector<TableRow> submultiplicativity_table(int max_k, int max_d);

}  // namespace psrank
