#include "psrank/acceptance.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "psrank/apolarity.hpp"
#include "psrank/bounds.hpp"
#include "psrank/constructions.hpp"
#include "psrank/flatten.hpp"
#include "psrank/forms.hpp"

namespace psrank {

namespace {

using Clock = std::chrono::steady_clock;

template <class Fn>
CriterionResult run_criterion(int index, std::string name, double budget_ms, Fn&& body) {
  CriterionResult r;
  r.index = index;
  r.name = std::move(name);
  auto t0 = Clock::now();
  try {
    r.pass = body(r.detail);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  if (r.pass && budget_ms > 0 && r.ms > budget_ms) {
    r.pass = false;
    std::ostringstream os;
    os << r.detail << " [took " << r.ms << " ms, budget " << budget_ms << " ms]";
    r.detail = os.str();
  }
  return r;
}

// x^(d-r+1) y^(r-1)
BinaryForm<Rational> monomial(int d, int r) {
  BinaryForm<Rational> f(d);
  f.c[r - 1] = Rational(1);
  return f;
}

std::string format_md(const std::vector<int>& md) {
  std::string s = "(";
  for (size_t i = 0; i < md.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(md[i]);
  }
  return s + ")";
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

PSTensor<Rational> random_tensor(const std::vector<int>& md, std::mt19937_64& rng) {
  PSTensor<Rational> t(md);
  bool nonzero = false;
  for (auto& c : t.coeffs) {
    c = random_rational(rng);
    nonzero = nonzero || !is_zero(c);
  }
  if (!nonzero) t.coeffs[0] = Rational(1);
  return t;
}

std::vector<int> random_multidegree(std::mt19937_64& rng, int max_k, int max_d) {
  std::uniform_int_distribution<int> kd(1, max_k), dd(1, max_d);
  std::vector<int> md(kd(rng));
  for (auto& d : md) d = dd(rng);
  return md;
}

Decomposition<Rational> random_decomposition(const std::vector<int>& md, std::mt19937_64& rng,
                                             int max_terms) {
  std::uniform_int_distribution<int> nt(1, max_terms);
  Decomposition<Rational> dec;
  dec.multidegree = md;
  int n = nt(rng);
  for (int t = 0; t < n; ++t) {
    RankOneTerm<Rational> term;
    term.weight = random_rational(rng);
    if (is_zero(term.weight)) term.weight = Rational(1);
    for (size_t s = 0; s < md.size(); ++s) {
      Rational a = random_rational(rng), b = random_rational(rng);
      if (is_zero(a) && is_zero(b)) a = Rational(1);
      term.vectors.emplace_back(a, b);
    }
    dec.terms.push_back(std::move(term));
  }
  return dec;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  std::mt19937_64 rng(seed);

  out.push_back(run_criterion(
      1, "monomial and W-state rank table (d <= 12)", 1000.0, [](std::string& detail) {
        for (int d = 2; d <= 12; ++d) {
          for (int r = 2; r <= d / 2 + 1; ++r) {
            int got = sylvester_rank(monomial(d, r));
            if (got != d + 2 - r) {
              detail = "monomial d=" + std::to_string(d) + " r=" + std::to_string(r) +
                       ": rank " + std::to_string(got) + ", expected " + std::to_string(d + 2 - r);
              return false;
            }
          }
          int w = sylvester_rank(w_state(d));
          if (w != d) {
            detail = "W-state d=" + std::to_string(d) + ": rank " + std::to_string(w) +
                     ", expected " + std::to_string(d);
            return false;
          }
        }
        detail = "all monomial ranks equal d+2-r and all W-state ranks equal d";
        return true;
      }));

  out.push_back(run_criterion(
      2, "flattening lower bound 2^k on W products", 10000.0, [](std::string& detail) {
        for (int k = 1; k <= 4; ++k) {
          for (std::uint32_t bits = 0; bits < (1u << k); ++bits) {
            std::vector<int> md;
            for (int i = 0; i < k; ++i) md.push_back((bits >> i & 1) ? 4 : 3);
            LowerBoundCertificate cert = cactus_lower_bound(w_product(md));
            if (cert.value != (1L << k)) {
              detail = format_md(md) + ": bound " + std::to_string(cert.value) + ", expected " +
                       std::to_string(1L << k);
              return false;
            }
          }
        }
        detail = "bound equals 2^k on every degree-(3|4) product with k <= 4 factors";
        return true;
      }));

  out.push_back(run_criterion(
      3, "coupling condition and exact factor expansion (k = 2..5)", 30000.0,
      [&rng](std::string& detail) {
        for (int k = 2; k <= 5; ++k) {
          const long want = (2 + k) * (1L << (k - 1));
          std::vector<std::vector<Rational>> schemes;
          schemes.push_back(default_xi(k));
          for (int t = 0; t < 20; ++t) schemes.push_back(random_xi(k, rng));
          for (size_t si = 0; si < schemes.size(); ++si) {
            XiScheme scheme(schemes[si]);
            Check33Report chk = check_condition_33(scheme.a_matrix());
            if (!chk.ok) {
              detail = "k=" + std::to_string(k) + " scheme " + std::to_string(si) +
                       ": coupling condition failed";
              return false;
            }
            Thm33Result t33 = thm33_decomposition(k, schemes[si]);
            if (!t33.factor_check.ok || t33.factor_check.residual != 0.0) {
              detail = "k=" + std::to_string(k) + " scheme " + std::to_string(si) +
                       ": factor form does not expand to the W product exactly";
              return false;
            }
            if (t33.split_count != want) {
              detail = "k=" + std::to_string(k) + " scheme " + std::to_string(si) +
                       ": split count " + std::to_string(t33.split_count) + ", expected " +
                       std::to_string(want);
              return false;
            }
          }
        }
        detail = "default and 20 random schemes per k pass; split counts 8/20/48/112";
        return true;
      }));

  out.push_back(run_criterion(
      4, "rank-one tier of the two-factor cubic product", 0.0, [](std::string& detail) {
        Thm33Result t = thm33_decomposition(2);
        std::ostringstream os;
        os << "tier " << field_kind_name(t.tier) << ", " << t.rank_one_check.term_count
           << " terms, residual " << t.rank_one_check.residual;
        detail = os.str();
        return t.rank_one_check.ok && t.rank_one_check.term_count == 8;
      }));

  out.push_back(run_criterion(
      5, "curve-union decompositions verify exactly", 60000.0, [](std::string& detail) {
        struct Case {
          std::vector<int> md;
          long cap;
        };
        const Case cases[] = {
            {{3, 3}, 13}, {{3, 4}, 15}, {{4, 5}, 19}, {{3, 3, 3}, 37}, {{3, 4, 5}, 49}};
        std::string counts;
        for (const Case& c : cases) {
          CurveResult r = curve_union_decomposition(c.md);
          long n = r.decomposition.term_count();
          if (!r.check.ok || r.check.residual != 0.0) {
            detail = format_md(c.md) + ": decomposition failed exact verification";
            return false;
          }
          if (n > c.cap) {
            detail = format_md(c.md) + ": " + std::to_string(n) + " terms exceed the cap " +
                     std::to_string(c.cap);
            return false;
          }
          if (!counts.empty()) counts += ", ";
          counts += format_md(c.md) + ": " + std::to_string(n) + "/" + std::to_string(c.cap);
        }
        detail = counts;
        return true;
      }));

  out.push_back(run_criterion(
      6, "greedy pruning reaches 2d1+2d2-1 support", 0.0, [](std::string& detail) {
        struct Case {
          std::vector<int> md;
          long cap;
        };
        const Case cases[] = {{{3, 3}, 11}, {{4, 4}, 15}};
        std::string counts;
        for (const Case& c : cases) {
          auto params = tuned_curve_points(c.md);
          if (!params) {
            detail = format_md(c.md) + ": no curated parameter list";
            return false;
          }
          PSTensor<Rational> target = w_product(c.md);
          PruneResult pr = prune_support(curve_support(*params), target);
          VerifyReport chk = verify(pr.decomposition, target);
          long n = pr.decomposition.term_count();
          if (!chk.ok || chk.residual != 0.0) {
            detail = format_md(c.md) + ": pruned decomposition failed exact verification";
            return false;
          }
          if (n > c.cap) {
            detail = format_md(c.md) + ": pruned to " + std::to_string(n) +
                     " terms, expected <= " + std::to_string(c.cap);
            return false;
          }
          if (!counts.empty()) counts += ", ";
          counts += format_md(c.md) + ": " + std::to_string(n) + "/" + std::to_string(c.cap);
        }
        detail = counts;
        return true;
      }));

  out.push_back(run_criterion(
      7, "merge map collapses to the polarized W state", 0.0, [](std::string& detail) {
        for (int d1 = 2; d1 <= 6; ++d1)
          for (int d2 = 2; d2 <= 6; ++d2) {
            PSTensor<Rational> merged = merge_map(w_product({d1, d2}), 1);
            PSTensor<Rational> pol = polarize(w_state(d1 + d2 - 1), {d1 - 1, 1, d2 - 1});
            if (!(merged == pol)) {
              detail = "(" + std::to_string(d1) + "," + std::to_string(d2) +
                       "): merge image differs from the polarized W state";
              return false;
            }
          }
        LowerBoundCertificate cert = merge_lower_bound({3, 3});
        if (cert.value != 5) {
          detail = "merge bound for (3,3) is " + std::to_string(cert.value) + ", expected 5";
          return false;
        }
        detail = "exact collapse for all 2 <= d1,d2 <= 6; merge bound (3,3) = 5";
        return true;
      }));

  out.push_back(run_criterion(
      8, "flattening ranks multiply under tensor product", 0.0, [&rng](std::string& detail) {
        for (int trial = 0; trial < 50; ++trial) {
          std::vector<int> mds = random_multidegree(rng, 2, 4);
          std::vector<int> mdt = random_multidegree(rng, 2, 4);
          PSTensor<Rational> S = random_tensor(mds, rng);
          PSTensor<Rational> T = random_tensor(mdt, rng);
          auto random_spec = [&rng](const std::vector<int>& md) {
            std::vector<int> e(md.size());
            for (size_t i = 0; i < md.size(); ++i)
              e[i] = std::uniform_int_distribution<int>(0, md[i])(rng);
            return e;
          };
          std::vector<int> es = random_spec(mds), et = random_spec(mdt);
          int rs = rank(flattening_matrix(S, es));
          int rt = rank(flattening_matrix(T, et));
          std::vector<int> eall = es;
          eall.insert(eall.end(), et.begin(), et.end());
          int rp = rank(flattening_matrix(tensor_product(S, T), eall));
          if (rp != rs * rt) {
            detail = "trial " + std::to_string(trial) + ": rank " + std::to_string(rp) +
                     " != " + std::to_string(rs) + "*" + std::to_string(rt);
            return false;
          }
        }
        detail = "rank(flat(S x T)) = rank(flat S) * rank(flat T) on 50 random exact pairs";
        return true;
      }));

  out.push_back(run_criterion(
      9, "submultiplicative bound reports", 0.0, [](std::string& detail) {
        BoundReport a = bound_report({3, 3});
        if (a.upper != 8 || a.naive != 9) {
          detail = "(3,3): upper " + std::to_string(a.upper) + " naive " +
                   std::to_string(a.naive) + ", expected 8 < 9";
          return false;
        }
        bool cited_exact_8 = false;
        for (const KnownValue& kv : a.known) {
          if (kv.kind == "exact" && kv.value == 8) cited_exact_8 = true;
          if ((kv.kind == "exact" || kv.kind == "upper") && a.lower.value > kv.value) {
            detail = "(3,3): computed lower " + std::to_string(a.lower.value) +
                     " contradicts the cited value " + std::to_string(kv.value);
            return false;
          }
        }
        if (!cited_exact_8) {
          detail = "(3,3): cited exact value 8 missing from the report";
          return false;
        }
        BoundReport b = bound_report({3, 3, 3});
        if (b.upper != 20 || b.naive != 27) {
          detail = "(3,3,3): upper " + std::to_string(b.upper) + " naive " +
                   std::to_string(b.naive) + ", expected 20 < 27";
          return false;
        }
        for (const KnownValue& kv : b.known) {
          if ((kv.kind == "exact" || kv.kind == "upper") && b.lower.value > kv.value) {
            detail = "(3,3,3): computed lower " + std::to_string(b.lower.value) +
                     " contradicts the cited value " + std::to_string(kv.value);
            return false;
          }
        }
        detail = "(3,3): upper 8 < naive 9 (computed lower " + std::to_string(a.lower.value) +
                 " <= cited 8); (3,3,3): upper 20 < naive 27";
        return true;
      }));

  out.push_back(run_criterion(
      10, "verification and algebra property suite", 0.0, [&rng](std::string& detail) {
        // Every decomposition produced along the standard paths re-verifies.
        for (int d = 2; d <= 8; ++d) {
          SylvesterOutcome o = sylvester_decompose(w_state(d), FieldKind::rational);
          if (!o.check.ok) {
            detail = "W-state d=" + std::to_string(d) + ": decomposition failed verification";
            return false;
          }
        }
        for (int trial = 0; trial < 10; ++trial) {
          int d = std::uniform_int_distribution<int>(3, 8)(rng);
          BinaryForm<Rational> f(d);
          bool nonzero = false;
          for (auto& c : f.c) {
            c = random_rational(rng);
            nonzero = nonzero || !is_zero(c);
          }
          if (!nonzero) f.c[1] = Rational(1);
          SylvesterOutcome o = sylvester_decompose(f, FieldKind::rational);
          if (!o.check.ok) {
            detail = "random form trial " + std::to_string(trial) +
                     ": decomposition failed verification (residual " +
                     std::to_string(o.check.residual) + ")";
            return false;
          }
        }
        {
          Thm33Result t = thm33_decomposition(3);
          if (!t.factor_check.ok || !t.rank_one_check.ok) {
            detail = "three-factor cubic product: decomposition failed verification";
            return false;
          }
        }
        if (!curve_union_decomposition({3, 4}).check.ok) {
          detail = "(3,4) curve union: decomposition failed verification";
          return false;
        }
        // Lower <= upper in every report over a small family.
        for (const std::vector<int>& md :
             {std::vector<int>{2, 2}, {2, 3}, {3, 3}, {3, 4}, {4, 4}, {2, 2, 2}, {3, 3, 3}}) {
          BoundReport rep = bound_report(md);
          if (rep.final_lower > rep.final_upper || rep.lower.value > rep.upper) {
            detail = format_md(md) + ": lower bound exceeds upper bound";
            return false;
          }
        }
        // Expansion is linear in the term list and in the weights.
        for (int trial = 0; trial < 20; ++trial) {
          std::vector<int> md = random_multidegree(rng, 3, 3);
          Decomposition<Rational> D = random_decomposition(md, rng, 4);
          Decomposition<Rational> E = random_decomposition(md, rng, 4);
          Decomposition<Rational> DE = D;
          DE.terms.insert(DE.terms.end(), E.terms.begin(), E.terms.end());
          if (!(expand(DE) == expand(D) + expand(E))) {
            detail = "expansion is not additive in the term list (trial " +
                     std::to_string(trial) + ")";
            return false;
          }
          Rational c = random_rational(rng);
          Decomposition<Rational> Dc = D;
          for (auto& t : Dc.terms) t.weight = Rational(t.weight * c);
          if (!(expand(Dc) == c * expand(D))) {
            detail = "expansion is not homogeneous in the weights (trial " +
                     std::to_string(trial) + ")";
            return false;
          }
        }
        // Combining decompositions matches the tensor product of expansions.
        for (int trial = 0; trial < 10; ++trial) {
          std::vector<int> md1 = random_multidegree(rng, 2, 3);
          std::vector<int> md2 = random_multidegree(rng, 2, 3);
          Decomposition<Rational> D1 = random_decomposition(md1, rng, 3);
          Decomposition<Rational> D2 = random_decomposition(md2, rng, 3);
          if (!(expand(combine(D1, D2)) == tensor_product(expand(D1), expand(D2)))) {
            detail = "combine does not match the tensor product (trial " +
                     std::to_string(trial) + ")";
            return false;
          }
        }
        detail = "re-verification, report ordering, expansion linearity, and combine all hold";
        return true;
      }));

  return out;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace psrank
