#pragma once

// Multigraded flattenings, polarization, and the merge operator. Lower
// bounds via flattening ranks are certified by the exhibited exponent
// split; the merge bound is certified by replaying the merge sequence and
// checking the proportional collapse exactly.

#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "psrank/apolarity.hpp"
#include "psrank/exactla.hpp"
#include "psrank/forms.hpp"

namespace psrank {

// Matrix of the apolarity pairing at exponent split e: columns are
// indexed by operators dx^(e-i) dy^i per slot, rows by the y-exponents of
// the target monomials. Rank is invariant under tensor products of such
// flattenings, and bounds the partially symmetric rank from below.
template <class K>
Matrix<K> flattening_matrix(const PSTensor<K>& t, const std::vector<int>& espec) {
  int k = t.order();
  if (static_cast<int>(espec.size()) != k)
    throw std::invalid_argument("flattening_matrix: spec length mismatch");
  std::vector<int> rowdeg(k);
  for (int s = 0; s < k; ++s) {
    if (espec[s] < 0 || espec[s] > t.multidegree[s])
      throw std::invalid_argument("flattening_matrix: spec entry out of range");
    rowdeg[s] = t.multidegree[s] - espec[s];
  }
  Matrix<K> m(static_cast<int>(tensor_size(rowdeg)), static_cast<int>(tensor_size(espec)));
  std::vector<int> u(k, 0);
  int r = 0;
  do {
    std::vector<int> i(k, 0);
    int c = 0;
    do {
      long long fac = 1;
      std::vector<int> j(k);
      for (int s = 0; s < k && fac != 0; ++s) {
        j[s] = u[s] + i[s];
        fac *= detail::diff_op_factor(t.multidegree[s], espec[s], j[s], i[s]);
      }
      if (fac != 0) m.at(r, c) = K(K(static_cast<long>(fac)) * t.at(j));
      ++c;
    } while (next_index(espec, i));
    ++r;
  } while (next_index(rowdeg, u));
  return m;
}

struct LowerBoundCertificate {
  long value = 0;
  std::string method;               // "flattening" or "merge"
  std::vector<int> flattening_spec; // maximizing spec, when method == "flattening"
  std::vector<int> merge_positions; // 1-based merge slots, when method == "merge"
};

// Max flattening rank over all exponent splits (a cactus rank lower
// bound); reports the lexicographically least maximizing spec.
template <class K>
LowerBoundCertificate cactus_lower_bound(const PSTensor<K>& t) {
  static_assert(field_traits<K>::exact, "cactus_lower_bound requires an exact field");
  LowerBoundCertificate cert;
  cert.method = "flattening";
  std::vector<int> e(t.order(), 0);
  do {
    int r = rank(flattening_matrix(t, e));
    if (r > cert.value) {
      cert.value = r;
      cert.flattening_spec = e;
    }
  } while (next_index(t.multidegree, e));
  return cert;
}

// Image of f under l^D -> l^(a1) x ... x l^(am): the coefficient at (j1..jm)
// is c_(sum j) * prod C(a_i, j_i) / C(D, sum j).
template <class K>
PSTensor<K> polarize(const BinaryForm<K>& f, const std::vector<int>& parts) {
  int total = 0;
  for (int a : parts) {
    if (a < 0) throw std::invalid_argument("polarize: negative part");
    total += a;
  }
  if (parts.empty() || total != f.degree)
    throw std::invalid_argument("polarize: parts must sum to the degree");
  PSTensor<K> out(parts);
  std::vector<int> j(parts.size(), 0);
  do {
    int jsum = 0;
    long long num = 1;
    for (size_t s = 0; s < parts.size(); ++s) {
      jsum += j[s];
      num *= detail::binom_ll(parts[s], j[s]);
    }
    K v = K(K(static_cast<long>(num)) * f.c[jsum]);
    out.at(j) = K(v / K(static_cast<long>(detail::binom_ll(f.degree, jsum))));
  } while (next_index(parts, j));
  return out;
}

// Polarize a single slot (1-based) into two slots of degrees a and b.
template <class K>
PSTensor<K> split_slot(const PSTensor<K>& t, int slot, int a, int b) {
  int k = t.order();
  if (slot < 1 || slot > k) throw std::invalid_argument("split_slot: slot out of range");
  if (a < 0 || b < 0 || a + b != t.multidegree[slot - 1])
    throw std::invalid_argument("split_slot: parts must sum to the slot degree");
  std::vector<int> md;
  for (int s = 0; s < k; ++s) {
    if (s == slot - 1) {
      md.push_back(a);
      md.push_back(b);
    } else {
      md.push_back(t.multidegree[s]);
    }
  }
  PSTensor<K> out(md);
  std::vector<int> j(md.size(), 0);
  do {
    int ja = j[slot - 1], jb = j[slot];
    std::vector<int> src;
    for (size_t s = 0; s < j.size(); ++s) {
      if (s == static_cast<size_t>(slot)) continue;  // fold jb into the slot entry
      src.push_back(s == static_cast<size_t>(slot - 1) ? ja + jb : j[s]);
    }
    long long num = detail::binom_ll(a, ja) * detail::binom_ll(b, jb);
    K v = K(K(static_cast<long>(num)) * t.at(src));
    out.at(j) = K(v / K(static_cast<long>(detail::binom_ll(a + b, ja + jb))));
  } while (next_index(md, j));
  return out;
}

// Remove slots of degree zero (extent one); the flat coefficient array is
// unchanged.
template <class K>
PSTensor<K> drop_zero_slots(const PSTensor<K>& t) {
  std::vector<int> md;
  for (int d : t.multidegree)
    if (d != 0) md.push_back(d);
  return PSTensor<K>(md, t.coeffs);
}

// Merge adjacent slots i, i+1 (1-based): polarize off one linear slot from
// each side, multiply the two linear slots (xx -> 0, xy and yx -> x,
// yy -> y), and drop empty slots. The result is normalized by
// d_i d_{i+1} / (d_i + d_{i+1} - 1) so that on a product of two W states it
// reproduces the polarization of the merged W state exactly, not merely up
// to scale.
template <class K>
PSTensor<K> merge_map(const PSTensor<K>& t, int i) {
  int k = t.order();
  if (i < 1 || i > k - 1) throw std::invalid_argument("merge_map: slot out of range");
  int d1 = t.multidegree[i - 1], d2 = t.multidegree[i];
  if (d1 < 1 || d2 < 1) throw std::invalid_argument("merge_map: slots must have positive degree");
  PSTensor<K> s = split_slot(split_slot(t, i, d1 - 1, 1), i + 2, 1, d2 - 1);
  // s has slots (..., d1-1, 1, 1, d2-1, ...) at positions i .. i+3.
  std::vector<int> md;
  for (int p = 0; p < s.order(); ++p)
    if (p != i) md.push_back(s.multidegree[p]);  // drop the second linear slot
  PSTensor<K> out(md);
  K scale = K(K(static_cast<long>(d1) * d2) / K(static_cast<long>(d1 + d2 - 1)));
  std::vector<int> j(md.size(), 0);
  do {
    std::vector<int> j0, j1;  // preimages under the product of linear slots
    for (size_t p = 0; p < j.size(); ++p) {
      if (p == static_cast<size_t>(i)) {
        if (j[p] == 0) {
          j0.insert(j0.end(), {0, 1});
          j1.insert(j1.end(), {1, 0});
        } else {
          j0.insert(j0.end(), {1, 1});
          j1.insert(j1.end(), {1, 1});
        }
        continue;
      }
      j0.push_back(j[p]);
      j1.push_back(j[p]);
    }
    K v = j[i] == 0 ? K(s.at(j0) + s.at(j1)) : K(s.at(j0));
    out.at(j) = K(scale * v);
  } while (next_index(md, j));
  return drop_zero_slots(out);
}

// Lower bound for the W-state product of the given multidegree: merge the
// factors left to right into a single W state of degree sum(d) - k + 1,
// check the collapse against the polarized W state exactly, and return its
// symmetric rank.
inline LowerBoundCertificate merge_lower_bound(const std::vector<int>& multidegree) {
  if (multidegree.empty()) throw std::invalid_argument("merge_lower_bound: empty multidegree");
  for (int d : multidegree)
    if (d < 1) throw std::invalid_argument("merge_lower_bound: degrees must be positive");
  int k = static_cast<int>(multidegree.size());
  int total = std::accumulate(multidegree.begin(), multidegree.end(), 0);

  PSTensor<Rational> cur(multidegree);
  cur.at(std::vector<int>(multidegree.size(), 1)) = Rational(1);
  LowerBoundCertificate cert;
  cert.method = "merge";
  int end = 1;
  for (int step = 0; step < k - 1; ++step) {
    int i = end;
    cert.merge_positions.push_back(i);
    int d1 = cur.multidegree[i - 1], d2 = cur.multidegree[i];
    cur = merge_map(cur, i);
    end = (i - 1) + (d1 > 1 ? 1 : 0) + 1 + (d2 > 1 ? 1 : 0);
  }

  BinaryForm<Rational> w(total - k + 1);
  w.c[1] = Rational(1);
  PSTensor<Rational> target = polarize(w, cur.multidegree);
  std::optional<Rational> lambda;
  for (size_t p = 0; p < target.coeffs.size(); ++p) {
    if (is_zero(target.coeffs[p])) continue;
    Rational l(cur.coeffs[p] / target.coeffs[p]);
    if (!lambda) lambda = l;
  }
  if (!lambda || is_zero(*lambda))
    throw std::logic_error("merge_lower_bound: merged tensor is not a nonzero multiple");
  if (!(cur == PSTensor<Rational>(*lambda * target)))
    throw std::logic_error("merge_lower_bound: merged tensor failed the collapse check");
  cert.value = sylvester_rank(w);
  return cert;
}

}  // namespace psrank
