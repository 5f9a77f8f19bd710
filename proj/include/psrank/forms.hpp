#pragma once

// Binary forms, partially symmetric tensors, and their decompositions.
// All coefficients are plain monomial coefficients: a binary form of degree
// d is f = sum_j c_j x^(d-j) y^j, and a PSTensor stores the coefficient of
// x1^(d1-j1) y1^j1 ... xk^(dk-jk) yk^jk at the row-major flat index of
// (j1..jk). No binomial normalization is folded into the storage.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "psrank/scalars.hpp"

namespace psrank {

namespace detail {

inline long long binom_ll(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline long long falling_ll(int n, int k) {
  long long r = 1;
  for (int i = 0; i < k; ++i) r *= n - i;
  return r;
}

// Action of d_x^(e-i) d_y^i on x^(d-j) y^j in degree d, as the integer
// multiplier in front of x^(d-j-e+i) y^(j-i); zero when exponents fail.
inline long long diff_op_factor(int d, int e, int j, int i) {
  if (j < i || d - j < e - i) return 0;
  return falling_ll(d - j, e - i) * falling_ll(j, i);
}

}  // namespace detail

inline long tensor_size(const std::vector<int>& multidegree) {
  long n = 1;
  for (int d : multidegree) {
    if (d < 0) throw std::invalid_argument("multidegree entries must be nonnegative");
    n *= d + 1;
  }
  return n;
}

inline size_t flat_index(const std::vector<int>& multidegree, const std::vector<int>& j) {
  size_t idx = 0;
  for (size_t i = 0; i < multidegree.size(); ++i) idx = idx * (multidegree[i] + 1) + j[i];
  return idx;
}

// Odometer step over multi-indices 0 <= j_i <= d_i; returns false after the
// last index.
inline bool next_index(const std::vector<int>& multidegree, std::vector<int>& j) {
  for (size_t i = multidegree.size(); i-- > 0;) {
    if (j[i] < multidegree[i]) {
      ++j[i];
      for (size_t t = i + 1; t < j.size(); ++t) j[t] = 0;
      return true;
    }
  }
  return false;
}

template <class K>
struct BinaryForm {
  int degree = 0;
  std::vector<K> c;  // c[j] multiplies x^(d-j) y^j

  BinaryForm() : c(1, K(0)) {}
  explicit BinaryForm(int d) : degree(d), c(d + 1, K(0)) {
    if (d < 0) throw std::invalid_argument("BinaryForm: negative degree");
  }
  BinaryForm(int d, std::vector<K> coeffs) : degree(d), c(std::move(coeffs)) {
    if (d < 0 || c.size() != static_cast<size_t>(d) + 1)
      throw std::invalid_argument("BinaryForm: coefficient count must be degree+1");
  }

  bool is_zero_form() const {
    for (const K& v : c)
      if (!is_zero(v)) return false;
    return true;
  }

  friend bool operator==(const BinaryForm& f, const BinaryForm& g) {
    return f.degree == g.degree && f.c == g.c;
  }
};

template <class K>
struct LinearForm {
  K a{0}, b{0};  // a*x + b*y
  LinearForm() = default;
  LinearForm(K a_, K b_) : a(std::move(a_)), b(std::move(b_)) {}
  bool is_zero_vec() const { return is_zero(a) && is_zero(b); }
  friend bool operator==(const LinearForm& u, const LinearForm& v) {
    return u.a == v.a && u.b == v.b;
  }
};

template <class K>
struct PSTensor {
  std::vector<int> multidegree;
  std::vector<K> coeffs;  // row-major over (j1..jk)

  PSTensor() : coeffs(1, K(0)) {}
  explicit PSTensor(std::vector<int> md)
      : multidegree(std::move(md)), coeffs(tensor_size(multidegree), K(0)) {}
  PSTensor(std::vector<int> md, std::vector<K> cs)
      : multidegree(std::move(md)), coeffs(std::move(cs)) {
    if (coeffs.size() != static_cast<size_t>(tensor_size(multidegree)))
      throw std::invalid_argument("PSTensor: coefficient count does not match multidegree");
  }

  int order() const { return static_cast<int>(multidegree.size()); }

  K& at(const std::vector<int>& j) { return coeffs[flat_index(multidegree, j)]; }
  const K& at(const std::vector<int>& j) const { return coeffs[flat_index(multidegree, j)]; }

  bool is_zero_tensor() const {
    for (const K& v : coeffs)
      if (!is_zero(v)) return false;
    return true;
  }

  friend bool operator==(const PSTensor& s, const PSTensor& t) {
    return s.multidegree == t.multidegree && s.coeffs == t.coeffs;
  }
};

template <class K>
PSTensor<K> operator+(const PSTensor<K>& s, const PSTensor<K>& t) {
  if (s.multidegree != t.multidegree)
    throw std::invalid_argument("PSTensor+: multidegree mismatch");
  PSTensor<K> r = s;
  for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = K(r.coeffs[i] + t.coeffs[i]);
  return r;
}

template <class K>
PSTensor<K> operator-(const PSTensor<K>& s, const PSTensor<K>& t) {
  if (s.multidegree != t.multidegree)
    throw std::invalid_argument("PSTensor-: multidegree mismatch");
  PSTensor<K> r = s;
  for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] = K(r.coeffs[i] - t.coeffs[i]);
  return r;
}

template <class K>
PSTensor<K> operator*(const K& w, const PSTensor<K>& t) {
  PSTensor<K> r = t;
  for (K& v : r.coeffs) v = K(w * v);
  return r;
}

// A binary form is the one-slot tensor with the same coefficients.
template <class K>
PSTensor<K> to_tensor(const BinaryForm<K>& f) {
  return PSTensor<K>({f.degree}, f.c);
}

template <class K>
struct RankOneTerm {
  K weight{0};
  std::vector<LinearForm<K>> vectors;  // one per slot
};

template <class K>
struct Decomposition {
  std::vector<int> multidegree;
  std::vector<RankOneTerm<K>> terms;

  long term_count() const { return static_cast<long>(terms.size()); }
};

// A term that is a tensor product of binary forms (not necessarily linear
// powers), each annotated with a known symmetric rank used when counting
// the fully split size.
template <class K>
struct FactorTerm {
  K weight{0};
  std::vector<BinaryForm<K>> factors;
  std::vector<int> factor_ranks;
};

template <class K>
struct FactorDecomposition {
  std::vector<int> multidegree;
  std::vector<FactorTerm<K>> terms;

  // Number of rank-one terms after splitting every factor.
  long term_count() const {
    long n = 0;
    for (const auto& t : terms) {
      long p = 1;
      for (int r : t.factor_ranks) p *= r;
      n += p;
    }
    return n;
  }
};

// --- field conversions ------------------------------------------------

template <class To, class From>
To scalar_cast(const From& v);

template <>
inline Rational scalar_cast<Rational, Rational>(const Rational& v) { return v; }
template <>
inline GaussianRational scalar_cast<GaussianRational, Rational>(const Rational& v) {
  return GaussianRational(v);
}
template <>
inline GaussianRational scalar_cast<GaussianRational, GaussianRational>(const GaussianRational& v) {
  return v;
}
template <>
inline ApproxComplex scalar_cast<ApproxComplex, Rational>(const Rational& v) {
  return to_approx(v);
}
template <>
inline ApproxComplex scalar_cast<ApproxComplex, GaussianRational>(const GaussianRational& v) {
  return to_approx(v);
}
template <>
inline ApproxComplex scalar_cast<ApproxComplex, ApproxComplex>(const ApproxComplex& v) {
  return v;
}

template <class To, class From>
BinaryForm<To> form_cast(const BinaryForm<From>& f) {
  BinaryForm<To> g(f.degree);
  for (size_t i = 0; i < f.c.size(); ++i) g.c[i] = scalar_cast<To, From>(f.c[i]);
  return g;
}

template <class To, class From>
PSTensor<To> tensor_cast(const PSTensor<From>& t) {
  PSTensor<To> r(t.multidegree);
  for (size_t i = 0; i < t.coeffs.size(); ++i) r.coeffs[i] = scalar_cast<To, From>(t.coeffs[i]);
  return r;
}

template <class To, class From>
Decomposition<To> decomposition_cast(const Decomposition<From>& d) {
  Decomposition<To> r;
  r.multidegree = d.multidegree;
  for (const auto& t : d.terms) {
    RankOneTerm<To> nt;
    nt.weight = scalar_cast<To, From>(t.weight);
    for (const auto& v : t.vectors)
      nt.vectors.emplace_back(scalar_cast<To, From>(v.a), scalar_cast<To, From>(v.b));
    r.terms.push_back(std::move(nt));
  }
  return r;
}

// --- expansion ---------------------------------------------------------

// Plain-basis coefficients of (a x + b y)^d: C(d,j) a^(d-j) b^j.
template <class K>
std::vector<K> power_coeffs(const LinearForm<K>& v, int d) {
  std::vector<K> apow(d + 1, K(1)), bpow(d + 1, K(1));
  for (int i = 1; i <= d; ++i) {
    apow[i] = K(apow[i - 1] * v.a);
    bpow[i] = K(bpow[i - 1] * v.b);
  }
  std::vector<K> out(d + 1);
  for (int j = 0; j <= d; ++j)
    out[j] = K(K(static_cast<long>(detail::binom_ll(d, j))) * apow[d - j] * bpow[j]);
  return out;
}

template <class K>
PSTensor<K> expand_rank_one(const RankOneTerm<K>& term, const std::vector<int>& multidegree) {
  if (term.vectors.size() != multidegree.size())
    throw std::invalid_argument("expand_rank_one: slot count mismatch");
  std::vector<K> acc(1, term.weight);
  for (size_t i = 0; i < multidegree.size(); ++i) {
    std::vector<K> f = power_coeffs(term.vectors[i], multidegree[i]);
    std::vector<K> next(acc.size() * f.size());
    size_t p = 0;
    for (const K& u : acc)
      for (const K& w : f) next[p++] = K(u * w);
    acc = std::move(next);
  }
  return PSTensor<K>(multidegree, std::move(acc));
}

template <class K>
PSTensor<K> expand(const Decomposition<K>& dec) {
  PSTensor<K> out(dec.multidegree);
  for (const auto& t : dec.terms) {
    PSTensor<K> e = expand_rank_one(t, dec.multidegree);
    for (size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] = K(out.coeffs[i] + e.coeffs[i]);
  }
  return out;
}

template <class K>
PSTensor<K> expand(const FactorDecomposition<K>& dec) {
  PSTensor<K> out(dec.multidegree);
  for (const auto& t : dec.terms) {
    if (t.factors.size() != dec.multidegree.size())
      throw std::invalid_argument("expand: factor count mismatch");
    std::vector<K> acc(1, t.weight);
    for (size_t i = 0; i < t.factors.size(); ++i) {
      if (t.factors[i].degree != dec.multidegree[i])
        throw std::invalid_argument("expand: factor degree mismatch");
      const std::vector<K>& f = t.factors[i].c;
      std::vector<K> next(acc.size() * f.size());
      size_t p = 0;
      for (const K& u : acc)
        for (const K& w : f) next[p++] = K(u * w);
      acc = std::move(next);
    }
    for (size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] = K(out.coeffs[i] + acc[i]);
  }
  return out;
}

// Tensor product concatenates the multidegrees; on flat coefficient arrays
// this is exactly the Kronecker product with row-major nesting.
template <class K>
PSTensor<K> tensor_product(const PSTensor<K>& s, const PSTensor<K>& t) {
  std::vector<int> md = s.multidegree;
  md.insert(md.end(), t.multidegree.begin(), t.multidegree.end());
  PSTensor<K> out(md);
  size_t p = 0;
  for (const K& u : s.coeffs)
    for (const K& w : t.coeffs) out.coeffs[p++] = K(u * w);
  return out;
}

// --- verification ------------------------------------------------------

struct VerifyReport {
  bool ok = false;
  double residual = 0.0;  // max-norm of the coefficient difference
  long term_count = 0;
};

namespace detail {

template <class K>
VerifyReport verify_expanded(const PSTensor<K>& got, const PSTensor<K>& target, double tol,
                             long term_count) {
  VerifyReport rep;
  rep.term_count = term_count;
  bool exact_equal = true;
  double res = 0.0;
  for (size_t i = 0; i < got.coeffs.size(); ++i) {
    K diff = K(got.coeffs[i] - target.coeffs[i]);
    if (!is_zero(diff)) exact_equal = false;
    double d = abs_approx(diff);
    if (d > res) res = d;
  }
  rep.residual = res;
  rep.ok = field_traits<K>::exact ? exact_equal : res <= tol;
  return rep;
}

}  // namespace detail

template <class K>
VerifyReport verify(const Decomposition<K>& dec, const PSTensor<K>& target, double tol = 1e-9) {
  if (dec.multidegree != target.multidegree)
    throw std::invalid_argument("verify: multidegree mismatch");
  return detail::verify_expanded(expand(dec), target, tol, dec.term_count());
}

template <class K>
VerifyReport verify(const FactorDecomposition<K>& dec, const PSTensor<K>& target,
                    double tol = 1e-9) {
  if (dec.multidegree != target.multidegree)
    throw std::invalid_argument("verify: multidegree mismatch");
  return detail::verify_expanded(expand(dec), target, tol, dec.term_count());
}

/// Product decomposition: every pair of terms, weights multiplied, slot
// lists concatenated. Term count is |d1| * |d2| with no merging.
template <class K>
Decomposition<K> combine(const Decomposition<K>& d1, const Decomposition<K>& d2) {
  Decomposition<K> out;
  out.multidegree = d1.multidegree;
  out.multidegree.insert(out.multidegree.end(), d2.multidegree.begin(), d2.multidegree.end());
  for (const auto& t1 : d1.terms)
    for (const auto& t2 : d2.terms) {
      RankOneTerm<K> t;
      t.weight = K(t1.weight * t2.weight);
      t.vectors = t1.vectors;
      t.vectors.insert(t.vectors.end(), t2.vectors.begin(), t2.vectors.end());
      out.terms.push_back(std::move(t));
    }
  return out;
}

}  // namespace psrank
