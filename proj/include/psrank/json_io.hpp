#pragma once
// JSON encodings for scalars, tensors, decompositions, and report types.
//
// Scalar encodings by field:
//   rational          "num/den" string (always with denominator)
//   Gaussian rational {"re": "num/den", "im": "num/den"}
//   numeric complex   [re, im] number pair
// Loaders accept any encoding at or below the requested tier (a rational
// string parses into all three scalar types), so mixed payloads promote
// cleanly to the strongest tier present. Serialization is deterministic:
// object keys are emitted in sorted order.

#include <complex>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "psrank/acceptance.hpp"
#include "psrank/bounds.hpp"
#include "psrank/constructions.hpp"
#include "psrank/exactla.hpp"
#include "psrank/flatten.hpp"
#include "psrank/forms.hpp"
#include "psrank/scalars.hpp"

namespace psrank {

using nlohmann::json;

// Parse failure with a one-line message naming the offending field.
struct JsonError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Scalar parsers; `where` names the field in error messages.
Rational parse_rational(const json& j, const std::string& where);
GaussianRational parse_gaussian(const json& j, const std::string& where);
ApproxComplex parse_numeric_scalar(const json& j, const std::string& where);

template <class K>
K parse_scalar(const json& j, const std::string& where) {
  if constexpr (std::is_same_v<K, Rational>)
    return parse_rational(j, where);
  else if constexpr (std::is_same_v<K, GaussianRational>)
    return parse_gaussian(j, where);
  else
    return parse_numeric_scalar(j, where);
}

// Weakest field whose scalars can represent one encoded value.
FieldKind scalar_encoding(const json& j, const std::string& where);

// Strongest scalar tier appearing in a tensor ({"coeffs"}) or decomposition
// ({"terms"}) payload; throws JsonError when the payload is neither.
FieldKind payload_field(const json& j);

json scalar_to_json(const Rational& x);
json scalar_to_json(const GaussianRational& x);
json scalar_to_json(const ApproxComplex& x);

namespace detail {
// Validated multidegree: array of integers >= 1.
std::vector<int> parse_multidegree(const json& j, const std::string& where);
}  // namespace detail

// ---- containers (templated over the scalar field) ----

template <class K>
void to_json(json& j, const LinearForm<K>& v) {
  j = json::array({scalar_to_json(v.a), scalar_to_json(v.b)});
}

template <class K>
void to_json(json& j, const BinaryForm<K>& f) {
  json cs = json::array();
  for (const auto& x : f.c) cs.push_back(scalar_to_json(x));
  j = json{{"degree", f.degree}, {"coeffs", std::move(cs)}};
}

template <class K>
void to_json(json& j, const PSTensor<K>& t) {
  json cs = json::array();
  for (const auto& x : t.coeffs) cs.push_back(scalar_to_json(x));
  j = json{{"multidegree", t.multidegree}, {"coeffs", std::move(cs)}};
}

template <class K>
void to_json(json& j, const RankOneTerm<K>& t) {
  json vecs = json::array();
  for (const auto& v : t.vectors) {
    json jv;
    to_json(jv, v);
    vecs.push_back(std::move(jv));
  }
  j = json{{"weight", scalar_to_json(t.weight)}, {"vectors", std::move(vecs)}};
}

template <class K>
void to_json(json& j, const Decomposition<K>& d) {
  json terms = json::array();
  for (const auto& t : d.terms) {
    json jt;
    to_json(jt, t);
    terms.push_back(std::move(jt));
  }
  j = json{{"multidegree", d.multidegree}, {"terms", std::move(terms)}};
}

template <class K>
void to_json(json& j, const FactorTerm<K>& t) {
  json fs = json::array();
  for (const auto& f : t.factors) {
    json jf;
    to_json(jf, f);
    fs.push_back(std::move(jf));
  }
  j = json{{"weight", scalar_to_json(t.weight)},
           {"factors", std::move(fs)},
           {"factor_ranks", t.factor_ranks}};
}

template <class K>
void to_json(json& j, const FactorDecomposition<K>& d) {
  json terms = json::array();
  for (const auto& t : d.terms) {
    json jt;
    to_json(jt, t);
    terms.push_back(std::move(jt));
  }
  j = json{{"multidegree", d.multidegree},
           {"terms", std::move(terms)},
           {"term_count", d.term_count()}};
}

template <class K>
void to_json(json& j, const Matrix<K>& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows; ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(scalar_to_json(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  j = json{{"rows", m.rows}, {"cols", m.cols}, {"entries", std::move(rows)}};
}

template <class K>
BinaryForm<K> parse_binary_form(const json& j) {
  if (!j.is_object()) throw JsonError("form: expected an object with \"degree\" and \"coeffs\"");
  if (!j.contains("coeffs") || !j["coeffs"].is_array())
    throw JsonError("form.coeffs: expected an array");
  const json& cs = j["coeffs"];
  int degree = 0;
  if (j.contains("degree")) {
    if (!j["degree"].is_number_integer()) throw JsonError("form.degree: expected an integer");
    degree = j["degree"].get<int>();
  } else {
    degree = static_cast<int>(cs.size()) - 1;
  }
  if (degree < 0 || cs.size() != static_cast<size_t>(degree) + 1)
    throw JsonError("form.coeffs: expected degree+1 entries");
  std::vector<K> out;
  out.reserve(cs.size());
  for (size_t i = 0; i < cs.size(); ++i)
    out.push_back(parse_scalar<K>(cs[i], "form.coeffs[" + std::to_string(i) + "]"));
  return BinaryForm<K>(degree, std::move(out));
}

template <class K>
PSTensor<K> parse_tensor(const json& j) {
  if (!j.is_object())
    throw JsonError("tensor: expected an object with \"multidegree\" and \"coeffs\"");
  if (!j.contains("multidegree")) throw JsonError("tensor: missing field \"multidegree\"");
  if (!j.contains("coeffs")) throw JsonError("tensor: missing field \"coeffs\"");
  std::vector<int> md = detail::parse_multidegree(j["multidegree"], "tensor.multidegree");
  const json& cs = j["coeffs"];
  if (!cs.is_array()) throw JsonError("tensor.coeffs: expected an array");
  if (cs.size() != static_cast<size_t>(tensor_size(md)))
    throw JsonError("tensor.coeffs: expected " + std::to_string(tensor_size(md)) +
                    " entries for this multidegree, got " + std::to_string(cs.size()));
  std::vector<K> out;
  out.reserve(cs.size());
  for (size_t i = 0; i < cs.size(); ++i)
    out.push_back(parse_scalar<K>(cs[i], "tensor.coeffs[" + std::to_string(i) + "]"));
  return PSTensor<K>(std::move(md), std::move(out));
}

template <class K>
Decomposition<K> parse_decomposition(const json& j) {
  if (!j.is_object())
    throw JsonError("decomposition: expected an object with \"multidegree\" and \"terms\"");
  if (!j.contains("multidegree")) throw JsonError("decomposition: missing field \"multidegree\"");
  if (!j.contains("terms")) throw JsonError("decomposition: missing field \"terms\"");
  Decomposition<K> d;
  d.multidegree = detail::parse_multidegree(j["multidegree"], "decomposition.multidegree");
  const json& terms = j["terms"];
  if (!terms.is_array()) throw JsonError("decomposition.terms: expected an array");
  for (size_t i = 0; i < terms.size(); ++i) {
    const std::string where = "decomposition.terms[" + std::to_string(i) + "]";
    const json& jt = terms[i];
    if (!jt.is_object() || !jt.contains("weight") || !jt.contains("vectors"))
      throw JsonError(where + ": expected an object with \"weight\" and \"vectors\"");
    RankOneTerm<K> t;
    t.weight = parse_scalar<K>(jt["weight"], where + ".weight");
    const json& vecs = jt["vectors"];
    if (!vecs.is_array() || vecs.size() != d.multidegree.size())
      throw JsonError(where + ".vectors: expected one [a,b] pair per slot (" +
                      std::to_string(d.multidegree.size()) + ")");
    for (size_t s = 0; s < vecs.size(); ++s) {
      const std::string vwhere = where + ".vectors[" + std::to_string(s) + "]";
      if (!vecs[s].is_array() || vecs[s].size() != 2)
        throw JsonError(vwhere + ": expected an [a,b] pair");
      t.vectors.emplace_back(parse_scalar<K>(vecs[s][0], vwhere + "[0]"),
                             parse_scalar<K>(vecs[s][1], vwhere + "[1]"));
    }
    d.terms.push_back(std::move(t));
  }
  return d;
}

// Factor-form payloads are told apart from rank-one ones by their terms
// carrying "factors" instead of "vectors".
inline bool is_factor_decomposition(const json& j) {
  return j.is_object() && j.contains("terms") && j["terms"].is_array() && !j["terms"].empty() &&
         j["terms"][0].is_object() && j["terms"][0].contains("factors");
}

template <class K>
FactorDecomposition<K> parse_factor_decomposition(const json& j) {
  if (!j.is_object())
    throw JsonError("decomposition: expected an object with \"multidegree\" and \"terms\"");
  if (!j.contains("multidegree")) throw JsonError("decomposition: missing field \"multidegree\"");
  if (!j.contains("terms")) throw JsonError("decomposition: missing field \"terms\"");
  FactorDecomposition<K> d;
  d.multidegree = detail::parse_multidegree(j["multidegree"], "decomposition.multidegree");
  const json& terms = j["terms"];
  if (!terms.is_array()) throw JsonError("decomposition.terms: expected an array");
  for (size_t i = 0; i < terms.size(); ++i) {
    const std::string where = "decomposition.terms[" + std::to_string(i) + "]";
    const json& jt = terms[i];
    if (!jt.is_object() || !jt.contains("weight") || !jt.contains("factors") ||
        !jt.contains("factor_ranks"))
      throw JsonError(where +
                      ": expected an object with \"weight\", \"factors\", and \"factor_ranks\"");
    FactorTerm<K> t;
    t.weight = parse_scalar<K>(jt["weight"], where + ".weight");
    const json& fs = jt["factors"];
    if (!fs.is_array() || fs.size() != d.multidegree.size())
      throw JsonError(where + ".factors: expected one binary form per slot (" +
                      std::to_string(d.multidegree.size()) + ")");
    for (size_t s = 0; s < fs.size(); ++s) {
      BinaryForm<K> f = parse_binary_form<K>(fs[s]);
      if (f.degree != d.multidegree[s])
        throw JsonError(where + ".factors[" + std::to_string(s) +
                        "]: degree does not match the multidegree");
      t.factors.push_back(std::move(f));
    }
    const json& fr = jt["factor_ranks"];
    if (!fr.is_array() || fr.size() != fs.size())
      throw JsonError(where + ".factor_ranks: expected one positive integer per factor");
    for (const auto& r : fr) {
      if (!r.is_number_integer() || r.get<long>() < 1)
        throw JsonError(where + ".factor_ranks: expected one positive integer per factor");
      t.factor_ranks.push_back(r.get<int>());
    }
    d.terms.push_back(std::move(t));
  }
  return d;
}

// ---- reports ----
void to_json(json& j, FieldKind f);
void to_json(json& j, const VerifyReport& r);
void to_json(json& j, const LowerBoundCertificate& c);
void to_json(json& j, const KnownValue& v);
void to_json(json& j, const Check33Report& r);
void to_json(json& j, const SylvesterOutcome& o);
void to_json(json& j, const Thm33Result& r);
void to_json(json& j, const CurvePointSet& s);
void to_json(json& j, const CurveResult& r);
void to_json(json& j, const PruneResult& r);
void to_json(json& j, const UpperCandidate& c);
void to_json(json& j, const BoundReport& r);
void to_json(json& j, const TableRow& r);
void to_json(json& j, const CriterionResult& r);

}  // namespace psrank
