#include "psrank/json_io.hpp"

namespace psrank {

json scalar_to_json(const Rational& x) { return rational_to_string(x); }

json scalar_to_json(const GaussianRational& x) {
  return json{{"re", rational_to_string(x.re)}, {"im", rational_to_string(x.im)}};
}

json scalar_to_json(const ApproxComplex& x) { return json::array({x.real(), x.imag()}); }

Rational parse_rational(const json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return rational_from_string(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw JsonError(where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw JsonError(where + ": expected an exact rational (\"num/den\" string or integer)");
}

GaussianRational parse_gaussian(const json& j, const std::string& where) {
  if (j.is_object()) {
    if (!j.contains("re") || !j.contains("im"))
      throw JsonError(where + ": expected both \"re\" and \"im\"");
    return GaussianRational(parse_rational(j["re"], where + ".re"),
                            parse_rational(j["im"], where + ".im"));
  }
  return GaussianRational(parse_rational(j, where));
}

ApproxComplex parse_numeric_scalar(const json& j, const std::string& where) {
  if (j.is_array()) {
    if (j.size() != 2 || !j[0].is_number() || !j[1].is_number())
      throw JsonError(where + ": expected a [re, im] number pair");
    return ApproxComplex(j[0].get<double>(), j[1].get<double>());
  }
  if (j.is_number()) return ApproxComplex(j.get<double>(), 0.0);
  if (j.is_string() || j.is_object()) return to_approx(parse_gaussian(j, where));
  throw JsonError(where + ": expected a numeric scalar");
}

FieldKind scalar_encoding(const json& j, const std::string& where) {
  if (j.is_string() || j.is_number_integer()) return FieldKind::rational;
  if (j.is_object()) return FieldKind::gaussian;
  if (j.is_array() || j.is_number()) return FieldKind::numeric;
  throw JsonError(where + ": unrecognized scalar encoding");
}

FieldKind payload_field(const json& j) {
  if (!j.is_object())
    throw JsonError("payload: expected an object with \"coeffs\" or \"terms\"");
  auto join = [](FieldKind a, FieldKind b) { return a < b ? b : a; };
  FieldKind kind = FieldKind::rational;
  if (j.contains("coeffs")) {
    const json& cs = j["coeffs"];
    if (!cs.is_array()) throw JsonError("payload.coeffs: expected an array");
    for (size_t i = 0; i < cs.size(); ++i)
      kind = join(kind, scalar_encoding(cs[i], "payload.coeffs[" + std::to_string(i) + "]"));
    return kind;
  }
  if (j.contains("terms")) {
    const json& terms = j["terms"];
    if (!terms.is_array()) throw JsonError("payload.terms: expected an array");
    for (size_t i = 0; i < terms.size(); ++i) {
      const std::string where = "payload.terms[" + std::to_string(i) + "]";
      const json& jt = terms[i];
      if (!jt.is_object() || !jt.contains("weight") ||
          !(jt.contains("vectors") || jt.contains("factors")))
        throw JsonError(where + ": expected an object with \"weight\" and \"vectors\"");
      kind = join(kind, scalar_encoding(jt["weight"], where + ".weight"));
      if (jt.contains("factors")) {
        const json& fs = jt["factors"];
        if (!fs.is_array()) throw JsonError(where + ".factors: expected an array");
        for (const json& f : fs) kind = join(kind, payload_field(f));
        continue;
      }
      const json& vecs = jt["vectors"];
      if (!vecs.is_array()) throw JsonError(where + ".vectors: expected an array");
      for (size_t s = 0; s < vecs.size(); ++s) {
        const json& v = vecs[s];
        if (!v.is_array() || v.size() != 2)
          throw JsonError(where + ".vectors[" + std::to_string(s) + "]: expected an [a,b] pair");
        // An [a,b] pair of numbers is ambiguous with a numeric scalar only at
        // the vector level, never at the entry level.
        kind = join(kind, scalar_encoding(v[0], where + ".vectors"));
        kind = join(kind, scalar_encoding(v[1], where + ".vectors"));
      }
    }
    return kind;
  }
  throw JsonError("payload: missing both \"coeffs\" and \"terms\"");
}

namespace detail {
std::vector<int> parse_multidegree(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw JsonError(where + ": expected a nonempty array");
  std::vector<int> md;
  md.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer() || j[i].get<long>() < 1)
      throw JsonError(where + "[" + std::to_string(i) + "]: expected an integer >= 1");
    md.push_back(j[i].get<int>());
  }
  return md;
}
}  // namespace detail

void to_json(json& j, FieldKind f) { j = field_kind_name(f); }

void to_json(json& j, const VerifyReport& r) {
  j = json{{"ok", r.ok}, {"residual", r.residual}, {"term_count", r.term_count}};
}

void to_json(json& j, const LowerBoundCertificate& c) {
  j = json{{"value", c.value},
           {"method", c.method},
           {"flattening_spec", c.flattening_spec},
           {"merge_positions", c.merge_positions}};
}

void to_json(json& j, const KnownValue& v) {
  j = json{{"kind", v.kind}, {"value", v.value}, {"statement", v.statement}};
}

void to_json(json& j, const Check33Report& r) {
  j = json{{"ok", r.ok}, {"failing_subset", r.failing_subset}};
}

void to_json(json& j, const SylvesterOutcome& o) {
  j = json{{"degree", o.degree},
           {"border_rank", o.border},
           {"rank", o.rank},
           {"boundary_kernel", o.boundary_kernel},
           {"requested_field", o.requested},
           {"achieved_field", o.achieved},
           {"check", o.check}};
  if (o.dec_q)
    to_json(j["decomposition"], *o.dec_q);
  else if (o.dec_qi)
    to_json(j["decomposition"], *o.dec_qi);
  else if (o.dec_c)
    to_json(j["decomposition"], *o.dec_c);
}

void to_json(json& j, const Thm33Result& r) {
  json xi = json::array();
  for (const auto& x : r.xi) xi.push_back(scalar_to_json(x));
  j = json{{"k", r.k},
           {"xi", std::move(xi)},
           {"split_count", r.split_count},
           {"factor_check", r.factor_check},
           {"tier", r.tier},
           {"factor_fields", r.factor_fields},
           {"rank_one_check", r.rank_one_check}};
  to_json(j["factor_form"], r.factor_form);
  if (r.rank_one_q)
    to_json(j["rank_one"], *r.rank_one_q);
  else if (r.rank_one_qi)
    to_json(j["rank_one"], *r.rank_one_qi);
  else if (r.rank_one_c)
    to_json(j["rank_one"], *r.rank_one_c);
}

void to_json(json& j, const CurvePointSet& s) {
  json lists = json::array();
  for (const auto& [mask, params] : s.lists) {
    json ps = json::array();
    for (const auto& t : params) ps.push_back(scalar_to_json(t));
    lists.push_back(json{{"mask", mask}, {"params", std::move(ps)}});
  }
  j = json{{"multidegree", s.multidegree}, {"lists", std::move(lists)}};
}

void to_json(json& j, const CurveResult& r) {
  j = json{{"points", r.points}, {"available_points", r.available_points}, {"check", r.check}};
  to_json(j["decomposition"], r.decomposition);
}

void to_json(json& j, const PruneResult& r) {
  j = json{{"kept", r.kept}};
  to_json(j["decomposition"], r.decomposition);
}

void to_json(json& j, const UpperCandidate& c) {
  j = json{{"value", c.value},
           {"method", c.method},
           {"has_witness", c.has_witness},
           {"witness_field", c.witness_field}};
}

void to_json(json& j, const BoundReport& r) {
  j = json{{"multidegree", r.multidegree},
           {"naive", r.naive},
           {"lower_candidates", r.lower_candidates},
           {"lower", r.lower},
           {"upper_candidates", r.upper_candidates},
           {"upper", r.upper},
           {"upper_method", r.upper_method},
           {"witness_check", r.witness_check},
           {"known", r.known},
           {"final_lower", r.final_lower},
           {"final_upper", r.final_upper},
           {"gap", r.gap},
           {"exact", r.exact},
           {"submultiplicative", r.submultiplicative},
           {"note", r.note}};
  if (r.witness_factor)
    to_json(j["witness"], *r.witness_factor);
  else if (r.witness_exact)
    to_json(j["witness"], *r.witness_exact);
  else if (r.witness_numeric)
    to_json(j["witness"], *r.witness_numeric);
}

void to_json(json& j, const TableRow& r) {
  j = json{{"multidegree", r.multidegree},
           {"naive", r.naive},
           {"upper", r.upper},
           {"upper_method", r.upper_method},
           {"lower", r.lower},
           {"gap", r.gap},
           {"submultiplicative", r.submultiplicative}};
}

void to_json(json& j, const CriterionResult& r) {
  j = json{{"index", r.index},
           {"name", r.name},
           {"pass", r.pass},
           {"detail", r.detail},
           {"ms", r.ms}};
}

}  // namespace psrank
