// Python bindings: a thin JSON-string bridge over the library. Every
// function takes/returns JSON text using the same schemas as the CLI, so
// the python layer stays a pure convenience wrapper.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "psrank/acceptance.hpp"
#include "psrank/json_io.hpp"

namespace py = pybind11;
using namespace psrank;

namespace {

FieldKind field_from_name(const std::string& name) {
  if (name == "q" || name == "Q") return FieldKind::rational;
  if (name == "qi" || name == "Q(i)") return FieldKind::gaussian;
  if (name == "numeric" || name == "c" || name == "C") return FieldKind::numeric;
  throw std::invalid_argument("field: expected q, qi, or numeric, got '" + name + "'");
}

json parse_arg(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw JsonError(std::string(what) + ": invalid JSON: " + e.what());
  }
}

// Reports wrap their payload ("decomposition", or "rank_one"/"factor_form"
// for the factor-form route); accept the wrapper or the bare object.
json unwrap_decomposition(json j) {
  if (j.is_object() && !j.contains("terms"))
    for (const char* key : {"decomposition", "rank_one", "factor_form", "witness"})
      if (j.contains(key)) return j[key];
  return j;
}

std::string py_sylvester(const std::string& form_json, const std::string& field, double tol) {
  BinaryForm<Rational> f = parse_binary_form<Rational>(parse_arg(form_json, "form"));
  return json(sylvester_decompose(f, field_from_name(field), tol)).dump();
}

std::string py_w_product(const std::vector<int>& multidegree) {
  return json(w_product(multidegree)).dump();
}

std::string py_lower_bound(const std::string& tensor_json) {
  json jt = parse_arg(tensor_json, "tensor");
  FieldKind fk = payload_field(jt);
  if (fk == FieldKind::numeric)
    throw JsonError("tensor: exact coefficients (rational or Gaussian rational) required");
  LowerBoundCertificate best;
  if (fk == FieldKind::rational) {
    PSTensor<Rational> t = parse_tensor<Rational>(jt);
    best = cactus_lower_bound(t);
    bool positive = true;
    for (int d : t.multidegree) positive = positive && d >= 2;
    if (positive && t == w_product(t.multidegree)) {
      LowerBoundCertificate m = merge_lower_bound(t.multidegree);
      if (m.value > best.value) best = m;
    }
  } else {
    best = cactus_lower_bound(parse_tensor<GaussianRational>(jt));
  }
  return json(best).dump();
}

std::string py_flatten(const std::string& tensor_json, const std::vector<int>& spec) {
  json jt = parse_arg(tensor_json, "tensor");
  FieldKind fk = payload_field(jt);
  if (fk == FieldKind::numeric)
    throw JsonError("tensor: exact coefficients (rational or Gaussian rational) required");
  json out;
  if (fk == FieldKind::rational) {
    Matrix<Rational> m = flattening_matrix(parse_tensor<Rational>(jt), spec);
    out = json{{"spec", spec}, {"rank", rank(m)}};
    to_json(out["matrix"], m);
  } else {
    Matrix<GaussianRational> m = flattening_matrix(parse_tensor<GaussianRational>(jt), spec);
    out = json{{"spec", spec}, {"rank", rank(m)}};
    to_json(out["matrix"], m);
  }
  return out.dump();
}

std::string py_decompose(const std::vector<int>& multidegree, const std::string& method,
                         double tol) {
  if (method == "thm33") {
    for (int d : multidegree)
      if (d != 3)
        throw std::invalid_argument(
            "decompose: the coupled-factor construction needs every degree equal to 3");
    return json(thm33_decomposition(static_cast<int>(multidegree.size()))).dump();
  }
  if (method == "curve") return json(curve_union_decomposition(multidegree)).dump();
  if (method == "combine") {
    std::vector<SylvesterOutcome> parts;
    bool all_rational = true;
    for (int d : multidegree) {
      parts.push_back(sylvester_decompose(w_state(d), FieldKind::rational, tol));
      all_rational = all_rational && parts.back().achieved == FieldKind::rational;
    }
    json out;
    if (all_rational) {
      Decomposition<Rational> acc = parts.front().dec_q.value();
      for (size_t i = 1; i < parts.size(); ++i) acc = combine(acc, parts[i].dec_q.value());
      out = json{{"multidegree", multidegree},
                 {"field", field_traits<Rational>::name},
                 {"check", verify(acc, w_product(multidegree), tol)}};
      to_json(out["decomposition"], acc);
    } else {
      auto tier = [](const SylvesterOutcome& o) {
        return o.dec_c ? o.dec_c.value() : decomposition_cast<ApproxComplex>(o.dec_q.value());
      };
      Decomposition<ApproxComplex> acc = tier(parts.front());
      for (size_t i = 1; i < parts.size(); ++i) acc = combine(acc, tier(parts[i]));
      out = json{{"multidegree", multidegree},
                 {"field", field_traits<ApproxComplex>::name},
                 {"check", verify(acc, tensor_cast<ApproxComplex>(w_product(multidegree)), tol)}};
      to_json(out["decomposition"], acc);
    }
    return out.dump();
  }
  throw std::invalid_argument("decompose: method must be thm33, curve, or combine");
}

std::string py_verify(const std::string& dec_json, const std::string& target_json, double tol) {
  json jd = unwrap_decomposition(parse_arg(dec_json, "dec"));
  json jt = parse_arg(target_json, "target");
  FieldKind fk = std::max(payload_field(jd), payload_field(jt));
  bool factor_form = is_factor_decomposition(jd);
  VerifyReport rep;
  if (fk == FieldKind::rational)
    rep = factor_form
              ? verify(parse_factor_decomposition<Rational>(jd), parse_tensor<Rational>(jt), tol)
              : verify(parse_decomposition<Rational>(jd), parse_tensor<Rational>(jt), tol);
  else if (fk == FieldKind::gaussian)
    rep = factor_form ? verify(parse_factor_decomposition<GaussianRational>(jd),
                               parse_tensor<GaussianRational>(jt), tol)
                      : verify(parse_decomposition<GaussianRational>(jd),
                               parse_tensor<GaussianRational>(jt), tol);
  else
    rep = factor_form ? verify(parse_factor_decomposition<ApproxComplex>(jd),
                               parse_tensor<ApproxComplex>(jt), tol)
                      : verify(parse_decomposition<ApproxComplex>(jd),
                               parse_tensor<ApproxComplex>(jt), tol);
  return json(rep).dump();
}

std::string py_check_condition(int k, const std::vector<std::string>& xi_strings) {
  std::vector<Rational> xi;
  if (xi_strings.empty()) {
    xi = default_xi(k);
  } else {
    for (const auto& s : xi_strings) xi.push_back(rational_from_string(s));
    if (static_cast<int>(xi.size()) != k)
      throw std::invalid_argument("check_condition: expected " + std::to_string(k) + " xi values");
  }
  XiScheme scheme(xi);
  return json(check_condition_33(scheme.a_matrix())).dump();
}

std::string py_bound_report(const std::vector<int>& multidegree) {
  return json(bound_report(multidegree)).dump();
}

std::string py_table(int max_k, int max_d) {
  return json(submultiplicativity_table(max_k, max_d)).dump();
}

std::string py_run_acceptance(std::uint64_t seed) { return json(run_acceptance(seed)).dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact rank bounds and verifiable decompositions for partially symmetric tensors";
  py::register_exception<JsonError>(m, "JsonError", PyExc_ValueError);
  m.def("sylvester", &py_sylvester, py::arg("form_json"), py::arg("field") = "q",
        py::arg("tol") = 1e-9);
  m.def("w_product", &py_w_product, py::arg("multidegree"));
  m.def("lower_bound", &py_lower_bound, py::arg("tensor_json"));
  m.def("flatten", &py_flatten, py::arg("tensor_json"), py::arg("spec"));
  m.def("decompose", &py_decompose, py::arg("multidegree"), py::arg("method") = "curve",
        py::arg("tol") = 1e-9);
  m.def("verify", &py_verify, py::arg("dec_json"), py::arg("target_json"), py::arg("tol") = 1e-9);
  m.def("check_condition", &py_check_condition, py::arg("k"),
        py::arg("xi") = std::vector<std::string>());
  m.def("bound_report", &py_bound_report, py::arg("multidegree"));
  m.def("submultiplicativity_table", &py_table, py::arg("max_k") = 3, py::arg("max_d") = 4);
  m.def("run_acceptance", &py_run_acceptance, py::arg("seed") = 20240613ULL);
}
