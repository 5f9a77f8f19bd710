// psrank: exact rank bounds and verifiable decompositions for partially
// symmetric tensors built from W states. Subcommands emit JSON payloads on
// stdout (diagnostics go to stderr); exit 0 on success, 1 when a produced
// or supplied certificate fails verification, 2 on malformed input.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "psrank/acceptance.hpp"
#include "psrank/json_io.hpp"

namespace {

using namespace psrank;

std::string slurp(const std::string& path, const std::string& opt) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw JsonError(opt + ": cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inline JSON when the argument starts with '{' or '['; otherwise a file
// path ('-' reads stdin).
json load_json_arg(const std::string& arg, const std::string& opt) {
  std::string text;
  size_t i = arg.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && (arg[i] == '{' || arg[i] == '['))
    text = arg;
  else
    text = slurp(arg, opt);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw JsonError(opt + ": invalid JSON: " + std::string(e.what()));
  }
}

std::vector<int> parse_int_csv(const std::string& s, const std::string& opt) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw JsonError(opt + ": expected a comma-separated integer list, got '" + tok + "'");
    }
  }
  if (out.empty()) throw JsonError(opt + ": empty list");
  return out;
}

std::vector<Rational> parse_rational_csv(const std::string& s, const std::string& opt) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(rational_from_string(tok));
    } catch (const std::invalid_argument& e) {
      throw JsonError(opt + ": " + e.what());
    }
  }
  if (out.empty()) throw JsonError(opt + ": empty list");
  return out;
}

FieldKind parse_field(const std::string& name) {
  if (name == "q" || name == "Q") return FieldKind::rational;
  if (name == "qi" || name == "Q(i)") return FieldKind::gaussian;
  if (name == "numeric" || name == "c" || name == "C") return FieldKind::numeric;
  throw JsonError("--field: expected q, qi, or numeric, got '" + name + "'");
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string format_md(const std::vector<int>& md) {
  std::string s = "(";
  for (size_t i = 0; i < md.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(md[i]);
  }
  return s + ")";
}

std::uint64_t default_seed() {
  if (const char* s = std::getenv("PSRANK_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0') return v;
    std::cerr << "warning: ignoring non-numeric PSRANK_SEED '" << s << "'\n";
  }
  return 20240613ULL;
}

// ---- subcommand bodies -------------------------------------------------

int cmd_sylvester(const std::string& coeffs_csv, const std::string& form_arg,
                  const std::string& field_name, double tol, const std::string& format) {
  BinaryForm<Rational> f;
  if (!coeffs_csv.empty()) {
    auto cs = parse_rational_csv(coeffs_csv, "--coeffs");
    int deg = static_cast<int>(cs.size()) - 1;
    f = BinaryForm<Rational>(deg, std::move(cs));
  } else if (!form_arg.empty()) {
    f = parse_binary_form<Rational>(load_json_arg(form_arg, "--form"));
  } else {
    throw JsonError("sylvester: provide --coeffs or --form");
  }
  SylvesterOutcome o = sylvester_decompose(f, parse_field(field_name), tol);
  if (format == "table") {
    std::cout << "degree " << o.degree << ": rank " << o.rank << ", border rank " << o.border
              << ", decomposition over " << field_kind_name(o.achieved) << " with "
              << o.term_count() << " terms, residual " << o.check.residual
              << (o.boundary_kernel ? " (border kernel dimension >= 2)" : "") << "\n";
  } else {
    emit(json(o));
  }
  return o.check.ok ? 0 : 1;
}

int cmd_flatten(const std::string& tensor_arg, const std::string& spec_csv,
                const std::string& format) {
  json jt = load_json_arg(tensor_arg, "--tensor");
  FieldKind fk = payload_field(jt);
  if (fk == FieldKind::numeric)
    throw JsonError("--tensor: exact coefficients (rational or Gaussian rational) required");
  std::vector<int> spec = parse_int_csv(spec_csv, "--spec");
  json out;
  int r = 0, rows = 0, cols = 0;
  if (fk == FieldKind::rational) {
    auto t = parse_tensor<Rational>(jt);
    Matrix<Rational> m = flattening_matrix(t, spec);
    r = rank(m);
    rows = m.rows;
    cols = m.cols;
    out = json{{"spec", spec}, {"rank", r}};
    to_json(out["matrix"], m);
  } else {
    auto t = parse_tensor<GaussianRational>(jt);
    Matrix<GaussianRational> m = flattening_matrix(t, spec);
    r = rank(m);
    rows = m.rows;
    cols = m.cols;
    out = json{{"spec", spec}, {"rank", r}};
    to_json(out["matrix"], m);
  }
  if (format == "table")
    std::cout << "flattening " << rows << "x" << cols << ", rank " << r << "\n";
  else
    emit(out);
  return 0;
}

int cmd_lower(const std::string& tensor_arg, const std::string& format) {
  json jt = load_json_arg(tensor_arg, "--tensor");
  FieldKind fk = payload_field(jt);
  if (fk == FieldKind::numeric)
    throw JsonError("--tensor: exact coefficients (rational or Gaussian rational) required");
  LowerBoundCertificate best;
  if (fk == FieldKind::rational) {
    auto t = parse_tensor<Rational>(jt);
    best = cactus_lower_bound(t);
    bool is_w_product = true;
    for (int d : t.multidegree) is_w_product = is_w_product && d >= 2;
    if (is_w_product && t == w_product(t.multidegree)) {
      LowerBoundCertificate m = merge_lower_bound(t.multidegree);
      if (m.value > best.value) best = m;
    }
  } else {
    best = cactus_lower_bound(parse_tensor<GaussianRational>(jt));
  }
  if (format == "table")
    std::cout << "lower bound " << best.value << " (" << best.method << ")\n";
  else
    emit(json(best));
  return 0;
}

int cmd_decompose(const std::string& wproduct_csv, const std::string& method,
                  const std::string& xi_csv, double tol, const std::string& format) {
  std::vector<int> md = parse_int_csv(wproduct_csv, "--wproduct");
  for (int d : md)
    if (d < 1) throw JsonError("--wproduct: degrees must be >= 1");
  if (method == "thm33") {
    for (int d : md)
      if (d != 3) throw JsonError("--wproduct: the coupled-factor construction needs every degree equal to 3");
    std::optional<std::vector<Rational>> xi;
    if (!xi_csv.empty()) xi = parse_rational_csv(xi_csv, "--xi");
    Thm33Result t = thm33_decomposition(static_cast<int>(md.size()), xi);
    if (format == "table") {
      std::cout << format_md(md) << ": factor form with " << t.factor_form.terms.size()
                << " product terms (exact: " << (t.factor_check.ok ? "yes" : "no")
                << "), rank-one tier over " << field_kind_name(t.tier) << " with "
                << t.split_count << " terms, residual " << t.rank_one_check.residual << "\n";
    } else {
      emit(json(t));
    }
    return t.factor_check.ok && t.rank_one_check.ok ? 0 : 1;
  }
  if (method == "curve") {
    CurveResult r = curve_union_decomposition(md);
    if (format == "table") {
      std::cout << format_md(md) << ": " << r.decomposition.term_count() << " of "
                << r.available_points << " curve points used, exact: "
                << (r.check.ok ? "yes" : "no") << "\n";
    } else {
      emit(json(r));
    }
    return r.check.ok ? 0 : 1;
  }
  if (method == "combine") {
    std::vector<SylvesterOutcome> parts;
    bool all_rational = true;
    for (int d : md) {
      parts.push_back(sylvester_decompose(w_state(d), FieldKind::rational, tol));
      all_rational = all_rational && parts.back().achieved == FieldKind::rational;
    }
    json out;
    VerifyReport chk;
    std::string field;
    if (all_rational) {
      Decomposition<Rational> acc = parts.front().dec_q.value();
      for (size_t i = 1; i < parts.size(); ++i) acc = combine(acc, parts[i].dec_q.value());
      chk = verify(acc, w_product(md), tol);
      field = field_traits<Rational>::name;
      out = json{{"multidegree", md}, {"field", field}, {"check", chk}};
      to_json(out["decomposition"], acc);
    } else {
      auto tier = [](const SylvesterOutcome& o) {
        return o.dec_c ? o.dec_c.value() : decomposition_cast<ApproxComplex>(o.dec_q.value());
      };
      Decomposition<ApproxComplex> acc = tier(parts.front());
      for (size_t i = 1; i < parts.size(); ++i) acc = combine(acc, tier(parts[i]));
      chk = verify(acc, tensor_cast<ApproxComplex>(w_product(md)), tol);
      field = field_traits<ApproxComplex>::name;
      out = json{{"multidegree", md}, {"field", field}, {"check", chk}};
      to_json(out["decomposition"], acc);
    }
    if (format == "table") {
      std::cout << format_md(md) << ": " << chk.term_count << " terms over " << field
                << ", residual " << chk.residual << ", ok: " << (chk.ok ? "yes" : "no") << "\n";
    } else {
      emit(out);
    }
    return chk.ok ? 0 : 1;
  }
  throw JsonError("--method: expected thm33, curve, or combine, got '" + method + "'");
}

int cmd_verify(const std::string& dec_arg, const std::string& target_arg, double tol,
               const std::string& format) {
  json jd = load_json_arg(dec_arg, "--dec");
  // Reports wrap their payload ("decomposition", or "rank_one"/"factor_form"
  // for the factor-form route); accept the wrapper or the bare object.
  if (jd.is_object() && !jd.contains("terms")) {
    for (const char* key : {"decomposition", "rank_one", "factor_form", "witness"})
      if (jd.contains(key)) {
        jd = jd[key];
        break;
      }
  }
  json jt = load_json_arg(target_arg, "--target");
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
  if (format == "table")
    std::cout << (rep.ok ? "ok" : "FAILED") << ": " << rep.term_count << " terms, residual "
              << rep.residual << " (field " << field_kind_name(fk) << ")\n";
  else
    emit(json(rep));
  return rep.ok ? 0 : 1;
}

int cmd_check33(int k, const std::string& xi_csv, const std::string& format) {
  std::vector<Rational> xi = xi_csv.empty() ? default_xi(k) : parse_rational_csv(xi_csv, "--xi");
  if (static_cast<int>(xi.size()) != k)
    throw JsonError("--xi: expected " + std::to_string(k) + " values, got " +
                    std::to_string(xi.size()));
  XiScheme scheme(xi);
  Check33Report rep = check_condition_33(scheme.a_matrix());
  if (format == "table") {
    if (rep.ok) {
      std::cout << "condition holds for all " << ((1u << k) - k - 1) << " subsets\n";
    } else {
      std::cout << "condition fails on subset {";
      for (size_t i = 0; i < rep.failing_subset.size(); ++i)
        std::cout << (i ? "," : "") << rep.failing_subset[i];
      std::cout << "}\n";
    }
  } else {
    emit(json(rep));
  }
  return rep.ok ? 0 : 1;
}

void print_report_table(const BoundReport& r) {
  std::cout << "multidegree         " << format_md(r.multidegree) << "\n";
  std::cout << "naive product       " << r.naive << "\n";
  std::cout << "computed lower      " << r.lower.value << " (" << r.lower.method << ")\n";
  std::cout << "computed upper      " << r.upper << " (" << r.upper_method << ")\n";
  for (const auto& c : r.upper_candidates)
    std::cout << "  candidate         " << std::left << std::setw(12) << c.method << std::right
              << " " << c.value << (c.has_witness ? "  [witness over " + c.witness_field + "]" : "")
              << "\n";
  for (const auto& kv : r.known)
    std::cout << "cited " << std::left << std::setw(6) << kv.kind << std::right << "        "
              << kv.value << "  -- " << kv.statement << "\n";
  std::cout << "final               lower " << r.final_lower << ", upper " << r.final_upper
            << (r.exact ? " (exact)" : "") << "\n";
  std::cout << "submultiplicative   " << (r.submultiplicative ? "yes" : "no") << "\n";
  if (!r.note.empty()) std::cout << "note                " << r.note << "\n";
}

int cmd_bounds(const std::string& wproduct_csv, bool sweep, int max_k, int max_d,
               const std::string& format) {
  if (sweep) {
    std::vector<TableRow> rows = submultiplicativity_table(max_k, max_d);
    if (format == "table") {
      std::cout << std::left << std::setw(14) << "multidegree" << std::setw(7) << "naive"
                << std::setw(7) << "upper" << std::setw(14) << "method" << std::setw(7) << "lower"
                << std::setw(6) << "gap" << "submultiplicative\n";
      for (const auto& row : rows)
        std::cout << std::left << std::setw(14) << format_md(row.multidegree) << std::setw(7)
                  << row.naive << std::setw(7) << row.upper << std::setw(14) << row.upper_method
                  << std::setw(7) << row.lower << std::setw(6) << row.gap
                  << (row.submultiplicative ? "yes" : "no") << "\n";
    } else {
      emit(json(rows));
    }
    return 0;
  }
  std::vector<int> md = parse_int_csv(wproduct_csv, "--wproduct");
  for (int d : md)
    if (d < 1) throw JsonError("--wproduct: degrees must be >= 1");
  BoundReport rep = bound_report(md);
  if (format == "table")
    print_report_table(rep);
  else
    emit(json(rep));
  return 0;
}

int cmd_repro(std::uint64_t seed, const std::string& format) {
  std::vector<CriterionResult> results = run_acceptance(seed);
  if (format == "json") {
    emit(json(results));
  } else {
    int npass = 0;
    for (const auto& r : results) {
      npass += r.pass ? 1 : 0;
      std::ostringstream ms;
      ms << std::fixed << std::setprecision(1) << r.ms;
      std::cout << (r.pass ? "PASS" : "FAIL") << "  [" << std::setw(2) << r.index << "/10] "
                << std::left << std::setw(58) << r.name << std::right << std::setw(10) << ms.str()
                << " ms  " << r.detail << "\n";
    }
    std::cout << npass << "/" << results.size() << " criteria passed (seed " << seed << ")\n";
  }
  return all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact rank bounds and verifiable decompositions for partially symmetric tensor products "
      "of W states"};
  app.require_subcommand(1);

  std::string coeffs_csv, form_arg, field_name = "q", sy_format = "json";
  double sy_tol = 1e-9;
  auto* sy = app.add_subcommand("sylvester", "rank and decomposition of one binary form");
  sy->add_option("--coeffs", coeffs_csv, "coefficients c0,...,cd of sum c_j x^(d-j) y^j");
  sy->add_option("--form", form_arg, "binary form as JSON (inline, file path, or '-')");
  sy->add_option("--field", field_name, "decomposition field: q, qi, or numeric")
      ->capture_default_str();
  sy->add_option("--tol", sy_tol, "residual tolerance for the numeric tier")
      ->capture_default_str();
  sy->add_option("--format", sy_format, "output format: json or table")->capture_default_str();

  std::string fl_tensor, fl_spec, fl_format = "json";
  auto* fl = app.add_subcommand("flatten", "flattening matrix and rank for one exponent spec");
  fl->add_option("--tensor", fl_tensor, "tensor as JSON (inline, file path, or '-')")->required();
  fl->add_option("--spec", fl_spec, "exponent spec e1,...,ek")->required();
  fl->add_option("--format", fl_format, "output format: json or table")->capture_default_str();

  std::string lo_tensor, lo_format = "json";
  auto* lo = app.add_subcommand("lower", "best lower-bound certificate for a tensor");
  lo->add_option("--tensor", lo_tensor, "tensor as JSON (inline, file path, or '-')")->required();
  lo->add_option("--format", lo_format, "output format: json or table")->capture_default_str();

  std::string de_wproduct, de_method = "curve", de_xi, de_format = "json";
  double de_tol = 1e-9;
  auto* de = app.add_subcommand("decompose", "decompose a product of W states");
  de->add_option("--wproduct", de_wproduct, "degrees d1,...,dk")->required();
  de->add_option("--method", de_method, "thm33, curve, or combine")->capture_default_str();
  de->add_option("--xi", de_xi, "coupling parameters for thm33 (comma-separated rationals)");
  de->add_option("--tol", de_tol, "residual tolerance for numeric tiers")->capture_default_str();
  de->add_option("--format", de_format, "output format: json or table")->capture_default_str();

  std::string ve_dec, ve_target, ve_format = "json";
  double ve_tol = 1e-9;
  auto* ve = app.add_subcommand("verify", "re-verify a decomposition against a target tensor");
  ve->add_option("--dec", ve_dec, "decomposition as JSON (inline, file path, or '-')")->required();
  ve->add_option("--target", ve_target, "target tensor as JSON (inline, file path, or '-')")
      ->required();
  ve->add_option("--tol", ve_tol, "residual tolerance for numeric payloads")
      ->capture_default_str();
  ve->add_option("--format", ve_format, "output format: json or table")->capture_default_str();

  int ck_k = 0;
  std::string ck_xi, ck_format = "json";
  auto* ck = app.add_subcommand("check33", "exact check of the coupling condition");
  ck->add_option("-k,--k", ck_k, "number of factors (>= 2)")->required();
  ck->add_option("--xi", ck_xi, "coupling parameters (comma-separated rationals)");
  ck->add_option("--format", ck_format, "output format: json or table")->capture_default_str();

  std::string bo_wproduct, bo_format = "json";
  bool bo_json = false, bo_table = false, bo_sweep = false;
  int bo_max_k = 3, bo_max_d = 4;
  auto* bo = app.add_subcommand("bounds", "lower/upper bound report for a product of W states");
  bo->add_option("--wproduct", bo_wproduct, "degrees d1,...,dk");
  bo->add_flag("--sweep", bo_sweep, "emit the (d,...,d) sweep table instead of one report");
  bo->add_option("--max-k", bo_max_k, "sweep limit on factors (2..4)")->capture_default_str();
  bo->add_option("--max-d", bo_max_d, "sweep limit on degrees (2..8)")->capture_default_str();
  bo->add_option("--format", bo_format, "output format: json or table")->capture_default_str();
  bo->add_flag("--json", bo_json, "shorthand for --format json");
  bo->add_flag("--table", bo_table, "shorthand for --format table");

  std::uint64_t re_seed = default_seed();
  std::string re_format = "table";
  auto* re = app.add_subcommand("repro", "run the full acceptance table and print pass/fail");
  re->add_option("--seed", re_seed, "seed for the randomized checks (default: PSRANK_SEED)")
      ->capture_default_str();
  re->add_option("--format", re_format, "output format: json or table")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (sy->parsed()) return cmd_sylvester(coeffs_csv, form_arg, field_name, sy_tol, sy_format);
    if (fl->parsed()) return cmd_flatten(fl_tensor, fl_spec, fl_format);
    if (lo->parsed()) return cmd_lower(lo_tensor, lo_format);
    if (de->parsed()) return cmd_decompose(de_wproduct, de_method, de_xi, de_tol, de_format);
    if (ve->parsed()) return cmd_verify(ve_dec, ve_target, ve_tol, ve_format);
    if (ck->parsed()) return cmd_check33(ck_k, ck_xi, ck_format);
    if (bo->parsed()) {
      if (bo_table) bo_format = "table";
      if (bo_json) bo_format = "json";
      if (!bo_sweep && bo_wproduct.empty())
        throw JsonError("bounds: provide --wproduct or --sweep");
      return cmd_bounds(bo_wproduct, bo_sweep, bo_max_k, bo_max_d, bo_format);
    }
    if (re->parsed()) return cmd_repro(re_seed, re_format);
  } catch (const JsonError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
