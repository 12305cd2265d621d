#include "qcox/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <json.hpp>
#include <numeric>
#include <ostream>
#include <set>

#include "qcox/factor_enum.hpp"
#include "qcox/hurwitz.hpp"
#include "qcox/lengths.hpp"
#include "qcox/pqc_rgs.hpp"
#include "qcox/verify.hpp"
#include "qcox/weyl_lattice.hpp"

namespace qcox {

namespace {

using ordered_json = nlohmann::ordered_json;

int env_jobs() {
  if (const char* env = std::getenv("QCOX_JOBS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string scalar_text(const ordered_json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

// one flat record: json object, csv header+row, or key: value lines
void emit_record(const ordered_json& obj, const std::string& format,
                 std::ostream& out) {
  if (format == "json") {
    out << obj.dump() << "\n";
    return;
  }
  if (format == "csv") {
    bool first = true;
    for (const auto& item : obj.items()) {
      out << (first ? "" : ",") << csv_cell(item.key());
      first = false;
    }
    out << "\n";
    first = true;
    for (const auto& item : obj.items()) {
      out << (first ? "" : ",") << csv_cell(scalar_text(item.value()));
      first = false;
    }
    out << "\n";
    return;
  }
  for (const auto& item : obj.items())
    out << item.key() << ": " << scalar_text(item.value()) << "\n";
}

int run_len(const run_config& cfg, std::ostream& out) {
  element g = parse_element(cfg.element_text);
  ordered_json obj;
  obj["schema"] = 1;
  obj["refl_length"] = refl_length(g);
  obj["full_length"] = full_refl_length(g);
  obj["codim"] = codim_fixed(g);
  emit_record(obj, cfg.format, out);
  return 0;
}

int run_fred(const run_config& cfg, std::ostream& out) {
  element g = parse_element(cfg.element_text);
  big_int count = count_reduced(g);
  ordered_json obj;
  obj["schema"] = 1;
  obj["count"] = count.str();
  if (is_parabolic_qc(g).is_pqc) {
    big_int formula = fred_formula_pqc(g);
    obj["formula"] = formula.str();
    obj["match"] = count == formula;
  } else {
    obj["formula"] = nullptr;
    obj["match"] = nullptr;
  }
  emit_record(obj, cfg.format, out);
  return 0;
}

int run_full(const run_config& cfg, std::ostream& out) {
  element g = parse_element(cfg.element_text);
  auto tuples = enumerate_full_min(g, cfg.closure_cap, cfg.depth_cap);
  ordered_json obj;
  obj["schema"] = 1;
  obj["full_length"] = full_refl_length(g);
  obj["count"] = std::to_string(tuples.size());
  emit_record(obj, cfg.format, out);
  return 0;
}

int run_rgs(const run_config& cfg, std::ostream& out) {
  element g = parse_element(cfg.element_text);
  rgs_route route =
      cfg.route == "brute" ? rgs_route::brute : rgs_route::graph;
  auto sets = enumerate_rgs(g, cfg.closure_cap, route);
  bool pqc = is_parabolic_qc(g).is_pqc;
  big_int formula = pqc ? count_rgs_formula(g) : big_int(0);
  ordered_json obj;
  obj["schema"] = 1;
  obj["route"] = cfg.route;
  obj["count"] = std::to_string(sets.size());
  obj["formula"] = formula.str();
  obj["match"] = big_int(sets.size()) == formula;
  emit_record(obj, cfg.format, out);
  return 0;
}

int run_pqc(const run_config& cfg, std::ostream& out) {
  element g = parse_element(cfg.element_text);
  pqc_verdict v = is_parabolic_qc(g);
  parabolic_type pt = parabolic_closure_type(g);
  ordered_json obj;
  obj["schema"] = 1;
  obj["is_pqc"] = v.is_pqc;
  obj["is_qc"] = v.is_qc;
  obj["refl_length"] = refl_length(g);
  obj["closure_rank"] = pt.rank;
  obj["closure_order"] = pt.order().str();
  emit_record(obj, cfg.format, out);
  return 0;
}

int run_hurwitz_orbit(const run_config& cfg, std::ostream& out) {
  element g = parse_element(cfg.element_text);
  const auto& gp = g.params();
  auto start = greedy_reduced_factorization(g);
  auto orbit = hurwitz_orbit(factor_tuple(gp, start), cfg.orbit_cap);
  big_int fred = count_reduced(g);
  ordered_json obj;
  obj["schema"] = 1;
  obj["orbit_size"] = std::to_string(orbit.size());
  obj["fred"] = fred.str();
  obj["transitive"] = big_int(orbit.size()) == fred;
  emit_record(obj, cfg.format, out);
  return 0;
}

int run_hurwitz_number(const run_config& cfg, std::ostream& out) {
  big_int count = hurwitz_number(cfg.lambda);
  ordered_json obj;
  obj["schema"] = 1;
  obj["lambda"] = cfg.lambda;
  obj["count"] = count.str();
  emit_record(obj, cfg.format, out);
  return 0;
}

bool next_combo(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

big_int dot(const std::vector<big_int>& a, const std::vector<big_int>& b) {
  big_int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

big_int det_int(std::vector<std::vector<big_int>> a) {
  const int k = static_cast<int>(a.size());
  if (k == 0) return 1;
  big_int sign = 1, prev = 1;
  for (int col = 0; col < k - 1; ++col) {
    int piv = -1;
    for (int r = col; r < k; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      std::swap(a[piv], a[col]);
      sign = -sign;
    }
    for (int r = col + 1; r < k; ++r)
      for (int c = col + 1; c < k; ++c)
        a[r][c] = (a[r][c] * a[col][col] - a[r][col] * a[col][c]) / prev;
    prev = a[col][col];
  }
  return sign * a[k - 1][k - 1];
}

int run_weyl(const run_config& cfg, std::ostream& out) {
  weyl_type type = parse_weyl_type(cfg.type_name);
  group_params real = type.realization();
  ordered_json obj;
  obj["schema"] = 1;
  obj["type"] = format_weyl_type(type);
  obj["check"] = cfg.check;
  if (cfg.check == "gendet") {
    auto refls = all_reflections(real);
    const big_int cidx = connection_index(type);
    long long subsets = 0, generating = 0, mismatches = 0;
    std::vector<int> idx(type.rank);
    std::iota(idx.begin(), idx.end(), 0);
    do {
      std::vector<reflection> subset;
      for (int i : idx) subset.push_back(refls[i]);
      big_int det = cartan_pairing(subset, type).determinant;
      bool full = reflection_closure_order(real, subset, cfg.closure_cap) ==
                  real.order();
      ++subsets;
      if (full) ++generating;
      if ((abs(det) == cidx) != full) ++mismatches;
    } while (next_combo(idx, static_cast<int>(refls.size())));
    obj["subsets"] = subsets;
    obj["generating"] = generating;
    obj["mismatches"] = mismatches;
    obj["pass"] = mismatches == 0;
  } else if (cfg.check == "pdet") {
    long long elements = 0, mismatches = 0;
    for (const auto& g : enumerate_group(real, cfg.closure_cap)) {
      std::vector<root_pair> pairs;
      for (const auto& f : greedy_reduced_factorization(g))
        pairs.push_back(root_of(*as_reflection(f), type));
      const int k = static_cast<int>(pairs.size());
      std::vector<std::vector<big_int>> mat(k, std::vector<big_int>(k));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          mat[i][j] = dot(pairs[i].root, pairs[j].coroot);
      ++elements;
      if (abs(det_int(mat)) != pdet_abs(g, type)) ++mismatches;
    }
    obj["elements"] = elements;
    obj["mismatches"] = mismatches;
    obj["pass"] = mismatches == 0;
  } else if (cfg.check == "abc") {
    big_int degree = abc_degree(type);
    big_int count = count_reduced(coxeter_element(type));
    obj["degree"] = degree.str();
    obj["count"] = count.str();
    obj["match"] = degree == count;
  } else {
    throw domain_error("unknown weyl check: " + cfg.check);
  }
  emit_record(obj, cfg.format, out);
  return 0;
}

int run_verify_cmd(const run_config& cfg, std::ostream& out) {
  verify_scale scale = scale_for_suite(cfg.suite, cfg.max_order, cfg.jobs);
  auto results = run_verify(scale);
  bool pass = true;
  for (const auto& r : results) pass = pass && r.passed;
  if (cfg.format == "json") {
    ordered_json obj;
    obj["schema"] = 1;
    obj["suite"] = cfg.suite;
    obj["max_order"] = scale.max_order;
    ordered_json rows = ordered_json::array();
    for (const auto& r : results) {
      ordered_json row;
      row["name"] = r.name;
      row["passed"] = r.passed;
      row["detail"] = r.detail;
      rows.push_back(std::move(row));
    }
    obj["results"] = std::move(rows);
    obj["pass"] = pass;
    out << obj.dump() << "\n";
  } else if (cfg.format == "csv") {
    out << "name,passed,detail\n";
    for (const auto& r : results)
      out << csv_cell(r.name) << "," << (r.passed ? "true" : "false") << ","
          << csv_cell(r.detail) << "\n";
  } else {
    for (const auto& r : results)
      out << (r.passed ? "PASS" : "FAIL") << "  " << r.name << ": " << r.detail
          << "\n";
    out << (pass ? "all criteria passed" : "criteria failed") << "\n";
  }
  return pass ? 0 : 3;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  run_config cfg;
  cfg.jobs = env_jobs();

  CLI::App app{"reflection factorizations in the groups G(m,p,n)"};
  app.require_subcommand(1);
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--jobs", cfg.jobs, "worker threads");
  app.add_option("--orbit-cap", cfg.orbit_cap, "largest orbit walked");
  app.add_option("--closure-cap", cfg.closure_cap, "largest closure walked");
  app.add_option("--depth-cap", cfg.depth_cap, "deepest factorization search");
  app.add_option("--route", cfg.route, "relative-set enumeration route")
      ->check(CLI::IsMember({"graph", "brute"}));
  app.add_option("--seed", cfg.seed, "reserved for sampled sweeps");

  auto* len = app.add_subcommand("len", "reflection length report");
  len->add_option("element", cfg.element_text)->required();
  auto* fred = app.add_subcommand("fred", "reduced factorization count");
  fred->add_option("element", cfg.element_text)->required();
  auto* full =
      app.add_subcommand("full", "minimum generating factorizations");
  full->add_option("element", cfg.element_text)->required();
  auto* rgs = app.add_subcommand("rgs", "relative generating sets");
  rgs->add_option("element", cfg.element_text)->required();
  auto* pqc = app.add_subcommand("pqc", "parabolic quasi-Coxeter verdict");
  pqc->add_option("element", cfg.element_text)->required();
  auto* horbit = app.add_subcommand("hurwitz-orbit",
                                    "orbit of one reduced factorization");
  horbit->add_option("element", cfg.element_text)->required();
  auto* hnum =
      app.add_subcommand("hurwitz-number", "transitive transposition count");
  hnum->add_option("lambda", cfg.lambda, "partition parts")->required();
  auto* weyl = app.add_subcommand("weyl", "root lattice checks");
  weyl->add_option("--type", cfg.type_name, "A<r>, B<r> or D<r>")->required();
  weyl->add_option("--check", cfg.check, "gendet, pdet or abc")
      ->required()
      ->check(CLI::IsMember({"gendet", "pdet", "abc"}));
  auto* verify = app.add_subcommand("verify", "run the acceptance battery");
  verify->add_option("--suite", cfg.suite, "quick, core or all")
      ->check(CLI::IsMember({"quick", "core", "all"}));
  verify->add_option("--max-order", cfg.max_order, "group catalog bound");

  for (auto* sub : {len, fred, full, rgs, pqc, horbit, hnum, weyl, verify})
    sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 64;
  }

  try {
    if (len->parsed()) return run_len(cfg, out);
    if (fred->parsed()) return run_fred(cfg, out);
    if (full->parsed()) return run_full(cfg, out);
    if (rgs->parsed()) return run_rgs(cfg, out);
    if (pqc->parsed()) return run_pqc(cfg, out);
    if (horbit->parsed()) return run_hurwitz_orbit(cfg, out);
    if (hnum->parsed()) return run_hurwitz_number(cfg, out);
    if (weyl->parsed()) return run_weyl(cfg, out);
    if (verify->parsed()) return run_verify_cmd(cfg, out);
  } catch (const cap_error& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
  return 64;
}

}  // namespace qcox
