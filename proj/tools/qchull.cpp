// Command-line front end: constructs quasi-cyclic / double-circulant /
// four-circulant codes, reports hull and complementary-pair facts from both
// the polynomial formulas and the matrix-rank computations, runs searches,
// and replays the bundled reference tables.
//
// Exit codes: 0 success, 2 bad input, 3 enumeration budget exceeded,
// 4 formula/matrix disagreement or an unverified or non-reproducible result.
#include <stdexcept>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qch/search.hpp"
#include "qch/serde.hpp"

#ifndef QCH_TABLES_JSON
#define QCH_TABLES_JSON "data/tables.json"
#endif

namespace {

void print_text(const nlohmann::json& j, std::ostream& os, int indent = 0) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || v.is_array()) {
        os << pad << k << ":\n";
        print_text(v, os, indent + 2);
      } else {
        os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
           << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object() || v.is_array()) {
        os << pad << "-\n";
        print_text(v, os, indent + 2);
      } else {
        os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const nlohmann::json& report, const std::string& format) {
  if (format == "json")
    std::cout << report.dump(2) << "\n";
  else
    print_text(report, std::cout);
}

nlohmann::json factor_report(const qch::FieldSpec& f, int m) {
  qch::FactorClassification fac = qch::factor_xm_minus_one(f, m);
  nlohmann::json self = nlohmann::json::array();
  for (const auto& p : fac.self_reciprocal) self.push_back(qch::to_string(p));
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [p, ps] : fac.reciprocal_pairs)
    pairs.push_back({qch::to_string(p), qch::to_string(ps)});
  return {{"q", qch::field_notation(f)},
          {"m", m},
          {"self_reciprocal", self},
          {"reciprocal_pairs", pairs}};
}

// Shared tail of every analyze report: formula hull vs. rank hull, LCD, and
// the exact minimum distance.
void fill_code_facts(nlohmann::json& rep, const qch::LinearCode& code, int hull_formula,
                     unsigned long long budget, bool* agree) {
  int hull_oracle = qch::hull_dimension(code);
  rep["n"] = code.n();
  rep["k"] = code.k();
  rep["hull_formula"] = hull_formula;
  rep["hull_oracle"] = hull_oracle;
  rep["hull_agree"] = hull_formula == hull_oracle;
  rep["lcd"] = hull_formula == 0;
  if (code.field().k() % 2 == 0)
    rep["hermitian_hull_oracle"] = qch::hermitian_hull_dimension(code);
  rep["min_distance"] = qch::min_distance(code, budget);
  *agree = hull_formula == hull_oracle;
}

nlohmann::json analyze_report(const std::string& family, const qch::FieldSpec& f, int m,
                              const std::vector<std::string>& gens,
                              unsigned long long budget, bool* agree) {
  nlohmann::json rep{{"family", family}, {"q", qch::field_notation(f)}, {"m", m}};
  if (family == "qc1gen") {
    std::vector<qch::RingElement> rings;
    for (const auto& s : gens) rings.push_back(qch::ring_element_from_string(s, f, m));
    qch::QcSpec spec(std::move(rings));
    rep["generator_gcd"] = qch::to_string(qch::generator_poly(spec));
    rep["parity_check"] = qch::to_string(qch::parity_check_poly(spec));
    rep["maximal"] = qch::is_maximal(spec);
    if (spec.ell() == 1)
      rep["generator_self_reciprocal"] = qch::generator_is_self_reciprocal(spec);
    fill_code_facts(rep, qch::build_code(spec), qch::hull_dimension(spec), budget, agree);
  } else if (family == "dc") {
    if (gens.size() != 1)
      throw std::invalid_argument("family dc takes exactly one --gen");
    qch::DcSpec spec(qch::ring_element_from_string(gens[0], f, m));
    fill_code_facts(rep, qch::build_code(spec.as_qc()), qch::hull_dimension(spec), budget,
                    agree);
  } else if (family == "fc") {
    if (gens.size() != 2)
      throw std::invalid_argument("family fc takes exactly two --gen");
    qch::FcSpec spec(qch::ring_element_from_string(gens[0], f, m),
                     qch::ring_element_from_string(gens[1], f, m));
    fill_code_facts(rep, qch::build_code(spec), qch::hull_dimension(spec), budget, agree);
  } else {
    throw std::invalid_argument("unknown family '" + family +
                                "' (expected qc1gen, dc, or fc)");
  }
  return rep;
}

nlohmann::json lcp_report(const std::string& family, const qch::FieldSpec& f, int m,
                          const std::vector<std::string>& gc,
                          const std::vector<std::string>& gd, unsigned long long budget,
                          bool* agree) {
  auto ring = [&](const std::string& s) { return qch::ring_element_from_string(s, f, m); };
  bool formula = false;
  std::optional<qch::LinearCode> cc, dc;
  if (family == "qc1gen") {
    std::vector<qch::RingElement> rc, rd;
    for (const auto& s : gc) rc.push_back(ring(s));
    for (const auto& s : gd) rd.push_back(ring(s));
    qch::QcSpec c(std::move(rc)), d(std::move(rd));
    formula = qch::is_lcp(c, d);
    cc = qch::build_code(c);
    dc = qch::build_code(d);
  } else if (family == "dc") {
    if (gc.size() != 1 || gd.size() != 1)
      throw std::invalid_argument("family dc takes one --genC and one --genD");
    qch::DcSpec c(ring(gc[0])), d(ring(gd[0]));
    formula = qch::is_lcp(c.as_qc(), d.as_qc());
    cc = qch::build_code(c.as_qc());
    dc = qch::build_code(d.as_qc());
  } else if (family == "fc") {
    if (gc.size() != 2 || gd.size() != 2)
      throw std::invalid_argument("family fc takes two --genC and two --genD");
    qch::FcSpec c(ring(gc[0]), ring(gc[1])), d(ring(gd[0]), ring(gd[1]));
    formula = qch::is_lcp(c, d);
    cc = qch::build_code(c);
    dc = qch::build_code(d);
  } else {
    throw std::invalid_argument("unknown family '" + family +
                                "' (expected qc1gen, dc, or fc)");
  }
  bool oracle = qch::intersection_dimension(*cc, *dc) == 0 && cc->k() + dc->k() == cc->n();
  nlohmann::json rep{{"family", family},
                     {"q", qch::field_notation(f)},
                     {"m", m},
                     {"lcp_formula", formula},
                     {"lcp_oracle", oracle},
                     {"agree", formula == oracle}};
  if (formula && oracle)
    rep["security"] = qch::security_parameter(*cc, *dc, budget);
  *agree = formula == oracle;
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quasi-cyclic, double-circulant, and four-circulant code tool"};
  app.require_subcommand(1);

  std::string format = "json";
  auto add_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
  };

  std::string q;
  int m = 0;
  unsigned long long budget = qch::kDefaultDistanceBudget;
  std::string family;
  std::vector<std::string> gens, gens_c, gens_d;
  std::string search_family;
  bool exhaustive = false;
  unsigned long long trials = 0, seed = 0;
  int table_id = 0;
  std::string tables_path = QCH_TABLES_JSON;

  CLI::App* factor = app.add_subcommand("factor", "factor x^m - 1 over GF(q)");
  add_format(factor);
  factor->add_option("--q", q, "field, e.g. 5 or 2^2 or 4:modulus=x^2+x+1")->required();
  factor->add_option("--m", m, "block length (coprime to the characteristic)")->required();

  CLI::App* analyze =
      app.add_subcommand("analyze", "hull, LCD, and distance facts for one code");
  add_format(analyze);
  analyze->add_option("--q", q, "field")->required();
  analyze->add_option("--m", m, "block length")->required();
  analyze->add_option("--family", family, "qc1gen, dc, or fc")->required();
  analyze->add_option("--gen", gens, "generator polynomial (repeatable)")->required();
  analyze->add_option("--budget", budget, "codeword enumeration cap")
      ->capture_default_str();

  CLI::App* lcp =
      app.add_subcommand("lcp", "complementary-pair facts for two codes");
  add_format(lcp);
  lcp->add_option("--q", q, "field")->required();
  lcp->add_option("--m", m, "block length")->required();
  lcp->add_option("--family", family, "qc1gen, dc, or fc")->required();
  lcp->add_option("--genC", gens_c, "generators of C (repeatable)")->required();
  lcp->add_option("--genD", gens_d, "generators of D (repeatable)")->required();
  lcp->add_option("--budget", budget, "codeword enumeration cap")->capture_default_str();

  CLI::App* search = app.add_subcommand("search", "best-distance search in one family");
  add_format(search);
  search->add_option("--q", q, "field")->required();
  search->add_option("--m", m, "block length")->required();
  search
      ->add_option("--family", search_family,
                   "qc1gen-lcd, dc-hull1, dc-lcp, fc-lcd, or fc-lcp")
      ->required();
  CLI::Option* exh = search->add_flag("--exhaustive", exhaustive, "sweep all candidates");
  CLI::Option* tri = search->add_option("--trials", trials, "random candidates to draw");
  CLI::Option* sd = search->add_option("--seed", seed, "RNG seed for random mode");
  tri->excludes(exh);
  tri->needs(sd);
  sd->needs(tri);
  search->add_option("--budget", budget, "codeword enumeration cap")
      ->capture_default_str();

  CLI::App* reproduce =
      app.add_subcommand("reproduce", "re-derive one bundled reference table");
  add_format(reproduce);
  reproduce->add_option("--table", table_id, "table id (1-8)")->required();
  reproduce->add_option("--tables", tables_path, "reference table file")
      ->capture_default_str();
  reproduce->add_option("--budget", budget, "codeword enumeration cap")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(factor)) {
      emit(factor_report(qch::parse_field_notation(q), m), format);
      return 0;
    }
    if (app.got_subcommand(analyze)) {
      bool agree = false;
      nlohmann::json rep =
          analyze_report(family, qch::parse_field_notation(q), m, gens, budget, &agree);
      emit(rep, format);
      return agree ? 0 : 4;
    }
    if (app.got_subcommand(lcp)) {
      bool agree = false;
      nlohmann::json rep = lcp_report(family, qch::parse_field_notation(q), m, gens_c,
                                      gens_d, budget, &agree);
      emit(rep, format);
      return agree ? 0 : 4;
    }
    if (app.got_subcommand(search)) {
      if (!exhaustive && tri->count() == 0)
        throw std::invalid_argument("search needs --exhaustive or --trials with --seed");
      qch::SearchTask task;
      task.family = qch::search_family_from_string(search_family);
      task.field = &qch::parse_field_notation(q);
      task.m = m;
      task.mode.exhaustive = exhaustive;
      task.mode.trials = trials;
      task.mode.seed = seed;
      task.distance_budget = budget;
      qch::SearchResult res = qch::run_search(task);
      nlohmann::json rep{{"family", search_family},
                         {"q", q},
                         {"m", m},
                         {"found", res.found},
                         {"candidates_examined", res.candidates_examined},
                         {"distance_budget_hit", res.distance_budget_hit}};
      if (res.found) {
        rep["best_metric"] = res.best_metric;
        rep["witness"] = res.witness;
        rep["verified"] = res.verified;
      }
      emit(rep, format);
      if (res.found && !res.verified) return res.distance_budget_hit ? 3 : 4;
      return 0;
    }
    if (app.got_subcommand(reproduce)) {
      nlohmann::json rep =
          qch::reproduce_table(qch::load_reference_tables(tables_path), table_id, budget);
      emit(rep, format);
      return rep.at("all_ok").get<bool>() ? 0 : 4;
    }
  } catch (const qch::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
