// Command-line front end: JSON in, JSON out. Exit codes: 0 success,
// 1 input/validation error, 2 verification failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "skein/json_io.hpp"
#include "skein/verify.hpp"

namespace {

using namespace skein;

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
  Json j;
  in >> j;
  return j;
}

void emit(const Json& j, bool pretty) {
  if (pretty)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j.dump() << "\n";
}

GroupSpec pick_group(const Json& input, const char* field, const std::string& backend_file) {
  if (!backend_file.empty()) return group_from_json(load_json(backend_file));
  if (!input.contains(field)) throw std::invalid_argument(std::string(field) + ": missing (or pass --backend)");
  return group_from_json(input.at(field));
}

int run_lift(const std::string& path, bool pretty) {
  RhsData data = rhs_from_json(load_json(path));
  Mat<QuarterFrac> lift = lift_linking_form(data);
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < lift.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < lift.cols(); ++j) row.push_back(to_string(lift(i, j)));
    rows.push_back(std::move(row));
  }
  emit(Json{{"lift", std::move(rows)}}, pretty);
  return 0;
}

int run_class(const std::string& path, const std::string& backend, bool pretty) {
  Json input = load_json(path);
  GroupSpec g = pick_group(input, "group", backend);
  if (!input.contains("word")) throw std::invalid_argument("word: missing");
  ClassRep c = class_rep(g, word_from_json(g, input.at("word")));
  emit(Json{{"class", word_to_json(g, c.word)}, {"reliable", c.reliable}}, pretty);
  return 0;
}

int run_mul(const std::string& path, const std::string& backend, bool pretty) {
  Json input = load_json(path);
  GroupSpec g = pick_group(input, "group", backend);
  if (!input.contains("lhs") || !input.contains("rhs"))
    throw std::invalid_argument("mul input needs 'lhs' and 'rhs' elements");
  SkeinElt out = mul(elt_from_json(g, input.at("lhs")), elt_from_json(g, input.at("rhs")));
  emit(elt_to_json(out), pretty);
  return 0;
}

int run_phi(const std::string& path, const std::string& backend, bool pretty) {
  Json input = load_json(path);
  if (input.contains("data")) {
    RhsData data = rhs_from_json(input.at("data"));
    GroupSpec g = pick_group(input, "group", backend);
    if (!input.contains("link")) throw std::invalid_argument("link: missing");
    HomLink link = homlink_from_json(g, input.at("link"), static_cast<i64>(data.torsion.size()));
    emit(phi_result_to_json(phi(g, data, link)), pretty);
    return 0;
  }
  if (!backend.empty()) input["surface"] = load_json(backend);
  auto [m, d] = diagram_from_json(input);
  emit(phi_result_to_json(phi(m, d)), pretty);
  return 0;
}

int run_resolve(const std::string& path, const std::string& backend, int cap, bool pretty) {
  Json input = load_json(path);
  if (!backend.empty()) input["surface"] = load_json(backend);
  auto [m, d] = diagram_from_json(input);
  emit(resolved_to_json(m, resolve(m, d, cap)), pretty);
  return 0;
}

int run_product(const std::string& path, const std::string& backend, bool pretty) {
  Json input = load_json(path);
  if (!input.contains("lhs") || !input.contains("rhs"))
    throw std::invalid_argument("product input needs 'lhs' and 'rhs'");
  if (input.contains("data")) {
    RhsData data = rhs_from_json(input.at("data"));
    GroupSpec g = pick_group(input, "group", backend);
    i64 k = static_cast<i64>(data.torsion.size());
    HomLink a = homlink_from_json(g, input.at("lhs"), k);
    HomLink b = homlink_from_json(g, input.at("rhs"), k);
    if (!input.contains("cross_lk")) throw std::invalid_argument("cross_lk: missing");
    Mat<Frac> cross = frac_matrix_from_json(input.at("cross_lk"), "cross_lk");
    emit(phi_result_to_json(skein_product(g, data, a, b, cross)), pretty);
    return 0;
  }
  Json surface = backend.empty() ? input.at("surface") : load_json(backend);
  Json lhs = input.at("lhs");
  Json rhs = input.at("rhs");
  lhs["surface"] = surface;
  rhs["surface"] = surface;
  auto [m, a] = diagram_from_json(lhs);
  auto [m2, b] = diagram_from_json(rhs);
  (void)m2;
  emit(phi_result_to_json(skein_product(m, a, b)), pretty);
  return 0;
}

int run_verify(const std::string& suite, std::uint64_t seed, i64 cases, bool pretty) {
  std::vector<std::string> names;
  if (suite == "all")
    names = verify::suite_names();
  else
    names.push_back(suite);
  i64 failures = 0, checks = 0;
  Json summary = Json::array();
  for (const auto& name : names) {
    verify::SuiteResult res = verify::run_suite(name, seed, cases);
    for (const auto& rec : res.records) {
      emit(Json{{"suite", res.name},
                {"check", rec.check},
                {"case", rec.case_idx},
                {"seed", rec.seed},
                {"status", rec.pass ? "pass" : "fail"},
                {"detail", rec.detail}},
           false);
    }
    failures += res.failures;
    checks += res.checks;
    summary.push_back(Json{{"suite", res.name}, {"checks", res.checks}, {"failures", res.failures}});
  }
  emit(Json{{"summary", std::move(summary)}, {"checks", checks}, {"failures", failures}}, pretty);
  return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quartic-skein: Kauffman bracket skein module computations at primitive 4th roots of unity"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output");
  std::string backend;
  app.add_option("--backend", backend, "JSON file overriding the group/surface backend")->capture_default_str();

  std::string in_lift, in_class, in_mul, in_phi, in_resolve, in_product;
  int cap = skein::kDefaultCrossingCap;
  std::string suite = "all";
  std::uint64_t seed = skein::kDefaultSeed;
  long long cases = -1;

  auto* c_lift = app.add_subcommand("lift", "lift a linking form to (1/r)Z/4Z");
  c_lift->add_option("input", in_lift, "RhsData JSON file")->required();
  auto* c_class = app.add_subcommand("class", "canonical ~-class representative of a word");
  c_class->add_option("input", in_class, "{group, word} JSON file")->required();
  auto* c_mul = app.add_subcommand("mul", "multiply two skein algebra elements");
  c_mul->add_option("input", in_mul, "{group, lhs, rhs} JSON file")->required();
  auto* c_phi = app.add_subcommand("phi", "Phi of a diagram or homological link");
  c_phi->add_option("input", in_phi, "diagram JSON, or {data, group, link}")->required();
  auto* c_resolve = app.add_subcommand("resolve", "Kauffman state-sum resolution of a diagram");
  c_resolve->add_option("input", in_resolve, "diagram JSON file")->required();
  c_resolve->add_option("--crossing-cap", cap, "maximum crossing count")->capture_default_str();
  auto* c_product = app.add_subcommand("product", "skein product of two links");
  c_product->add_option("input", in_product, "{surface, lhs, rhs} or {data, group, lhs, rhs, cross_lk}")
      ->required();
  auto* c_verify = app.add_subcommand("verify", "run verification suites");
  c_verify->add_option("--suite", suite, "suite name or 'all'")->capture_default_str();
  c_verify->add_option("--seed", seed, "reproduction seed")->capture_default_str();
  c_verify->add_option("--cases", cases, "case count override (-1 = suite default)")->capture_default_str();

  for (auto* sc : {c_lift, c_class, c_mul, c_phi, c_resolve, c_product, c_verify}) sc->fallthrough();

  try {
    app.parse(argc, argv);
    if (c_lift->parsed()) return run_lift(in_lift, pretty);
    if (c_class->parsed()) return run_class(in_class, backend, pretty);
    if (c_mul->parsed()) return run_mul(in_mul, backend, pretty);
    if (c_phi->parsed()) return run_phi(in_phi, backend, pretty);
    if (c_resolve->parsed()) return run_resolve(in_resolve, backend, cap, pretty);
    if (c_product->parsed()) return run_product(in_product, backend, pretty);
    if (c_verify->parsed()) return run_verify(suite, seed, cases, pretty);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
