#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "descent/cache.hpp"
#include "descent/errors.hpp"
#include "descent/expression.hpp"
#include "descent/report.hpp"
#include "json.hpp"

using namespace descent;

namespace {

struct Globals {
  bool no_cache = false;
  std::uint64_t seed = 20240611;
  bool allow_rank7 = false;
};

AlgebraPtr load(const std::string& type, const Globals& g) {
  const CartanLabel parsed = parse_cartan_label(type);
  if (static_cast<int>(parsed.matrix.size()) == kRankCap && g.allow_rank7) {
    const double mib = static_cast<double>(memory_estimate_bytes(parsed.matrix)) / (1024.0 * 1024.0);
    std::cerr << "estimated memory for " << parsed.label << ": " << static_cast<std::uint64_t>(mib + 0.5) << " MiB\n";
  }
  const SystemPtr system = CoxeterSystem::build(type, BuildOptions{g.allow_rank7});
  CacheOptions opts;
  opts.enabled = !g.no_cache;
  opts.warnings = &std::cerr;
  return load_or_build(system, opts);
}

int cmd_table(const Globals& g, const std::string& type, const std::string& sigma, const std::string& format) {
  const AlgebraPtr a = load(type, g);
  std::vector<int> orders;
  if (sigma == "all")
    orders = available_sigma_orders(a->system());
  else
    orders.push_back(std::stoi(sigma));
  std::vector<TableRow> rows;
  for (int k : orders) rows.push_back(table_row(a, k));
  if (format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : rows) out.push_back(to_json(r));
    std::cout << (rows.size() == 1 ? out[0] : out).dump() << '\n';
  } else if (format == "csv") {
    std::cout << format_table_csv(rows);
  } else {
    std::cout << format_table_text(rows);
  }
  return 0;
}

int cmd_verify(const Globals& g, const std::string& suite, const std::string& type) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw UnknownSuite("unknown suite '" + suite + "'");
  const SuiteReport r = run_suite(suite, load(type, g), g.seed);
  std::cout << r.to_json().dump(2) << '\n';
  return r.passed() ? 0 : 1;
}

int cmd_mult(const Globals& g, const std::string& type, const std::string& left, const std::string& right,
             const std::string& basis) {
  const Basis b = parse_basis(basis);
  const AlgebraPtr a = load(type, g);
  std::cout << format_expression(parse_expression(a, left) * parse_expression(a, right), b) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Descent algebras of finite Coxeter groups"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--no-cache", g.no_cache, "Do not read or write the structure-constant cache");
  app.add_option("--seed", g.seed, "Seed for randomized suites")->capture_default_str();
  app.add_flag("--allow-rank7", g.allow_rank7, "Allow rank 7 systems such as E7");

  std::string type, sigma = "1", format = "text", suite, left, right, basis = "x";

  auto* table = app.add_subcommand("table", "Loewy table row of (W, sigma)");
  table->fallthrough();
  table->add_option("--type", type, "Cartan type, e.g. D4, I2(5), A1xA2")->required();
  table->add_option("--sigma", sigma, "Order of the diagram automorphism, or 'all'")->capture_default_str();
  table->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run an invariant suite and print a JSON report");
  verify->fallthrough();
  verify->add_option("--suite", suite, "Suite name")->required();
  verify->add_option("--type", type, "Cartan type")->required();

  auto* mult = app.add_subcommand("mult", "Multiply two subset expressions");
  mult->fallthrough();
  mult->add_option("--type", type, "Cartan type")->required();
  mult->add_option("--left", left, "Left factor, e.g. \"x[1] + 1/2*y[]\"")->required();
  mult->add_option("--right", right, "Right factor")->required();
  mult->add_option("--basis", basis, "Basis of the printed result")
      ->check(CLI::IsMember({"x", "y", "xp"}))
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*table) return cmd_table(g, type, sigma, format);
    if (*verify) return cmd_verify(g, suite, type);
    if (*mult) return cmd_mult(g, type, left, right, basis);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument&) {
    std::cerr << "error: --sigma expects an integer or 'all'\n";
    return 2;
  }
  return 0;
}
