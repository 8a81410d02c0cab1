#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "latticemed/errors.hpp"
#include "latticemed/json_io.hpp"
#include "latticemed/orderization.hpp"
#include "latticemed/suites.hpp"
#include "latticemed/term_parser.hpp"

namespace {

using latmed::Json;

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  Json j;
  in >> j;
  return j;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);  // LF line endings everywhere
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

int cmd_gen(int max_poset, const std::string& out_path) {
  const std::string text = latmed::canonical_dump(latmed::corpus_to_json(max_poset));
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text(out_path, text);
  }
  return 0;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

int cmd_eval(const std::string& expr, const std::string& lattice_path, const std::string& binds,
             const std::string& vectors_path) {
  if (!lattice_path.empty() && !vectors_path.empty()) {
    throw std::runtime_error("eval takes --lattice or --vectors, not both");
  }
  const auto parsed = latmed::parse_term(expr);

  if (!lattice_path.empty()) {
    const auto lat = latmed::lattice_from_json(load_json(lattice_path));
    std::vector<int> binding(parsed.variables.size(), -1);
    for (const auto& pair : split(binds, ',')) {
      if (pair.empty()) continue;
      const auto eq = pair.find('=');
      if (eq == std::string::npos) throw std::runtime_error("--bind needs name=element pairs");
      const std::string var = pair.substr(0, eq);
      const std::string elem = pair.substr(eq + 1);
      int elem_idx = -1;
      for (int i = 0; i < lat.size(); ++i) {
        if (lat.name(i) == elem) elem_idx = i;
      }
      if (elem_idx < 0) throw std::runtime_error("unknown lattice element '" + elem + "'");
      for (std::size_t v = 0; v < parsed.variables.size(); ++v) {
        if (parsed.variables[v] == var) binding[v] = elem_idx;
      }
    }
    for (std::size_t v = 0; v < parsed.variables.size(); ++v) {
      if (binding[v] < 0) {
        throw std::runtime_error("variable '" + parsed.variables[v] + "' is unbound");
      }
    }
    const int result = latmed::term_eval(parsed.term, std::span<const int>(binding), lat);
    std::cout << lat.name(result) << "\n";
    return 0;
  }

  if (vectors_path.empty()) {
    throw std::runtime_error("eval needs either --lattice or --vectors");
  }
  const auto vectors = latmed::vectors_from_json(load_json(vectors_path));
  auto find = [&](const std::string& var) -> int {
    for (std::size_t i = 0; i < vectors.names.size(); ++i) {
      if (vectors.names[i] == var) return static_cast<int>(i);
    }
    throw std::runtime_error("no tuple named '" + var + "' in " + vectors_path);
  };
  if (vectors.exact) {
    std::vector<latmed::RatVec> binding;
    for (const auto& var : parsed.variables) binding.push_back(vectors.rat[static_cast<std::size_t>(find(var))]);
    const auto carrier = latmed::RatCarrier::space(binding.empty() ? 1 : binding[0].dim(), -5, 5);
    const auto result = latmed::term_eval(parsed.term, std::span<const latmed::RatVec>(binding), carrier);
    std::cout << result.str() << "\n";
  } else {
    std::vector<latmed::RealVec> binding;
    for (const auto& var : parsed.variables) binding.push_back(vectors.real[static_cast<std::size_t>(find(var))]);
    const auto carrier = latmed::RealCarrier::space(binding.empty() ? 1 : binding[0].dim(), -5, 5);
    const auto result = latmed::term_eval(parsed.term, std::span<const latmed::RealVec>(binding), carrier);
    std::cout << result.str() << "\n";
  }
  return 0;
}

int cmd_orderize(const std::string& vectors_path, int k) {
  const auto vectors = latmed::vectors_from_json(load_json(vectors_path));
  if (vectors.exact) {
    const std::span<const latmed::RatVec> fs(vectors.rat);
    if (k > 0) {
      std::cout << latmed::m_k_pointwise(fs, k).str() << "\n";
    } else {
      for (const auto& t : latmed::total_orderization_pointwise(fs)) std::cout << t.str() << "\n";
    }
  } else {
    const std::span<const latmed::RealVec> fs(vectors.real);
    if (k > 0) {
      std::cout << latmed::m_k_pointwise(fs, k).str() << "\n";
    } else {
      for (const auto& t : latmed::total_orderization_pointwise(fs)) std::cout << t.str() << "\n";
    }
  }
  return 0;
}

int cmd_verify(const std::string& suite, const latmed::SuiteConfig& config,
               const std::string& report_path) {
  const auto report = latmed::run_suite(suite, config);
  for (const auto& c : report.cases) {
    std::cout << (c.ok ? "[pass] " : "[FAIL] ") << c.id;
    if (c.verdict != "pass" && c.verdict != "fail") std::cout << " (" << c.verdict << ")";
    if (!c.ok && !c.witness.empty()) std::cout << "\n        witness: " << c.witness;
    if (!c.ok && !c.lhs.empty()) std::cout << "\n        lhs=" << c.lhs << " rhs=" << c.rhs;
    std::cout << "\n";
  }
  std::cout << report.suite << ": " << report.passed() << " passed, " << report.failed()
            << " failed\n";
  if (!report_path.empty()) {
    write_text(report_path, latmed::canonical_dump(latmed::suite_report_to_json(report)));
  }
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distributive-lattice medians, total orderization and invariance suites"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "write the poset/downset-lattice corpus as JSON");
  int max_poset = 5;
  std::string out_path;
  gen->add_option("--max-poset", max_poset, "largest poset size (<= 6)")->check(CLI::Range(0, 6));
  gen->add_option("--out", out_path, "output file (stdout when omitted)");

  auto* eval = app.add_subcommand("eval", "evaluate a lattice term");
  std::string expr, lattice_path, binds, vectors_path;
  eval->add_option("--expr", expr, "term, e.g. \"med(a,b,c)\" or \"M2(a,b,c)\"")->required();
  eval->add_option("--lattice", lattice_path, "finite lattice JSON file");
  eval->add_option("--bind", binds, "comma-separated name=element pairs (with --lattice)");
  eval->add_option("--vectors", vectors_path, "named coordinate tuples JSON file");

  auto* orderize = app.add_subcommand("orderize", "total orderization of coordinate tuples");
  std::string ord_vectors;
  int k = 0;
  orderize->add_option("--vectors", ord_vectors, "coordinate tuples JSON file")->required();
  orderize->add_option("--k", k, "emit only the k-th order statistic");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  latmed::SuiteConfig config;
  std::string suite, report_path;
  verify->add_option("--suite", suite, "suite name (see `suites`)")->required();
  verify->add_option("--seed", config.seed, "random seed (default 1)");
  verify->add_option("--tol", config.tol, "tolerance override (default: per-suite)");
  verify->add_option("--trials", config.trials, "trial-count override (default: per-suite)");
  verify->add_option("--max-poset", config.max_poset, "corpus size for lattice suites")
      ->check(CLI::Range(1, 6));
  verify->add_option("--report", report_path, "write the JSON report here");

  auto* suites = app.add_subcommand("suites", "list suite names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(max_poset, out_path);
    if (eval->parsed()) return cmd_eval(expr, lattice_path, binds, vectors_path);
    if (orderize->parsed()) return cmd_orderize(ord_vectors, k);
    if (verify->parsed()) return cmd_verify(suite, config, report_path);
    if (suites->parsed()) {
      for (const auto& name : latmed::suite_names()) std::cout << name << "\n";
      return 0;
    }
  } catch (const latmed::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
