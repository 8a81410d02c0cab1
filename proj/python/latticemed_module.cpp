#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "latticemed/funcal.hpp"
#include "latticemed/json_io.hpp"
#include "latticemed/orderization.hpp"
#include "latticemed/posets.hpp"
#include "latticemed/suites.hpp"
#include "latticemed/term_parser.hpp"

namespace py = pybind11;

namespace {

latmed::RealVec to_vec(const std::vector<double>& v) { return latmed::RealVec(v); }

std::vector<latmed::RealVec> to_vecs(const std::vector<std::vector<double>>& vs) {
  std::vector<latmed::RealVec> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.emplace_back(v);
  return out;
}

latmed::RatVec to_rat(const std::vector<long long>& v) {
  std::vector<latmed::Rational> coords(v.begin(), v.end());
  return latmed::RatVec(std::move(coords));
}

std::vector<latmed::RatVec> to_rats(const std::vector<std::vector<long long>>& vs) {
  std::vector<latmed::RatVec> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(to_rat(v));
  return out;
}

latmed::PHFunction builtin_ph(const std::string& name, int arity, int power) {
  if (name == "sum") return latmed::ph_sum(arity);
  if (name == "min") return latmed::ph_min(arity);
  if (name == "max") return latmed::ph_max(arity);
  if (name == "gmean") return latmed::ph_geometric_mean(arity);
  if (name == "rootpow") return latmed::ph_root_power(arity, power > 0 ? power : arity);
  if (name == "first") return latmed::ph_first(arity);
  throw std::invalid_argument("unknown builtin '" + name + "'; use sum|min|max|gmean|rootpow|first");
}

py::object json_to_py(const latmed::Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(latticemed, m) {
  m.doc() = "distributive-lattice medians, total orderization and invariance checks";

  m.def(
      "median3",
      [](const std::vector<double>& x, const std::vector<double>& y, const std::vector<double>& z) {
        const auto carrier = latmed::RealCarrier::space(static_cast<int>(x.size()), -1, 1);
        return latmed::median3(carrier, to_vec(x), to_vec(y), to_vec(z)).coords();
      },
      py::arg("x"), py::arg("y"), py::arg("z"),
      "Pointwise ternary median of three coordinate tuples.");

  m.def(
      "m_k",
      [](const std::vector<std::vector<double>>& fs, int k) {
        return latmed::m_k_pointwise(std::span<const latmed::RealVec>(to_vecs(fs)), k).coords();
      },
      py::arg("vectors"), py::arg("k"),
      "k-th order statistic of the tuples, computed per coordinate.");

  m.def(
      "total_orderization",
      [](const std::vector<std::vector<double>>& fs) {
        std::vector<std::vector<double>> out;
        for (const auto& t :
             latmed::total_orderization_pointwise(std::span<const latmed::RealVec>(to_vecs(fs)))) {
          out.push_back(t.coords());
        }
        return out;
      },
      py::arg("vectors"), "The chain (m_1, ..., m_n) for the given tuples.");

  m.def(
      "apply_ph",
      [](const std::string& name, const std::vector<std::vector<double>>& fs, int power) {
        const auto vecs = to_vecs(fs);
        const auto h = builtin_ph(name, static_cast<int>(vecs.size()), power);
        return latmed::apply_ph(h, vecs).coords();
      },
      py::arg("name"), py::arg("vectors"), py::arg("power") = 0,
      "Apply a builtin positively homogeneous function pointwise.");

  m.def(
      "boxtimes",
      [](const std::vector<double>& f, const std::vector<double>& g) {
        return latmed::boxtimes_inf(to_vec(f), to_vec(g)).coords();
      },
      py::arg("f"), py::arg("g"),
      "(1/2) inf over theta of (theta f + g/theta), pointwise; the geometric mean.");

  m.def(
      "sum_invariance",
      [](const std::vector<std::vector<long long>>& fs) {
        return latmed::sum_invariance_check(std::span<const latmed::RatVec>(to_rats(fs)));
      },
      py::arg("vectors"), "Exact check: sum of tuples equals sum of their orderization.");

  m.def(
      "product_invariance",
      [](const std::vector<std::vector<long long>>& fs) {
        return latmed::product_invariance_check(std::span<const latmed::RatVec>(to_rats(fs)));
      },
      py::arg("vectors"), "Exact check: coordinatewise product is orderization invariant.");

  m.def(
      "normal_form",
      [](const std::string& expr) {
        const auto parsed = latmed::parse_term(expr);
        const auto nf =
            latmed::term_normal_form(parsed.term, static_cast<int>(parsed.variables.size()));
        std::vector<std::vector<std::string>> clauses;
        for (const auto mask : nf.clauses) {
          std::vector<std::string> clause;
          for (std::size_t v = 0; v < parsed.variables.size(); ++v) {
            if ((mask >> v) & 1u) clause.push_back(parsed.variables[v]);
          }
          clauses.push_back(std::move(clause));
        }
        return clauses;
      },
      py::arg("expr"),
      "Canonical antichain-of-meets form of a term, as lists of variable names.");

  m.def("free_dl_count", &latmed::free_dl_count, py::arg("v"),
        "Size of the free distributive lattice on v generators (v <= 4).");

  m.def(
      "poset_count", [](int p) { return latmed::enumerate_posets(p).size(); }, py::arg("p"),
      "Number of posets with p points, up to isomorphism (p <= 6).");

  m.def(
      "corpus_json", [](int max_poset) { return json_to_py(latmed::corpus_to_json(max_poset)); },
      py::arg("max_poset") = 5, "Poset corpus plus downset lattices, as parsed JSON.");

  m.def("suite_names", [] { return latmed::suite_names(); });

  m.def(
      "run_suite",
      [](const std::string& name, std::uint64_t seed, double tol, long trials, int max_poset) {
        latmed::SuiteConfig cfg;
        cfg.seed = seed;
        cfg.tol = tol;
        cfg.trials = trials;
        cfg.max_poset = max_poset;
        return json_to_py(latmed::suite_report_to_json(latmed::run_suite(name, cfg)));
      },
      py::arg("name"), py::arg("seed") = 1, py::arg("tol") = 0.0, py::arg("trials") = 0,
      py::arg("max_poset") = 5, "Run a named verification suite; returns the report as a dict.");
}
