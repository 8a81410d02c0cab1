#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latticemed/invariance.hpp"
#include "latticemed/json_io.hpp"
#include "latticemed/posets.hpp"
#include "latticemed/suites.hpp"

using namespace latmed;

namespace {

std::size_t flat_index(std::span<const int> tuple, int size) {
  std::size_t flat = 0;
  for (const int x : tuple) flat = flat * static_cast<std::size_t>(size) + static_cast<std::size_t>(x);
  return flat;
}

}  // namespace

TEST_CASE("diagonal bilinear maps are TOI, projections are not") {
  const auto space = RatCarrier::space(2, -3, 3);

  auto diag = [](std::span<const RatVec> fs) {
    Rational acc(0);
    for (int c = 0; c < fs[0].dim(); ++c) acc += fs[0][c] * fs[1][c];
    return acc;
  };
  CHECK(is_toi(space, 2, diag, Strategy::Sampled(500, 21)).pass);

  auto proj = [](std::span<const RatVec> fs) { return fs[0]; };
  const auto cert = is_toi(space, 2, proj, Strategy::Sampled(500, 21));
  CHECK_FALSE(cert.pass);
  REQUIRE(cert.witness.size() == 2);
  // fail certificates re-verify on replay
  const auto chain = total_orderization(space, std::span<const RatVec>(cert.witness));
  CHECK_FALSE(proj(std::span<const RatVec>(cert.witness)) == proj(std::span<const RatVec>(chain)));
}

TEST_CASE("symmetry checker") {
  const auto space = RatCarrier::space(2, -3, 3);
  auto sum_norms = [](std::span<const RatVec> fs) {
    Rational s(0);
    for (const auto& f : fs) {
      for (int c = 0; c < f.dim(); ++c) s += f[c].abs();
    }
    return s;
  };
  CHECK(is_symmetric_map(space, 3, sum_norms, Strategy::Sampled(300, 33)).pass);

  auto first = [](std::span<const RatVec> fs) { return fs[0]; };
  const auto cert = is_symmetric_map(space, 2, first, Strategy::Sampled(300, 33));
  CHECK_FALSE(cert.pass);
}

TEST_CASE("every map factored through the orderization is TOI") {
  for (int p = 1; p <= 3; ++p) {
    for (const auto& poset : enumerate_posets(p)) {
      const auto lat = downset_lattice(poset).lattice;
      if (lat.size() > 8) continue;
      Rng rng(static_cast<std::uint64_t>(p) * 101 + static_cast<std::uint64_t>(lat.size()));
      for (int n = 1; n <= 3; ++n) {
        std::size_t total = 1;
        for (int i = 0; i < n; ++i) total *= static_cast<std::size_t>(lat.size());
        std::vector<int> table(total);
        for (auto& v : table) v = static_cast<int>(next_int(rng, 0, 9));
        auto g = [&table, &lat](std::span<const int> chain) {
          return table[flat_index(chain, lat.size())];
        };
        const auto T = make_toi_map(lat, g);
        CHECK(is_toi(lat, n, T, Strategy::Exhaustive()).pass);
        CHECK(is_symmetric_map(lat, n, T, Strategy::Exhaustive()).pass);
      }
    }
  }
}

TEST_CASE("make_toi_map special cases: meet and join projections") {
  const auto lat = downset_lattice(FinitePoset(2, {0b01, 0b10})).lattice;
  auto first = make_toi_map(lat, [](std::span<const int> chain) { return chain[0]; });
  auto last = make_toi_map(lat, [](std::span<const int> chain) { return chain[chain.size() - 1]; });
  detail::for_each_tuple(lat, 3, Strategy::Exhaustive(), [&](std::span<const int> xs) {
    int m = xs[0], j = xs[0];
    for (const int x : xs.subspan(1)) {
      m = lat.meet(m, x);
      j = lat.join(j, x);
    }
    CHECK(first(xs) == m);
    CHECK(last(xs) == j);
    return true;
  });
  CHECK(is_toi(lat, 3, first, Strategy::Exhaustive()).pass);
  CHECK(is_toi(lat, 3, last, Strategy::Exhaustive()).pass);
}

TEST_CASE("exhaustive budget guard") {
  const auto lat = FiniteLattice::chain(64);
  auto f = [](std::span<const int> xs) { return xs[0]; };
  CHECK_THROWS_AS(is_toi(lat, 4, f, Strategy::Exhaustive()), UnsupportedError);  // 64^4 > 1e6

  const auto space = RatCarrier::space(2, -3, 3);
  auto g = [](std::span<const RatVec> fs) { return fs[0]; };
  CHECK_THROWS_AS(is_toi(space, 2, g, Strategy::Exhaustive()), UnsupportedError);
}

TEST_CASE("bottom-vanishing theorem checker") {
  // Boolean lattice of the 2-antichain; marker a = 1.
  const auto lat = downset_lattice(FinitePoset(2, {0b01, 0b10})).lattice;
  const int theta = *lat.bottom();

  auto vanishing = make_toi_map(lat, [&](std::span<const int> chain) {
    return chain[0] == theta ? 1 : 0;
  });
  const auto rep = check_genorthosym(lat, 2, vanishing, 1);
  CHECK(rep.precondition_ok);
  CHECK(rep.cond_i);
  CHECK(rep.cond_ii);
  CHECK(rep.equivalent);

  // random map: conditions fail together
  auto arbitrary = make_toi_map(lat, [&](std::span<const int> chain) {
    return static_cast<int>(chain[0] * 7 + chain[chain.size() - 1]);
  });
  const auto rep2 = check_genorthosym(lat, 2, arbitrary, 1);
  CHECK(rep2.precondition_ok);
  CHECK(rep2.equivalent);
  CHECK_FALSE(rep2.cond_i);
  CHECK_FALSE(rep2.cond_ii);

  // non-TOI maps are refused
  auto raw = [](std::span<const int> xs) { return xs[0]; };
  const auto rep3 = check_genorthosym(lat, 2, raw, 0);
  CHECK_FALSE(rep3.precondition_ok);
  CHECK(rep3.detail.find("precondition-failed") == 0);

  // chains: both conditions agree trivially
  const auto chain3 = FiniteLattice::chain(3);
  auto on_chain = make_toi_map(chain3, [](std::span<const int> c) { return c[0] == 0 ? 5 : 6; });
  const auto rep4 = check_genorthosym(chain3, 2, on_chain, 5);
  CHECK(rep4.precondition_ok);
  CHECK(rep4.equivalent);

  // n = 1: the pair condition degenerates to the bottom argument itself
  auto unary = make_toi_map(chain3, [](std::span<const int> c) { return c[0] == 0 ? 5 : 6; });
  const auto rep5 = check_genorthosym(chain3, 1, unary, 5);
  CHECK(rep5.precondition_ok);
  CHECK(rep5.equivalent);
  CHECK(rep5.cond_i);
  CHECK(rep5.cond_ii);
}

TEST_CASE("phi-supremum theorem checker") {
  const auto lat = downset_lattice(FinitePoset(3, {0b001, 0b010, 0b100})).lattice;  // 2^3
  const int n = 3;

  // T = g(to) with g = last component; phi = identity
  auto T = make_toi_map(lat, [](std::span<const int> chain) {
    return chain[chain.size() - 1];
  });
  auto identity = [](int x) { return x; };
  const auto rep = check_genorthsteady(lat, n, T, identity);
  CHECK(rep.precondition_ok);
  CHECK(rep.cond_i);
  CHECK(rep.cond_ii);
  CHECK(rep.equivalent);

  // constant phi that disagrees somewhere: both conditions fail together
  auto wrong_phi = [](int) { return 0; };
  const auto rep2 = check_genorthsteady(lat, n, T, wrong_phi);
  CHECK(rep2.precondition_ok);
  CHECK(rep2.equivalent);
  CHECK_FALSE(rep2.cond_i);
  CHECK_FALSE(rep2.cond_ii);

  // n = 1: conditions coincide syntactically
  auto unary = make_toi_map(lat, [](std::span<const int> chain) { return chain[0]; });
  const auto rep3 = check_genorthsteady(lat, 1, unary, identity);
  CHECK(rep3.precondition_ok);
  CHECK(rep3.cond_i);
  CHECK(rep3.cond_ii);
}

TEST_CASE("lattice JSON round-trip preserves tables and distributivity verdicts") {
  for (const auto& lat : {FiniteLattice::m3(), FiniteLattice::n5(), FiniteLattice::chain(5)}) {
    const auto j = lattice_to_json(lat);
    const auto back = lattice_from_json(j);
    CHECK(back.size() == lat.size());
    CHECK(back.distributive() == lat.distributive());
    CHECK(lattice_to_json(back) == j);
  }
  for (const auto& poset : enumerate_posets(3)) {
    const auto lat = downset_lattice(poset).lattice;
    const auto back = lattice_from_json(lattice_to_json(lat));
    CHECK(back.distributive());
    CHECK(back.names() == lat.names());
  }
}

TEST_CASE("suite registry") {
  CHECK(suite_names().size() == 16);
  CHECK_THROWS_AS(run_suite("no-such-suite", SuiteConfig{}), std::invalid_argument);
  try {
    run_suite("no-such-suite", SuiteConfig{});
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("prop-mk") != std::string::npos);
  }
}

TEST_CASE("suite reports serialize with the documented shape") {
  SuiteConfig cfg;
  cfg.seed = 7;
  const auto report = run_suite("sum", cfg);
  CHECK(report.ok());
  const auto j = suite_report_to_json(report);
  CHECK(j.at("suite") == "sum");
  CHECK(j.at("config").at("seed") == 7);
  CHECK(j.at("summary").at("fail") == 0);
  CHECK(j.at("cases").is_array());
  CHECK_FALSE(j.at("cases").empty());
  for (const auto& c : j.at("cases")) {
    CHECK(c.contains("id"));
    CHECK(c.contains("verdict"));
  }
}

TEST_CASE("suite seeds reproduce reports exactly") {
  SuiteConfig cfg;
  cfg.seed = 99;
  cfg.trials = 500;
  const auto a = run_suite("sum", cfg);
  const auto b = run_suite("sum", cfg);
  CHECK(suite_report_to_json(a) == suite_report_to_json(b));
}

TEST_CASE("parallel suites aggregate deterministically") {
  SuiteConfig cfg;
  cfg.seed = 5;
  cfg.trials = 100;
  setenv("LATTICEMED_THREADS", "1", 1);
  const auto single = suite_report_to_json(run_suite("ortho-equivalence", cfg));
  setenv("LATTICEMED_THREADS", "4", 1);
  const auto multi = suite_report_to_json(run_suite("ortho-equivalence", cfg));
  unsetenv("LATTICEMED_THREADS");
  CHECK(single == multi);
}
