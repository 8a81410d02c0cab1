#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "latticemed/coord.hpp"
#include "latticemed/invariance.hpp"
#include "latticemed/lattice.hpp"
#include "latticemed/orderization.hpp"
#include "latticemed/posets.hpp"
#include "latticemed/rational.hpp"

using namespace latmed;

namespace {

// Independent selection oracle: insertion-sort each coordinate fiber, pick
// the k-th entry.
template <typename T>
CoordVec<T> sorted_fiber_oracle(const std::vector<CoordVec<T>>& fs, int k) {
  std::vector<T> out;
  for (int c = 0; c < fs[0].dim(); ++c) {
    std::vector<T> fiber;
    for (const auto& f : fs) fiber.push_back(f[c]);
    for (std::size_t i = 1; i < fiber.size(); ++i) {
      T key = fiber[i];
      std::size_t j = i;
      while (j > 0 && key < fiber[j - 1]) {
        fiber[j] = fiber[j - 1];
        --j;
      }
      fiber[j] = key;
    }
    out.push_back(fiber[static_cast<std::size_t>(k) - 1]);
  }
  return CoordVec<T>(std::move(out));
}

FiniteLattice boolean4() {
  // downset lattice of the 2-antichain
  FinitePoset antichain(2, {0b01, 0b10});
  return downset_lattice(antichain).lattice;
}

RatVec rv(std::initializer_list<long long> xs) {
  std::vector<Rational> coords;
  for (const auto x : xs) coords.emplace_back(x);
  return RatVec(std::move(coords));
}

}  // namespace

TEST_CASE("rational arithmetic and ordering") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(1, -2).num() == -1);
  CHECK(Rational(3, 2) * Rational(4, 9) == Rational(2, 3));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(7).pow(0) == Rational(1));
  CHECK(Rational(-2).pow(3) == Rational(-8));
  CHECK(Rational(2, 3).str() == "2/3");
  CHECK(Rational(5).str() == "5");
  CHECK(Rational::parse("2/3") == Rational(2, 3));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(INT64_MAX, 1) * Rational(3), std::overflow_error);
}

TEST_CASE("coordinate tuples: decomposition identities") {
  Rng rng(42);
  for (int rep = 0; rep < 200; ++rep) {
    std::vector<Rational> coords;
    for (int c = 0; c < 5; ++c) coords.emplace_back(next_int(rng, -5, 5));
    const RatVec f(std::move(coords));
    CHECK(f.pos_part() - f.neg_part() == f);
    CHECK(f.pos_part() + f.neg_part() == f.abs());
    CHECK(meet(f.pos_part(), f.neg_part()) == RatVec::zero(5));
  }
  CHECK(disjoint(rv({1, 0}), rv({0, 1})));
  CHECK_FALSE(disjoint(rv({1, 0}), rv({1, 0})));
  CHECK(disjoint(rv({-1, 0}), rv({0, 2})));
}

TEST_CASE("leq is derived from meet") {
  const auto b4 = boolean4();
  REQUIRE(b4.size() == 4);
  const int bot = *b4.bottom();
  const int top = *b4.top();
  CHECK(leq(b4, bot, top));
  for (int a = 0; a < b4.size(); ++a) CHECK(leq(b4, a, a));

  const auto carrier = RatCarrier::space(2, -5, 5);
  CHECK_FALSE(leq(carrier, rv({1, 3}), rv({2, 2})));
  CHECK_FALSE(leq(carrier, rv({2, 2}), rv({1, 3})));

  // agreement of the two formulations
  for (int a = 0; a < b4.size(); ++a) {
    for (int b = 0; b < b4.size(); ++b) {
      CHECK(leq(b4, a, b) == b4.equal(b4.join(a, b), b));
    }
  }
}

TEST_CASE("leq is a partial order on every small downset lattice") {
  for (int p = 1; p <= 4; ++p) {
    for (const auto& poset : enumerate_posets(p)) {
      const auto lat = downset_lattice(poset).lattice;
      for (int a = 0; a < lat.size(); ++a) {
        CHECK(leq(lat, a, a));
        for (int b = 0; b < lat.size(); ++b) {
          if (leq(lat, a, b) && leq(lat, b, a)) CHECK(a == b);
          for (int c = 0; c < lat.size(); ++c) {
            if (leq(lat, a, b) && leq(lat, b, c)) CHECK(leq(lat, a, c));
          }
        }
      }
    }
  }
}

TEST_CASE("is_chain") {
  const auto carrier = RatCarrier::space(2, -5, 5);
  const std::vector<RatVec> chain = {rv({1, 1}), rv({2, 2}), rv({3, 3})};
  CHECK(is_chain(carrier, std::span<const RatVec>(chain)));
  const std::vector<RatVec> anti = {rv({1, 0}), rv({0, 1})};
  CHECK_FALSE(is_chain(carrier, std::span<const RatVec>(anti)));
  const std::vector<RatVec> single = {rv({4, 7})};
  CHECK(is_chain(carrier, std::span<const RatVec>(single)));
  const std::vector<RatVec> empty;
  CHECK(is_chain(carrier, std::span<const RatVec>(empty)));
}

TEST_CASE("lattice law verification") {
  for (int p = 1; p <= 4; ++p) {
    for (const auto& poset : enumerate_posets(p)) {
      CHECK(verify_lattice_laws(downset_lattice(poset).lattice, Strategy::Exhaustive()).all_pass);
    }
  }

  // independent triple scan over the diamond's raw tables
  const auto m3 = FiniteLattice::m3();
  bool found = false;
  for (int a = 0; a < m3.size() && !found; ++a) {
    for (int b = 0; b < m3.size() && !found; ++b) {
      for (int c = 0; c < m3.size() && !found; ++c) {
        found = m3.meet(a, m3.join(b, c)) != m3.join(m3.meet(a, b), m3.meet(a, c));
      }
    }
  }
  CHECK(found);
  const auto report = verify_lattice_laws(m3, Strategy::Exhaustive());
  CHECK_FALSE(report.all_pass);
  const auto* distrib = report.find("distributivity");
  REQUIRE(distrib != nullptr);
  CHECK_FALSE(distrib->pass);
  CHECK_FALSE(distrib->witness.empty());
  CHECK_FALSE(m3.distributive());
  CHECK(m3.distributivity_witness().has_value());

  const auto n5 = FiniteLattice::n5();
  CHECK_FALSE(verify_lattice_laws(n5, Strategy::Exhaustive()).all_pass);

  const auto carrier = RatCarrier::space(3, -5, 5);
  CHECK(verify_lattice_laws(carrier, Strategy::Sampled(1000, 7)).all_pass);
  CHECK_THROWS_AS(verify_lattice_laws(carrier, Strategy::Exhaustive()), UnsupportedError);
}

TEST_CASE("foreign elements are rejected") {
  const auto b4 = boolean4();
  CHECK_THROWS_AS(b4.meet(0, 17), std::domain_error);
  CHECK_THROWS_AS(b4.name(-1), std::domain_error);
  const auto carrier = RatCarrier::space(2, -5, 5);
  CHECK_THROWS_AS(carrier.meet(rv({1, 2}), rv({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("median3 closed forms") {
  const auto carrier = RatCarrier::space(1, -9, 9);
  CHECK(median3(carrier, rv({1}), rv({2}), rv({3})) == rv({2}));
  CHECK(median3(carrier, rv({2}), rv({2}), rv({5})) == rv({2}));
  const auto c2 = RatCarrier::space(2, -9, 9);
  CHECK(median3(c2, rv({1, 5}), rv({2, 4}), rv({3, 3})) == rv({2, 4}));
}

TEST_CASE("median3 on the diamond reports a distributivity violation") {
  const auto m3 = FiniteLattice::m3();
  CHECK_THROWS_AS(median3(m3, 1, 2, 3), DistributivityError);
  CHECK_THROWS_AS(m_k(m3, std::vector<int>{1, 2, 3}, 2), DistributivityError);
}

TEST_CASE("m_k on chains picks the k-th element") {
  const auto chain4 = FiniteLattice::chain(4);
  const std::vector<int> xs = {0, 1, 2};  // elements named 1 < 2 < 3 (< 4 unused)
  CHECK(m_k(chain4, xs, 1) == 0);
  CHECK(m_k(chain4, xs, 2) == 1);
  CHECK(m_k(chain4, xs, 3) == 2);
}

TEST_CASE("m_k for two arguments is meet and join") {
  for (int p = 2; p <= 4; ++p) {
    for (const auto& poset : enumerate_posets(p)) {
      const auto lat = downset_lattice(poset).lattice;
      for (int a = 0; a < lat.size(); ++a) {
        for (int b = 0; b < lat.size(); ++b) {
          const std::vector<int> xs = {a, b};
          CHECK(m_k(lat, xs, 1) == lat.meet(a, b));
          CHECK(m_k(lat, xs, 2) == lat.join(a, b));
        }
      }
    }
  }
}

TEST_CASE("m_k argument validation") {
  const auto carrier = RatCarrier::space(1, -5, 5);
  const std::vector<RatVec> xs = {rv({1}), rv({2})};
  CHECK_THROWS_AS(m_k(carrier, xs, 0), std::invalid_argument);
  CHECK_THROWS_AS(m_k(carrier, xs, 3), std::invalid_argument);
  const std::vector<RatVec> empty;
  CHECK_THROWS_AS(m_k(carrier, empty, 1), std::invalid_argument);
  const std::vector<RatVec> big(13, rv({1}));
  CHECK_THROWS_AS(m_k(carrier, big, 1), UnsupportedError);
  CHECK(m_k_pointwise(std::span<const RatVec>(big), 1) == rv({1}));  // no cap pointwise
}

TEST_CASE("pointwise m_k examples") {
  const std::vector<RatVec> fs = {rv({3, 1, 2}), rv({1, 3, 2}), rv({2, 2, 2})};
  CHECK(m_k_pointwise(std::span<const RatVec>(fs), 1) == rv({1, 1, 2}));
  CHECK(m_k_pointwise(std::span<const RatVec>(fs), 2) == rv({2, 2, 2}));
  CHECK(m_k_pointwise(std::span<const RatVec>(fs), 3) == rv({3, 3, 2}));

  const std::vector<RatVec> single = {rv({5, -2})};
  CHECK(m_k_pointwise(std::span<const RatVec>(single), 1) == rv({5, -2}));

  const std::vector<RatVec> ragged = {rv({1, 2}), rv({1})};
  CHECK_THROWS_AS(m_k_pointwise(std::span<const RatVec>(ragged), 1), std::invalid_argument);
}

TEST_CASE("total orderization examples") {
  const auto c2 = RatCarrier::space(2, -5, 5);
  const std::vector<RatVec> anti = {rv({1, 0}), rv({0, 1})};
  const auto to1 = total_orderization(c2, std::span<const RatVec>(anti));
  CHECK(to1 == std::vector<RatVec>{rv({0, 0}), rv({1, 1})});

  const std::vector<RatVec> chain_in = {rv({2, 2}), rv({3, 3})};
  CHECK(total_orderization(c2, std::span<const RatVec>(chain_in)) == chain_in);

  const std::vector<RatVec> three = {rv({3, 1}), rv({1, 3}), rv({2, 2})};
  const auto to3 = total_orderization(c2, std::span<const RatVec>(three));
  CHECK(to3 == std::vector<RatVec>{rv({1, 1}), rv({2, 2}), rv({3, 3})});
}

TEST_CASE("orderization properties on the downset corpus") {
  for (int p = 1; p <= 3; ++p) {
    for (const auto& poset : enumerate_posets(p)) {
      const auto lat = downset_lattice(poset).lattice;
      for (int n = 1; n <= 3; ++n) {
        detail::for_each_tuple(lat, n, Strategy::Exhaustive(), [&](std::span<const int> xs) {
          const auto chain = total_orderization(lat, xs);
          // monotone output
          for (int k = 0; k + 1 < n; ++k) {
            CHECK(leq(lat, chain[static_cast<std::size_t>(k)], chain[static_cast<std::size_t>(k) + 1]));
          }
          // idempotence
          CHECK(total_orderization(lat, std::span<const int>(chain)) == chain);
          // symmetry under all permutations
          std::vector<int> perm(xs.begin(), xs.end());
          std::sort(perm.begin(), perm.end());
          do {
            CHECK(total_orderization(lat, std::span<const int>(perm)) == chain);
          } while (std::next_permutation(perm.begin(), perm.end()));
          return true;
        });
      }
    }
  }
}

TEST_CASE("symmetry under all 24 permutations of four arguments") {
  Rng rng(515);
  for (const auto& poset : enumerate_posets(3)) {
    const auto lat = downset_lattice(poset).lattice;
    for (int rep = 0; rep < 40; ++rep) {
      std::vector<int> xs;
      for (int i = 0; i < 4; ++i) xs.push_back(lat.sample(rng));
      const auto chain = total_orderization(lat, std::span<const int>(xs));
      std::vector<int> perm = xs;
      std::sort(perm.begin(), perm.end());
      do {
        CHECK(total_orderization(lat, std::span<const int>(perm)) == chain);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
}

TEST_CASE("fast path agrees with the combinatorial path") {
  Rng rng(2024);
  for (int rep = 0; rep < 300; ++rep) {
    const int n = static_cast<int>(next_int(rng, 1, 8));
    const int m = static_cast<int>(next_int(rng, 1, 10));
    const auto carrier = RatCarrier::space(m, -9, 9);
    std::vector<RatVec> fs;
    for (int i = 0; i < n; ++i) fs.push_back(carrier.sample(rng));
    const int k = static_cast<int>(next_int(rng, 1, n));
    CHECK(m_k_pointwise(std::span<const RatVec>(fs), k) ==
          m_k(carrier, std::span<const RatVec>(fs), k));
    CHECK(m_k_pointwise(std::span<const RatVec>(fs), k) == sorted_fiber_oracle(fs, k));
  }
}

TEST_CASE("duplicates are data, not sets") {
  const auto c1 = RatCarrier::space(1, -5, 5);
  const std::vector<RatVec> xs = {rv({2}), rv({2}), rv({1})};
  const auto chain = total_orderization(c1, std::span<const RatVec>(xs));
  CHECK(chain == std::vector<RatVec>{rv({1}), rv({2}), rv({2})});
}
