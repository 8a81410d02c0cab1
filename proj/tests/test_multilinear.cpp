#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latticemed/json_io.hpp"
#include "latticemed/multilinear.hpp"
#include "latticemed/util.hpp"

using namespace latmed;

namespace {

RatVec rv(std::initializer_list<long long> xs) {
  std::vector<Rational> coords;
  for (const auto x : xs) coords.emplace_back(x);
  return RatVec(std::move(coords));
}

MultilinearMap diagonal_ones(int order, int dim) {
  MultilinearMap T(order, dim, 1);
  for (int a = 0; a < dim; ++a) {
    std::vector<int> idx(static_cast<std::size_t>(order), a);
    T.set_entry(idx, rv({1}));
  }
  return T;
}

MultilinearMap rank_one_01() {
  // T(f, g) = f(1) g(2) in 1-based coordinates
  MultilinearMap T(2, 2, 1);
  T.set_entry(std::vector<int>{0, 1}, rv({1}));
  return T;
}

MultilinearMap random_map(Rng& rng, int order, int dim, bool diagonal) {
  MultilinearMap T(order, dim, 1);
  std::vector<int> idx(static_cast<std::size_t>(order));
  for (std::size_t flat = 0; flat < T.entry_count(); ++flat) {
    T.index_of(flat, idx);
    bool constant = true;
    for (const int i : idx) constant = constant && (i == idx[0]);
    if (diagonal && !constant) continue;
    T.set_entry(idx, rv({next_int(rng, -2, 2)}));
  }
  return T;
}

// Brute-force orthosymmetry oracle: enumerate all integer tuples in
// [-2,2]^(dim x order) and test T on those containing a disjoint pair.
bool brute_force_orthosymmetric(const MultilinearMap& T) {
  const int n = T.order();
  const int m = T.dim();
  const long values = 5;  // -2..2
  long total = 1;
  for (int i = 0; i < n * m; ++i) total *= values;
  std::vector<RatVec> args(static_cast<std::size_t>(n), RatVec::zero(m));
  for (long code = 0; code < total; ++code) {
    long rest = code;
    for (int s = 0; s < n; ++s) {
      for (int c = 0; c < m; ++c) {
        args[static_cast<std::size_t>(s)][c] = Rational(rest % values - 2);
        rest /= values;
      }
    }
    bool has_disjoint_pair = false;
    for (int i = 0; i < n && !has_disjoint_pair; ++i) {
      for (int j = i + 1; j < n && !has_disjoint_pair; ++j) {
        has_disjoint_pair = disjoint(args[static_cast<std::size_t>(i)], args[static_cast<std::size_t>(j)]);
      }
    }
    if (!has_disjoint_pair) continue;
    const RatVec value = T.eval(args);
    for (int c = 0; c < value.dim(); ++c) {
      if (!value[c].is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("multilinear evaluation") {
  const auto diag = diagonal_ones(2, 2);
  CHECK(diag.eval(std::vector<RatVec>{rv({1, 2}), rv({3, 4})}) == rv({11}));

  // any zero argument kills the value
  Rng rng(8);
  for (int rep = 0; rep < 30; ++rep) {
    const auto T = random_map(rng, 3, 2, false);
    CHECK(T.eval(std::vector<RatVec>{rv({0, 0}), rv({1, 2}), rv({-1, 3})}) == rv({0}));
  }

  const auto r1 = rank_one_01();
  CHECK(r1.eval(std::vector<RatVec>{rv({1, 2}), rv({3, 4})}) == rv({4}));

  CHECK_THROWS_AS(r1.eval(std::vector<RatVec>{rv({1, 2})}), std::invalid_argument);
  CHECK_THROWS_AS(MultilinearMap(5, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(MultilinearMap(2, 7, 1), std::invalid_argument);
}

TEST_CASE("linearity in each slot, spot-checked") {
  Rng rng(17);
  const auto T = random_map(rng, 3, 3, false);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<RatVec> args;
    for (int s = 0; s < 3; ++s) {
      std::vector<Rational> coords;
      for (int c = 0; c < 3; ++c) coords.emplace_back(next_int(rng, -3, 3));
      args.emplace_back(std::move(coords));
    }
    const int slot = static_cast<int>(next_int(rng, 0, 2));
    std::vector<Rational> coords;
    for (int c = 0; c < 3; ++c) coords.emplace_back(next_int(rng, -3, 3));
    const RatVec extra(std::move(coords));
    const Rational alpha(next_int(rng, -3, 3));

    auto shifted = args;
    shifted[static_cast<std::size_t>(slot)] =
        args[static_cast<std::size_t>(slot)] + alpha * extra;
    auto only_extra = args;
    only_extra[static_cast<std::size_t>(slot)] = extra;
    CHECK(T.eval(shifted) == T.eval(args) + alpha * T.eval(only_extra));
  }
}

TEST_CASE("symmetrization") {
  const auto r1 = rank_one_01();
  const auto sym = r1.symmetrized();
  // (1/2)(f(1) g(2) + g(1) f(2)) at ((1,2),(3,4)): (4 + 6)/2 = 5
  CHECK(sym.eval(std::vector<RatVec>{rv({1, 2}), rv({3, 4})}) == RatVec({Rational(5)}));
  CHECK(sym.is_symmetric());
  CHECK_FALSE(r1.is_symmetric());

  const auto diag = diagonal_ones(3, 2);
  CHECK(diag.symmetrized().eval(std::vector<RatVec>{rv({1, 1}), rv({2, 0}), rv({0, 3})}) ==
        diag.eval(std::vector<RatVec>{rv({1, 1}), rv({2, 0}), rv({0, 3})}));
  CHECK(diag.is_symmetric());
}

TEST_CASE("orthosymmetry decider matches the brute-force oracle for n<=3, m<=3") {
  Rng rng(2718);
  int agreements = 0;
  for (const int n : {2, 3}) {
    for (const int m : {2, 3}) {
      for (int rep = 0; rep < 8; ++rep) {
        const auto T = random_map(rng, n, m, rep % 2 == 0);
        const bool decided = is_orthosymmetric(T, DeciderMode::Exact()).holds;
        const bool oracle = brute_force_orthosymmetric(T);
        CHECK(decided == oracle);
        ++agreements;
      }
    }
  }
  CHECK(agreements == 32);

  // the fixtures, both ways
  CHECK(is_orthosymmetric(diagonal_ones(2, 2), DeciderMode::Exact()).holds);
  CHECK(brute_force_orthosymmetric(diagonal_ones(2, 2)));
  CHECK(is_orthosymmetric(diagonal_ones(3, 3), DeciderMode::Exact()).holds);
  const auto bad = is_orthosymmetric(rank_one_01(), DeciderMode::Exact());
  CHECK_FALSE(bad.holds);
  REQUIRE(bad.witness.size() == 2);
  CHECK(bad.witness[0] == rv({1, 0}));
  CHECK(bad.witness[1] == rv({0, 1}));
  // witness replays
  CHECK(rank_one_01().eval(bad.witness) == rv({1}));

  // sampled mode agrees on the fixtures
  CHECK(is_orthosymmetric(diagonal_ones(2, 2), DeciderMode::Sampled(200, 5)).holds);
  CHECK_FALSE(is_orthosymmetric(rank_one_01(), DeciderMode::Sampled(200, 5)).holds);
}

TEST_CASE("polynomials scale with their degree") {
  Rng rng(64);
  for (int rep = 0; rep < 30; ++rep) {
    const int n = 2 + rep % 3;
    const auto P = rep % 2 == 0
                       ? HomogeneousPolynomial::diagonal(
                             n, {rv({next_int(rng, -3, 3)}), rv({next_int(rng, -3, 3)})})
                       : HomogeneousPolynomial::from_map(random_map(rng, n, 2, false));
    std::vector<Rational> coords = {Rational(next_int(rng, -4, 4)), Rational(next_int(rng, -4, 4))};
    const RatVec f(std::move(coords));
    const Rational alpha(next_int(rng, -3, 3), next_int(rng, 1, 3));
    CHECK(P.eval(alpha * f) == alpha.pow(n) * P.eval(f));
  }
}

TEST_CASE("orthogonal additivity of polynomials") {
  // P(f) = sum f(a)^2 is additive on disjoint pairs
  const auto sq = HomogeneousPolynomial::diagonal(2, {rv({1}), rv({1})});
  CHECK(is_orthogonally_additive(sq, false, DeciderMode::Exact()).holds);
  CHECK(is_orthogonally_additive(sq, true, DeciderMode::Exact()).holds);

  // P(f) = (sum f(a))^2 is not: P(e1 + e2) = 4 != 2
  MultilinearMap ones(2, 2, 1);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) ones.set_entry(std::vector<int>{i, j}, rv({1}));
  }
  const auto square_of_sum = HomogeneousPolynomial::from_map(ones);
  CHECK(square_of_sum.eval(rv({1, 1})) == rv({4}));
  const auto verdict = is_orthogonally_additive(square_of_sum, false, DeciderMode::Exact());
  CHECK_FALSE(verdict.holds);
  REQUIRE(verdict.witness.size() == 2);
  // witness replays
  CHECK_FALSE(square_of_sum.eval(verdict.witness[0] + verdict.witness[1]) ==
              square_of_sum.eval(verdict.witness[0]) + square_of_sum.eval(verdict.witness[1]));

  // positive-only agrees with the full check across a population
  Rng rng(31);
  for (int rep = 0; rep < 20; ++rep) {
    const auto T = random_map(rng, 2, 3, rep % 2 == 0);
    const auto P = HomogeneousPolynomial::from_map(T);
    CHECK(is_orthogonally_additive(P, false, DeciderMode::Exact()).holds ==
          is_orthogonally_additive(P, true, DeciderMode::Exact()).holds);
  }
}

TEST_CASE("orthogonal steadiness") {
  const auto sq = HomogeneousPolynomial::diagonal(2, {rv({1}), rv({1})});
  const PowerSumPolynomial s2(2, sq);
  CHECK(is_orthogonally_steady(s2, DeciderMode::Exact()).holds);
  CHECK(is_orthogonally_steady(s2, DeciderMode::Sampled(300, 9)).holds);

  MultilinearMap ones(2, 2, 1);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) ones.set_entry(std::vector<int>{i, j}, rv({1}));
  }
  const PowerSumPolynomial bad(2, HomogeneousPolynomial::from_map(ones));
  CHECK_FALSE(is_orthogonally_steady(bad, DeciderMode::Exact()).holds);

  const PowerSumPolynomial r1(1, sq);
  CHECK_THROWS_AS(is_orthogonally_steady(r1, DeciderMode::Exact()), std::invalid_argument);

  // steadiness iff additivity of the generating polynomial
  Rng rng(55);
  for (int rep = 0; rep < 20; ++rep) {
    const auto T = random_map(rng, 2, 2, rep % 3 == 0);
    const auto P = HomogeneousPolynomial::from_map(T);
    for (const int r : {2, 3}) {
      const PowerSumPolynomial S(r, P);
      CHECK(is_orthogonally_steady(S, DeciderMode::Exact()).holds ==
            is_orthogonally_additive(P, false, DeciderMode::Exact()).holds);
    }
  }
}

TEST_CASE("joint orthosymmetry") {
  // order-3 diagonal on three coordinates: jointly disjoint tuples vanish
  const auto diag3 = diagonal_ones(3, 3);
  const std::vector<RatVec> fs = {rv({1, 0, 2}), rv({2, 0, 1}), rv({0, 3, 0})};
  RatVec meets = fs[0].abs();
  for (std::size_t i = 1; i < fs.size(); ++i) meets = meet(meets, fs[i].abs());
  CHECK(meets == RatVec::zero(3));
  CHECK(diag3.eval(fs) == rv({0}));
  CHECK(joint_orthosymmetry_check(diag3, false, DeciderMode::Exact()).holds);
  CHECK(joint_orthosymmetry_check(diag3, true, DeciderMode::Exact()).holds);

  const auto r1 = rank_one_01();
  const auto state = joint_orthosymmetry_check(r1, false, DeciderMode::Exact());
  CHECK_FALSE(state.holds);

  Rng rng(101);
  for (int rep = 0; rep < 30; ++rep) {
    const auto T = random_map(rng, 2, 3, rep % 2 == 0);
    const bool os = is_orthosymmetric(T, DeciderMode::Exact()).holds;
    CHECK(os == joint_orthosymmetry_check(T, false, DeciderMode::Sampled(400, 77 + rep)).holds);
    CHECK(os == joint_orthosymmetry_check(T, true, DeciderMode::Sampled(400, 99 + rep)).holds);
  }
}

TEST_CASE("root power identity") {
  const auto P = HomogeneousPolynomial::diagonal(2, {rv({1}), rv({1})});
  const std::vector<RealVec> a = {RealVec({3, 0}), RealVec({0, 4})};
  CHECK(check_root_power_identity(P, a, 1e-12));
  const std::vector<RealVec> b = {RealVec({1, 1}), RealVec({2, 2})};
  CHECK(check_root_power_identity(P, b, 1e-12));

  const auto P3 = HomogeneousPolynomial::diagonal(3, {rv({1}), rv({1})});
  const std::vector<RealVec> c = {RealVec({-1, 2}), RealVec({2, 1})};
  CHECK(check_root_power_identity(P3, c, 1e-12));

  // generated (non-diagonal) polynomials are refused
  MultilinearMap ones(2, 2, 1);
  ones.set_entry(std::vector<int>{0, 1}, rv({1}));
  const auto PT = HomogeneousPolynomial::from_map(ones);
  CHECK_THROWS_AS(check_root_power_identity(PT, a, 1e-9), std::invalid_argument);
}

TEST_CASE("tensor JSON round-trip") {
  Rng rng(3333);
  for (int rep = 0; rep < 10; ++rep) {
    const auto T = random_map(rng, 1 + rep % 3 + 1, 2 + rep % 2, rep % 2 == 0);
    const auto j = tensor_to_json(T);
    const auto back = tensor_from_json(j);
    CHECK(back.order() == T.order());
    CHECK(back.dim() == T.dim());
    CHECK(back.codim() == T.codim());
    for (std::size_t flat = 0; flat < T.entry_count(); ++flat) {
      CHECK(back.entry_flat(flat) == T.entry_flat(flat));
    }
    CHECK(tensor_to_json(back) == j);
  }
  // non-integer entries survive via "p/q" strings
  MultilinearMap T(2, 2, 1);
  T.set_entry(std::vector<int>{0, 0}, RatVec({Rational(1, 2)}));
  const auto back = tensor_from_json(tensor_to_json(T));
  CHECK(back.entry(std::vector<int>{0, 0}) == RatVec({Rational(1, 2)}));
}
