#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "latticemed/funcal.hpp"

using namespace latmed;

namespace {

RatVec rv(std::initializer_list<long long> xs) {
  std::vector<Rational> coords;
  for (const auto x : xs) coords.emplace_back(x);
  return RatVec(std::move(coords));
}

bool approx(const RealVec& v, std::initializer_list<double> expect, double tol) {
  if (v.dim() != static_cast<int>(expect.size())) return false;
  int i = 0;
  for (const double e : expect) {
    if (std::fabs(v[i++] - e) > tol) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("apply_ph basics") {
  const std::vector<RealVec> fs = {RealVec({1, 2}), RealVec({3, 0})};
  CHECK(approx(apply_ph(ph_sum(2), fs), {4, 2}, 1e-12));

  const std::vector<RealVec> gm_in = {RealVec({1, 4}), RealVec({4, 1})};
  CHECK(approx(apply_ph(ph_geometric_mean(2), gm_in), {2, 2}, 1e-12));

  const std::vector<RealVec> rp_in = {RealVec({3, 0}), RealVec({0, 4})};
  CHECK(approx(apply_ph(ph_root_power(2, 2), rp_in), {3, 4}, 1e-12));

  CHECK_THROWS_AS(apply_ph(ph_sum(3), fs), std::invalid_argument);
  const std::vector<RealVec> ragged = {RealVec({1, 2}), RealVec({1})};
  CHECK_THROWS_AS(apply_ph(ph_sum(2), ragged), std::invalid_argument);
}

TEST_CASE("homogeneity checker") {
  CHECK(check_homogeneity(ph_sum(3), 300, 11, 1e-9).pass);
  CHECK(check_homogeneity(ph_geometric_mean(2), 300, 11, 1e-9).pass);
  CHECK(check_homogeneity(ph_root_power(3, 3), 300, 11, 1e-9).pass);
  CHECK(check_homogeneity(ph_min(2), 300, 11, 1e-9).pass);

  const PHFunction quad{"quad", 2, true, [](std::span<const double> x) { return x[0] * x[0]; }};
  const auto rep = check_homogeneity(quad, 300, 11, 1e-9);
  CHECK_FALSE(rep.pass);
  CHECK(rep.point.dim() == 2);

  CHECK_THROWS_AS(check_homogeneity(ph_sum(2), 10, 1, 0.0), std::invalid_argument);
}

TEST_CASE("signed root power sums") {
  CHECK(signed_root(8, 3) == doctest::Approx(2.0));
  CHECK(signed_root(-8, 3) == doctest::Approx(-2.0));
  CHECK(signed_root(9, 2) == doctest::Approx(3.0));
  CHECK_THROWS_AS(signed_root(-1.0, 2), std::domain_error);

  // odd power acts on all of the space
  const std::vector<RealVec> fs = {RealVec({-1, 2}), RealVec({2, 1})};
  const auto s = apply_ph(ph_root_power(2, 3), fs);
  CHECK(s[0] == doctest::Approx(std::cbrt(7.0)));
  CHECK(s[1] == doctest::Approx(std::cbrt(9.0)));
}

TEST_CASE("boxtimes against the analytic geometric mean") {
  const auto b = boxtimes_inf(RealVec({1, 4}), RealVec({4, 1}));
  CHECK(approx(b, {2, 2}, 1e-6));
  CHECK(approx(boxtimes_inf(RealVec({1, 1}), RealVec({1, 1})), {1, 1}, 1e-6));
  CHECK(approx(boxtimes_inf(RealVec({0, 1}), RealVec({1, 0})), {0, 0}, 1e-6));

  Rng rng(77);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<double> a(3), c(3);
    for (auto& v : a) v = next_real(rng, 0, 4);
    for (auto& v : c) v = next_real(rng, 0, 4);
    const RealVec f(a), g(c);
    const auto got = boxtimes_inf(f, g);
    for (int i = 0; i < 3; ++i) {
      CHECK(std::fabs(got[i] - std::sqrt(f[i] * g[i])) <= 1e-6);
    }
    // invariance under replacing the pair by its orderization
    const auto swapped = boxtimes_inf(meet(f, g), join(f, g));
    for (int i = 0; i < 3; ++i) CHECK(std::fabs(got[i] - swapped[i]) <= 1e-6);
  }

  CHECK_THROWS_AS(boxtimes_inf(RealVec({-1, 0}), RealVec({1, 1})), std::domain_error);
}

TEST_CASE("sum invariance") {
  const std::vector<RatVec> pair = {rv({1, 0}), rv({0, 1})};
  CHECK(sum_invariance_check(pair));

  Rng rng(3);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = static_cast<int>(next_int(rng, 1, 5));
    const int m = static_cast<int>(next_int(rng, 1, 6));
    std::vector<RatVec> fs;
    for (int i = 0; i < n; ++i) {
      std::vector<Rational> coords;
      for (int c = 0; c < m; ++c) coords.emplace_back(Rational(next_int(rng, -20, 20), next_int(rng, 1, 9)));
      fs.emplace_back(std::move(coords));
    }
    CHECK(sum_invariance_check(fs));
  }

  const std::vector<RatVec> three = {rv({3, 1}), rv({1, 3}), rv({2, 2})};
  CHECK(sum_invariance_check(three));
}

TEST_CASE("product invariance") {
  const std::vector<RatVec> pair = {rv({2, 0}), rv({3, 5})};
  CHECK(product_invariance_check(pair));
  CHECK(hadamard(rv({2, 0}), rv({3, 5})) == rv({6, 0}));

  const std::vector<RatVec> chain_in = {rv({1, 1}), rv({2, 2}), rv({3, 3})};
  CHECK(product_invariance_check(chain_in));

  const std::vector<RatVec> three = {rv({3, 1}), rv({1, 3}), rv({2, 2})};
  CHECK(product_invariance_check(three));

  Rng rng(4);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = static_cast<int>(next_int(rng, 1, 4));
    std::vector<RatVec> fs;
    for (int i = 0; i < n; ++i) {
      std::vector<Rational> coords;
      for (int c = 0; c < 4; ++c) coords.emplace_back(next_int(rng, -5, 5));
      fs.emplace_back(std::move(coords));
    }
    CHECK(product_invariance_check(fs));
  }
}
