#include "latticemed/funcal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace latmed {

PHFunction ph_sum(int arity) {
  return PHFunction{"sum", arity, true, [](std::span<const double> x) {
                      double s = 0.0;
                      for (const double v : x) s += v;
                      return s;
                    }};
}

PHFunction ph_min(int arity) {
  return PHFunction{"min", arity, true, [](std::span<const double> x) {
                      return *std::min_element(x.begin(), x.end());
                    }};
}

PHFunction ph_max(int arity) {
  return PHFunction{"max", arity, true, [](std::span<const double> x) {
                      return *std::max_element(x.begin(), x.end());
                    }};
}

PHFunction ph_geometric_mean(int arity) {
  return PHFunction{"gmean", arity, true, [arity](std::span<const double> x) {
                      double p = 1.0;
                      for (const double v : x) p *= std::fabs(v);
                      return std::pow(p, 1.0 / arity);
                    }};
}

double signed_root(double s, int power) {
  if (power < 1) throw std::invalid_argument("signed_root: power must be >= 1");
  if (power == 1) return s;
  if (power % 2 == 1) {
    return s < 0 ? -std::pow(-s, 1.0 / power) : std::pow(s, 1.0 / power);
  }
  if (s < 0) {
    // Even-power sums are nonnegative up to rounding.
    if (s > -1e-12) return 0.0;
    throw std::domain_error("signed_root: negative radicand for even power");
  }
  return std::pow(s, 1.0 / power);
}

PHFunction ph_root_power(int arity, int power) {
  if (power < 1) throw std::invalid_argument("ph_root_power: power must be >= 1");
  return PHFunction{"rootpow" + std::to_string(power), arity, true,
                    [power](std::span<const double> x) {
                      double s = 0.0;
                      for (const double v : x) s += std::pow(v, power);
                      return signed_root(s, power);
                    }};
}

PHFunction ph_first(int arity) {
  return PHFunction{"first", arity, false, [](std::span<const double> x) { return x[0]; }};
}

RealVec apply_ph(const PHFunction& h, std::span<const RealVec> fs) {
  if (static_cast<int>(fs.size()) != h.arity) {
    throw std::invalid_argument("apply_ph: arity mismatch for '" + h.name + "'");
  }
  const int dim = fs.empty() ? 0 : fs[0].dim();
  for (const auto& f : fs) {
    if (f.dim() != dim) throw std::invalid_argument("apply_ph: dimension mismatch");
  }
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(dim));
  std::vector<double> fiber(fs.size());
  for (int c = 0; c < dim; ++c) {
    for (std::size_t i = 0; i < fs.size(); ++i) fiber[i] = fs[i][c];
    out.push_back(h.eval(fiber));
  }
  return RealVec(std::move(out));
}

HomogeneityReport check_homogeneity(const PHFunction& h, long trials, std::uint64_t seed,
                                    double tol) {
  if (tol <= 0) throw std::invalid_argument("check_homogeneity: tol must be positive");
  HomogeneityReport report;
  Rng rng(seed);
  std::vector<double> x(static_cast<std::size_t>(h.arity));
  std::vector<double> lx(static_cast<std::size_t>(h.arity));
  for (long t = 0; t < trials; ++t) {
    for (auto& v : x) v = next_real(rng, -4.0, 4.0);
    const double lambda = next_real(rng, 0.0, 8.0);
    for (std::size_t i = 0; i < x.size(); ++i) lx[i] = lambda * x[i];
    const double hx = h.eval(x);
    const double lhs = h.eval(lx);
    const double rhs = lambda * hx;
    ++report.trials;
    if (std::fabs(lhs - rhs) > tol * (1.0 + std::fabs(hx))) {
      report.pass = false;
      report.lambda = lambda;
      report.point = RealVec(x);
      report.lhs = lhs;
      report.rhs = rhs;
      return report;
    }
  }
  return report;
}

namespace {

// theta grid: 4096 log-spaced points on [2^-20, 2^20]; the objective is
// convex in log theta, so a golden-section polish on the bracketing
// interval converges fast.
constexpr int kGridPoints = 4096;
constexpr int kGoldenSteps = 60;
constexpr double kLogLo = -20.0 * 0.6931471805599453;  // ln(2^-20)
constexpr double kLogHi = 20.0 * 0.6931471805599453;

double boxtimes_coord(double a, double b) {
  auto objective = [&](double t) { return std::exp(t) * a + std::exp(-t) * b; };
  double best_val = objective(kLogLo);
  int best_idx = 0;
  for (int i = 1; i < kGridPoints; ++i) {
    const double t = kLogLo + (kLogHi - kLogLo) * i / (kGridPoints - 1);
    const double v = objective(t);
    if (v < best_val) {
      best_val = v;
      best_idx = i;
    }
  }
  const double step = (kLogHi - kLogLo) / (kGridPoints - 1);
  double lo = kLogLo + step * std::max(0, best_idx - 1);
  double hi = kLogLo + step * std::min(kGridPoints - 1, best_idx + 1);
  constexpr double phi = 0.6180339887498949;
  double x1 = hi - phi * (hi - lo);
  double x2 = lo + phi * (hi - lo);
  double f1 = objective(x1);
  double f2 = objective(x2);
  for (int s = 0; s < kGoldenSteps; ++s) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = objective(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = objective(x2);
    }
  }
  return 0.5 * std::min({best_val, f1, f2});
}

}  // namespace

RealVec boxtimes_inf(const RealVec& f, const RealVec& g) {
  if (f.dim() != g.dim()) throw std::invalid_argument("boxtimes_inf: dimension mismatch");
  if (!f.is_nonnegative() || !g.is_nonnegative()) {
    throw std::domain_error("boxtimes_inf: arguments must be nonnegative");
  }
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(f.dim()));
  for (int c = 0; c < f.dim(); ++c) out.push_back(boxtimes_coord(f[c], g[c]));
  return RealVec(std::move(out));
}

bool sum_invariance_check(std::span<const RatVec> fs) {
  if (fs.empty()) throw std::invalid_argument("sum_invariance_check: empty tuple");
  const auto chain = total_orderization_pointwise(fs);
  RatVec lhs = RatVec::zero(fs[0].dim());
  RatVec rhs = lhs;
  for (const auto& f : fs) lhs = lhs + f;
  for (const auto& t : chain) rhs = rhs + t;
  return lhs == rhs;
}

bool product_invariance_check(std::span<const RatVec> fs) {
  if (fs.empty()) throw std::invalid_argument("product_invariance_check: empty tuple");
  const auto chain = total_orderization_pointwise(fs);
  RatVec lhs = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) lhs = hadamard(lhs, fs[i]);
  RatVec rhs = chain[0];
  for (std::size_t i = 1; i < chain.size(); ++i) rhs = hadamard(rhs, chain[i]);
  return lhs == rhs;
}

}  // namespace latmed
