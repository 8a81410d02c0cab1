#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "latticemed/coord.hpp"
#include "latticemed/orderization.hpp"

namespace latmed {

/// Continuous positively homogeneous function of fixed arity. Continuity is
/// a trust assumption on the evaluator; homogeneity is sample-checkable via
/// check_homogeneity. The symmetry flag is the claim under test in the
/// invariance suites, not a verified property.
struct PHFunction {
  std::string name;
  int arity = 0;
  bool symmetric = false;
  std::function<double(std::span<const double>)> eval;
};

/// x1 + ... + xn.
PHFunction ph_sum(int arity);
/// min / max over the arguments.
PHFunction ph_min(int arity);
PHFunction ph_max(int arity);
/// Geometric mean of absolute values: (|x1|...|xn|)^(1/n).
PHFunction ph_geometric_mean(int arity);
/// Signed root power sum: (x1^p + ... + xn^p)^(1/p); odd p takes the real
/// root of the signed sum, so the function is defined on all of R^n.
PHFunction ph_root_power(int arity, int power);
/// First projection; the canonical asymmetric example.
PHFunction ph_first(int arity);

/// sign-aware real p-th root of s (p >= 1).
double signed_root(double s, int power);

/// Pointwise functional calculus on coordinate tuples: coordinate c of the
/// result is h applied to the fiber (f1(c), ..., fn(c)). On these carriers
/// the nonzero real-valued lattice homomorphisms are positive multiples of
/// the coordinate evaluations, so this realizes the abstract definition.
RealVec apply_ph(const PHFunction& h, std::span<const RealVec> fs);

struct HomogeneityReport {
  bool pass = true;
  long trials = 0;
  double lambda = 0.0;
  RealVec point;
  double lhs = 0.0, rhs = 0.0;
};

/// Samples x and lambda in [0, 8] and checks |h(lambda x) - lambda h(x)|
/// <= tol * (1 + |h(x)|); reports the first violation.
HomogeneityReport check_homogeneity(const PHFunction& h, long trials, std::uint64_t seed, double tol);

/// Infimum over theta of (theta f + g / theta) / 2, taken pointwise over a
/// log-spaced grid with golden-section refinement. Agrees with the pointwise
/// geometric mean sqrt(f g) to grid accuracy. Arguments must be nonnegative.
RealVec boxtimes_inf(const RealVec& f, const RealVec& g);

/// Sum of the tuple equals the sum of its total orderization, exactly.
bool sum_invariance_check(std::span<const RatVec> fs);

/// Coordinatewise product of the tuple equals the product of its total
/// orderization, exactly.
bool product_invariance_check(std::span<const RatVec> fs);

}  // namespace latmed
