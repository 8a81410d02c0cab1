#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "latticemed/coord.hpp"

namespace latmed {

/// Dense n-linear map R^m x ... x R^m -> R^p as a coefficient tensor with
/// exact rational entries. Every multilinear map at finite dimension is
/// bounded, so boundedness is not modeled. Caps: order <= 4, dim <= 6,
/// codim <= 3.
class MultilinearMap {
 public:
  MultilinearMap(int order, int dim, int codim);

  int order() const { return order_; }
  int dim() const { return dim_; }
  int codim() const { return codim_; }

  const RatVec& entry(std::span<const int> index) const;
  void set_entry(std::span<const int> index, RatVec value);

  /// Sum over index tuples of entry * f1(i1) * ... * fn(in).
  RatVec eval(std::span<const RatVec> args) const;
  /// Same contraction in floating point.
  std::vector<double> eval_real(std::span<const RealVec> args) const;

  /// Average of the entries over all slot permutations.
  MultilinearMap symmetrized() const;
  bool is_symmetric() const;

  /// All entries with non-constant index vanish. On coordinate spaces this
  /// is exactly orthosymmetry: basis tuples with two distinct indices form
  /// disjoint pairs, and diagonal maps kill disjoint-support inputs.
  bool is_diagonal() const;

  std::size_t entry_count() const { return entries_.size(); }
  const RatVec& entry_flat(std::size_t flat) const { return entries_[flat]; }
  void index_of(std::size_t flat, std::span<int> out) const;

 private:
  std::size_t flatten(std::span<const int> index) const;

  int order_, dim_, codim_;
  std::vector<RatVec> entries_;
};

/// Degree-n homogeneous polynomial R^m -> R^p, in one of two shapes: a
/// diagonal form sum_a w_a f(a)^n, or the restriction P(f) = T(f, ..., f)
/// of a multilinear map to the diagonal.
class HomogeneousPolynomial {
 public:
  static HomogeneousPolynomial diagonal(int degree, std::vector<RatVec> weights);
  static HomogeneousPolynomial from_map(MultilinearMap generator);

  int degree() const { return degree_; }
  int dim() const { return dim_; }
  int codim() const { return codim_; }
  bool is_diagonal_form() const { return diagonal_; }
  const std::vector<RatVec>& weights() const;
  const MultilinearMap& generator() const;

  RatVec eval(const RatVec& f) const;
  std::vector<double> eval_real(const RealVec& f) const;

 private:
  HomogeneousPolynomial() = default;

  bool diagonal_ = true;
  int degree_ = 0, dim_ = 0, codim_ = 0;
  std::vector<RatVec> weights_;           // diagonal form
  std::vector<MultilinearMap> generator_;  // 0 or 1 elements
};

/// S(u_1, ..., u_r) = sum_k P(u_k) for a generating homogeneous polynomial P.
class PowerSumPolynomial {
 public:
  PowerSumPolynomial(int vars, HomogeneousPolynomial generating);

  int vars() const { return vars_; }
  const HomogeneousPolynomial& generating() const { return gen_; }

  RatVec eval(std::span<const RatVec> us) const;

 private:
  int vars_;
  HomogeneousPolynomial gen_;
};

/// Decider outcome with a replayable witness on failure.
struct Decision {
  bool holds = true;
  long checked = 0;
  std::vector<RatVec> witness;  // the violating input tuple, empty when holds
  std::string detail;

  explicit operator bool() const { return holds; }
};

struct DeciderMode {
  bool exact = true;  // exhaustive over small integer inputs
  long trials = 500;
  std::uint64_t seed = 0;
  int bound = 3;  // coordinate magnitude for generated inputs

  static DeciderMode Exact() { return DeciderMode{}; }
  static DeciderMode Sampled(long trials, std::uint64_t seed) {
    return DeciderMode{false, trials, seed, 3};
  }
};

/// T vanishes whenever two arguments have disjoint support. Exact mode
/// decides via tensor diagonality; sampled mode evaluates on random tuples
/// containing a disjoint pair.
Decision is_orthosymmetric(const MultilinearMap& T, const DeciderMode& mode);

/// P(f+g) = P(f) + P(g) for disjoint f, g (all of E, or the positive cone
/// only). Exact mode enumerates disjoint integer pairs up to the bound.
Decision is_orthogonally_additive(const HomogeneousPolynomial& P, bool positive_only,
                                  const DeciderMode& mode);

/// S(f_1,...,f_r) = S(0, f_1, ..., f_i + f_j, ..., f_r) whenever f_i, f_j
/// are disjoint. Requires r >= 2.
Decision is_orthogonally_steady(const PowerSumPolynomial& S, const DeciderMode& mode);

/// T vanishes whenever the arguments' absolute values meet to zero jointly
/// (positive_only restricts to the positive cone).
Decision joint_orthosymmetry_check(const MultilinearMap& T, bool positive_only,
                                   const DeciderMode& mode);

/// P(RootPowerSum(f_1,...,f_r)) = sum_k P(f_k) for a diagonal (hence
/// orthogonally additive) P; the root power sum is taken pointwise with the
/// signed real root. Checked within tol on arbitrary inputs.
bool check_root_power_identity(const HomogeneousPolynomial& P, std::span<const RealVec> fs,
                               double tol);

}  // namespace latmed
