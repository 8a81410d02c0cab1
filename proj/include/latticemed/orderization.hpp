#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "latticemed/coord.hpp"
#include "latticemed/lattice.hpp"

namespace latmed {

/// General m_k walks all subsets of the argument tuple; beyond this arity
/// only the pointwise fast path is offered.
inline constexpr int kMaxCombinatorialArity = 12;

namespace detail {

template <Carrier L>
typename L::Element fold_mask(const L& lat, std::span<const typename L::Element> xs,
                              std::uint32_t mask, bool use_meet) {
  typename L::Element acc = xs[static_cast<std::size_t>(std::countr_zero(mask))];
  for (std::uint32_t rest = mask & (mask - 1); rest != 0; rest &= rest - 1) {
    const auto i = static_cast<std::size_t>(std::countr_zero(rest));
    acc = use_meet ? lat.meet(acc, xs[i]) : lat.join(acc, xs[i]);
  }
  return acc;
}

// Join over all `size`-subsets of meets (or the dual when flipped).
template <Carrier L>
typename L::Element subset_form(const L& lat, std::span<const typename L::Element> xs, int size,
                                bool meets_inside) {
  const int n = static_cast<int>(xs.size());
  bool first = true;
  typename L::Element acc = xs[0];
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != size) continue;
    auto inner = fold_mask(lat, xs, mask, meets_inside);
    if (first) {
      acc = std::move(inner);
      first = false;
    } else {
      acc = meets_inside ? lat.join(acc, inner) : lat.meet(acc, inner);
    }
  }
  return acc;
}

}  // namespace detail

/// The k-th order-statistic operator: join over all (n+1-k)-subsets of their
/// meets. The dual form, meet over all k-subsets of joins, is computed as
/// well and the two are asserted equal; a mismatch can only come from a
/// non-distributive carrier and is reported as such.
template <Carrier L>
typename L::Element m_k(const L& lat, std::span<const typename L::Element> xs, int k) {
  const int n = static_cast<int>(xs.size());
  if (n < 1) throw std::invalid_argument("m_k: empty tuple");
  if (k < 1 || k > n) {
    throw std::invalid_argument("m_k: k=" + std::to_string(k) + " out of range [1," +
                                std::to_string(n) + "]");
  }
  if (n > kMaxCombinatorialArity) {
    throw UnsupportedError("m_k: arity " + std::to_string(n) + " above combinatorial cap " +
                           std::to_string(kMaxCombinatorialArity) + "; use the pointwise path");
  }
  lat.require_distributive();
  auto primal = detail::subset_form(lat, xs, n + 1 - k, true);
  auto dual = detail::subset_form(lat, xs, k, false);
  if (!lat.equal(primal, dual)) {
    throw DistributivityError("m_k: join-of-meets and meet-of-joins disagree on tuple " +
                              detail::show_tuple(lat, xs) + ", k=" + std::to_string(k));
  }
  return primal;
}

/// Ternary median, both closed forms asserted equal.
template <Carrier L>
typename L::Element median3(const L& lat, const typename L::Element& x,
                            const typename L::Element& y, const typename L::Element& z) {
  lat.require_distributive();
  auto primal = lat.join(lat.join(lat.meet(x, y), lat.meet(x, z)), lat.meet(y, z));
  auto dual = lat.meet(lat.meet(lat.join(x, y), lat.join(x, z)), lat.join(y, z));
  if (!lat.equal(primal, dual)) {
    const typename L::Element t[] = {x, y, z};
    throw DistributivityError("median3: dual forms disagree on triple " +
                              detail::show_tuple(lat, std::span<const typename L::Element>(t, 3)));
  }
  return primal;
}

/// (m_1(xs), ..., m_n(xs)): the sorted chain a tuple collapses to.
template <Carrier L>
std::vector<typename L::Element> total_orderization(const L& lat,
                                                    std::span<const typename L::Element> xs) {
  const int n = static_cast<int>(xs.size());
  if (n < 1) throw std::invalid_argument("total_orderization: empty tuple");
  std::vector<typename L::Element> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) out.push_back(m_k(lat, xs, k));
  for (int k = 0; k + 1 < n; ++k) {
    if (!leq(lat, out[static_cast<std::size_t>(k)], out[static_cast<std::size_t>(k) + 1])) {
      throw DistributivityError("total_orderization: output is not a chain on tuple " +
                                detail::show_tuple(lat, xs));
    }
  }
  return out;
}

/// Fast path on coordinate tuples: per coordinate, the k-th smallest of the
/// fiber by selection. No subset enumeration, no arity cap.
template <typename T>
CoordVec<T> m_k_pointwise(std::span<const CoordVec<T>> fs, int k) {
  const int n = static_cast<int>(fs.size());
  if (n < 1) throw std::invalid_argument("m_k_pointwise: empty tuple");
  if (k < 1 || k > n) throw std::invalid_argument("m_k_pointwise: k out of range");
  const int dim = fs[0].dim();
  for (const auto& f : fs) {
    if (f.dim() != dim) throw std::invalid_argument("m_k_pointwise: dimension mismatch");
  }
  std::vector<T> out;
  out.reserve(static_cast<std::size_t>(dim));
  std::vector<T> fiber(static_cast<std::size_t>(n), T(0));
  for (int c = 0; c < dim; ++c) {
    for (int i = 0; i < n; ++i) fiber[static_cast<std::size_t>(i)] = fs[static_cast<std::size_t>(i)][c];
    std::nth_element(fiber.begin(), fiber.begin() + (k - 1), fiber.end());
    out.push_back(fiber[static_cast<std::size_t>(k) - 1]);
  }
  return CoordVec<T>(std::move(out));
}

template <typename T>
std::vector<CoordVec<T>> total_orderization_pointwise(std::span<const CoordVec<T>> fs) {
  std::vector<CoordVec<T>> out;
  out.reserve(fs.size());
  for (int k = 1; k <= static_cast<int>(fs.size()); ++k) out.push_back(m_k_pointwise(fs, k));
  return out;
}

}  // namespace latmed
