#pragma once

#include <functional>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "latticemed/lattice.hpp"
#include "latticemed/orderization.hpp"

namespace latmed {

/// Hard ceiling on evaluations per exhaustive check.
inline constexpr long kExhaustiveBudget = 1'000'000;

/// Outcome of a single invariance check. A failing certificate carries the
/// witness tuple plus both evaluations, formatted; replaying the witness
/// through the map reproduces the failure.
template <typename E>
struct Certificate {
  bool pass = true;
  long checked = 0;
  std::uint64_t seed = 0;
  std::vector<E> witness;
  std::string lhs, rhs;

  explicit operator bool() const { return pass; }
};

namespace detail {

inline std::string show_value(long v) { return std::to_string(v); }
inline std::string show_value(int v) { return std::to_string(v); }
inline std::string show_value(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}
inline std::string show_value(const std::string& v) { return v; }
template <typename V>
auto show_value(const V& v) -> decltype(v.str()) {
  return v.str();
}

// Walks tuples from the strategy: the full n-fold product for exhaustive
// (finite carriers only, within budget), seeded samples otherwise. Visit
// returns false to stop.
template <Carrier L, typename Visit>
long for_each_tuple(const L& lat, int n, const Strategy& st, Visit&& visit) {
  using E = typename L::Element;
  long count = 0;
  if (st.exhaustive) {
    if constexpr (FiniteCarrier<L>) {
      long total = 1;
      for (int i = 0; i < n; ++i) {
        total *= lat.size();
        if (total > kExhaustiveBudget) {
          throw UnsupportedError("exhaustive check budget exceeded: |L|^n > 1e6");
        }
      }
      std::vector<int> odo(static_cast<std::size_t>(n), 0);
      std::vector<E> tuple;
      tuple.reserve(static_cast<std::size_t>(n));
      for (;;) {
        tuple.clear();
        for (int i = 0; i < n; ++i) tuple.push_back(lat.element(odo[static_cast<std::size_t>(i)]));
        ++count;
        if (!visit(std::span<const E>(tuple))) return count;
        int i = 0;
        while (i < n) {
          if (++odo[static_cast<std::size_t>(i)] < lat.size()) break;
          odo[static_cast<std::size_t>(i)] = 0;
          ++i;
        }
        if (i == n) return count;
      }
    } else {
      throw UnsupportedError("exhaustive strategy requires a finite carrier");
    }
  }
  Rng rng(st.seed);
  if constexpr (requires(Rng& r) { lat.sample(r); }) {
    std::vector<E> tuple;
    for (long t = 0; t < st.trials; ++t) {
      tuple.clear();
      for (int i = 0; i < n; ++i) tuple.push_back(lat.sample(rng));
      ++count;
      if (!visit(std::span<const E>(tuple))) return count;
    }
    return count;
  } else {
    throw UnsupportedError("carrier does not support sampling");
  }
}

}  // namespace detail

/// T(xs) = T(to(xs)) over the strategy's tuples.
template <Carrier L, typename Map, typename Eq = std::equal_to<>>
auto is_toi(const L& lat, int n, Map&& T, const Strategy& st, Eq eq = {}) {
  using E = typename L::Element;
  Certificate<E> cert;
  cert.seed = st.seed;
  cert.checked = detail::for_each_tuple(lat, n, st, [&](std::span<const E> xs) {
    const auto chain = total_orderization(lat, xs);
    const auto lhs = T(xs);
    const auto rhs = T(std::span<const E>(chain));
    if (!eq(lhs, rhs)) {
      cert.pass = false;
      cert.witness.assign(xs.begin(), xs.end());
      cert.lhs = detail::show_value(lhs);
      cert.rhs = detail::show_value(rhs);
      return false;
    }
    return true;
  });
  return cert;
}

/// T(xs) = T(sigma xs); all n! permutations for n <= 4, transposition
/// samples beyond that.
template <Carrier L, typename Map, typename Eq = std::equal_to<>>
auto is_symmetric_map(const L& lat, int n, Map&& T, const Strategy& st, Eq eq = {}) {
  using E = typename L::Element;
  Certificate<E> cert;
  cert.seed = st.seed;
  std::vector<std::vector<int>> perms;
  if (n <= 4) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  } else {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        std::vector<int> p(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) p[static_cast<std::size_t>(k)] = k;
        std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
        perms.push_back(std::move(p));
      }
    }
  }

  cert.checked = detail::for_each_tuple(lat, n, st, [&](std::span<const E> xs) {
    const auto base = T(xs);
    std::vector<E> permuted(xs.size(), xs[0]);
    for (const auto& p : perms) {
      for (int i = 0; i < n; ++i) permuted[static_cast<std::size_t>(i)] = xs[static_cast<std::size_t>(p[static_cast<std::size_t>(i)])];
      const auto val = T(std::span<const E>(permuted));
      if (!eq(base, val)) {
        cert.pass = false;
        cert.witness.assign(permuted.begin(), permuted.end());
        cert.lhs = detail::show_value(base);
        cert.rhs = detail::show_value(val);
        return false;
      }
    }
    return true;
  });
  return cert;
}

/// xs |-> g(to(xs)): total orderization invariant by construction, because
/// to is idempotent (a chain's orderization is itself, sorted).
template <Carrier L, typename G>
auto make_toi_map(const L& lat, G g) {
  using E = typename L::Element;
  return [&lat, g = std::move(g)](std::span<const E> xs) {
    const auto chain = total_orderization(lat, xs);
    return g(std::span<const E>(chain));
  };
}

/// Verdict of a two-condition theorem check: both conditions evaluated
/// exhaustively and compared.
struct EquivalenceReport {
  bool precondition_ok = false;  // the map passed the TOI gate
  bool cond_i = false;
  bool cond_ii = false;
  bool equivalent = false;
  std::string detail;

  bool ok() const { return precondition_ok && equivalent; }
};

/// For a TOI map T on a lattice with bottom: T = a whenever some pair of
/// arguments meets to bottom  <=>  T = a whenever the first argument is
/// bottom. Refuses maps that fail the TOI precondition.
template <FiniteCarrier L, typename Map, typename V, typename Eq = std::equal_to<>>
EquivalenceReport check_genorthosym(const L& lat, int n, Map&& T, const V& a, Eq eq = {}) {
  using E = typename L::Element;
  if (!lat.bottom().has_value()) {
    throw std::invalid_argument("check_genorthosym: carrier has no bottom element");
  }
  const E theta = *lat.bottom();

  EquivalenceReport report;
  const auto toi = is_toi(lat, n, T, Strategy::Exhaustive(), eq);
  report.precondition_ok = toi.pass;
  if (!toi.pass) {
    report.detail = "precondition-failed: map is not total orderization invariant";
    return report;
  }

  // (i): some pair (including i = j, which makes n = 1 behave) meets to bottom.
  bool cond_i = true;
  detail::for_each_tuple(lat, n, Strategy::Exhaustive(), [&](std::span<const E> xs) {
    bool hypothesis = false;
    for (std::size_t i = 0; i < xs.size() && !hypothesis; ++i) {
      for (std::size_t j = i; j < xs.size() && !hypothesis; ++j) {
        hypothesis = lat.equal(lat.meet(xs[i], xs[j]), theta);
      }
    }
    if (hypothesis && !eq(T(xs), a)) {
      cond_i = false;
      return false;
    }
    return true;
  });

  bool cond_ii = true;
  if (n == 1) {
    const E t[] = {theta};
    cond_ii = eq(T(std::span<const E>(t, 1)), a);
  } else {
    detail::for_each_tuple(lat, n - 1, Strategy::Exhaustive(), [&](std::span<const E> rest) {
      std::vector<E> tuple;
      tuple.reserve(static_cast<std::size_t>(n));
      tuple.push_back(theta);
      tuple.insert(tuple.end(), rest.begin(), rest.end());
      if (!eq(T(std::span<const E>(tuple)), a)) {
        cond_ii = false;
        return false;
      }
      return true;
    });
  }

  report.cond_i = cond_i;
  report.cond_ii = cond_ii;
  report.equivalent = (cond_i == cond_ii);
  return report;
}

/// For a TOI map T on a lattice with bottom: T(xs) = phi(join xs) on
/// pairwise-disjoint tuples  <=>  T(bottom, ..., bottom, x) = phi(x) for
/// every x.
template <FiniteCarrier L, typename Map, typename Phi, typename Eq = std::equal_to<>>
EquivalenceReport check_genorthsteady(const L& lat, int n, Map&& T, Phi&& phi, Eq eq = {}) {
  using E = typename L::Element;
  if (!lat.bottom().has_value()) {
    throw std::invalid_argument("check_genorthsteady: carrier has no bottom element");
  }
  const E theta = *lat.bottom();

  EquivalenceReport report;
  const auto toi = is_toi(lat, n, T, Strategy::Exhaustive(), eq);
  report.precondition_ok = toi.pass;
  if (!toi.pass) {
    report.detail = "precondition-failed: map is not total orderization invariant";
    return report;
  }

  bool cond_i = true;
  detail::for_each_tuple(lat, n, Strategy::Exhaustive(), [&](std::span<const E> xs) {
    bool pairwise = true;
    for (std::size_t i = 0; i < xs.size() && pairwise; ++i) {
      for (std::size_t j = i + 1; j < xs.size() && pairwise; ++j) {
        pairwise = lat.equal(lat.meet(xs[i], xs[j]), theta);
      }
    }
    if (!pairwise) return true;
    E sup = xs[0];
    for (std::size_t i = 1; i < xs.size(); ++i) sup = lat.join(sup, xs[i]);
    if (!eq(T(xs), phi(sup))) {
      cond_i = false;
      return false;
    }
    return true;
  });

  bool cond_ii = true;
  for (int x = 0; x < lat.size() && cond_ii; ++x) {
    std::vector<E> tuple(static_cast<std::size_t>(n - 1), theta);
    tuple.push_back(lat.element(x));
    cond_ii = eq(T(std::span<const E>(tuple)), phi(lat.element(x)));
  }

  report.cond_i = cond_i;
  report.cond_ii = cond_ii;
  report.equivalent = (cond_i == cond_ii);
  return report;
}

}  // namespace latmed
