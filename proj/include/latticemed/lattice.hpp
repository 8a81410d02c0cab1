#pragma once

#include <array>
#include <concepts>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "latticemed/errors.hpp"
#include "latticemed/util.hpp"

namespace latmed {

/// Anything the order-theoretic machinery can run on: a carrier with meet,
/// join, decidable equality and a distributivity gate.
template <typename L>
concept Carrier = requires(const L& lat, const typename L::Element& a, const typename L::Element& b) {
  typename L::Element;
  { lat.meet(a, b) } -> std::same_as<typename L::Element>;
  { lat.join(a, b) } -> std::same_as<typename L::Element>;
  { lat.equal(a, b) } -> std::same_as<bool>;
  { lat.require_distributive() };
};

/// Carrier whose elements can be enumerated, enabling exhaustive strategies.
template <typename L>
concept FiniteCarrier = Carrier<L> && requires(const L& lat, int i) {
  { lat.size() } -> std::convertible_to<int>;
  { lat.element(i) } -> std::same_as<typename L::Element>;
};

/// Finite lattice backed by full meet/join tables. Elements are indices into
/// the carrier; immutable after construction. Capped at 64 elements, which
/// covers every downset lattice of a poset with at most 6 points.
class FiniteLattice {
 public:
  using Element = int;

  static constexpr int kMaxSize = 64;

  FiniteLattice(std::vector<std::string> names, std::vector<int> meet_table,
                std::vector<int> join_table, std::optional<int> bottom, std::optional<int> top);

  int size() const { return static_cast<int>(names_.size()); }
  Element element(int i) const { return i; }

  Element meet(Element a, Element b) const {
    check(a);
    check(b);
    return meet_[static_cast<std::size_t>(a) * names_.size() + static_cast<std::size_t>(b)];
  }
  Element join(Element a, Element b) const {
    check(a);
    check(b);
    return join_[static_cast<std::size_t>(a) * names_.size() + static_cast<std::size_t>(b)];
  }
  bool equal(Element a, Element b) const {
    check(a);
    check(b);
    return a == b;
  }

  std::optional<Element> bottom() const { return bottom_; }
  std::optional<Element> top() const { return top_; }
  const std::string& name(Element a) const {
    check(a);
    return names_[static_cast<std::size_t>(a)];
  }
  const std::vector<std::string>& names() const { return names_; }

  /// Distributivity is scanned exhaustively once at construction; the result
  /// gates every orderization entry point.
  bool distributive() const { return !nondistrib_.has_value(); }
  const std::optional<std::array<int, 3>>& distributivity_witness() const { return nondistrib_; }
  void require_distributive() const;

  Element sample(Rng& rng) const { return static_cast<int>(next_int(rng, 0, size() - 1)); }

  /// The diamond: modular but not distributive. Negative fixture.
  static FiniteLattice m3();
  /// The pentagon: not even modular. Negative fixture.
  static FiniteLattice n5();
  /// Chain 0 < 1 < ... < n-1.
  static FiniteLattice chain(int n);

 private:
  void check(Element a) const {
    if (a < 0 || a >= size()) {
      throw std::domain_error("FiniteLattice: element " + std::to_string(a) +
                              " does not belong to this carrier");
    }
  }

  std::vector<std::string> names_;
  std::vector<int> meet_;
  std::vector<int> join_;
  std::optional<int> bottom_;
  std::optional<int> top_;
  std::optional<std::array<int, 3>> nondistrib_;
};

/// Derived order: a <= b iff a wedge b = a.
template <Carrier L>
bool leq(const L& lat, const typename L::Element& a, const typename L::Element& b) {
  return lat.equal(lat.meet(a, b), a);
}

/// True iff the elements are pairwise comparable. Empty input is a chain by
/// convention.
template <Carrier L>
bool is_chain(const L& lat, std::span<const typename L::Element> xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (!leq(lat, xs[i], xs[j]) && !leq(lat, xs[j], xs[i])) return false;
    }
  }
  return true;
}

struct Strategy {
  bool exhaustive = true;
  long trials = 0;
  std::uint64_t seed = 0;

  static Strategy Exhaustive() { return Strategy{true, 0, 0}; }
  static Strategy Sampled(long trials, std::uint64_t seed) { return Strategy{false, trials, seed}; }
};

struct LawReport {
  struct Entry {
    std::string law;
    bool pass = true;
    std::string witness;  // formatted triple on failure
  };
  std::vector<Entry> entries;
  bool all_pass = true;

  const Entry* find(const std::string& law) const {
    for (const auto& e : entries) {
      if (e.law == law) return &e;
    }
    return nullptr;
  }
};

namespace detail {

template <Carrier L>
std::string show_elem(const L& lat, const typename L::Element& e) {
  if constexpr (std::is_same_v<typename L::Element, int>) {
    if constexpr (requires { lat.name(e); }) return lat.name(e);
    return std::to_string(e);
  } else {
    return e.str();
  }
}

template <Carrier L>
std::string show_tuple(const L& lat, std::span<const typename L::Element> xs) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ", ";
    os << show_elem(lat, xs[i]);
  }
  os << ']';
  return os.str();
}

}  // namespace detail

/// Checks the semilattice laws, absorption, distributivity and (when a bottom
/// is present) the bottom law. Exhaustive over finite carriers, sampled
/// otherwise; exhaustive on a non-enumerable carrier is refused.
template <Carrier L>
LawReport verify_lattice_laws(const L& lat, const Strategy& strategy) {
  using E = typename L::Element;
  LawReport report;

  std::vector<std::array<E, 3>> triples;
  if (strategy.exhaustive) {
    if constexpr (FiniteCarrier<L>) {
      const int n = lat.size();
      triples.reserve(static_cast<std::size_t>(n) * n * n);
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          for (int c = 0; c < n; ++c) {
            triples.push_back({lat.element(a), lat.element(b), lat.element(c)});
          }
        }
      }
    } else {
      throw UnsupportedError("verify_lattice_laws: exhaustive strategy requires a finite carrier");
    }
  } else {
    Rng rng(strategy.seed);
    if constexpr (requires(Rng& r) { lat.sample(r); }) {
      for (long t = 0; t < strategy.trials; ++t) {
        triples.push_back({lat.sample(rng), lat.sample(rng), lat.sample(rng)});
      }
    } else {
      throw UnsupportedError("verify_lattice_laws: carrier does not support sampling");
    }
  }

  auto run = [&](const std::string& law, auto&& pred) {
    LawReport::Entry entry{law, true, ""};
    for (const auto& t : triples) {
      if (!pred(t[0], t[1], t[2])) {
        entry.pass = false;
        entry.witness = detail::show_tuple(lat, std::span<const E>(t.data(), t.size()));
        break;
      }
    }
    report.all_pass = report.all_pass && entry.pass;
    report.entries.push_back(std::move(entry));
  };

  run("commutativity", [&](const E& a, const E& b, const E&) {
    return lat.equal(lat.meet(a, b), lat.meet(b, a)) && lat.equal(lat.join(a, b), lat.join(b, a));
  });
  run("associativity", [&](const E& a, const E& b, const E& c) {
    return lat.equal(lat.meet(lat.meet(a, b), c), lat.meet(a, lat.meet(b, c))) &&
           lat.equal(lat.join(lat.join(a, b), c), lat.join(a, lat.join(b, c)));
  });
  run("idempotence", [&](const E& a, const E&, const E&) {
    return lat.equal(lat.meet(a, a), a) && lat.equal(lat.join(a, a), a);
  });
  run("absorption", [&](const E& a, const E& b, const E&) {
    return lat.equal(lat.meet(a, lat.join(a, b)), a) && lat.equal(lat.join(a, lat.meet(a, b)), a);
  });
  run("distributivity", [&](const E& a, const E& b, const E& c) {
    return lat.equal(lat.meet(a, lat.join(b, c)), lat.join(lat.meet(a, b), lat.meet(a, c)));
  });
  if constexpr (requires { lat.bottom(); }) {
    if (lat.bottom().has_value()) {
      run("bottom", [&](const E& a, const E&, const E&) {
        return lat.equal(lat.meet(*lat.bottom(), a), *lat.bottom());
      });
    }
  }
  return report;
}

}  // namespace latmed
