#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "latticemed/lattice.hpp"

namespace latmed {

/// Partial order on up to 6 points, stored as reflexive reachability rows
/// (`rows[i]` bit j set iff i <= j). Construction validates the axioms.
class FinitePoset {
 public:
  FinitePoset(int size, std::vector<std::uint8_t> leq_rows);

  int size() const { return size_; }
  bool leq(int a, int b) const {
    return (rows_[static_cast<std::size_t>(a)] >> b) & 1u;
  }
  const std::vector<std::uint8_t>& rows() const { return rows_; }

  /// Strict relation packed into p*p bits; relabeling-minimal over all
  /// permutations. Two posets are isomorphic iff keys match.
  std::uint64_t canonical_key() const;

  /// Cover pairs (i, j) with i < j and nothing strictly between.
  std::vector<std::pair<int, int>> covers() const;

  static FinitePoset from_covers(int size, const std::vector<std::pair<int, int>>& covers);

 private:
  int size_;
  std::vector<std::uint8_t> rows_;
};

/// One representative per isomorphism class, deterministically ordered by
/// canonical key. Capped at 6 points (720 permutations per candidate).
std::vector<FinitePoset> enumerate_posets(int p);

/// A poset's lattice of downsets: meet is intersection, join is union,
/// bottom the empty set, top the whole carrier. Every finite distributive
/// lattice arises this way.
struct DownsetLattice {
  std::vector<std::uint32_t> downsets;  // bitmask per lattice element, ascending
  FiniteLattice lattice;
};

DownsetLattice downset_lattice(const FinitePoset& poset);

}  // namespace latmed
