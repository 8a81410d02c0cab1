#include "latticemed/posets.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace latmed {

namespace {

constexpr int kMaxPosetSize = 6;

std::uint64_t min_key_over_relabelings(int p, const std::vector<std::uint8_t>& rows) {
  std::vector<int> perm(static_cast<std::size_t>(p));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t(0);
  do {
    std::uint64_t key = 0;
    for (int i = 0; i < p; ++i) {
      for (int j = 0; j < p; ++j) {
        if (i != j && ((rows[static_cast<std::size_t>(i)] >> j) & 1u)) {
          key |= std::uint64_t(1) << (perm[static_cast<std::size_t>(i)] * p + perm[static_cast<std::size_t>(j)]);
        }
      }
    }
    best = std::min(best, key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<std::uint8_t> rows_from_key(int p, std::uint64_t key) {
  std::vector<std::uint8_t> rows(static_cast<std::size_t>(p), 0);
  for (int i = 0; i < p; ++i) {
    rows[static_cast<std::size_t>(i)] |= std::uint8_t(1u << i);
    for (int j = 0; j < p; ++j) {
      if (i != j && ((key >> (i * p + j)) & 1u)) rows[static_cast<std::size_t>(i)] |= std::uint8_t(1u << j);
    }
  }
  return rows;
}

}  // namespace

FinitePoset::FinitePoset(int size, std::vector<std::uint8_t> leq_rows)
    : size_(size), rows_(std::move(leq_rows)) {
  if (size_ < 0 || size_ > kMaxPosetSize) throw UnsupportedError("FinitePoset: size must be in [0,6]");
  if (rows_.size() != static_cast<std::size_t>(size_)) {
    throw std::invalid_argument("FinitePoset: row count mismatch");
  }
  for (int i = 0; i < size_; ++i) {
    if (!leq(i, i)) throw std::invalid_argument("FinitePoset: relation not reflexive");
    if (rows_[static_cast<std::size_t>(i)] >> size_) {
      throw std::invalid_argument("FinitePoset: row has bits beyond carrier");
    }
    for (int j = 0; j < size_; ++j) {
      if (i != j && leq(i, j) && leq(j, i)) {
        throw std::invalid_argument("FinitePoset: relation not antisymmetric");
      }
      if (leq(i, j)) {
        // transitivity: everything above j is above i
        const std::uint8_t above_j = rows_[static_cast<std::size_t>(j)];
        if ((above_j & rows_[static_cast<std::size_t>(i)]) != above_j) {
          throw std::invalid_argument("FinitePoset: relation not transitive");
        }
      }
    }
  }
}

std::uint64_t FinitePoset::canonical_key() const {
  if (size_ == 0) return 0;
  return min_key_over_relabelings(size_, rows_);
}

std::vector<std::pair<int, int>> FinitePoset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size_; ++i) {
    for (int j = 0; j < size_; ++j) {
      if (i == j || !leq(i, j)) continue;
      bool is_cover = true;
      for (int z = 0; z < size_ && is_cover; ++z) {
        if (z != i && z != j && leq(i, z) && leq(z, j)) is_cover = false;
      }
      if (is_cover) out.emplace_back(i, j);
    }
  }
  return out;
}

FinitePoset FinitePoset::from_covers(int size, const std::vector<std::pair<int, int>>& covers) {
  if (size < 0 || size > kMaxPosetSize) throw UnsupportedError("FinitePoset: size must be in [0,6]");
  std::vector<std::uint8_t> rows(static_cast<std::size_t>(size), 0);
  for (int i = 0; i < size; ++i) rows[static_cast<std::size_t>(i)] = std::uint8_t(1u << i);
  for (const auto& [a, b] : covers) {
    if (a < 0 || a >= size || b < 0 || b >= size) {
      throw std::invalid_argument("FinitePoset::from_covers: vertex out of range");
    }
    rows[static_cast<std::size_t>(a)] |= std::uint8_t(1u << b);
  }
  // Transitive closure (Warshall on bit rows).
  for (int k = 0; k < size; ++k) {
    for (int i = 0; i < size; ++i) {
      if ((rows[static_cast<std::size_t>(i)] >> k) & 1u) rows[static_cast<std::size_t>(i)] |= rows[static_cast<std::size_t>(k)];
    }
  }
  return FinitePoset(size, std::move(rows));
}

std::vector<FinitePoset> enumerate_posets(int p) {
  if (p < 0 || p > kMaxPosetSize) {
    throw UnsupportedError("enumerate_posets: p must be in [0,6]");
  }
  if (p == 0) return {FinitePoset(0, {})};

  // Every poset admits a linear extension, so strict upper-triangular
  // transitively closed relations cover all isomorphism classes.
  const int pairs = p * (p - 1) / 2;
  std::vector<std::pair<int, int>> pair_at;
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) pair_at.emplace_back(i, j);
  }

  std::set<std::uint64_t> seen;
  for (std::uint32_t bits = 0; bits < (1u << pairs); ++bits) {
    std::vector<std::uint8_t> rows(static_cast<std::size_t>(p), 0);
    for (int i = 0; i < p; ++i) rows[static_cast<std::size_t>(i)] = std::uint8_t(1u << i);
    for (int q = 0; q < pairs; ++q) {
      if ((bits >> q) & 1u) {
        rows[static_cast<std::size_t>(pair_at[static_cast<std::size_t>(q)].first)] |=
            std::uint8_t(1u << pair_at[static_cast<std::size_t>(q)].second);
      }
    }
    bool transitive = true;
    for (int i = 0; i < p && transitive; ++i) {
      for (int j = i + 1; j < p && transitive; ++j) {
        if ((rows[static_cast<std::size_t>(i)] >> j) & 1u) {
          const std::uint8_t above_j = rows[static_cast<std::size_t>(j)];
          if ((above_j & rows[static_cast<std::size_t>(i)]) != above_j) transitive = false;
        }
      }
    }
    if (!transitive) continue;
    seen.insert(min_key_over_relabelings(p, rows));
  }

  std::vector<FinitePoset> out;
  out.reserve(seen.size());
  for (const std::uint64_t key : seen) out.emplace_back(p, rows_from_key(p, key));
  return out;
}

DownsetLattice downset_lattice(const FinitePoset& poset) {
  const int p = poset.size();
  // down(x) = everything below x; S is a downset iff it contains down(x)
  // for each of its members.
  std::vector<std::uint32_t> down(static_cast<std::size_t>(p), 0);
  for (int x = 0; x < p; ++x) {
    for (int y = 0; y < p; ++y) {
      if (poset.leq(y, x)) down[static_cast<std::size_t>(x)] |= 1u << y;
    }
  }
  std::vector<std::uint32_t> sets;
  for (std::uint32_t s = 0; s < (1u << p); ++s) {
    bool ok = true;
    for (int x = 0; x < p && ok; ++x) {
      if ((s >> x) & 1u) ok = (down[static_cast<std::size_t>(x)] & s) == down[static_cast<std::size_t>(x)];
    }
    if (ok) sets.push_back(s);
  }
  std::sort(sets.begin(), sets.end());

  const int n = static_cast<int>(sets.size());
  std::vector<int> index(std::size_t(1) << p, -1);
  for (int i = 0; i < n; ++i) index[sets[static_cast<std::size_t>(i)]] = i;

  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (const std::uint32_t s : sets) {
    std::string name = "{";
    for (int x = 0; x < p; ++x) {
      if ((s >> x) & 1u) {
        if (name.size() > 1) name += ',';
        name += std::to_string(x);
      }
    }
    name += '}';
    names.push_back(std::move(name));
  }

  std::vector<int> meet_table(static_cast<std::size_t>(n) * n);
  std::vector<int> join_table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      meet_table[static_cast<std::size_t>(a) * n + b] = index[sets[static_cast<std::size_t>(a)] & sets[static_cast<std::size_t>(b)]];
      join_table[static_cast<std::size_t>(a) * n + b] = index[sets[static_cast<std::size_t>(a)] | sets[static_cast<std::size_t>(b)]];
    }
  }
  FiniteLattice lat(std::move(names), std::move(meet_table), std::move(join_table), 0, n - 1);
  return DownsetLattice{std::move(sets), std::move(lat)};
}

}  // namespace latmed
