#include "latticemed/lattice.hpp"

namespace latmed {

FiniteLattice::FiniteLattice(std::vector<std::string> names, std::vector<int> meet_table,
                             std::vector<int> join_table, std::optional<int> bottom,
                             std::optional<int> top)
    : names_(std::move(names)),
      meet_(std::move(meet_table)),
      join_(std::move(join_table)),
      bottom_(bottom),
      top_(top) {
  const std::size_t n = names_.size();
  if (n == 0) throw std::invalid_argument("FiniteLattice: empty carrier");
  if (n > kMaxSize) throw UnsupportedError("FiniteLattice: carrier larger than 64 elements");
  if (meet_.size() != n * n || join_.size() != n * n) {
    throw std::invalid_argument("FiniteLattice: table shape mismatch");
  }
  for (const int v : meet_) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) throw std::invalid_argument("FiniteLattice: meet table entry out of range");
  }
  for (const int v : join_) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) throw std::invalid_argument("FiniteLattice: join table entry out of range");
  }
  if ((bottom_ && (*bottom_ < 0 || static_cast<std::size_t>(*bottom_) >= n)) ||
      (top_ && (*top_ < 0 || static_cast<std::size_t>(*top_) >= n))) {
    throw std::invalid_argument("FiniteLattice: bottom/top index out of range");
  }

  // One exhaustive distributivity scan; non-distributive tables are accepted
  // but orderization refuses to run on them.
  const int sz = static_cast<int>(n);
  for (int a = 0; a < sz && !nondistrib_; ++a) {
    for (int b = 0; b < sz && !nondistrib_; ++b) {
      for (int c = 0; c < sz; ++c) {
        const int lhs = meet_[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(join_[static_cast<std::size_t>(b) * n + c])];
        const int mab = meet_[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)];
        const int mac = meet_[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(c)];
        const int rhs = join_[static_cast<std::size_t>(mab) * n + static_cast<std::size_t>(mac)];
        if (lhs != rhs) {
          nondistrib_ = std::array<int, 3>{a, b, c};
          break;
        }
      }
    }
  }
}

void FiniteLattice::require_distributive() const {
  if (nondistrib_) {
    const auto& w = *nondistrib_;
    throw DistributivityError("carrier is not distributive: witness triple (" + name(w[0]) + ", " +
                              name(w[1]) + ", " + name(w[2]) + ")");
  }
}

namespace {

FiniteLattice bounded_from_order(std::vector<std::string> names,
                                 const std::vector<std::vector<bool>>& le, int bottom, int top) {
  const int n = static_cast<int>(names.size());
  std::vector<int> meet_table(static_cast<std::size_t>(n) * n);
  std::vector<int> join_table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int m = bottom;
      int j = top;
      // Greatest lower / least upper bound by scan; fine at these sizes.
      for (int c = 0; c < n; ++c) {
        if (le[c][a] && le[c][b] && le[m][c]) m = c;
        if (le[a][c] && le[b][c] && le[c][j]) j = c;
      }
      meet_table[static_cast<std::size_t>(a) * n + b] = m;
      join_table[static_cast<std::size_t>(a) * n + b] = j;
    }
  }
  return FiniteLattice(std::move(names), std::move(meet_table), std::move(join_table), bottom, top);
}

}  // namespace

FiniteLattice FiniteLattice::m3() {
  // 0 = bottom, 1..3 = atoms, 4 = top.
  std::vector<std::vector<bool>> le(5, std::vector<bool>(5, false));
  for (int i = 0; i < 5; ++i) le[i][i] = true;
  for (int a : {1, 2, 3}) {
    le[0][a] = true;
    le[a][4] = true;
  }
  le[0][4] = true;
  return bounded_from_order({"bot", "a", "b", "c", "top"}, le, 0, 4);
}

FiniteLattice FiniteLattice::n5() {
  // 0 = bottom, chain 0 < b < c < top on one side, single atom a on the other.
  std::vector<std::vector<bool>> le(5, std::vector<bool>(5, false));
  for (int i = 0; i < 5; ++i) le[i][i] = true;
  const int bot = 0, a = 1, b = 2, c = 3, top = 4;
  le[bot][a] = le[bot][b] = le[bot][c] = le[bot][top] = true;
  le[a][top] = true;
  le[b][c] = le[b][top] = true;
  le[c][top] = true;
  return bounded_from_order({"bot", "a", "b", "c", "top"}, le, bot, top);
}

FiniteLattice FiniteLattice::chain(int n) {
  if (n < 1) throw std::invalid_argument("FiniteLattice::chain: need at least one element");
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  std::vector<int> meet_table(static_cast<std::size_t>(n) * n);
  std::vector<int> join_table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      meet_table[static_cast<std::size_t>(a) * n + b] = std::min(a, b);
      join_table[static_cast<std::size_t>(a) * n + b] = std::max(a, b);
    }
  }
  return FiniteLattice(std::move(names), std::move(meet_table), std::move(join_table), 0, n - 1);
}

}  // namespace latmed
