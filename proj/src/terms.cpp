#include "latticemed/terms.hpp"

#include "latticemed/orderization.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace latmed {

LatticeTerm LatticeTerm::variable(int index) {
  if (index < 0) throw std::invalid_argument("LatticeTerm: negative variable index");
  LatticeTerm t;
  t.kind = Kind::Var;
  t.var = index;
  return t;
}

LatticeTerm LatticeTerm::meet_of(std::vector<LatticeTerm> children) {
  if (children.empty()) throw std::invalid_argument("LatticeTerm: empty meet");
  if (children.size() == 1) return std::move(children.front());
  LatticeTerm t;
  t.kind = Kind::Meet;
  t.children = std::move(children);
  return t;
}

LatticeTerm LatticeTerm::join_of(std::vector<LatticeTerm> children) {
  if (children.empty()) throw std::invalid_argument("LatticeTerm: empty join");
  if (children.size() == 1) return std::move(children.front());
  LatticeTerm t;
  t.kind = Kind::Join;
  t.children = std::move(children);
  return t;
}

LatticeTerm median_term(LatticeTerm a, LatticeTerm b, LatticeTerm c) {
  std::vector<LatticeTerm> args;
  args.push_back(std::move(a));
  args.push_back(std::move(b));
  args.push_back(std::move(c));
  return mk_term(std::move(args), 2);
}

namespace {

LatticeTerm mk_form(std::vector<LatticeTerm> args, int subset_size, bool meets_inside) {
  const int n = static_cast<int>(args.size());
  std::vector<LatticeTerm> outer;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != subset_size) continue;
    std::vector<LatticeTerm> inner;
    for (int i = 0; i < n; ++i) {
      if ((mask >> i) & 1u) inner.push_back(args[static_cast<std::size_t>(i)]);
    }
    outer.push_back(meets_inside ? LatticeTerm::meet_of(std::move(inner))
                                 : LatticeTerm::join_of(std::move(inner)));
  }
  return meets_inside ? LatticeTerm::join_of(std::move(outer))
                      : LatticeTerm::meet_of(std::move(outer));
}

void check_mk_args(int n, int k) {
  if (n < 1) throw std::invalid_argument("mk_term: empty argument list");
  if (n > kMaxCombinatorialArity) throw UnsupportedError("mk_term: arity above combinatorial cap");
  if (k < 1 || k > n) {
    throw std::invalid_argument("mk_term: k=" + std::to_string(k) + " out of range [1," +
                                std::to_string(n) + "]");
  }
}

}  // namespace

LatticeTerm mk_term(std::vector<LatticeTerm> args, int k) {
  check_mk_args(static_cast<int>(args.size()), k);
  const int n = static_cast<int>(args.size());
  return mk_form(std::move(args), n + 1 - k, true);
}

LatticeTerm mk_term_dual(std::vector<LatticeTerm> args, int k) {
  check_mk_args(static_cast<int>(args.size()), k);
  return mk_form(std::move(args), k, false);
}

namespace {

// Keep only inclusion-minimal clauses, dedupe, order by (size, value).
std::vector<std::uint32_t> prune(std::vector<std::uint32_t> clauses) {
  std::sort(clauses.begin(), clauses.end(), [](std::uint32_t a, std::uint32_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<std::uint32_t> keep;
  for (const std::uint32_t c : clauses) {
    bool minimal = true;
    for (const std::uint32_t k : keep) {
      if ((k & c) == k) {  // k subset of c
        minimal = false;
        break;
      }
    }
    if (minimal) keep.push_back(c);
  }
  return keep;
}

std::vector<std::uint32_t> nf_clauses(const LatticeTerm& t, int vars) {
  switch (t.kind) {
    case LatticeTerm::Kind::Var:
      if (t.var < 0 || t.var >= vars) {
        throw std::invalid_argument("term_normal_form: variable #" + std::to_string(t.var) +
                                    " outside [0," + std::to_string(vars) + ")");
      }
      return {1u << t.var};
    case LatticeTerm::Kind::Join: {
      std::vector<std::uint32_t> acc;
      for (const auto& ch : t.children) {
        auto sub = nf_clauses(ch, vars);
        acc.insert(acc.end(), sub.begin(), sub.end());
      }
      return prune(std::move(acc));
    }
    case LatticeTerm::Kind::Meet: {
      std::vector<std::uint32_t> acc = {0};
      for (const auto& ch : t.children) {
        const auto sub = nf_clauses(ch, vars);
        std::vector<std::uint32_t> next;
        next.reserve(acc.size() * sub.size());
        for (const std::uint32_t a : acc) {
          for (const std::uint32_t b : sub) next.push_back(a | b);
        }
        acc = prune(std::move(next));
      }
      return acc;
    }
  }
  throw std::logic_error("term_normal_form: corrupt term");
}

}  // namespace

MonotoneNormalForm term_normal_form(const LatticeTerm& t, int vars) {
  if (vars < 1 || vars > 31) throw std::invalid_argument("term_normal_form: bad variable count");
  return MonotoneNormalForm{vars, nf_clauses(t, vars)};
}

MonotoneNormalForm nf_meet(const MonotoneNormalForm& a, const MonotoneNormalForm& b) {
  if (a.vars != b.vars) throw std::invalid_argument("nf_meet: variable counts differ");
  std::vector<std::uint32_t> cross;
  cross.reserve(a.clauses.size() * b.clauses.size());
  for (const std::uint32_t x : a.clauses) {
    for (const std::uint32_t y : b.clauses) cross.push_back(x | y);
  }
  return MonotoneNormalForm{a.vars, prune(std::move(cross))};
}

MonotoneNormalForm nf_join(const MonotoneNormalForm& a, const MonotoneNormalForm& b) {
  if (a.vars != b.vars) throw std::invalid_argument("nf_join: variable counts differ");
  std::vector<std::uint32_t> all = a.clauses;
  all.insert(all.end(), b.clauses.begin(), b.clauses.end());
  return MonotoneNormalForm{a.vars, prune(std::move(all))};
}

bool nf_eval(const MonotoneNormalForm& nf, std::uint32_t assignment) {
  for (const std::uint32_t c : nf.clauses) {
    if ((c & assignment) == c) return true;
  }
  return false;
}

std::string MonotoneNormalForm::str() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    if (i) os << ", ";
    os << '{';
    bool first = true;
    for (int v = 0; v < vars; ++v) {
      if ((clauses[i] >> v) & 1u) {
        if (!first) os << ',';
        os << 'x' << v;
        first = false;
      }
    }
    os << '}';
  }
  os << '}';
  return os.str();
}

long free_dl_count(int v) {
  if (v < 1 || v > 4) throw UnsupportedError("free_dl_count: v must be in [1,4]");
  const int points = 1 << v;
  long count = 0;
  // Truth tables as bitmasks over the 2^v assignments.
  for (std::uint64_t table = 0; table < (std::uint64_t(1) << points); ++table) {
    if (table == 0 || table == (std::uint64_t(1) << points) - 1) continue;  // constants
    bool monotone = true;
    for (int x = 0; x < points && monotone; ++x) {
      if (!((table >> x) & 1u)) continue;
      for (int b = 0; b < v && monotone; ++b) {
        const int y = x | (1 << b);
        if (y != x && !((table >> y) & 1u)) monotone = false;
      }
    }
    if (monotone) ++count;
  }
  return count;
}

SymbolicMkReport verify_mk_symbolic(int n) {
  if (n < 2 || n > 4) throw std::invalid_argument("verify_mk_symbolic: n must be in [2,4]");
  SymbolicMkReport report;
  report.n = n;

  auto add = [&](std::string id, bool pass) {
    report.all_pass = report.all_pass && pass;
    report.identities.push_back({std::move(id), pass});
  };

  std::vector<LatticeTerm> vars;
  for (int i = 0; i < n; ++i) vars.push_back(LatticeTerm::variable(i));

  std::vector<MonotoneNormalForm> nf_k;
  for (int k = 1; k <= n; ++k) {
    nf_k.push_back(term_normal_form(mk_term(vars, k), n));
  }

  // (a) invariance under every permutation of the variables
  for (int k = 1; k <= n; ++k) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    bool pass = true;
    do {
      std::vector<LatticeTerm> permuted;
      for (int i = 0; i < n; ++i) permuted.push_back(vars[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]);
      if (!(term_normal_form(mk_term(permuted, k), n) == nf_k[static_cast<std::size_t>(k) - 1])) {
        pass = false;
        break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    add("m" + std::to_string(k) + "-symmetric", pass);
  }

  // (b) primal join-of-meets equals dual meet-of-joins
  for (int k = 1; k <= n; ++k) {
    const auto dual = term_normal_form(mk_term_dual(vars, k), n);
    add("m" + std::to_string(k) + "-primal-eq-dual", dual == nf_k[static_cast<std::size_t>(k) - 1]);
  }

  // (c) the chain: nf(m_k) wedge nf(m_{k+1}) = nf(m_k)
  for (int k = 1; k < n; ++k) {
    const auto meet = nf_meet(nf_k[static_cast<std::size_t>(k) - 1], nf_k[static_cast<std::size_t>(k)]);
    add("m" + std::to_string(k) + "-below-m" + std::to_string(k + 1),
        meet == nf_k[static_cast<std::size_t>(k) - 1]);
  }

  return report;
}

}  // namespace latmed
