#include "latticemed/multilinear.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "latticemed/errors.hpp"
#include "latticemed/funcal.hpp"

namespace latmed {

namespace {

constexpr int kMaxOrder = 4;
constexpr int kMaxDim = 6;
constexpr int kMaxCodim = 3;

std::size_t ipow(int base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= static_cast<std::size_t>(base);
  return r;
}

}  // namespace

MultilinearMap::MultilinearMap(int order, int dim, int codim)
    : order_(order), dim_(dim), codim_(codim) {
  if (order < 1 || order > kMaxOrder) throw std::invalid_argument("MultilinearMap: order must be in [1,4]");
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("MultilinearMap: dim must be in [1,6]");
  if (codim < 1 || codim > kMaxCodim) throw std::invalid_argument("MultilinearMap: codim must be in [1,3]");
  entries_.assign(ipow(dim, order), RatVec::zero(codim));
}

std::size_t MultilinearMap::flatten(std::span<const int> index) const {
  if (static_cast<int>(index.size()) != order_) {
    throw std::invalid_argument("MultilinearMap: index arity mismatch");
  }
  std::size_t flat = 0;
  for (const int i : index) {
    if (i < 0 || i >= dim_) throw std::invalid_argument("MultilinearMap: index out of range");
    flat = flat * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
  }
  return flat;
}

void MultilinearMap::index_of(std::size_t flat, std::span<int> out) const {
  for (int s = order_ - 1; s >= 0; --s) {
    out[static_cast<std::size_t>(s)] = static_cast<int>(flat % static_cast<std::size_t>(dim_));
    flat /= static_cast<std::size_t>(dim_);
  }
}

const RatVec& MultilinearMap::entry(std::span<const int> index) const {
  return entries_[flatten(index)];
}

void MultilinearMap::set_entry(std::span<const int> index, RatVec value) {
  if (value.dim() != codim_) throw std::invalid_argument("MultilinearMap: codomain dimension mismatch");
  entries_[flatten(index)] = std::move(value);
}

RatVec MultilinearMap::eval(std::span<const RatVec> args) const {
  if (static_cast<int>(args.size()) != order_) {
    throw std::invalid_argument("MultilinearMap::eval: arity mismatch");
  }
  for (const auto& a : args) {
    if (a.dim() != dim_) throw std::invalid_argument("MultilinearMap::eval: dimension mismatch");
  }
  RatVec acc = RatVec::zero(codim_);
  std::vector<int> idx(static_cast<std::size_t>(order_));
  for (std::size_t flat = 0; flat < entries_.size(); ++flat) {
    const RatVec& e = entries_[flat];
    bool zero = true;
    for (int c = 0; c < codim_ && zero; ++c) zero = e[c].is_zero();
    if (zero) continue;
    index_of(flat, idx);
    Rational coeff(1);
    for (int s = 0; s < order_; ++s) coeff *= args[static_cast<std::size_t>(s)][idx[static_cast<std::size_t>(s)]];
    if (coeff.is_zero()) continue;
    acc = acc + coeff * e;
  }
  return acc;
}

std::vector<double> MultilinearMap::eval_real(std::span<const RealVec> args) const {
  if (static_cast<int>(args.size()) != order_) {
    throw std::invalid_argument("MultilinearMap::eval_real: arity mismatch");
  }
  std::vector<double> acc(static_cast<std::size_t>(codim_), 0.0);
  std::vector<int> idx(static_cast<std::size_t>(order_));
  for (std::size_t flat = 0; flat < entries_.size(); ++flat) {
    const RatVec& e = entries_[flat];
    index_of(flat, idx);
    double coeff = 1.0;
    for (int s = 0; s < order_; ++s) coeff *= args[static_cast<std::size_t>(s)][idx[static_cast<std::size_t>(s)]];
    for (int c = 0; c < codim_; ++c) acc[static_cast<std::size_t>(c)] += coeff * e[c].to_double();
  }
  return acc;
}

MultilinearMap MultilinearMap::symmetrized() const {
  MultilinearMap out(order_, dim_, codim_);
  std::vector<int> perm(static_cast<std::size_t>(order_));
  std::iota(perm.begin(), perm.end(), 0);
  long nperms = 1;
  for (int i = 2; i <= order_; ++i) nperms *= i;
  const Rational inv(1, nperms);

  std::vector<int> idx(static_cast<std::size_t>(order_));
  std::vector<int> pidx(static_cast<std::size_t>(order_));
  for (std::size_t flat = 0; flat < entries_.size(); ++flat) {
    index_of(flat, idx);
    RatVec sum = RatVec::zero(codim_);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (int s = 0; s < order_; ++s) pidx[static_cast<std::size_t>(s)] = idx[static_cast<std::size_t>(perm[static_cast<std::size_t>(s)])];
      sum = sum + entry(pidx);
    } while (std::next_permutation(perm.begin(), perm.end()));
    out.entries_[flat] = inv * sum;
  }
  return out;
}

bool MultilinearMap::is_symmetric() const {
  const MultilinearMap sym = symmetrized();
  return sym.entries_ == entries_;
}

bool MultilinearMap::is_diagonal() const {
  std::vector<int> idx(static_cast<std::size_t>(order_));
  for (std::size_t flat = 0; flat < entries_.size(); ++flat) {
    index_of(flat, idx);
    const bool constant = std::all_of(idx.begin(), idx.end(), [&](int i) { return i == idx[0]; });
    if (constant) continue;
    for (int c = 0; c < codim_; ++c) {
      if (!entries_[flat][c].is_zero()) return false;
    }
  }
  return true;
}

HomogeneousPolynomial HomogeneousPolynomial::diagonal(int degree, std::vector<RatVec> weights) {
  if (degree < 1 || degree > kMaxOrder) throw std::invalid_argument("HomogeneousPolynomial: degree must be in [1,4]");
  if (weights.empty()) throw std::invalid_argument("HomogeneousPolynomial: empty weight list");
  const int codim = weights[0].dim();
  for (const auto& w : weights) {
    if (w.dim() != codim) throw std::invalid_argument("HomogeneousPolynomial: ragged weights");
  }
  HomogeneousPolynomial p;
  p.diagonal_ = true;
  p.degree_ = degree;
  p.dim_ = static_cast<int>(weights.size());
  p.codim_ = codim;
  p.weights_ = std::move(weights);
  return p;
}

HomogeneousPolynomial HomogeneousPolynomial::from_map(MultilinearMap generator) {
  HomogeneousPolynomial p;
  p.diagonal_ = false;
  p.degree_ = generator.order();
  p.dim_ = generator.dim();
  p.codim_ = generator.codim();
  p.generator_.push_back(std::move(generator));
  return p;
}

const std::vector<RatVec>& HomogeneousPolynomial::weights() const {
  if (!diagonal_) throw std::logic_error("HomogeneousPolynomial: not in diagonal form");
  return weights_;
}

const MultilinearMap& HomogeneousPolynomial::generator() const {
  if (diagonal_) throw std::logic_error("HomogeneousPolynomial: diagonal form has no generator");
  return generator_.front();
}

RatVec HomogeneousPolynomial::eval(const RatVec& f) const {
  if (f.dim() != dim_) throw std::invalid_argument("HomogeneousPolynomial::eval: dimension mismatch");
  if (diagonal_) {
    RatVec acc = RatVec::zero(codim_);
    for (int a = 0; a < dim_; ++a) acc = acc + f[a].pow(degree_) * weights_[static_cast<std::size_t>(a)];
    return acc;
  }
  std::vector<RatVec> args(static_cast<std::size_t>(degree_), f);
  return generator_.front().eval(args);
}

std::vector<double> HomogeneousPolynomial::eval_real(const RealVec& f) const {
  if (f.dim() != dim_) throw std::invalid_argument("HomogeneousPolynomial::eval_real: dimension mismatch");
  if (diagonal_) {
    std::vector<double> acc(static_cast<std::size_t>(codim_), 0.0);
    for (int a = 0; a < dim_; ++a) {
      const double p = std::pow(f[a], degree_);
      for (int c = 0; c < codim_; ++c) acc[static_cast<std::size_t>(c)] += p * weights_[static_cast<std::size_t>(a)][c].to_double();
    }
    return acc;
  }
  std::vector<RealVec> args(static_cast<std::size_t>(degree_), f);
  return generator_.front().eval_real(args);
}

PowerSumPolynomial::PowerSumPolynomial(int vars, HomogeneousPolynomial generating)
    : vars_(vars), gen_(std::move(generating)) {
  if (vars < 1) throw std::invalid_argument("PowerSumPolynomial: need at least one variable");
}

RatVec PowerSumPolynomial::eval(std::span<const RatVec> us) const {
  if (static_cast<int>(us.size()) != vars_) {
    throw std::invalid_argument("PowerSumPolynomial::eval: arity mismatch");
  }
  RatVec acc = RatVec::zero(gen_.codim());
  for (const auto& u : us) acc = acc + gen_.eval(u);
  return acc;
}

namespace {

bool is_zero_vec(const RatVec& v) {
  for (int c = 0; c < v.dim(); ++c) {
    if (!v[c].is_zero()) return false;
  }
  return true;
}

RatVec random_int_vec(Rng& rng, int dim, int lo, int hi) {
  std::vector<Rational> coords;
  coords.reserve(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) coords.emplace_back(next_int(rng, lo, hi));
  return RatVec(std::move(coords));
}

// Random pair with disjoint supports: each coordinate goes to f, to g, or to
// neither.
std::pair<RatVec, RatVec> random_disjoint_pair(Rng& rng, int dim, int lo, int hi) {
  std::vector<Rational> f(static_cast<std::size_t>(dim), Rational(0));
  std::vector<Rational> g(static_cast<std::size_t>(dim), Rational(0));
  for (int c = 0; c < dim; ++c) {
    switch (next_int(rng, 0, 2)) {
      case 0:
        f[static_cast<std::size_t>(c)] = Rational(next_int(rng, lo, hi));
        break;
      case 1:
        g[static_cast<std::size_t>(c)] = Rational(next_int(rng, lo, hi));
        break;
      default:
        break;
    }
  }
  return {RatVec(std::move(f)), RatVec(std::move(g))};
}

// Enumerates disjoint pairs over the integer box; per coordinate the state
// is "belongs to f with value v", "belongs to g with value v", or "zero".
template <typename Fn>
bool for_each_disjoint_pair(int dim, int lo, int hi, Fn&& visit) {
  std::vector<Rational> f(static_cast<std::size_t>(dim), Rational(0));
  std::vector<Rational> g(static_cast<std::size_t>(dim), Rational(0));
  const int values = hi - lo + 1;
  const long states = 1 + 2L * (values - (lo <= 0 && 0 <= hi ? 1 : 0));
  std::vector<long> state(static_cast<std::size_t>(dim), 0);

  std::vector<long> nonzero;
  for (int v = lo; v <= hi; ++v) {
    if (v != 0) nonzero.push_back(v);
  }

  for (;;) {
    for (int c = 0; c < dim; ++c) {
      const long s = state[static_cast<std::size_t>(c)];
      if (s == 0) {
        f[static_cast<std::size_t>(c)] = Rational(0);
        g[static_cast<std::size_t>(c)] = Rational(0);
      } else if (s <= static_cast<long>(nonzero.size())) {
        f[static_cast<std::size_t>(c)] = Rational(nonzero[static_cast<std::size_t>(s - 1)]);
        g[static_cast<std::size_t>(c)] = Rational(0);
      } else {
        f[static_cast<std::size_t>(c)] = Rational(0);
        g[static_cast<std::size_t>(c)] = Rational(nonzero[static_cast<std::size_t>(s - 1 - nonzero.size())]);
      }
    }
    if (!visit(RatVec(f), RatVec(g))) return false;

    int c = 0;
    while (c < dim) {
      if (++state[static_cast<std::size_t>(c)] < states) break;
      state[static_cast<std::size_t>(c)] = 0;
      ++c;
    }
    if (c == dim) return true;
  }
}

}  // namespace

Decision is_orthosymmetric(const MultilinearMap& T, const DeciderMode& mode) {
  Decision d;
  if (mode.exact) {
    // Diagonality decides; the equivalence is brute-force checked in the
    // test suite before anything relies on it.
    d.holds = T.is_diagonal();
    d.checked = static_cast<long>(T.entry_count());
    if (!d.holds) {
      std::vector<int> idx(static_cast<std::size_t>(T.order()));
      for (std::size_t flat = 0; flat < T.entry_count(); ++flat) {
        T.index_of(flat, idx);
        const bool constant = std::all_of(idx.begin(), idx.end(), [&](int i) { return i == idx[0]; });
        if (constant || is_zero_vec(T.entry_flat(flat))) continue;
        // Basis tuple e_{i1}, ..., e_{in}: slots with distinct indices are
        // disjoint, yet T returns the entry.
        std::vector<RatVec> witness;
        for (int s = 0; s < T.order(); ++s) {
          RatVec e = RatVec::zero(T.dim());
          e[idx[static_cast<std::size_t>(s)]] = Rational(1);
          witness.push_back(std::move(e));
        }
        d.witness = std::move(witness);
        d.detail = "nonzero off-diagonal entry";
        break;
      }
    }
    return d;
  }

  Rng rng(mode.seed);
  for (long t = 0; t < mode.trials; ++t) {
    std::vector<RatVec> args;
    args.reserve(static_cast<std::size_t>(T.order()));
    auto [f, g] = random_disjoint_pair(rng, T.dim(), -mode.bound, mode.bound);
    args.push_back(std::move(f));
    args.push_back(std::move(g));
    for (int s = 2; s < T.order(); ++s) {
      args.push_back(random_int_vec(rng, T.dim(), -mode.bound, mode.bound));
    }
    // Shuffle the disjoint pair into random slots.
    for (std::size_t i = args.size(); i > 1; --i) {
      std::swap(args[i - 1], args[static_cast<std::size_t>(next_int(rng, 0, static_cast<long long>(i) - 1))]);
    }
    ++d.checked;
    if (!is_zero_vec(T.eval(args))) {
      d.holds = false;
      d.witness = std::move(args);
      d.detail = "nonzero value on disjoint pair";
      return d;
    }
  }
  return d;
}

Decision is_orthogonally_additive(const HomogeneousPolynomial& P, bool positive_only,
                                  const DeciderMode& mode) {
  Decision d;
  auto check_pair = [&](const RatVec& f, const RatVec& g) {
    ++d.checked;
    const RatVec lhs = P.eval(f + g);
    const RatVec rhs = P.eval(f) + P.eval(g);
    if (!(lhs == rhs)) {
      d.holds = false;
      d.witness = {f, g};
      d.detail = "P(f+g)=" + lhs.str() + " vs P(f)+P(g)=" + rhs.str();
      return false;
    }
    return true;
  };

  if (mode.exact) {
    if (P.dim() > 4) throw UnsupportedError("is_orthogonally_additive: exact mode capped at dim 4");
    const int lo = positive_only ? 0 : -mode.bound;
    for_each_disjoint_pair(P.dim(), lo, mode.bound, check_pair);
    return d;
  }

  Rng rng(mode.seed);
  for (long t = 0; t < mode.trials && d.holds; ++t) {
    auto [f, g] = random_disjoint_pair(rng, P.dim(), positive_only ? 0 : -mode.bound, mode.bound);
    check_pair(f, g);
  }
  return d;
}

Decision is_orthogonally_steady(const PowerSumPolynomial& S, const DeciderMode& mode) {
  const int r = S.vars();
  if (r < 2) throw std::invalid_argument("is_orthogonally_steady: needs at least two variables");
  const int dim = S.generating().dim();

  Decision d;
  auto check = [&](std::vector<RatVec> tuple, int i, int j) {
    ++d.checked;
    const RatVec lhs = S.eval(tuple);
    std::vector<RatVec> merged = tuple;
    merged[static_cast<std::size_t>(j)] = tuple[static_cast<std::size_t>(i)] + tuple[static_cast<std::size_t>(j)];
    merged[static_cast<std::size_t>(i)] = RatVec::zero(dim);
    const RatVec rhs = S.eval(merged);
    if (!(lhs == rhs)) {
      d.holds = false;
      d.witness = std::move(tuple);
      d.detail = "S=" + lhs.str() + " vs merged=" + rhs.str() + " (slots " + std::to_string(i) +
                 "," + std::to_string(j) + ")";
      return false;
    }
    return true;
  };

  if (mode.exact) {
    if (dim > 4) throw UnsupportedError("is_orthogonally_steady: exact mode capped at dim 4");
    // Disjoint pair in the first two slots, remaining slots zero; by the sum
    // shape of S the other slots cancel identically either way.
    for_each_disjoint_pair(dim, -mode.bound, mode.bound, [&](const RatVec& f, const RatVec& g) {
      std::vector<RatVec> tuple(static_cast<std::size_t>(r), RatVec::zero(dim));
      tuple[0] = f;
      tuple[1] = g;
      return check(std::move(tuple), 0, 1);
    });
    return d;
  }

  Rng rng(mode.seed);
  for (long t = 0; t < mode.trials && d.holds; ++t) {
    std::vector<RatVec> tuple;
    tuple.reserve(static_cast<std::size_t>(r));
    for (int s = 0; s < r; ++s) tuple.push_back(random_int_vec(rng, dim, -mode.bound, mode.bound));
    const int i = static_cast<int>(next_int(rng, 0, r - 1));
    int j = static_cast<int>(next_int(rng, 0, r - 2));
    if (j >= i) ++j;
    auto [f, g] = random_disjoint_pair(rng, dim, -mode.bound, mode.bound);
    tuple[static_cast<std::size_t>(i)] = std::move(f);
    tuple[static_cast<std::size_t>(j)] = std::move(g);
    check(std::move(tuple), i, j);
  }
  return d;
}

Decision joint_orthosymmetry_check(const MultilinearMap& T, bool positive_only,
                                   const DeciderMode& mode) {
  const int n = T.order();
  const int m = T.dim();
  Decision d;

  auto check_tuple = [&](std::vector<RatVec> args) {
    ++d.checked;
    if (!is_zero_vec(T.eval(args))) {
      d.holds = false;
      d.witness = std::move(args);
      d.detail = "nonzero value on jointly disjoint tuple";
      return false;
    }
    return true;
  };

  if (mode.exact) {
    // Per coordinate, assign every slot a value in [-1,1] (or [0,1] on the
    // cone) with at least one zero; the meet of the absolute values is then
    // zero everywhere.
    const int lo = positive_only ? 0 : -1;
    const int hi = 1;
    const int values = hi - lo + 1;
    long combos = 1;
    for (int s = 0; s < n; ++s) combos *= values;
    std::vector<long> column(static_cast<std::size_t>(m), 0);
    std::vector<RatVec> args(static_cast<std::size_t>(n), RatVec::zero(m));
    bool done = false;
    while (!done) {
      bool valid = true;
      for (int c = 0; c < m && valid; ++c) {
        long code = column[static_cast<std::size_t>(c)];
        bool has_zero = false;
        for (int s = 0; s < n; ++s) {
          const int v = lo + static_cast<int>(code % values);
          code /= values;
          args[static_cast<std::size_t>(s)][c] = Rational(v);
          if (v == 0) has_zero = true;
        }
        valid = has_zero;
      }
      if (valid && !check_tuple(args)) return d;

      int c = 0;
      while (c < m) {
        if (++column[static_cast<std::size_t>(c)] < combos) break;
        column[static_cast<std::size_t>(c)] = 0;
        ++c;
      }
      done = (c == m);
    }
    return d;
  }

  Rng rng(mode.seed);
  for (long t = 0; t < mode.trials && d.holds; ++t) {
    std::vector<RatVec> args;
    args.reserve(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
      args.push_back(random_int_vec(rng, m, positive_only ? 0 : -mode.bound, mode.bound));
    }
    // Zero one random slot per coordinate so the joint meet vanishes.
    for (int c = 0; c < m; ++c) {
      args[static_cast<std::size_t>(next_int(rng, 0, n - 1))][c] = Rational(0);
    }
    check_tuple(std::move(args));
  }
  return d;
}

bool check_root_power_identity(const HomogeneousPolynomial& P, std::span<const RealVec> fs,
                               double tol) {
  if (!P.is_diagonal_form()) {
    throw std::invalid_argument(
        "check_root_power_identity: requires a diagonal (orthogonally additive) polynomial");
  }
  if (fs.empty()) throw std::invalid_argument("check_root_power_identity: empty tuple");
  const int n = P.degree();
  const int m = P.dim();
  for (const auto& f : fs) {
    if (f.dim() != m) throw std::invalid_argument("check_root_power_identity: dimension mismatch");
  }

  // Pointwise root power sum of the tuple.
  std::vector<double> s(static_cast<std::size_t>(m), 0.0);
  for (const auto& f : fs) {
    for (int c = 0; c < m; ++c) s[static_cast<std::size_t>(c)] += std::pow(f[c], n);
  }
  std::vector<double> root;
  root.reserve(static_cast<std::size_t>(m));
  for (int c = 0; c < m; ++c) root.push_back(signed_root(s[static_cast<std::size_t>(c)], n));

  const std::vector<double> lhs = P.eval_real(RealVec(std::move(root)));
  std::vector<double> rhs(static_cast<std::size_t>(P.codim()), 0.0);
  for (const auto& f : fs) {
    const auto pf = P.eval_real(f);
    for (int c = 0; c < P.codim(); ++c) rhs[static_cast<std::size_t>(c)] += pf[static_cast<std::size_t>(c)];
  }
  for (int c = 0; c < P.codim(); ++c) {
    if (std::fabs(lhs[static_cast<std::size_t>(c)] - rhs[static_cast<std::size_t>(c)]) > tol) return false;
  }
  return true;
}

}  // namespace latmed
