#pragma once

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "latticemed/rational.hpp"
#include "latticemed/util.hpp"

namespace latmed {

/// Coordinate tuple over scalar T (Rational for the exact identity suites,
/// double for the numeric ones). Lattice structure is pointwise min/max;
/// linear structure is coordinatewise.
template <typename T>
class CoordVec {
 public:
  CoordVec() = default;
  explicit CoordVec(std::vector<T> coords) : c_(std::move(coords)) {}
  CoordVec(std::initializer_list<T> coords) : c_(coords) {}

  static CoordVec zero(int dim) { return CoordVec(std::vector<T>(static_cast<std::size_t>(dim), T(0))); }

  int dim() const { return static_cast<int>(c_.size()); }
  const T& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  T& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<T>& coords() const { return c_; }

  friend bool operator==(const CoordVec& a, const CoordVec& b) = default;

  friend CoordVec operator+(const CoordVec& a, const CoordVec& b) {
    return zip(a, b, [](const T& x, const T& y) { return x + y; });
  }
  friend CoordVec operator-(const CoordVec& a, const CoordVec& b) {
    return zip(a, b, [](const T& x, const T& y) { return x - y; });
  }
  friend CoordVec operator*(const T& s, const CoordVec& a) {
    CoordVec r = a;
    for (auto& v : r.c_) v = s * v;
    return r;
  }

  template <typename F>
  static CoordVec zip_with(const CoordVec& a, const CoordVec& b, F&& f) {
    return zip(a, b, std::forward<F>(f));
  }

  CoordVec pos_part() const { return map([](const T& x) { return std::max(x, T(0)); }); }
  CoordVec neg_part() const { return map([](const T& x) { return std::max(-x, T(0)); }); }
  CoordVec abs() const {
    return map([](const T& x) { return x < T(0) ? -x : x; });
  }

  bool is_nonnegative() const {
    return std::all_of(c_.begin(), c_.end(), [](const T& x) { return !(x < T(0)); });
  }

  std::string str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) os << ", ";
      if constexpr (std::is_same_v<T, Rational>) {
        os << c_[i].str();
      } else {
        os << c_[i];
      }
    }
    os << ')';
    return os.str();
  }

 private:
  template <typename F>
  static CoordVec zip(const CoordVec& a, const CoordVec& b, F&& f) {
    if (a.dim() != b.dim()) throw std::invalid_argument("CoordVec: dimension mismatch");
    std::vector<T> out;
    out.reserve(a.c_.size());
    for (std::size_t i = 0; i < a.c_.size(); ++i) out.push_back(f(a.c_[i], b.c_[i]));
    return CoordVec(std::move(out));
  }

  template <typename F>
  CoordVec map(F&& f) const {
    std::vector<T> out;
    out.reserve(c_.size());
    for (const auto& v : c_) out.push_back(f(v));
    return CoordVec(std::move(out));
  }

  std::vector<T> c_;
};

template <typename T>
CoordVec<T> meet(const CoordVec<T>& a, const CoordVec<T>& b) {
  return CoordVec<T>::zip_with(a, b, [](const T& x, const T& y) { return std::min(x, y); });
}
template <typename T>
CoordVec<T> join(const CoordVec<T>& a, const CoordVec<T>& b) {
  return CoordVec<T>::zip_with(a, b, [](const T& x, const T& y) { return std::max(x, y); });
}

/// Coordinatewise product; the semiprime f-algebra model on tuples.
template <typename T>
CoordVec<T> hadamard(const CoordVec<T>& a, const CoordVec<T>& b) {
  return CoordVec<T>::zip_with(a, b, [](const T& x, const T& y) { return x * y; });
}

using RatVec = CoordVec<Rational>;
using RealVec = CoordVec<double>;

inline RealVec to_real(const RatVec& v) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(v.dim()));
  for (const auto& x : v.coords()) out.push_back(x.to_double());
  return RealVec(std::move(out));
}

/// |f| wedge |g| = 0, i.e. disjoint supports.
template <typename T>
bool disjoint(const CoordVec<T>& f, const CoordVec<T>& g) {
  if (f.dim() != g.dim()) throw std::invalid_argument("disjoint: dimension mismatch");
  for (int i = 0; i < f.dim(); ++i) {
    if (f[i] != T(0) && g[i] != T(0)) return false;
  }
  return true;
}

/// The vector lattice T^m under the pointwise order, or its positive cone
/// (which has bottom 0). Samples integer-valued coordinates for Rational and
/// uniform reals for double, within [lo, hi].
template <typename T>
struct PointwiseCarrier {
  using Element = CoordVec<T>;

  int dim = 1;
  bool positive_cone = false;
  double lo = -5.0;
  double hi = 5.0;

  static PointwiseCarrier space(int dim, double lo, double hi) {
    return PointwiseCarrier{dim, false, lo, hi};
  }
  static PointwiseCarrier cone(int dim, double hi) { return PointwiseCarrier{dim, true, 0.0, hi}; }

  Element meet(const Element& a, const Element& b) const { return latmed::meet(a, b); }
  Element join(const Element& a, const Element& b) const { return latmed::join(a, b); }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  std::optional<Element> bottom() const {
    if (positive_cone) return Element::zero(dim);
    return std::nullopt;
  }

  // Chains pointwise, so distributive by construction.
  void require_distributive() const {}

  Element sample(Rng& rng) const {
    std::vector<T> out;
    out.reserve(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) {
      if constexpr (std::is_same_v<T, Rational>) {
        out.push_back(Rational(next_int(rng, static_cast<long long>(lo), static_cast<long long>(hi))));
      } else {
        out.push_back(next_real(rng, lo, hi));
      }
    }
    return Element(std::move(out));
  }
};

using RatCarrier = PointwiseCarrier<Rational>;
using RealCarrier = PointwiseCarrier<double>;

}  // namespace latmed
