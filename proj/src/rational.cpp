#include "latticemed/rational.hpp"

#include <charconv>
#include <cstdlib>

namespace latmed {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long parse_int(std::string_view s, std::string_view whole) {
  long long value = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last) {
    throw std::invalid_argument("Rational::parse: bad literal '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

void Rational::assign(long long n, long long d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  i128 nn = n;
  i128 dd = d;
  if (dd < 0) {
    nn = -nn;
    dd = -dd;
  }
  const i128 g = gcd128(nn, dd);
  if (g > 1) {
    nn /= g;
    dd /= g;
  }
  num_ = narrow(nn);
  den_ = narrow(dd);
}

Rational Rational::make(i128 n, i128 d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return Rational();
  const i128 g = gcd128(n, d);
  Rational r;
  r.num_ = narrow(n / g);
  r.den_ = narrow(d / g);
  return r;
}

long long Rational::narrow(i128 v) {
  if (v > i128(INT64_MAX) || v < i128(INT64_MIN)) {
    throw std::overflow_error("Rational: 64-bit overflow");
  }
  return static_cast<long long>(v);
}

Rational Rational::pow(int e) const {
  if (e < 0) throw std::invalid_argument("Rational::pow: negative exponent");
  Rational acc(1);
  Rational base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_int(text, text));
  }
  const long long n = parse_int(text.substr(0, slash), text);
  const long long d = parse_int(text.substr(slash + 1), text);
  return Rational(n, d);
}

}  // namespace latmed
