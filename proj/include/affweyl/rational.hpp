#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace affweyl {

// Exact rational on int64 storage, always reduced, denominator > 0.
// Every operation runs its intermediates through __int128 and throws
// std::overflow_error if the reduced result leaves the int64 range.
// Group elements, root data and alcove geometry never get anywhere near
// the limit; series coefficients use BigRat instead.
class Rat {
public:
  Rat() : num_(0), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}
  Rat(long long n, long long d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    __int128 nn = n, dd = d;
    if (dd < 0) { nn = -nn; dd = -dd; }
    normalize(nn, dd);
  }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  // Largest integer <= value. Exact for negatives too.
  long long floor() const {
    long long q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    __int128 n = (__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_;
    __int128 d = (__int128)a.den_ * b.den_;
    return Rat(n, d, raw_tag{});
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    __int128 n = (__int128)a.num_ * b.den_ - (__int128)b.num_ * a.den_;
    __int128 d = (__int128)a.den_ * b.den_;
    return Rat(n, d, raw_tag{});
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_, raw_tag{});
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
    return Rat((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_, raw_tag{});
  }
  Rat operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return (__int128)a.num_ * b.den_ < (__int128)b.num_ * a.den_;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

private:
  struct raw_tag {};
  Rat(__int128 n, __int128 d, raw_tag) {
    if (d < 0) { n = -n; d = -d; }
    normalize(n, d);
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  void normalize(__int128 n, __int128 d) {
    if (n == 0) {
      num_ = 0;
      den_ = 1;
      return;
    }
    __int128 g = gcd128(n, d);
    n /= g;
    d /= g;
    constexpr __int128 lo = INT64_MIN, hi = INT64_MAX;
    if (n < lo || n > hi || d > hi)
      throw std::overflow_error("Rat: int64 overflow");
    num_ = (long long)n;
    den_ = (long long)d;
  }

  long long num_;
  long long den_;
};

using BigRat = boost::multiprecision::cpp_rational;

inline BigRat to_big(const Rat& r) {
  return BigRat(r.num(), r.den());
}

// Canonical "p/q" form used by every JSON surface, denominator always present.
inline std::string rational_string(const Rat& r) { return r.str(); }
inline std::string rational_string(const BigRat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

// Strict parser: optional sign, digits, optional "/digits". No floats.
template <class R>
R parse_rational(const std::string& s) {
  auto bad = [&] { throw std::invalid_argument("malformed rational: '" + s + "'"); };
  if (s.empty()) bad();
  size_t i = 0;
  bool neg = false;
  if (s[i] == '-' || s[i] == '+') {
    neg = (s[i] == '-');
    ++i;
  }
  std::string numpart, denpart;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') numpart += s[i++];
  if (numpart.empty()) bad();
  if (i < s.size()) {
    if (s[i] != '/') bad();
    ++i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') denpart += s[i++];
    if (denpart.empty() || i != s.size()) bad();
  } else {
    denpart = "1";
  }
  if constexpr (std::is_same_v<R, Rat>) {
    long long n, d;
    try {
      n = std::stoll(numpart);
      d = std::stoll(denpart);
    } catch (const std::exception&) {
      throw std::overflow_error("rational out of int64 range: '" + s + "'");
    }
    return Rat(neg ? -n : n, d);
  } else {
    using boost::multiprecision::cpp_int;
    cpp_int n(numpart), d(denpart);
    if (d == 0) throw std::domain_error("zero denominator: '" + s + "'");
    if (neg) n = -n;
    return BigRat(n, d);
  }
}

}  // namespace affweyl
