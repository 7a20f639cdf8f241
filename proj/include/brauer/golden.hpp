#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace brauer {

// Exact arithmetic in Z[phi], phi = (1 + sqrt 5)/2, so phi^2 = phi + 1.
//
// A value is a + b*phi with 64-bit components.  Root coordinates in this
// domain stay tiny, so fixed-width integers with checked arithmetic are
// used instead of bignums; any overflow throws std::overflow_error rather
// than wrapping.  The representation is unique, equality is componentwise,
// and the ordering is the one induced by the real embedding.
class Golden {
 public:
  constexpr Golden() = default;
  constexpr Golden(int64_t rational) : a_(rational) {}
  constexpr Golden(int64_t a, int64_t b) : a_(a), b_(b) {}

  static constexpr Golden phi() { return Golden(0, 1); }

  constexpr int64_t a() const { return a_; }
  constexpr int64_t b() const { return b_; }
  constexpr bool is_zero() const { return a_ == 0 && b_ == 0; }

  friend Golden operator+(const Golden& x, const Golden& y) {
    return Golden(add64(x.a_, y.a_), add64(x.b_, y.b_));
  }
  friend Golden operator-(const Golden& x, const Golden& y) {
    return Golden(sub64(x.a_, y.a_), sub64(x.b_, y.b_));
  }
  friend Golden operator-(const Golden& x) {
    return Golden(sub64(0, x.a_), sub64(0, x.b_));
  }
  // (a + b phi)(c + d phi) = ac + bd + (ad + bc + bd) phi
  friend Golden operator*(const Golden& x, const Golden& y) {
    int64_t ac = mul64(x.a_, y.a_);
    int64_t bd = mul64(x.b_, y.b_);
    int64_t ad = mul64(x.a_, y.b_);
    int64_t bc = mul64(x.b_, y.a_);
    return Golden(add64(ac, bd), add64(add64(ad, bc), bd));
  }
  Golden& operator+=(const Golden& y) { return *this = *this + y; }
  Golden& operator-=(const Golden& y) { return *this = *this - y; }
  Golden& operator*=(const Golden& y) { return *this = *this * y; }

  friend constexpr bool operator==(const Golden& x, const Golden& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend constexpr bool operator!=(const Golden& x, const Golden& y) {
    return !(x == y);
  }
  friend bool operator<(const Golden& x, const Golden& y) {
    return (x - y).sign() < 0;
  }
  friend bool operator>(const Golden& x, const Golden& y) { return y < x; }
  friend bool operator<=(const Golden& x, const Golden& y) { return !(y < x); }
  friend bool operator>=(const Golden& x, const Golden& y) { return !(x < y); }

  // Sign under the real embedding, computed exactly: a + b phi has the
  // sign of s + t sqrt(5) with s = 2a + b, t = b, decided by comparing
  // s^2 against 5 t^2 when the two terms disagree in sign.
  int sign() const {
    int64_t s = add64(add64(a_, a_), b_);
    int64_t t = b_;
    if (s == 0 && t == 0) return 0;
    if (s >= 0 && t >= 0) return 1;
    if (s <= 0 && t <= 0) return -1;
    constexpr int64_t kGuard = int64_t(1) << 62;
    if (s > kGuard || s < -kGuard || t > kGuard || t < -kGuard)
      throw std::overflow_error("Golden::sign: component too large");
    __int128 s2 = static_cast<__int128>(s) * s;
    __int128 t5 = 5 * (static_cast<__int128>(t) * t);
    if (s > 0) return s2 > t5 ? 1 : -1;  // t < 0 here; s2 == t5 impossible
    return t5 > s2 ? 1 : -1;             // s < 0, t > 0
  }

  // The nontrivial ring automorphism phi -> 1 - phi (an involution).
  Golden galois() const { return Golden(add64(a_, b_), sub64(0, b_)); }

  std::string str() const {
    if (b_ == 0) return std::to_string(a_);
    std::string s;
    if (a_ != 0) s = std::to_string(a_);
    if (b_ == 1)
      s += s.empty() ? "p" : "+p";
    else if (b_ == -1)
      s += "-p";
    else if (b_ > 0)
      s += (s.empty() ? "" : "+") + std::to_string(b_) + "p";
    else
      s += std::to_string(b_) + "p";
    return s;
  }

 private:
  static int64_t add64(int64_t x, int64_t y) {
    int64_t r;
    if (__builtin_add_overflow(x, y, &r))
      throw std::overflow_error("Z[phi] addition overflow");
    return r;
  }
  static int64_t sub64(int64_t x, int64_t y) {
    int64_t r;
    if (__builtin_sub_overflow(x, y, &r))
      throw std::overflow_error("Z[phi] subtraction overflow");
    return r;
  }
  static int64_t mul64(int64_t x, int64_t y) {
    int64_t r;
    if (__builtin_mul_overflow(x, y, &r))
      throw std::overflow_error("Z[phi] multiplication overflow");
    return r;
  }

  int64_t a_ = 0;
  int64_t b_ = 0;
};

}  // namespace brauer

template <>
struct std::hash<brauer::Golden> {
  size_t operator()(const brauer::Golden& g) const noexcept {
    uint64_t h = 0x9e3779b97f4a7c15ULL;
    h ^= static_cast<uint64_t>(g.a()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= static_cast<uint64_t>(g.b()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return static_cast<size_t>(h);
  }
};
