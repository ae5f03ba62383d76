#pragma once

#include <cstdint>
#include <string>

namespace chores {

// Exact rational arithmetic on 64-bit numerator/denominator. Thresholds,
// gamma values and reduced-chore costs stay exact; nothing in the library
// rounds through floating point. Intermediate products use __int128 and the
// result is checked to fit back into 64 bits (plenty for desk-scale data).
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(long long value) : num_(value) {}  // implicit by design
  Rational(long long num, long long den);

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  long long floor() const;
  long long ceil() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <
           static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  // Accepts "p" or "p/q".
  static Rational parse(const std::string& text);
  // Renders "p" when integral, "p/q" otherwise.
  std::string str() const;

 private:
  static long long narrow(__int128 v);
  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace chores
