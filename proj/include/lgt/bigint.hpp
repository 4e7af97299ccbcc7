#pragma once

// Exact signed integers of unbounded size. Magnitude is base-2^32,
// little-endian; zero is the empty limb vector with positive sign.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lgt {

class BigInt {
public:
  BigInt() = default;
  BigInt(long long v);
  BigInt(int v) : BigInt(static_cast<long long>(v)) {}

  static BigInt from_string(std::string_view s);

  bool is_zero() const { return limbs_.empty(); }
  int sign() const { return limbs_.empty() ? 0 : (negative_ ? -1 : 1); }
  BigInt abs() const;

  // Truncated division, C++ semantics: (a/b)*b + a%b == a, |a%b| < |b|.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
  bool divisible_by(const BigInt& d) const;

  static BigInt gcd(const BigInt& a, const BigInt& b);

  BigInt operator-() const;
  BigInt& operator+=(const BigInt& o);
  BigInt& operator-=(const BigInt& o);
  BigInt& operator*=(const BigInt& o);

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);

  // -1 / 0 / +1 of (a - b).
  static int cmp(const BigInt& a, const BigInt& b);
  friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return cmp(a, b) != 0; }
  friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

  std::string to_string() const;

  // Exact conversion; throws if the value does not fit.
  long long to_long_long() const;

private:
  std::vector<std::uint32_t> limbs_;
  bool negative_ = false;

  void trim();
  static int cmp_mag(const BigInt& a, const BigInt& b);
  static void add_mag(BigInt& a, const BigInt& b);
  static void sub_mag(BigInt& a, const BigInt& b); // requires |a| >= |b|
  void shift_left_bit();
  bool bit(std::size_t i) const;
  std::size_t bit_length() const;
};

} // namespace lgt
