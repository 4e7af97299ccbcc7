#include "lgt/bigint.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace lgt {

void BigInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  if (limbs_.empty()) negative_ = false;
}

BigInt::BigInt(long long v) {
  negative_ = v < 0;
  // Unsigned wraparound also handles LLONG_MIN.
  std::uint64_t mag = negative_ ? 0ULL - static_cast<std::uint64_t>(v)
                                : static_cast<std::uint64_t>(v);
  while (mag != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffULL));
    mag >>= 32;
  }
  trim();
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  r.negative_ = false;
  return r;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
  if (a.limbs_.size() != b.limbs_.size())
    return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
  for (std::size_t i = a.limbs_.size(); i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  }
  return 0;
}

int BigInt::cmp(const BigInt& a, const BigInt& b) {
  int sa = a.sign(), sb = b.sign();
  if (sa != sb) return sa < sb ? -1 : 1;
  if (sa == 0) return 0;
  int m = cmp_mag(a, b);
  return sa > 0 ? m : -m;
}

void BigInt::add_mag(BigInt& a, const BigInt& b) {
  std::uint64_t carry = 0;
  std::size_t n = std::max(a.limbs_.size(), b.limbs_.size());
  a.limbs_.resize(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t s = carry + a.limbs_[i] + (i < b.limbs_.size() ? b.limbs_[i] : 0);
    a.limbs_[i] = static_cast<std::uint32_t>(s & 0xffffffffULL);
    carry = s >> 32;
  }
  if (carry) a.limbs_.push_back(static_cast<std::uint32_t>(carry));
}

void BigInt::sub_mag(BigInt& a, const BigInt& b) {
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(a.limbs_[i]) - borrow -
                     (i < b.limbs_.size() ? static_cast<std::int64_t>(b.limbs_[i]) : 0);
    if (d < 0) {
      d += 1LL << 32;
      borrow = 1;
    } else {
      borrow = 0;
    }
    a.limbs_[i] = static_cast<std::uint32_t>(d);
  }
  a.trim();
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  if (!r.is_zero()) r.negative_ = !r.negative_;
  return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
  if (negative_ == o.negative_) {
    add_mag(*this, o);
  } else if (cmp_mag(*this, o) >= 0) {
    sub_mag(*this, o);
  } else {
    BigInt t = o;
    sub_mag(t, *this);
    *this = std::move(t);
  }
  trim();
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt& BigInt::operator*=(const BigInt& o) {
  if (is_zero() || o.is_zero()) {
    *this = BigInt();
    return *this;
  }
  std::vector<std::uint32_t> out(limbs_.size() + o.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
      std::uint64_t cur = out[i + j] +
                          static_cast<std::uint64_t>(limbs_[i]) * o.limbs_[j] + carry;
      out[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
      carry = cur >> 32;
    }
    std::size_t k = i + o.limbs_.size();
    while (carry) {
      std::uint64_t cur = out[k] + carry;
      out[k] = static_cast<std::uint32_t>(cur & 0xffffffffULL);
      carry = cur >> 32;
      ++k;
    }
  }
  negative_ = negative_ != o.negative_;
  limbs_ = std::move(out);
  trim();
  return *this;
}

std::size_t BigInt::bit_length() const {
  if (limbs_.empty()) return 0;
  std::uint32_t top = limbs_.back();
  std::size_t bits = (limbs_.size() - 1) * 32;
  while (top) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

bool BigInt::bit(std::size_t i) const {
  std::size_t limb = i / 32, off = i % 32;
  if (limb >= limbs_.size()) return false;
  return (limbs_[limb] >> off) & 1u;
}

void BigInt::shift_left_bit() {
  std::uint32_t carry = 0;
  for (auto& l : limbs_) {
    std::uint32_t next = l >> 31;
    l = (l << 1) | carry;
    carry = next;
  }
  if (carry) limbs_.push_back(carry);
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
  // Binary long division on magnitudes.
  BigInt rem, quot;
  std::size_t nbits = a.bit_length();
  quot.limbs_.assign((nbits + 31) / 32, 0);
  for (std::size_t i = nbits; i-- > 0;) {
    rem.shift_left_bit();
    if (a.bit(i)) {
      if (rem.limbs_.empty()) rem.limbs_.push_back(1);
      else rem.limbs_[0] |= 1u;
    }
    if (cmp_mag(rem, b) >= 0) {
      sub_mag(rem, b);
      quot.limbs_[i / 32] |= 1u << (i % 32);
    }
  }
  quot.trim();
  rem.trim();
  quot.negative_ = !quot.is_zero() && (a.negative_ != b.negative_);
  rem.negative_ = !rem.is_zero() && a.negative_;
  q = std::move(quot);
  r = std::move(rem);
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return r;
}

bool BigInt::divisible_by(const BigInt& d) const {
  if (d.is_zero()) return is_zero();
  return (*this % d).is_zero();
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
  BigInt x = a.abs(), y = b.abs();
  while (!y.is_zero()) {
    BigInt q, r;
    divmod(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

std::string BigInt::to_string() const {
  if (is_zero()) return "0";
  // Peel off base-10^9 chunks.
  std::vector<std::uint32_t> mag(limbs_);
  std::string out;
  while (!mag.empty()) {
    std::uint64_t rem = 0;
    for (std::size_t i = mag.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | mag[i];
      mag[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
      rem = cur % 1000000000ULL;
    }
    while (!mag.empty() && mag.back() == 0) mag.pop_back();
    std::string chunk = std::to_string(rem);
    if (mag.empty()) {
      out.insert(0, chunk);
    } else {
      out.insert(0, std::string(9 - chunk.size(), '0') + chunk);
    }
  }
  return negative_ ? "-" + out : out;
}

BigInt BigInt::from_string(std::string_view s) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
  BigInt r;
  BigInt ten(10);
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw std::invalid_argument("BigInt: bad digit in numeral");
    r *= ten;
    r += BigInt(s[i] - '0');
  }
  if (neg && !r.is_zero()) r.negative_ = true;
  return r;
}

long long BigInt::to_long_long() const {
  BigInt lo = BigInt(std::numeric_limits<long long>::min());
  BigInt hi = BigInt(std::numeric_limits<long long>::max());
  if (cmp(*this, lo) < 0 || cmp(*this, hi) > 0)
    throw std::overflow_error("BigInt: value does not fit in long long");
  unsigned long long v = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;)
    v = (v << 32) | limbs_[i];
  return static_cast<long long>(negative_ ? 0ULL - v : v);
}

} // namespace lgt
