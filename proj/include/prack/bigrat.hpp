#pragma once
// Exact rational arithmetic on arbitrary-precision integers (sign +
// base-1e9 magnitude), enough for equality checking of map compositions:
// add, subtract, multiply, divide, compare, reduce.

#include <cstdint>
#include <string>
#include <vector>

namespace prack {

struct BigInt {
  int sign = 0;                 // -1, 0, +1
  std::vector<uint32_t> limbs;  // base 1e9, little-endian, no leading zeros

  BigInt() = default;
  BigInt(long long v);

  bool is_zero() const { return sign == 0; }
  bool is_odd() const { return !limbs.empty() && (limbs[0] & 1u); }
  std::string to_string() const;
};

BigInt operator+(const BigInt& a, const BigInt& b);
BigInt operator-(const BigInt& a, const BigInt& b);
BigInt operator*(const BigInt& a, const BigInt& b);
BigInt operator-(const BigInt& a);
bool operator==(const BigInt& a, const BigInt& b);
bool operator<(const BigInt& a, const BigInt& b);
BigInt big_abs(const BigInt& a);
BigInt big_gcd(BigInt a, BigInt b);  // gcd of |a|, |b|
BigInt big_half(const BigInt& a);    // a/2, a must be even

// Reduced fraction with positive denominator.
struct Rat {
  BigInt num;
  BigInt den;  // > 0

  Rat() : num(0), den(1) {}
  Rat(long long n) : num(n), den(1) { normalize(); }
  Rat(long long n, long long d);
  Rat(BigInt n, BigInt d);

  void normalize();
  bool is_zero() const { return num.is_zero(); }
  // numerator and denominator both odd (membership in the odd-fraction brace)
  bool is_odd_fraction() const;
  std::string to_string() const;
};

Rat operator+(const Rat& a, const Rat& b);
Rat operator-(const Rat& a, const Rat& b);
Rat operator*(const Rat& a, const Rat& b);
Rat operator/(const Rat& a, const Rat& b);  // throws on zero divisor
Rat operator-(const Rat& a);
bool operator==(const Rat& a, const Rat& b);
bool operator!=(const Rat& a, const Rat& b);

Rat parse_rat(const std::string& text);  // "p" or "p/q"

// Sampled exhaustion of the odd-fraction brace laws: closure of both
// operations, distributivity, associativity, identities and inverses on
// seeded random triples; exact arithmetic throughout.
struct SpotCheckReport {
  long long samples = 0;
  long long failures = 0;
  std::string first_failure;  // law + witness values
  bool pass() const { return failures == 0; }
};
SpotCheckReport odd_fraction_spot_check(long long sample_count, uint64_t seed);

}  // namespace prack
