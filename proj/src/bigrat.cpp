#include "prack/bigrat.hpp"

#include <random>
#include <stdexcept>

namespace prack {

namespace {

constexpr uint32_t kBase = 1000000000u;

void trim(std::vector<uint32_t>& limbs) {
  while (!limbs.empty() && limbs.back() == 0) limbs.pop_back();
}

// |a| vs |b|
int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                              const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out;
  out.reserve(std::max(a.size(), b.size()) + 1);
  uint32_t carry = 0;
  for (size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
    uint64_t s = carry;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    out.push_back((uint32_t)(s % kBase));
    carry = (uint32_t)(s / kBase);
  }
  trim(out);
  return out;
}

// requires |a| >= |b|
std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                              const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out;
  out.reserve(a.size());
  int64_t borrow = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    int64_t s = (int64_t)a[i] - borrow - (i < b.size() ? b[i] : 0);
    if (s < 0) {
      s += kBase;
      borrow = 1;
    } else {
      borrow = 0;
    }
    out.push_back((uint32_t)s);
  }
  trim(out);
  return out;
}

std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                              const std::vector<uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint64_t> acc(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < b.size(); ++j) {
      uint64_t cur = acc[i + j] + (uint64_t)a[i] * b[j] + carry;
      acc[i + j] = cur % kBase;
      carry = cur / kBase;
    }
    size_t k = i + b.size();
    while (carry) {
      uint64_t cur = acc[k] + carry;
      acc[k] = cur % kBase;
      carry = cur / kBase;
      ++k;
    }
  }
  std::vector<uint32_t> out(acc.size());
  for (size_t i = 0; i < acc.size(); ++i) out[i] = (uint32_t)acc[i];
  trim(out);
  return out;
}

std::vector<uint32_t> half_mag(const std::vector<uint32_t>& a) {
  std::vector<uint32_t> out(a.size(), 0);
  uint32_t rem = 0;
  for (size_t i = a.size(); i-- > 0;) {
    uint64_t cur = (uint64_t)rem * kBase + a[i];
    out[i] = (uint32_t)(cur / 2);
    rem = (uint32_t)(cur & 1);
  }
  trim(out);
  return out;
}

}  // namespace

BigInt::BigInt(long long v) {
  if (v == 0) {
    sign = 0;
    return;
  }
  sign = v > 0 ? 1 : -1;
  unsigned long long mag = v > 0 ? (unsigned long long)v
                                 : ~(unsigned long long)v + 1ull;
  while (mag) {
    limbs.push_back((uint32_t)(mag % kBase));
    mag /= kBase;
  }
}

std::string BigInt::to_string() const {
  if (sign == 0) return "0";
  std::string out = sign < 0 ? "-" : "";
  out += std::to_string(limbs.back());
  for (size_t i = limbs.size() - 1; i-- > 0;) {
    std::string part = std::to_string(limbs[i]);
    out += std::string(9 - part.size(), '0') + part;
  }
  return out;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  if (a.sign == 0) return b;
  if (b.sign == 0) return a;
  BigInt out;
  if (a.sign == b.sign) {
    out.sign = a.sign;
    out.limbs = add_mag(a.limbs, b.limbs);
  } else {
    int c = cmp_mag(a.limbs, b.limbs);
    if (c == 0) return BigInt(0);
    if (c > 0) {
      out.sign = a.sign;
      out.limbs = sub_mag(a.limbs, b.limbs);
    } else {
      out.sign = b.sign;
      out.limbs = sub_mag(b.limbs, a.limbs);
    }
  }
  return out;
}

BigInt operator-(const BigInt& a) {
  BigInt out = a;
  out.sign = -out.sign;
  return out;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  if (a.sign == 0 || b.sign == 0) return BigInt(0);
  BigInt out;
  out.sign = a.sign * b.sign;
  out.limbs = mul_mag(a.limbs, b.limbs);
  return out;
}

bool operator==(const BigInt& a, const BigInt& b) {
  return a.sign == b.sign && a.limbs == b.limbs;
}

bool operator<(const BigInt& a, const BigInt& b) {
  if (a.sign != b.sign) return a.sign < b.sign;
  int c = cmp_mag(a.limbs, b.limbs);
  return a.sign >= 0 ? c < 0 : c > 0;
}

BigInt big_abs(const BigInt& a) {
  BigInt out = a;
  if (out.sign < 0) out.sign = 1;
  return out;
}

BigInt big_half(const BigInt& a) {
  BigInt out;
  out.limbs = half_mag(a.limbs);
  out.sign = out.limbs.empty() ? 0 : a.sign;
  return out;
}

BigInt big_gcd(BigInt a, BigInt b) {
  a = big_abs(a);
  b = big_abs(b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  int shift = 0;
  while (!a.is_odd() && !b.is_odd()) {
    a = big_half(a);
    b = big_half(b);
    ++shift;
  }
  while (!a.is_odd()) a = big_half(a);
  while (!b.is_zero()) {
    while (!b.is_odd()) b = big_half(b);
    if (cmp_mag(a.limbs, b.limbs) > 0) std::swap(a, b);
    b = b - a;
    b.sign = b.limbs.empty() ? 0 : 1;
  }
  for (int i = 0; i < shift; ++i) a = a + a;
  return a;
}

Rat::Rat(long long n, long long d) : num(n), den(d) {
  if (d == 0) throw std::domain_error("zero denominator");
  normalize();
}

Rat::Rat(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  normalize();
}

void Rat::normalize() {
  if (den.sign < 0) {
    den.sign = 1;
    num.sign = -num.sign;
  }
  if (num.is_zero()) {
    den = BigInt(1);
    return;
  }
  BigInt g = big_gcd(num, den);
  if (!(g == BigInt(1))) {
    // exact division by the common divisor, binary long division
    auto divexact = [](const BigInt& value, const BigInt& divisor) {
      BigInt rem(0), quot(0);
      std::vector<bool> bits;
      BigInt v = big_abs(value);
      while (!v.is_zero()) {
        bits.push_back(v.is_odd());
        v = big_half(v);
      }
      for (size_t i = bits.size(); i-- > 0;) {
        rem = rem + rem;
        if (bits[i]) rem = rem + BigInt(1);
        quot = quot + quot;
        if (!(rem < big_abs(divisor))) {
          rem = rem - big_abs(divisor);
          quot = quot + BigInt(1);
        }
      }
      quot.sign = quot.limbs.empty() ? 0 : value.sign;
      return quot;
    };
    num = divexact(num, g);
    den = divexact(den, g);
  }
}

bool Rat::is_odd_fraction() const {
  return num.is_odd() && den.is_odd();
}

std::string Rat::to_string() const {
  if (den == BigInt(1)) return num.to_string();
  return num.to_string() + "/" + den.to_string();
}

Rat operator+(const Rat& a, const Rat& b) {
  return Rat(a.num * b.den + b.num * a.den, a.den * b.den);
}

Rat operator-(const Rat& a, const Rat& b) {
  return Rat(a.num * b.den - b.num * a.den, a.den * b.den);
}

Rat operator*(const Rat& a, const Rat& b) {
  return Rat(a.num * b.num, a.den * b.den);
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  return Rat(a.num * b.den, a.den * b.num);
}

Rat operator-(const Rat& a) { return Rat(-a.num, a.den); }

bool operator==(const Rat& a, const Rat& b) {
  return a.num == b.num && a.den == b.den;
}

bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }

Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(std::stoll(text));
  return Rat(std::stoll(text.substr(0, slash)),
             std::stoll(text.substr(slash + 1)));
}

namespace {

Rat random_odd_fraction(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> d(-50, 50);
  long long n = 2 * d(rng) + 1;
  long long k = 2 * d(rng) + 1;
  return Rat(n, k);
}

}  // namespace

SpotCheckReport odd_fraction_spot_check(long long sample_count, uint64_t seed) {
  if (sample_count < 1) throw std::domain_error("need at least one sample");
  SpotCheckReport rep;
  std::mt19937_64 rng(seed);
  const Rat one(1);
  const Rat two(2);
  auto plus1 = [&](const Rat& a, const Rat& b) { return a - one + b; };
  auto fail = [&](const std::string& law, const Rat& a, const Rat& b,
                  const Rat& c) {
    ++rep.failures;
    if (rep.first_failure.empty())
      rep.first_failure = law + " at a=" + a.to_string() +
                          " b=" + b.to_string() + " c=" + c.to_string();
  };
  for (long long s = 0; s < sample_count; ++s) {
    ++rep.samples;
    Rat a = random_odd_fraction(rng);
    Rat b = random_odd_fraction(rng);
    Rat c = random_odd_fraction(rng);
    Rat ab = plus1(a, b);
    if (!ab.is_odd_fraction()) fail("closure of the shifted addition", a, b, c);
    if (!(a * b).is_odd_fraction()) fail("closure of multiplication", a, b, c);
    if (plus1(plus1(a, b), c) != plus1(a, plus1(b, c)))
      fail("associativity of the shifted addition", a, b, c);
    if ((a * b) * c != a * (b * c)) fail("associativity of multiplication", a, b, c);
    if (plus1(one, a) != a || plus1(a, one) != a)
      fail("identity of the shifted addition", a, b, c);
    Rat ainv = two - a;
    if (plus1(a, ainv) != one || !ainv.is_odd_fraction())
      fail("additive inverses", a, b, c);
    if (!a.is_zero()) {
      Rat minv = one / a;
      if (a * minv != one || !minv.is_odd_fraction())
        fail("multiplicative inverses", a, b, c);
    }
    Rat lhs = a * plus1(b, c);
    Rat rhs = plus1(plus1(a * b, two - a), a * c);
    if (lhs != rhs) fail("brace distributivity", a, b, c);
  }
  return rep;
}

}  // namespace prack
