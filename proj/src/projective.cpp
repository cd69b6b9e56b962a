#include "prack/projective.hpp"

#include <random>
#include <stdexcept>

namespace prack {

bool operator==(const ProjRational& a, const ProjRational& b) {
  if (a.infinite || b.infinite) return a.infinite == b.infinite;
  return a.value == b.value;
}

namespace {

const Rat kOne(1);

std::optional<Rat> safe_div(const Rat& num, const Rat& den) {
  if (den.is_zero()) return std::nullopt;
  return num / den;
}

// the coupling factor: P for the additive family, Q for the others
std::optional<Rat> coupling(const MapFamily& f, const Rat& a, const Rat& b) {
  const Rat& z1 = f.z1;
  const Rat& z2 = f.z2;
  switch (f.tag) {
    case MapFamilyTag::additive1:
      return safe_div(z1 - z2, a + b);
    case MapFamilyTag::mult2:
      return safe_div(z1 * a * b + kOne, z2 * a * b + kOne);
    case MapFamilyTag::mult3:
      return safe_div(z1 + (z2 - z1) * a - z2 * a * b,
                      z2 + (z1 - z2) * b - z1 * a * b);
    case MapFamilyTag::mult4:
      return safe_div((kOne - z2) * a * b + (z2 - z1) * a + z2 * (z1 - kOne),
                      (kOne - z1) * a * b + (z1 - z2) * b + z1 * (z2 - kOne));
  }
  return std::nullopt;
}

Rat circ(MapFamilyTag tag, const Rat& a, const Rat& b) {
  return tag == MapFamilyTag::additive1 ? a + b : a * b;
}

Rat random_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> num(-20, 20);
  std::uniform_int_distribution<long long> den(1, 20);
  return Rat(num(rng), den(rng));
}

}  // namespace

std::optional<PairValue> eval_map(const MapFamily& f, const Rat& b,
                                  const Rat& a) {
  std::optional<Rat> q = coupling(f, a, b);
  if (!q) return std::nullopt;
  PairValue out;
  if (f.tag == MapFamilyTag::additive1) {
    out.first = a - *q;   // σ_a(b)
    out.second = b + *q;  // τ_b(a)
    if (out.first + out.second != a + b)
      throw std::logic_error("structure-group relation violated (additive)");
  } else {
    if (q->is_zero()) return std::nullopt;  // σ needs 1/Q
    out.first = a / *q;
    out.second = b * *q;
    if (out.first * out.second != a * b)
      throw std::logic_error("structure-group relation violated (multiplicative)");
  }
  return out;
}

std::optional<Rat> sigma_inverse_closed_form(const MapFamily& f, const Rat& a,
                                             const Rat& b) {
  const Rat& z1 = f.z1;
  const Rat& z2 = f.z2;
  switch (f.tag) {
    case MapFamilyTag::additive1: {
      auto frac = safe_div(z1 - z2, a - b);
      if (!frac) return std::nullopt;
      return -a + *frac;
    }
    case MapFamilyTag::mult2: {
      if (a.is_zero()) return std::nullopt;
      auto frac = safe_div(b - a, z2 * a - z1 * b);
      if (!frac) return std::nullopt;
      return *frac / a;
    }
    case MapFamilyTag::mult3: {
      if (a.is_zero()) return std::nullopt;
      auto frac = safe_div(z1 * b + (z2 - z1) * a * b - z2 * a,
                           z2 * b + (z1 - z2) - z1 * a);
      if (!frac) return std::nullopt;
      return *frac / a;
    }
    case MapFamilyTag::mult4: {
      if (a.is_zero()) return std::nullopt;
      auto frac = safe_div(
          z2 * (z1 - kOne) * b + (z2 - z1) * a * b - z1 * (z2 - kOne) * a,
          (kOne - z1) * a + (z1 - z2) - (kOne - z2) * b);
      if (!frac) return std::nullopt;
      return *frac / a;
    }
  }
  return std::nullopt;
}

std::optional<Rat> bullet_closed_form(const MapFamily& f, const Rat& a,
                                      const Rat& b) {
  const Rat& z1 = f.z1;
  const Rat& z2 = f.z2;
  switch (f.tag) {
    case MapFamilyTag::additive1:
      return safe_div(z2 - z1, a - b);
    case MapFamilyTag::mult2:
      return safe_div(b - a, z1 * a - z2 * b);
    case MapFamilyTag::mult3:
      return safe_div(z2 * b + (z1 - z2) * a * b - z1 * a,
                      z1 * b + (z2 - z1) - z2 * a);
    case MapFamilyTag::mult4:
      return safe_div(
          z1 * (z2 - kOne) * b + (z1 - z2) * a * b - z2 * (z1 - kOne) * a,
          (kOne - z2) * a + (z2 - z1) - (kOne - z1) * b);
  }
  return std::nullopt;
}

namespace {

// families can be genuinely degenerate at special parameter values (the
// multiplicative couplings collapse at 0 and 1); cap the resampling so an
// all-pole configuration reports aborted instead of spinning
bool pole_allowance_spent(SampledReport& rep, long long samples) {
  if (rep.poles_skipped <= 100 * samples + 1000) return false;
  rep.aborted = true;
  return true;
}

}  // namespace

SampledReport ybe_check_sampled(MapFamilyTag tag, const Rat& pz1,
                                const Rat& pz2, const Rat& pz3,
                                long long samples, uint64_t seed) {
  SampledReport rep;
  std::mt19937_64 rng(seed);
  MapFamily f12{tag, pz1, pz2}, f13{tag, pz1, pz3}, f23{tag, pz2, pz3};
  auto apply = [&](const MapFamily& f, Rat& x, Rat& y) {
    auto r = eval_map(f, x, y);
    if (!r) return false;
    x = r->first;
    y = r->second;
    return true;
  };
  while (rep.samples < samples) {
    Rat c = random_rat(rng), b = random_rat(rng), a = random_rat(rng);
    Rat l0 = c, l1 = b, l2 = a;
    Rat r0 = c, r1 = b, r2 = a;
    // lhs: R12 R13 R23, rightmost first
    bool ok = apply(f23, l1, l2) && apply(f13, l0, l2) && apply(f12, l0, l1) &&
              apply(f12, r0, r1) && apply(f13, r0, r2) && apply(f23, r1, r2);
    if (!ok) {
      ++rep.poles_skipped;
      if (pole_allowance_spent(rep, samples)) break;
      continue;
    }
    ++rep.samples;
    if (!(l0 == r0 && l1 == r1 && l2 == r2)) {
      ++rep.failures;
      if (rep.first_failure.empty())
        rep.first_failure = "Yang-Baxter mismatch at c=" + c.to_string() +
                            " b=" + b.to_string() + " a=" + a.to_string();
    }
  }
  return rep;
}

SampledReport reversibility_check(MapFamilyTag tag, const Rat& pz1,
                                  const Rat& pz2, long long samples,
                                  uint64_t seed) {
  SampledReport rep;
  std::mt19937_64 rng(seed);
  MapFamily f12{tag, pz1, pz2}, f21{tag, pz2, pz1};
  while (rep.samples < samples) {
    Rat b = random_rat(rng), a = random_rat(rng);
    auto fwd = eval_map(f12, b, a);
    if (!fwd) {
      ++rep.poles_skipped;
      if (pole_allowance_spent(rep, samples)) break;
      continue;
    }
    // R21^{z_ji}(x,y) = flip(R^{z_ji}(y,x))
    auto back = eval_map(f21, fwd->second, fwd->first);
    if (!back) {
      ++rep.poles_skipped;
      if (pole_allowance_spent(rep, samples)) break;
      continue;
    }
    ++rep.samples;
    if (!(back->second == b && back->first == a)) {
      ++rep.failures;
      if (rep.first_failure.empty())
        rep.first_failure = "reversibility mismatch at b=" + b.to_string() +
                            " a=" + a.to_string();
    }
  }
  return rep;
}

SampledReport bullet_check(MapFamilyTag tag, const Rat& pz1, const Rat& pz2,
                           long long samples, uint64_t seed) {
  SampledReport rep;
  std::mt19937_64 rng(seed);
  MapFamily f{tag, pz1, pz2};
  MapFamily fswap{tag, pz2, pz1};
  while (rep.samples < samples) {
    Rat a = random_rat(rng), b = random_rat(rng);
    auto bullet = bullet_closed_form(f, a, b);
    auto bullet_sym = bullet_closed_form(fswap, b, a);
    auto inv = sigma_inverse_closed_form(fswap, a, b);  // (σ^{ji}_a)^{-1}(b)
    auto sigma_of_b = eval_map(f, b, a);                // σ^{ij}_a(b)
    auto inv_fwd = sigma_inverse_closed_form(f, a, b);
    if (!bullet || !bullet_sym || !inv || !sigma_of_b || !inv_fwd) {
      ++rep.poles_skipped;
      if (pole_allowance_spent(rep, samples)) break;
      continue;
    }
    auto round = eval_map(f, *inv_fwd, a);  // σ^{ij}_a((σ^{ij}_a)^{-1}(b))
    auto inv_of_sigma = sigma_inverse_closed_form(f, a, sigma_of_b->first);
    if (!round || !inv_of_sigma) {
      ++rep.poles_skipped;
      if (pole_allowance_spent(rep, samples)) break;
      continue;
    }
    ++rep.samples;
    auto record = [&](const char* law) {
      ++rep.failures;
      if (rep.first_failure.empty())
        rep.first_failure = std::string(law) + " at a=" + a.to_string() +
                            " b=" + b.to_string();
    };
    if (!(*bullet == circ(tag, a, *inv)))
      record("bullet definition mismatch");
    if (!(*bullet == *bullet_sym)) record("bullet symmetry mismatch");
    if (!(round->first == b)) record("closed-form inverse is not a right inverse");
    if (!(*inv_of_sigma == b)) record("closed-form inverse is not a left inverse");
  }
  return rep;
}

}  // namespace prack
