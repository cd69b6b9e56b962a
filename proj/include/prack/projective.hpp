#pragma once
// The four parametric birational map families on ℚ ∪ {∞} (one additive, three
// multiplicative), evaluated exactly, with sampled Yang-Baxter, reversibility,
// structure-group and bullet-symmetry checks.  Poles are explicit outcomes,
// never approximated.

#include "prack/bigrat.hpp"

#include <optional>

namespace prack {

struct ProjRational {
  bool infinite = false;
  Rat value;  // meaningful when finite

  ProjRational() = default;
  ProjRational(Rat v) : value(std::move(v)) {}
  static ProjRational infinity() {
    ProjRational p;
    p.infinite = true;
    return p;
  }
};

bool operator==(const ProjRational& a, const ProjRational& b);

enum class MapFamilyTag { additive1 = 1, mult2 = 2, mult3 = 3, mult4 = 4 };

struct MapFamily {
  MapFamilyTag tag = MapFamilyTag::additive1;
  Rat z1, z2;  // the (z_i, z_j) parameter pair; finite by construction
};

struct PairValue {
  Rat first, second;
};

// (σ_a(b), τ_b(a)); std::nullopt marks a pole.  The structure-group relation
// (σ+τ = a+b for the additive family, σ·τ = a·b otherwise) is asserted on
// every successful evaluation.
std::optional<PairValue> eval_map(const MapFamily& f, const Rat& b,
                                  const Rat& a);
// The closed-form inverse (σ_a)^{-1}(b) as displayed for each family.
std::optional<Rat> sigma_inverse_closed_form(const MapFamily& f, const Rat& a,
                                             const Rat& b);
// The closed-form bullet a •_{z_ij} b per family.
std::optional<Rat> bullet_closed_form(const MapFamily& f, const Rat& a,
                                      const Rat& b);

struct SampledReport {
  long long samples = 0;
  long long poles_skipped = 0;
  long long failures = 0;
  bool aborted = false;  // pole streak exhausted the resampling allowance
  std::string first_failure;
  bool pass() const { return failures == 0 && !aborted; }
};

// Exact Yang-Baxter verification at seeded random triples; pole-hitting
// samples are skipped and counted, never treated as failures.
SampledReport ybe_check_sampled(MapFamilyTag tag, const Rat& pz1,
                                const Rat& pz2, const Rat& pz3,
                                long long samples, uint64_t seed);
// R21 ∘ R12 = id at sampled pairs.
SampledReport reversibility_check(MapFamilyTag tag, const Rat& pz1,
                                  const Rat& pz2, long long samples,
                                  uint64_t seed);
// Bullet formula against its definition a∘(σ_a)^{-1}(b), the symmetry
// a•_{ij}b = b•_{ji}a, and the closed-form inverse against the actual
// inverse in both directions.
SampledReport bullet_check(MapFamilyTag tag, const Rat& pz1, const Rat& pz2,
                           long long samples, uint64_t seed);

}  // namespace prack
