#pragma once
// Drinfel'd twists for parametric solutions: the twist relation, the two
// admissibility conditions, the twisted-solution formula, and the sigma
// families built from (skew) braces.

#include "prack/brace.hpp"
#include "prack/solution.hpp"

namespace prack {

// A family of bijections σ^{z_ij}_a with precomputed row inverses.
struct SigmaFamily {
  Carrier carrier;
  ParamSet params;
  std::vector<elem> sigma;      // [((i*m+j)*n+a)*n+b] = σ^{z_ij}_a(b)
  std::vector<elem> sigma_inv;  // row inverses per (i,j,a)

  int size() const { return carrier.size; }
  int pcount() const { return params.count(); }
  elem sig(int i, int j, elem a, elem b) const {
    return sigma[(((long long)i * pcount() + j) * size() + a) * size() + b];
  }
  elem sig_inv(int i, int j, elem a, elem b) const {
    return sigma_inv[(((long long)i * pcount() + j) * size() + a) * size() + b];
  }
};

// Certifies every σ^{ij}_a bijective; throws NotBijective(i,j,a).
SigmaFamily sigma_family(Carrier carrier, ParamSet params,
                         std::vector<elem> sigma);
SigmaFamily identity_sigma(Carrier carrier, ParamSet params);

// τ^{ij}_b(a) = (σ^{ji}_{σ^{ij}_a(b)})^{-1}(σ^{ij}_a(b) ▷_{ij} a), the tau
// that makes (σ,τ) the twist image of the p-shelf solution.
std::vector<elem> tau_from_sigma(const SigmaFamily& s, const PShelf& p);

// Both admissibility conditions checked exhaustively, reported separately.
Report admissible_twist_verify(const SigmaFamily& s, const PShelf& p);

// The twisted solution R^{ij}(b,a) = (σ^{ij}_a(b), τ^{ij}_b(a)); refuses
// with NotAdmissible when the admissibility conditions fail, and re-verifies
// the produced tables directly.
ParamSolution twisted_solution(const PShelf& p, const SigmaFamily& s);
// Table construction without the admissibility gate (mutation testing).
std::pair<std::vector<elem>, std::vector<elem>> twisted_tables_unchecked(
    const PShelf& p, const SigmaFamily& s);

enum class SigmaMode { brace, skew };

// σ^{ij}_a(b) = z_i^{-1} - a∘z_i^{-1}∘z_j + a∘b∘z_j on a (skew) brace.
SigmaFamily brace_sigma(const SkewBrace& b, const ParamSet& y,
                        SigmaMode mode = SigmaMode::brace);
// σ^{ij}_a(b) = z_i^{-1} - ξ∘a∘z_i^{-1}∘z_j + a∘b∘ξ∘z_j; ξ must lie in the
// right distributor and commute with everything in (X,∘).
SigmaFamily affine_sigma(const SkewBrace& b, const ParamSet& y, elem xi);
// Core-family twists: σ^{ij}_a(b) = z_i^{-1} - a∘b∘z_j + a∘z_i^{-1}∘z_j and
// σ^{ij}_a(b) = a∘z_i^{-1}∘z_j - z_i^{-1} + a∘b∘z_j.
SigmaFamily core_sigma_a(const SkewBrace& b, const ParamSet& y);
SigmaFamily core_sigma_b(const SkewBrace& b, const ParamSet& y);

// Symmetric parameter-pair function h, stored as carrier elements that must
// be members of Y.
struct SymmetricH {
  int m = 0;
  std::vector<elem> h;  // h[i*m+j], h[i][j] == h[j][i]
  elem at(int i, int j) const { return h[(long long)i * m + j]; }
};
SymmetricH symmetric_h(const ParamSet& y, std::vector<elem> h);
SymmetricH symmetric_h_product(const GroupTable& circ, const ParamSet& y);

// a •_{z_ji} b := a ∘ (σ^{ij}_a)^{-1}(b) ∘ h(z_ij).  In reversible mode the
// structure-group and reversibility relations are preconditions and the
// symmetry a•_{ji}b = b•_{ij}a is asserted; with a shelf supplied the
// general identities a•_{ji}b = b•_{ij}(b▷_{ij}a) and
// a•_{ji}σ^{ij}_a(b) = a∘b∘h(z_ij) are asserted instead.
struct BulletResult {
  std::vector<elem> bullet;  // [((i*m+j)*n+a)*n+b] = a •_{z_ij} b
  Report report;
};
BulletResult bullet_from_sigma(const GroupTable& circ, const SigmaFamily& s,
                               const SymmetricH& h,
                               const PShelf* shelf = nullptr);

// Pair maps X×X → X×X indexed by ordered parameter pairs.
struct PairMapFamily {
  int m = 0, n = 0;
  std::vector<int> maps;  // maps[(i*m+j)*n*n + (a*n+b)] = a'*n+b'

  std::pair<elem, elem> apply(int i, int j, elem a, elem b) const {
    int code = maps[((long long)i * m + j) * n * n + (long long)a * n + b];
    return {code / n, code % n};
  }
  bool all_bijective() const;
};
PairMapFamily identity_pair_maps(int m, int n);
// φ^{z_ij}(a,b) = (a, σ^{z_ji}_a(b)).
PairMapFamily twist_pair_maps(const SigmaFamily& s);

// Checks φ^{ij} R^{ij} = S^{ij} ∘ flip ∘ φ^{ji} ∘ flip pointwise and reports
// D-equivalence when every φ^{ij} is a bijection.
Report is_d_twist(const PairMapFamily& phi, const ParamSolution& r,
                  const ParamSolution& s);

}  // namespace prack
