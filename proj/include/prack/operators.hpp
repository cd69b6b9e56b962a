#pragma once
// Magma bundles (•, R, g, ĝ, K): the five operator axioms tying a bullet
// operation to a p-rack operator and its reflection operator, solvers that
// recover the g / ĝ families from the axioms, and the coideal identity.

#include "prack/brace.hpp"
#include "prack/reflection.hpp"

namespace prack {

struct MagmaBundle {
  Carrier carrier;
  ParamSet params;
  std::vector<elem> bullet;  // [((i*m+j)*n+a)*n+b] = a •_{z_ij} b
  std::vector<elem> tau;     // [((i*m+j)*n+b)*n+a] = τ^{z_ij}_b(a) = b ▷_{ij} a
  std::vector<elem> g;       // [(((i*m+j)*m+k)*n+c)*n+x] = g^{z_ijk}_c(x)
  std::vector<elem> ghat;
  ReflectionFamily reflection;
  bool g_solved = false;     // provenance: supplied vs recovered
  bool ghat_solved = false;

  int size() const { return carrier.size; }
  int pcount() const { return params.count(); }
  elem bul(int i, int j, elem a, elem b) const {
    return bullet[(((long long)i * pcount() + j) * size() + a) * size() + b];
  }
  elem tu(int i, int j, elem b, elem a) const {
    return tau[(((long long)i * pcount() + j) * size() + b) * size() + a];
  }
  elem gv(int i, int j, int k, elem c, elem x) const {
    const long long m = pcount(), n = size();
    return g[((((long long)i * m + j) * m + k) * n + c) * n + x];
  }
  elem ghv(int i, int j, int k, elem c, elem x) const {
    const long long m = pcount(), n = size();
    return ghat[((((long long)i * m + j) * m + k) * n + c) * n + x];
  }
};

// Shape/symmetry/bijectivity pre-validation plus axioms (1)-(5); passing
// bundles also get their K cross-checked against the rack conditions and
// the direct reflection equation for R.
Report magma_verify(const MagmaBundle& b);

// Attempts to recover a family from axiom (2) (for g) or (3) (for ĝ).
// IllDefined: two preimages under • force different values; NotSurjective:
// some slot of • misses an element, leaving the family ambiguous there.
struct SolveResult {
  bool ok = false;
  std::string issue;                // "", "IllDefined" or "NotSurjective"
  std::vector<long long> witness;
  std::vector<elem> table;
};
SolveResult solve_g(const MagmaBundle& b);
SolveResult solve_ghat(const MagmaBundle& b);

// The two-row coideal identity; it must hold for every bundle passing
// magma_verify, so a failure signals a library bug rather than bad data.
Report coideal_check(const MagmaBundle& b);

// The skew-brace bundle: a•_{ij}b = a∘z_i + b∘z_j, τ from the conjugate
// p-rack, ĝ^{ijk}_b(a) = b ▷_{0k} a, g recovered from axiom (2), and the
// brace reflection κ^{z_i}(a) = a∘z_i^{-1}∘z_i^{-1} + mζ.
MagmaBundle skew_brace_bundle(const SkewBrace& b, const ParamSet& y, elem zeta,
                              int multiple);
// Identity bundle over an abelian group with • = ∘ (trivial instance).
MagmaBundle trivial_bundle(const GroupTable& g, const ParamSet& y);

}  // namespace prack
