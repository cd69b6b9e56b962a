#pragma once
// Parametric set-theoretic solutions R^{z_ij}(b,a) = (σ^{z_ij}_a(b), τ^{z_ij}_b(a)),
// verified either by direct composition of the braided maps or through the
// equivalent σ/τ condition triple; the two verifiers form an oracle pair.

#include "prack/paramset.hpp"
#include "prack/pshelf.hpp"

namespace prack {

struct SolutionFlags {
  bool left_nondegenerate = false;
  bool nondegenerate = false;
  bool invertible = false;
  bool reversible = false;

  bool operator==(const SolutionFlags&) const = default;
};

struct ParamSolution {
  Carrier carrier;
  ParamSet params;
  std::vector<elem> sigma;  // sigma[((i*m+j)*n+a)*n+b] = σ^{z_i z_j}_a(b)
  std::vector<elem> tau;    // tau[((i*m+j)*n+b)*n+a]   = τ^{z_i z_j}_b(a)
  SolutionFlags flags;

  int size() const { return carrier.size; }
  int pcount() const { return params.count(); }
  elem sig(int i, int j, elem a, elem b) const {
    return sigma[(((long long)i * pcount() + j) * size() + a) * size() + b];
  }
  elem tu(int i, int j, elem b, elem a) const {
    return tau[(((long long)i * pcount() + j) * size() + b) * size() + a];
  }
  // R^{z_ij} on a pair, first slot = first argument of R.
  std::pair<elem, elem> apply(int i, int j, elem x, elem y) const {
    return {sig(i, j, y, x), tu(i, j, x, y)};
  }
  // R21 = flip ∘ R ∘ flip at the given parameter pair.
  std::pair<elem, elem> apply21(int i, int j, elem x, elem y) const {
    return {tu(i, j, y, x), sig(i, j, x, y)};
  }

  bool table_equal(const ParamSolution& o) const {
    return sigma == o.sigma && tau == o.tau;
  }
};

// R12 R13 R23 = R23 R13 R12 checked by explicit composition, rightmost
// factor first; witness order (z1,z2,z3,c,b,a).
Report solution_verify_direct(const Carrier& carrier, const ParamSet& params,
                              const std::vector<elem>& sigma,
                              const std::vector<elem>& tau);
Report solution_verify_direct(const ParamSolution& s);

// The equivalent three-condition form, each condition reported separately.
Report solution_verify_conditions(const Carrier& carrier,
                                  const ParamSet& params,
                                  const std::vector<elem>& sigma,
                                  const std::vector<elem>& tau);
Report solution_verify_conditions(const ParamSolution& s);

SolutionFlags property_flags(const Carrier& carrier, const ParamSet& params,
                             const std::vector<elem>& sigma,
                             const std::vector<elem>& tau);

// Verifies (direct + conditions, verdicts must agree) and caches flags.
ParamSolution make_solution(Carrier carrier, ParamSet params,
                            std::vector<elem> sigma, std::vector<elem> tau);

ParamSolution identity_solution(Carrier carrier, ParamSet params);

// σ^{ij}_a(b) = b, τ^{ij}_b(a) = b ▷_{ij} a; invertible and non-degenerate
// exactly when the p-shelf is a rack.
ParamSolution p_shelf_solution(const PShelf& p);

// a ▷_{ij} b := σ^{ji}_a(τ^{ij}_{(σ^{ij}_b)^{-1}(a)}(b)) for left
// non-degenerate solutions; the result is re-verified as a p-shelf.
PShelf derived_shelf(const ParamSolution& s);
std::vector<elem> derived_shelf_table(const ParamSolution& s);

}  // namespace prack
