#pragma once
// Parametric affine structures η^{z_ij} on a group (X,∘) and the p-brace /
// skew p-brace tables they induce, with composite parameter subscripts
// resolved through the subgroup structure of Y.

#include "prack/solution.hpp"
#include "prack/twist.hpp"

namespace prack {

enum class EtaMode { reversible, general };

struct EtaFamily {
  GroupTable circ;  // (X, ∘)
  ParamGroup py;    // Y ≤ (X,∘) with position arithmetic
  std::vector<elem> eta;      // [((i*m+j)*n+a)*n+b] = η^{z_i z_j}_a(b)
  std::vector<elem> eta_inv;  // row inverses per (i,j,a)

  int size() const { return circ.size(); }
  int pcount() const { return py.count(); }
  elem at(int i, int j, elem a, elem b) const {
    return eta[(((long long)i * pcount() + j) * size() + a) * size() + b];
  }
  elem at_inv(int i, int j, elem a, elem b) const {
    return eta_inv[(((long long)i * pcount() + j) * size() + a) * size() + b];
  }
  elem plus(int i, int j, elem a, elem b) const {  // a +_{ij} b = a∘η^{ij}_a(b)
    return circ.op(a, at(i, j, a, b));
  }
};

EtaFamily eta_family(GroupTable circ, ParamGroup py, std::vector<elem> eta);
EtaFamily identity_eta(const GroupTable& circ, ParamGroup py);
// η^{ij}_a := (σ^{ij}_a)^{-1}; Y must be a subgroup of the brace's (X,∘).
EtaFamily eta_from_sigma(const GroupTable& circ, const SigmaFamily& s);

// Reversible mode: product law and the exchange relation
// a∘η^{ij}_a(b) = b∘η^{ji}_b(a).  General mode: product law, zero law,
// parameter symmetry and the general compatibility relation.  When
// reversible is claimed, the general-mode laws are checked as well.
Report eta_verify(const EtaFamily& e, EtaMode mode);

struct PBraceTable {
  GroupTable circ;
  ParamGroup py;
  std::vector<elem> plus;  // [((i*m+j)*n+a)*n+b] = a +_{ij} b

  int size() const { return circ.size(); }
  int pcount() const { return py.count(); }
  elem add(int i, int j, elem a, elem b) const {
    return plus[(((long long)i * pcount() + j) * size() + a) * size() + b];
  }
  bool table_equal(const PBraceTable& o) const { return plus == o.plus; }
};

PBraceTable make_p_brace_table(GroupTable circ, ParamGroup py,
                               std::vector<elem> plus);

// a +_{ij} b := a∘η^{ij}_a(b); the output is re-verified axiom by axiom.
PBraceTable p_brace_from_eta(const EtaFamily& e);
PBraceTable skew_p_brace_from_eta(const EtaFamily& e);

// Axioms (1)-(4), the circle distributivity law, the quasigroup property of
// every addition and the one-sided identity facts, reported separately.
Report p_brace_verify(const PBraceTable& t);
Report skew_p_brace_verify(const PBraceTable& t);

// η^{ij}_a(b) := a^{-1}∘(a +_{ij} b); round-trips with the constructions.
EtaFamily eta_from_p_brace(const PBraceTable& t);

// σ^{ij}_a := (η^{ij}_a)^{-1}, τ^{ij}_b(a) := σ^{ij}_a(b)^{-1}∘a∘b.  In
// reversible mode the solution must come out reversible; in general mode the
// derived shelf must match the closed-form shelf expression.
ParamSolution solution_from_eta(const EtaFamily& e, EtaMode mode);

// a ▷_{ij} b = η^{z_{j ī}}_{a^{-1}}(a^{-1}) +_{0 ī} (b +_{ij} a).
std::vector<elem> triangle_shelf_table(const EtaFamily& e);

// The four eta identities used by the solution construction.
Report lemma_prop_eta_check(const EtaFamily& e);

}  // namespace prack
