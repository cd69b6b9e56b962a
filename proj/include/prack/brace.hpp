#pragma once
// Skew braces: two group structures on one carrier linked by the
// distributivity law a∘(b+c) = a∘b - a + a∘c, plus the derived subsets
// (right distributor, additive center, fix set) gating the constructions.

#include "prack/group.hpp"

namespace prack {

struct SkewBrace {
  GroupTable add;  // (X, +)
  GroupTable mul;  // (X, ∘)
  elem zero = 0;   // shared identity

  int size() const { return add.size(); }
  elem plus(elem a, elem b) const { return add.op(a, b); }
  elem neg(elem a) const { return add.inv(a); }
  elem sub(elem a, elem b) const { return add.op(a, add.inv(b)); }
  elem circ(elem a, elem b) const { return mul.op(a, b); }
  elem circ_inv(elem a) const { return mul.inv(a); }
};

// Checks IdentityMismatch and both equivalent forms of the distributivity
// law over all triples; the two forms must give the same verdict.
SkewBrace skew_brace_new(GroupTable add, GroupTable mul);

SkewBrace trivial_brace(const GroupTable& g);         // (G, +, +)
SkewBrace almost_trivial_brace(const GroupTable& g);  // (G, +, +^op)

// The brace of invertible residues mod 2^n with a +1 b = a-1+b and
// a∘b = ab; the carrier lists the 2^(n-1) odd residues in ascending order.
SkewBrace modular_brace(int n);
elem modular_residue_index(int n, long long residue);

bool is_brace(const SkewBrace& b);  // additive group abelian

// All z with (a+b)∘z = a∘z - z + b∘z for every a, b; verified to be a
// subgroup of (X,∘).
std::vector<elem> right_distributor(const SkewBrace& b);
std::vector<elem> additive_center(const SkewBrace& b);
// All z with a∘z = a + z for every a; always inside the right distributor.
std::vector<elem> fix_set(const SkewBrace& b);

bool contains(const std::vector<elem>& sorted_set, elem x);

}  // namespace prack
