#pragma once
// Parameter sets Y ⊆ X with an involution μ, and the subgroup view used
// wherever composite parameter subscripts (products, inverses) appear.

#include "prack/group.hpp"

namespace prack {

struct ParamSet {
  Carrier carrier;            // ambient X
  std::vector<elem> members;  // ordered, distinct, nonempty
  std::vector<int> mu;        // involution on member positions

  int count() const { return (int)members.size(); }
  elem z(int i) const { return members[i]; }
  int bar(int i) const { return mu[i]; }
  int position_of(elem x) const;  // -1 when x is not a member

  bool operator==(const ParamSet&) const = default;
};

ParamSet param_set_identity(Carrier carrier, std::vector<elem> members);
ParamSet param_set_explicit(Carrier carrier, std::vector<elem> members,
                            std::vector<int> mu);
// μ(z) = z^{-1} in the given group; members must be closed under inverse.
ParamSet param_set_circle_inverse(const GroupTable& circ,
                                  std::vector<elem> members);

// Y viewed as a subgroup of (X,∘): every product and inverse of members is
// again a member, with position arithmetic precomputed.  μ is pinned to the
// ∘-inverse and z_0 to the identity member.
struct ParamGroup {
  ParamSet set;
  std::vector<int> prod;  // count*count -> position of z_i ∘ z_j
  std::vector<int> inv;   // position of z_i^{-1}
  int zero = 0;           // position of the ∘-identity

  int count() const { return set.count(); }
  int pidx(int i, int j) const { return prod[(long long)i * count() + j]; }
  int pinv(int i) const { return inv[i]; }
};

ParamGroup param_group(const GroupTable& circ, std::vector<elem> members);

}  // namespace prack
