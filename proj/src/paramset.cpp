#include "prack/paramset.hpp"

#include <set>

namespace prack {

namespace {

void check_members(const Carrier& carrier, const std::vector<elem>& members) {
  if (members.empty())
    throw validation_error("EmptyParamSet", "parameter set must be nonempty");
  std::set<elem> seen;
  for (elem m : members) {
    if (m < 0 || m >= carrier.size)
      throw validation_error("RangeError", "parameter member out of range", {m});
    if (!seen.insert(m).second)
      throw validation_error("DuplicateMember", "parameter members repeat", {m});
  }
}

}  // namespace

int ParamSet::position_of(elem x) const {
  for (int i = 0; i < count(); ++i)
    if (members[i] == x) return i;
  return -1;
}

ParamSet param_set_identity(Carrier carrier, std::vector<elem> members) {
  check_members(carrier, members);
  ParamSet p;
  p.carrier = std::move(carrier);
  p.members = std::move(members);
  p.mu = identity_permutation(p.count());
  return p;
}

ParamSet param_set_explicit(Carrier carrier, std::vector<elem> members,
                            std::vector<int> mu) {
  check_members(carrier, members);
  const int m = (int)members.size();
  if ((int)mu.size() != m)
    throw validation_error("NotInvolutive", "mu table size mismatch");
  for (int p : mu)
    if (p < 0 || p >= m)
      throw validation_error("NotInvolutive", "mu position out of range", {p});
  for (int i = 0; i < m; ++i)
    if (mu[mu[i]] != i)
      throw validation_error("NotInvolutive", "mu is not an involution", {i});
  ParamSet p;
  p.carrier = std::move(carrier);
  p.members = std::move(members);
  p.mu = std::move(mu);
  return p;
}

ParamSet param_set_circle_inverse(const GroupTable& circ,
                                  std::vector<elem> members) {
  check_members(circ.carrier, members);
  const int m = (int)members.size();
  std::vector<int> mu(m, -1);
  ParamSet p;
  p.carrier = circ.carrier;
  p.members = std::move(members);
  for (int i = 0; i < m; ++i) {
    elem zi = circ.inv(p.members[i]);
    int pos = -1;
    for (int j = 0; j < m; ++j)
      if (p.members[j] == zi) pos = j;
    if (pos < 0)
      throw validation_error("NotClosedUnderInverse",
                             "member inverse escapes the parameter set",
                             {p.members[i]});
    mu[i] = pos;
  }
  p.mu = std::move(mu);
  return p;  // inversion is involutive, so mu is too
}

ParamGroup param_group(const GroupTable& circ, std::vector<elem> members) {
  ParamGroup g;
  g.set = param_set_circle_inverse(circ, std::move(members));
  const int m = g.count();
  g.zero = g.set.position_of(circ.identity);
  if (g.zero < 0)
    throw validation_error("YNotClosed", "parameter set misses the identity");
  g.prod.assign((long long)m * m, -1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int pos = g.set.position_of(circ.op(g.set.z(i), g.set.z(j)));
      if (pos < 0)
        throw validation_error("YNotClosed",
                               "parameter set not closed under products",
                               {i, j});
      g.prod[(long long)i * m + j] = pos;
    }
  g.inv.resize(m);
  for (int i = 0; i < m; ++i) g.inv[i] = g.set.mu[i];
  return g;
}

}  // namespace prack
