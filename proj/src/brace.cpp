#include "prack/brace.hpp"

#include <algorithm>

namespace prack {

SkewBrace skew_brace_new(GroupTable add, GroupTable mul) {
  if (add.size() != mul.size() || add.carrier.labels != mul.carrier.labels)
    throw validation_error("CarrierMismatch",
                           "additive and multiplicative carriers differ");
  if (add.identity != mul.identity)
    throw validation_error("IdentityMismatch",
                           "additive and multiplicative identities differ",
                           {add.identity, mul.identity});

  SkewBrace b;
  b.add = std::move(add);
  b.mul = std::move(mul);
  b.zero = b.add.identity;

  const int n = b.size();
  auto dis = [&](long long q) {
    elem c = (elem)(q % n);
    elem bb = (elem)((q / n) % n);
    elem a = (elem)(q / ((long long)n * n));
    elem lhs = b.circ(a, b.plus(bb, c));
    elem rhs = b.plus(b.sub(b.circ(a, bb), a), b.circ(a, c));
    return lhs == rhs;
  };
  auto dis2 = [&](long long q) {
    elem c = (elem)(q % n);
    elem bb = (elem)((q / n) % n);
    elem a = (elem)(q / ((long long)n * n));
    elem lhs = b.circ(a, b.plus(bb, c));
    elem rhs = b.plus(b.circ(a, bb), b.circ(a, b.plus(b.circ_inv(a), c)));
    return lhs == rhs;
  };
  long long total = (long long)n * n * n;
  long long bad = find_first_fail(total, dis);
  long long bad2 = find_first_fail(total, dis2);
  if ((bad >= 0) != (bad2 >= 0))
    throw validation_error("DistributivityFormsDisagree",
                           "the two equivalent distributivity laws disagree",
                           {bad, bad2});
  if (bad >= 0)
    throw validation_error("DistributivityFails", "distributivity law fails",
                           decode_index(bad, {n, n, n}));
  return b;
}

SkewBrace trivial_brace(const GroupTable& g) {
  return skew_brace_new(g, g);
}

SkewBrace almost_trivial_brace(const GroupTable& g) {
  return skew_brace_new(g, opposite_group(g));
}

SkewBrace modular_brace(int n) {
  if (n < 1) throw validation_error("RangeError", "modular_brace needs n >= 1");
  if (n > 16)
    throw validation_error("RangeError", "modular_brace carrier too large");
  const long long mod = 1LL << n;
  const int sz = n == 1 ? 1 : (int)(mod / 2);
  std::vector<long long> residues;
  for (long long r = 1; r < mod; r += 2) residues.push_back(r);
  std::vector<std::string> labels;
  for (long long r : residues) labels.push_back(std::to_string(r));
  auto idx = [&](long long r) {
    r %= mod;
    if (r < 0) r += mod;
    return (elem)((r - 1) / 2);
  };
  std::vector<elem> addt((long long)sz * sz), mult((long long)sz * sz);
  for (int a = 0; a < sz; ++a)
    for (int bb = 0; bb < sz; ++bb) {
      addt[(long long)a * sz + bb] = idx(residues[a] - 1 + residues[bb]);
      mult[(long long)a * sz + bb] = idx(residues[a] * residues[bb]);
    }
  Carrier c(sz, labels);
  return skew_brace_new(group_from_table(c, std::move(addt)),
                        group_from_table(c, std::move(mult)));
}

elem modular_residue_index(int n, long long residue) {
  const long long mod = 1LL << n;
  residue %= mod;
  if (residue < 0) residue += mod;
  if (residue % 2 == 0)
    throw validation_error("RangeError", "even residue is not invertible");
  return (elem)((residue - 1) / 2);
}

bool is_brace(const SkewBrace& b) { return is_abelian(b.add); }

std::vector<elem> right_distributor(const SkewBrace& b) {
  const int n = b.size();
  std::vector<elem> out;
  for (elem z = 0; z < n; ++z) {
    bool ok = true;
    for (elem a = 0; a < n && ok; ++a)
      for (elem bb = 0; bb < n && ok; ++bb) {
        elem lhs = b.circ(b.plus(a, bb), z);
        elem rhs = b.plus(b.sub(b.circ(a, z), z), b.circ(bb, z));
        ok = lhs == rhs;
      }
    if (ok) out.push_back(z);
  }
  // closure under ∘ and inverses
  for (elem z : out) {
    if (!contains(out, b.circ_inv(z)))
      throw std::logic_error("right distributor not closed under inverse");
    for (elem w : out)
      if (!contains(out, b.circ(z, w)))
        throw std::logic_error("right distributor not closed under product");
  }
  if (!contains(out, b.zero))
    throw std::logic_error("right distributor misses the identity");
  return out;
}

std::vector<elem> additive_center(const SkewBrace& b) {
  const int n = b.size();
  std::vector<elem> out;
  for (elem z = 0; z < n; ++z) {
    bool ok = true;
    for (elem a = 0; a < n && ok; ++a) ok = b.plus(a, z) == b.plus(z, a);
    if (ok) out.push_back(z);
  }
  return out;
}

std::vector<elem> fix_set(const SkewBrace& b) {
  const int n = b.size();
  std::vector<elem> out;
  for (elem z = 0; z < n; ++z) {
    bool ok = true;
    for (elem a = 0; a < n && ok; ++a) ok = b.circ(a, z) == b.plus(a, z);
    if (ok) out.push_back(z);
  }
  std::vector<elem> dist = right_distributor(b);
  for (elem z : out)
    if (!contains(dist, z))
      throw std::logic_error("fix set escapes the right distributor");
  return out;
}

bool contains(const std::vector<elem>& sorted_set, elem x) {
  return std::binary_search(sorted_set.begin(), sorted_set.end(), x);
}

}  // namespace prack
