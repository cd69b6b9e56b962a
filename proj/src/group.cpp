#include "prack/group.hpp"

namespace prack {

GroupTable group_from_table(Carrier carrier, std::vector<elem> table) {
  const int n = carrier.size;
  if ((long long)table.size() != (long long)n * n)
    throw validation_error("ShapeMismatch", "group table must be size*size");
  for (elem v : table)
    if (v < 0 || v >= n)
      throw validation_error("RangeError", "group table entry out of range");

  GroupTable g;
  g.carrier = std::move(carrier);
  g.table = std::move(table);

  // two-sided identity
  elem e = -1;
  for (elem a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (elem b = 0; b < n; ++b)
      if (g.op(a, b) != b || g.op(b, a) != b) {
        ok = false;
        break;
      }
    if (ok) e = a;
  }
  if (e < 0) throw validation_error("NoIdentity", "no two-sided identity");
  g.identity = e;

  // rows and columns must be permutations
  for (elem a = 0; a < n; ++a) {
    if (!is_permutation(g.table.data() + (long long)a * n, n))
      throw validation_error("NotBijectiveRow", "row is not a permutation", {a});
    std::vector<elem> col(n);
    for (elem b = 0; b < n; ++b) col[b] = g.op(b, a);
    if (!is_permutation(col))
      throw validation_error("NotBijectiveRow", "column is not a permutation",
                             {a});
  }

  long long bad = find_first_fail((long long)n * n * n, [&](long long q) {
    elem c = (elem)(q % n);
    elem b = (elem)((q / n) % n);
    elem a = (elem)(q / ((long long)n * n));
    return g.op(g.op(a, b), c) == g.op(a, g.op(b, c));
  });
  if (bad >= 0)
    throw validation_error("NotAssociative", "operation is not associative",
                           decode_index(bad, {n, n, n}));

  g.inverse.assign(n, -1);
  for (elem a = 0; a < n; ++a) {
    for (elem b = 0; b < n; ++b)
      if (g.op(a, b) == e && g.op(b, a) == e) {
        g.inverse[a] = b;
        break;
      }
    if (g.inverse[a] < 0)
      throw validation_error("NoInverse", "element has no inverse", {a});
  }
  return g;
}

GroupTable cyclic_group(int n) {
  Carrier c(n);
  std::vector<elem> t((long long)n * n);
  for (elem a = 0; a < n; ++a)
    for (elem b = 0; b < n; ++b) t[(long long)a * n + b] = (a + b) % n;
  return group_from_table(std::move(c), std::move(t));
}

GroupTable symmetric_group_s3() {
  // permutations of {0,1,2} listed as images (p[0],p[1],p[2])
  static const int perms[6][3] = {{0, 1, 2}, {1, 0, 2}, {0, 2, 1},
                                  {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  auto find = [&](const int* p) {
    for (int i = 0; i < 6; ++i)
      if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2])
        return i;
    return -1;
  };
  std::vector<elem> t(36);
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      int comp[3];  // (a*b)(x) = a(b(x))
      for (int x = 0; x < 3; ++x) comp[x] = perms[a][perms[b][x]];
      t[a * 6 + b] = find(comp);
    }
  Carrier c(6, {"e", "(01)", "(12)", "(02)", "(012)", "(021)"});
  return group_from_table(std::move(c), std::move(t));
}

GroupTable opposite_group(const GroupTable& g) {
  const int n = g.size();
  std::vector<elem> t((long long)n * n);
  for (elem a = 0; a < n; ++a)
    for (elem b = 0; b < n; ++b) t[(long long)a * n + b] = g.op(b, a);
  return group_from_table(g.carrier, std::move(t));
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
  const int ng = g.size(), nh = h.size(), n = ng * nh;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int a = 0; a < ng; ++a)
    for (int b = 0; b < nh; ++b)
      labels.push_back(g.carrier.labels[a] + "|" + h.carrier.labels[b]);
  std::vector<elem> t((long long)n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int a1 = a / nh, a2 = a % nh, b1 = b / nh, b2 = b % nh;
      t[(long long)a * n + b] = g.op(a1, b1) * nh + h.op(a2, b2);
    }
  return group_from_table(Carrier(n, std::move(labels)), std::move(t));
}

bool is_abelian(const GroupTable& g) {
  const int n = g.size();
  for (elem a = 0; a < n; ++a)
    for (elem b = a + 1; b < n; ++b)
      if (g.op(a, b) != g.op(b, a)) return false;
  return true;
}

bool commutes(const GroupTable& g, elem a, elem b) {
  return g.op(a, b) == g.op(b, a);
}

}  // namespace prack
