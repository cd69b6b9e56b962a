#include "prack/shelf.hpp"

namespace prack {

Report shelf_check(const Carrier& carrier, const std::vector<elem>& table) {
  const int n = carrier.size;
  Report r;
  r.subject = "shelf";
  if ((long long)table.size() != (long long)n * n) {
    r.add({"table shape", false, {(long long)table.size()}, "expected n*n"});
    return r;
  }
  for (elem v : table)
    if (v < 0 || v >= n) {
      r.add({"table range", false, {v}, ""});
      return r;
    }
  auto op = [&](elem a, elem b) { return table[(long long)a * n + b]; };
  long long bad = find_first_fail((long long)n * n * n, [&](long long q) {
    elem c = (elem)(q % n);
    elem b = (elem)((q / n) % n);
    elem a = (elem)(q / ((long long)n * n));
    return op(a, op(b, c)) == op(op(a, b), op(a, c));
  });
  r.law("left self-distributivity", bad, {n, n, n});
  return r;
}

Shelf shelf_from_table(Carrier carrier, std::vector<elem> table) {
  Report r = shelf_check(carrier, table);
  if (!r.pass()) {
    const Condition* f = r.first_failure();
    throw validation_error("SelfDistributivityFails", f->law, f->witness);
  }
  Shelf s;
  s.carrier = std::move(carrier);
  s.table = std::move(table);
  const int n = s.size();
  s.rack = true;
  for (elem a = 0; a < n && s.rack; ++a)
    s.rack = is_permutation(s.table.data() + (long long)a * n, n);
  s.quandle = s.rack;
  for (elem a = 0; a < n && s.quandle; ++a) s.quandle = s.op(a, a) == a;
  return s;
}

Shelf trivial_shelf(Carrier carrier) {
  const int n = carrier.size;
  std::vector<elem> t((long long)n * n);
  for (elem a = 0; a < n; ++a)
    for (elem b = 0; b < n; ++b) t[(long long)a * n + b] = b;
  return shelf_from_table(std::move(carrier), std::move(t));
}

Shelf core_quandle(const GroupTable& g) {
  const int n = g.size();
  std::vector<elem> t((long long)n * n);
  for (elem a = 0; a < n; ++a)
    for (elem b = 0; b < n; ++b)
      t[(long long)a * n + b] = g.op(g.op(a, g.inv(b)), a);
  return shelf_from_table(g.carrier, std::move(t));
}

Shelf conjugation_quandle(const GroupTable& g) {
  const int n = g.size();
  std::vector<elem> t((long long)n * n);
  for (elem a = 0; a < n; ++a)
    for (elem b = 0; b < n; ++b)
      t[(long long)a * n + b] = g.op(g.op(g.inv(a), b), a);
  return shelf_from_table(g.carrier, std::move(t));
}

bool AlphaFamily::all_bijective() const {
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (!is_permutation(maps.data() + ((long long)i * m + j) * n, n))
        return false;
  return true;
}

AlphaFamily alpha_family(int m, int n, std::vector<elem> maps) {
  if ((long long)maps.size() != (long long)m * m * n)
    throw validation_error("ShapeMismatch", "alpha family must be m*m*n");
  for (elem v : maps)
    if (v < 0 || v >= n)
      throw validation_error("RangeError", "alpha value out of range", {v});
  AlphaFamily a;
  a.m = m;
  a.n = n;
  a.maps = std::move(maps);
  return a;
}

AlphaFamily alpha_identity(int m, int n) {
  std::vector<elem> maps((long long)m * m * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (elem a = 0; a < n; ++a) maps[((long long)i * m + j) * n + a] = a;
  return alpha_family(m, n, std::move(maps));
}

}  // namespace prack
