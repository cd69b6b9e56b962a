#include "prack/pbrace.hpp"

namespace prack {

namespace {

std::vector<elem> invert_rows(const std::vector<elem>& table, long long rows,
                              long long n, const char* code) {
  std::vector<elem> inv(table.size());
  for (long long r = 0; r < rows; ++r) {
    if (!is_permutation(table.data() + r * n, (int)n))
      throw validation_error(code, "map is not a bijection", {r});
    std::vector<elem> ri = invert_permutation(table.data() + r * n, (int)n);
    std::copy(ri.begin(), ri.end(), inv.begin() + r * n);
  }
  return inv;
}

}  // namespace

EtaFamily eta_family(GroupTable circ, ParamGroup py, std::vector<elem> eta) {
  const long long n = circ.size(), m = py.count();
  if (py.set.carrier.size != circ.size())
    throw validation_error("CarrierMismatch", "parameter carrier differs");
  if ((long long)eta.size() != m * m * n * n)
    throw validation_error("ShapeMismatch", "eta family must be m*m*n*n");
  EtaFamily e;
  e.eta_inv = invert_rows(eta, m * m * n, n, "NotBijective");
  e.circ = std::move(circ);
  e.py = std::move(py);
  e.eta = std::move(eta);
  return e;
}

EtaFamily identity_eta(const GroupTable& circ, ParamGroup py) {
  const long long n = circ.size(), m = py.count();
  std::vector<elem> t(m * m * n * n);
  for (long long r = 0; r < m * m * n; ++r)
    for (long long b = 0; b < n; ++b) t[r * n + b] = (elem)b;
  return eta_family(circ, std::move(py), std::move(t));
}

EtaFamily eta_from_sigma(const GroupTable& circ, const SigmaFamily& s) {
  ParamGroup py = param_group(circ, s.params.members);
  return eta_family(circ, std::move(py), s.sigma_inv);
}

Report eta_verify(const EtaFamily& e, EtaMode mode) {
  const long long n = e.size(), m = e.pcount();
  const GroupTable& g = e.circ;
  Report rep;
  rep.subject = mode == EtaMode::reversible ? "reversible p-affine structure"
                                            : "p-affine structure";
  long long bad_prod = find_first_fail(m * m * m * n * n * n, [&](long long q) {
    long long x = q % n, t = q / n;
    long long b = t % n;
    t /= n;
    long long a = t % n;
    t /= n;
    long long k = t % m;
    t /= m;
    long long j = t % m;
    long long i = t / m;
    return e.at((int)i, e.py.pidx((int)j, (int)k), g.op((elem)a, (elem)b),
                (elem)x) ==
           e.at((int)i, (int)j, (elem)b, e.at((int)i, (int)k, (elem)a, (elem)x));
  });
  rep.law("eta product law", bad_prod, {m, m, m, n, n, n});
  long long bad_sym2 = find_first_fail(m * m * m * n * n, [&](long long q) {
    long long x = q % n, t = q / n;
    long long c = t % n;
    t /= n;
    long long k = t % m;
    t /= m;
    long long j = t % m;
    long long i = t / m;
    return e.at((int)i, e.py.pidx((int)j, (int)k), (elem)c, (elem)x) ==
           e.at((int)i, e.py.pidx((int)k, (int)j), (elem)c, (elem)x);
  });
  rep.law("eta second-subscript product symmetry", bad_sym2, {m, m, m, n, n});
  auto add_general = [&]() {
    long long bad_zero = find_first_fail(m * n, [&](long long q) {
      long long a = q % n;
      long long j = q / n;
      return e.at(e.py.zero, (int)j, (elem)a, g.identity) == g.identity;
    });
    rep.law("eta zero law", bad_zero, {m, n});
    long long bad_comm = find_first_fail(m * m * m * n * n, [&](long long q) {
      long long x = q % n, t = q / n;
      long long a = t % n;
      t /= n;
      long long k = t % m;
      t /= m;
      long long j = t % m;
      long long i = t / m;
      return e.at(e.py.pidx((int)i, (int)j), (int)k, (elem)a, (elem)x) ==
             e.at(e.py.pidx((int)j, (int)i), (int)k, (elem)a, (elem)x);
    });
    rep.law("eta first-subscript product symmetry", bad_comm, {m, m, m, n, n});
    long long bad_gc = find_first_fail(m * m * m * n * n * n, [&](long long q) {
      long long c = q % n, t = q / n;
      long long b = t % n;
      t /= n;
      long long a = t % n;
      t /= n;
      long long k = t % m;
      t /= m;
      long long j = t % m;
      long long i = t / m;
      elem lhs = e.at(e.py.pidx((int)k, (int)j), (int)i, (elem)a,
                      g.op((elem)b, e.at((int)k, (int)j, (elem)b, (elem)c)));
      elem u = e.at((int)j, (int)i, (elem)a, (elem)b);
      elem rhs = g.op(u, e.at((int)k, (int)i, u,
                              e.at((int)k, (int)j, (elem)a, (elem)c)));
      return lhs == rhs;
    });
    rep.law("eta general compatibility", bad_gc, {m, m, m, n, n, n});
  };
  if (mode == EtaMode::reversible) {
    long long bad_rev = find_first_fail(m * m * n * n, [&](long long q) {
      long long b = q % n, t = q / n;
      long long a = t % n;
      t /= n;
      long long j = t % m;
      long long i = t / m;
      return g.op((elem)a, e.at((int)i, (int)j, (elem)a, (elem)b)) ==
             g.op((elem)b, e.at((int)j, (int)i, (elem)b, (elem)a));
    });
    rep.law("eta exchange relation (reversible)", bad_rev, {m, m, n, n});
    add_general();  // reversible structures satisfy the general laws too
  } else {
    add_general();
  }
  return rep;
}

PBraceTable make_p_brace_table(GroupTable circ, ParamGroup py,
                               std::vector<elem> plus) {
  const long long n = circ.size(), m = py.count();
  if ((long long)plus.size() != m * m * n * n)
    throw validation_error("ShapeMismatch", "plus table must be m*m*n*n");
  for (elem v : plus)
    if (v < 0 || v >= n)
      throw validation_error("RangeError", "plus entry out of range", {v});
  PBraceTable t;
  t.circ = std::move(circ);
  t.py = std::move(py);
  t.plus = std::move(plus);
  return t;
}

namespace {

PBraceTable table_from_eta(const EtaFamily& e) {
  const long long n = e.size(), m = e.pcount();
  std::vector<elem> plus(m * m * n * n);
  for (long long i = 0; i < m; ++i)
    for (long long j = 0; j < m; ++j)
      for (long long a = 0; a < n; ++a)
        for (long long b = 0; b < n; ++b)
          plus[((i * m + j) * n + a) * n + b] =
              e.plus((int)i, (int)j, (elem)a, (elem)b);
  return make_p_brace_table(e.circ, e.py, std::move(plus));
}

// Axioms shared by p-braces and skew p-braces.
void common_axioms(const PBraceTable& t, Report& rep) {
  const long long n = t.size(), m = t.pcount();
  const GroupTable& g = t.circ;
  long long bad1 = find_first_fail(m * m * m * n * n * n, [&](long long q) {
    long long c = q % n, tt = q / n;
    long long b = tt % n;
    tt /= n;
    long long a = tt % n;
    tt /= n;
    long long k = tt % m;
    tt /= m;
    long long j = tt % m;
    long long i = tt / m;
    elem lhs = t.add((int)k, t.py.pidx((int)i, (int)j),
                     t.add((int)i, (int)j, (elem)a, (elem)b), (elem)c);
    elem rhs = t.add(t.py.pidx((int)k, (int)i), (int)j, (elem)a,
                     t.add((int)k, (int)i, (elem)b, (elem)c));
    return lhs == rhs;
  });
  rep.law("addition axiom (1)", bad1, {m, m, m, n, n, n});
  long long badd = find_first_fail(m * m * m * n * n * n, [&](long long q) {
    long long c = q % n, tt = q / n;
    long long b = tt % n;
    tt /= n;
    long long a = tt % n;
    tt /= n;
    long long j = tt % m;
    tt /= m;
    long long i = tt % m;
    long long k = tt / m;
    elem lhs = g.op((elem)a, t.add((int)k, t.py.pidx((int)i, (int)j), (elem)b,
                                   (elem)c));
    elem rhs = t.add((int)k, (int)i, g.op((elem)a, (elem)b),
                     g.op((elem)a, t.add((int)k, (int)j, g.inv((elem)a),
                                         (elem)c)));
    return lhs == rhs;
  });
  rep.law("circle distributivity over the additions", badd,
          {m, m, m, n, n, n});
  long long badq = find_first_fail(m * m * n * n, [&](long long q) {
    long long b = q % n, tt = q / n;
    long long a = tt % n;
    tt /= n;
    long long j = tt % m;
    long long i = tt / m;
    int left = 0, right = 0;
    for (long long x = 0; x < n; ++x) {
      if (t.add((int)i, (int)j, (elem)x, (elem)a) == (elem)b) ++left;
      if (t.add((int)i, (int)j, (elem)a, (elem)x) == (elem)b) ++right;
    }
    return left == 1 && right == 1;
  });
  rep.law("every addition is a quasigroup", badq, {m, m, n, n});
  long long badl = find_first_fail(m * n, [&](long long q) {
    long long a = q % n;
    long long i = q / n;
    return t.add((int)i, t.py.zero, g.identity, (elem)a) == (elem)a;
  });
  rep.law("left identity of +_{i0}", badl, {m, n});
  long long badr = find_first_fail(m * n, [&](long long q) {
    long long a = q % n;
    long long i = q / n;
    return t.add(t.py.zero, (int)i, (elem)a, g.identity) == (elem)a;
  });
  rep.law("right identity of +_{0i}", badr, {m, n});
}

}  // namespace

Report p_brace_verify(const PBraceTable& t) {
  const long long n = t.size(), m = t.pcount();
  const GroupTable& g = t.circ;
  Report rep;
  rep.subject = "p-brace";
  common_axioms(t, rep);
  long long bad2 = find_first_fail(m * m * m * n * n, [&](long long q) {
    long long b = q % n, tt = q / n;
    long long a = tt % n;
    tt /= n;
    long long j = tt % m;
    tt /= m;
    long long k = tt % m;
    long long i = tt / m;
    elem v1 = t.add((int)i, t.py.pidx((int)k, (int)j), (elem)a, (elem)b);
    elem v2 = t.add((int)i, t.py.pidx((int)j, (int)k), (elem)a, (elem)b);
    elem v3 = t.add(t.py.pidx((int)j, (int)k), (int)i, (elem)b, (elem)a);
    return v1 == v2 && v2 == v3;
  });
  rep.law("addition axiom (2), commutation form", bad2, {m, m, m, n, n});
  long long bad4 = find_first_fail(m * m * n, [&](long long q) {
    long long a = q % n, tt = q / n;
    long long j = tt % m;
    long long i = tt / m;
    int count = 0;
    for (long long x = 0; x < n; ++x)
      if (t.add((int)i, (int)j, (elem)a, (elem)x) == g.identity) ++count;
    return count == 1;
  });
  rep.law("unique right opposite (4)", bad4, {m, m, n});
  return rep;
}

Report skew_p_brace_verify(const PBraceTable& t) {
  const long long n = t.size(), m = t.pcount();
  const GroupTable& g = t.circ;
  Report rep;
  rep.subject = "skew p-brace";
  common_axioms(t, rep);
  long long bad2 = find_first_fail(m * m * m * n * n, [&](long long q) {
    long long b = q % n, tt = q / n;
    long long a = tt % n;
    tt /= n;
    long long k = tt % m;
    tt /= m;
    long long j = tt % m;
    long long i = tt / m;
    return t.add((int)i, t.py.pidx((int)j, (int)k), (elem)a, (elem)b) ==
           t.add((int)i, t.py.pidx((int)k, (int)j), (elem)a, (elem)b);
  });
  rep.law("addition axiom (2), skew form", bad2, {m, m, m, n, n});
  long long bad4 = find_first_fail(m * m * n, [&](long long q) {
    long long a = q % n, tt = q / n;
    long long j = tt % m;
    long long i = tt / m;
    int rights = 0, lefts = 0;
    for (long long x = 0; x < n; ++x) {
      if (t.add((int)i, (int)j, (elem)a, (elem)x) == g.identity) ++rights;
      if (t.add((int)i, (int)j, (elem)x, (elem)a) == g.identity) ++lefts;
    }
    return rights == 1 && lefts == 1;
  });
  rep.law("unique two-sided opposites (4)", bad4, {m, m, n});
  return rep;
}

PBraceTable p_brace_from_eta(const EtaFamily& e) {
  Report er = eta_verify(e, EtaMode::reversible);
  if (!er.pass()) {
    const Condition* f = er.first_failure();
    throw validation_error("EtaVerifyFails", f->law, f->witness);
  }
  PBraceTable t = table_from_eta(e);
  Report br = p_brace_verify(t);
  if (!br.pass()) {
    const Condition* f = br.first_failure();
    throw std::logic_error("constructed table fails p-brace axiom: " + f->law);
  }
  return t;
}

PBraceTable skew_p_brace_from_eta(const EtaFamily& e) {
  Report er = eta_verify(e, EtaMode::general);
  if (!er.pass()) {
    const Condition* f = er.first_failure();
    throw validation_error("EtaVerifyFails", f->law, f->witness);
  }
  PBraceTable t = table_from_eta(e);
  Report br = skew_p_brace_verify(t);
  if (!br.pass()) {
    const Condition* f = br.first_failure();
    throw std::logic_error("constructed table fails skew p-brace axiom: " +
                           f->law);
  }
  return t;
}

EtaFamily eta_from_p_brace(const PBraceTable& t) {
  const long long n = t.size(), m = t.pcount();
  std::vector<elem> eta(m * m * n * n);
  for (long long i = 0; i < m; ++i)
    for (long long j = 0; j < m; ++j)
      for (long long a = 0; a < n; ++a)
        for (long long b = 0; b < n; ++b)
          eta[((i * m + j) * n + a) * n + b] = t.circ.op(
              t.circ.inv((elem)a), t.add((int)i, (int)j, (elem)a, (elem)b));
  return eta_family(t.circ, t.py, std::move(eta));
}

std::vector<elem> triangle_shelf_table(const EtaFamily& e) {
  const long long n = e.size(), m = e.pcount();
  const GroupTable& g = e.circ;
  std::vector<elem> out(m * m * n * n);
  for (long long i = 0; i < m; ++i) {
    int bi = e.py.pinv((int)i);
    for (long long j = 0; j < m; ++j)
      for (long long a = 0; a < n; ++a) {
        elem av = g.inv((elem)a);
        elem head = e.at((int)j, bi, av, av);
        for (long long b = 0; b < n; ++b)
          out[((i * m + j) * n + a) * n + b] = e.plus(
              e.py.zero, bi, head, e.plus((int)i, (int)j, (elem)b, (elem)a));
      }
  }
  return out;
}

Report lemma_prop_eta_check(const EtaFamily& e) {
  const long long n = e.size(), m = e.pcount();
  const GroupTable& g = e.circ;
  Report rep;
  rep.subject = "eta structural identities";
  long long bad1 = find_first_fail(m * m * m * n * n * n, [&](long long q) {
    long long c = q % n, t = q / n;
    long long b = t % n;
    t /= n;
    long long a = t % n;
    t /= n;
    long long i = t % m;
    t /= m;
    long long j = t % m;
    long long k = t / m;
    elem lhs = e.at(e.py.pidx((int)k, (int)j), (int)i, (elem)a,
                    e.plus((int)k, (int)j, (elem)b, (elem)c));
    elem rhs = e.plus((int)k, (int)i, e.at((int)j, (int)i, (elem)a, (elem)b),
                      e.at((int)k, (int)j, (elem)a, (elem)c));
    return lhs == rhs;
  });
  rep.law("eta identity (1)", bad1, {m, m, m, n, n, n});
  long long bad2 = find_first_fail(m * m * n * n, [&](long long q) {
    long long b = q % n, t = q / n;
    long long a = t % n;
    t /= n;
    long long j = t % m;
    long long i = t / m;
    return e.at_inv((int)i, (int)j, (elem)a, (elem)b) ==
           e.at((int)i, e.py.pinv((int)j), g.inv((elem)a), (elem)b);
  });
  rep.law("eta identity (2): inverse row", bad2, {m, m, n, n});
  long long bad3 = find_first_fail(m * n, [&](long long q) {
    long long a = q % n;
    long long i = q / n;
    int bi = e.py.pinv((int)i);
    elem av = g.inv((elem)a);
    return e.plus((int)i, bi, e.at(bi, bi, av, av), (elem)a) == g.identity;
  });
  rep.law("eta identity (3): left opposite", bad3, {m, n});
  long long bad4 = find_first_fail(m * m * m * n * n, [&](long long q) {
    long long b = q % n, t = q / n;
    long long a = t % n;
    t /= n;
    long long k = t % m;
    t /= m;
    long long i = t % m;
    long long j = t / m;
    elem av = g.inv((elem)a);
    elem lhs = e.plus((int)k, (int)i, e.at((int)j, (int)i, av, av),
                      g.op((elem)a, (elem)b));
    elem rhs = g.op((elem)a, e.plus(e.py.pidx((int)k, (int)j), (int)i, av,
                                    (elem)b));
    return lhs == rhs;
  });
  rep.law("eta identity (4)", bad4, {m, m, m, n, n});
  return rep;
}

ParamSolution solution_from_eta(const EtaFamily& e, EtaMode mode) {
  Report er = eta_verify(e, mode);
  if (!er.pass()) {
    const Condition* f = er.first_failure();
    throw validation_error("EtaVerifyFails", f->law, f->witness);
  }
  Report lm = lemma_prop_eta_check(e);
  for (const Condition& c : lm.conditions)
    if (c.law.rfind("eta identity (2)", 0) == 0 && !c.pass)
      throw validation_error("EtaInverseIdentityFails", c.law, c.witness);
  const long long n = e.size(), m = e.pcount();
  const GroupTable& g = e.circ;
  std::vector<elem> sigma = e.eta_inv;
  std::vector<elem> tau(m * m * n * n);
  for (long long i = 0; i < m; ++i)
    for (long long j = 0; j < m; ++j)
      for (long long b = 0; b < n; ++b)
        for (long long a = 0; a < n; ++a) {
          elem sv = sigma[((i * m + j) * n + a) * n + b];
          tau[((i * m + j) * n + b) * n + a] =
              g.op(g.op(g.inv(sv), (elem)a), (elem)b);
        }
  ParamSolution s =
      make_solution(g.carrier, e.py.set, std::move(sigma), std::move(tau));
  if (mode == EtaMode::reversible) {
    if (!s.flags.reversible)
      throw std::logic_error("reversible eta produced a non-reversible solution");
  } else {
    if (derived_shelf_table(s) != triangle_shelf_table(e))
      throw std::logic_error(
          "derived shelf differs from the closed-form shelf expression");
  }
  return s;
}

}  // namespace prack
