#include "prack/reflection.hpp"

#include <tuple>

namespace prack {

namespace {

void require_family_shape(const Carrier& carrier, const ParamSet& params,
                          const std::vector<elem>& kappa) {
  const long long n = carrier.size, m = params.count();
  if (params.carrier.size != carrier.size)
    throw validation_error("CarrierMismatch", "parameter carrier differs");
  if ((long long)kappa.size() != m * n)
    throw validation_error("ShapeMismatch", "kappa table must be m*n");
  for (elem v : kappa)
    if (v < 0 || v >= n)
      throw validation_error("RangeError", "kappa entry out of range", {v});
}

void require_shared(const ReflectionFamily& k, const Carrier& carrier,
                    const ParamSet& params) {
  if (k.size() != carrier.size || k.pcount() != params.count() ||
      k.params.members != params.members || k.params.mu != params.mu)
    throw validation_error("CarrierMismatch",
                           "reflection family and solution structures differ");
}

}  // namespace

ReflectionFamily reflection_family(Carrier carrier, ParamSet params,
                                   std::vector<elem> kappa) {
  require_family_shape(carrier, params, kappa);
  ReflectionFamily k;
  const long long n = carrier.size, m = params.count();
  k.bijective = true;
  for (long long i = 0; i < m; ++i)
    if (!is_permutation(kappa.data() + i * n, (int)n)) k.bijective = false;
  k.carrier = std::move(carrier);
  k.params = std::move(params);
  k.kappa = std::move(kappa);
  return k;
}

ReflectionFamily identity_reflection(Carrier carrier, ParamSet params) {
  const long long n = carrier.size, m = params.count();
  std::vector<elem> kp(m * n);
  for (long long i = 0; i < m; ++i)
    for (long long a = 0; a < n; ++a) kp[i * n + a] = (elem)a;
  return reflection_family(std::move(carrier), std::move(params), std::move(kp));
}

Report reflection_verify_direct(const ReflectionFamily& k,
                                const ParamSolution& s) {
  require_shared(k, s.carrier, s.params);
  const long long n = s.size(), m = s.pcount();
  const ParamSet& y = s.params;
  Report rep;
  rep.subject = "parametric reflection equation (direct composition)";
  long long bad = find_first_fail(m * m * n * n, [&](long long q) {
    long long b = q % n, t = q / n;
    long long a = t % n;
    t /= n;
    long long z2 = t % m;
    long long z1 = t / m;
    int b1 = y.bar((int)z1), b2 = y.bar((int)z2);
    // R12 K1 R21 K2, rightmost first
    elem lx = (elem)a, ly = k.k((int)z2, (elem)b);
    std::tie(lx, ly) = s.apply21((int)z2, b1, lx, ly);
    lx = k.k((int)z1, lx);
    std::tie(lx, ly) = s.apply((int)z1, (int)z2, lx, ly);
    // K2 R12 K1 R21, rightmost first
    auto [rx, ry] = s.apply21(b2, b1, (elem)a, (elem)b);
    rx = k.k((int)z1, rx);
    std::tie(rx, ry) = s.apply((int)z1, b2, rx, ry);
    ry = k.k((int)z2, ry);
    return lx == rx && ly == ry;
  });
  rep.law("reflection equation", bad, {m, m, n, n});
  return rep;
}

Report reflection_conditions_shelf(const ReflectionFamily& k, const PShelf& p) {
  require_shared(k, p.carrier, p.params);
  const long long n = p.size(), m = p.pcount();
  const ParamSet& y = p.params;
  Report rep;
  rep.subject = "shelf reflection conditions";
  std::vector<long long> dims{m, m, n, n};
  long long bad1 = find_first_fail(m * m * n * n, [&](long long q) {
    long long b = q % n, t = q / n;
    long long a = t % n;
    t /= n;
    long long j = t % m;
    long long i = t / m;
    int bi = y.bar((int)i), bj = y.bar((int)j);
    elem u = k.k((int)i, p.op(bj, bi, (elem)b, (elem)a));
    return p.op((int)i, (int)j, u, k.k((int)j, (elem)b)) ==
           k.k((int)j, p.op((int)i, bj, u, (elem)b));
  });
  rep.law("shelf reflection condition (i)", bad1, dims);
  long long bad2 = find_first_fail(m * m * n * n, [&](long long q) {
    long long b = q % n, t = q / n;
    long long a = t % n;
    t /= n;
    long long j = t % m;
    long long i = t / m;
    int bi = y.bar((int)i), bj = y.bar((int)j);
    return k.k((int)i, p.op((int)j, bi, k.k((int)j, (elem)b), (elem)a)) ==
           k.k((int)i, p.op(bj, bi, (elem)b, (elem)a));
  });
  rep.law("shelf reflection condition (ii)", bad2, dims);
  return rep;
}

Report reflection_conditions_shelf_bijective(const ReflectionFamily& k,
                                             const PShelf& p) {
  require_shared(k, p.carrier, p.params);
  if (!k.bijective)
    throw validation_error("NotBijective",
                           "bijective-form conditions need a bijective family");
  const long long n = p.size(), m = p.pcount();
  const ParamSet& y = p.params;
  Report rep;
  rep.subject = "bijective shelf reflection conditions";
  std::vector<long long> dims{m, m, n, n};
  long long bad1 = find_first_fail(m * m * n * n, [&](long long q) {
    long long b = q % n, t = q / n;
    long long a = t % n;
    t /= n;
    long long j = t % m;
    long long i = t / m;
    int bj = y.bar((int)j);
    elem x = p.op(bj, (int)i, (elem)b, (elem)a);
    return p.op((int)i, (int)j, x, k.k((int)j, (elem)b)) ==
           k.k((int)j, p.op((int)i, bj, x, (elem)b));
  });
  rep.law("bijective reflection condition (i)", bad1, dims);
  long long bad2 = find_first_fail(m * m * n * n, [&](long long q) {
    long long b = q % n, t = q / n;
    long long a = t % n;
    t /= n;
    long long j = t % m;
    long long i = t / m;
    int bi = y.bar((int)i);
    return p.op((int)i, (int)j, k.k((int)i, (elem)a), (elem)b) ==
           p.op(bi, (int)j, (elem)a, (elem)b);
  });
  rep.law("bijective reflection condition (ii)", bad2, dims);
  return rep;
}

Report reflection_conditions_rack(const ReflectionFamily& k, const PShelf& p) {
  require_shared(k, p.carrier, p.params);
  if (!k.bijective)
    throw validation_error("NotBijective",
                           "rack-form conditions need a bijective family");
  if (!p.rack)
    throw validation_error("NotARack", "rack-form conditions need a p-rack");
  const long long n = p.size(), m = p.pcount();
  const ParamSet& y = p.params;
  Report rep;
  rep.subject = "rack reflection conditions";
  std::vector<long long> dims{m, m, n, n};
  long long bad1 = find_first_fail(m * m * n * n, [&](long long q) {
    long long b = q % n, t = q / n;
    long long a = t % n;
    t /= n;
    long long j = t % m;
    long long i = t / m;
    int bj = y.bar((int)j);
    return p.op((int)i, (int)j, (elem)a, k.k((int)j, (elem)b)) ==
           k.k((int)j, p.op((int)i, bj, (elem)a, (elem)b));
  });
  rep.law("rack reflection condition (i)", bad1, dims);
  long long bad2 = find_first_fail(m * m * n * n, [&](long long q) {
    long long b = q % n, t = q / n;
    long long a = t % n;
    t /= n;
    long long j = t % m;
    long long i = t / m;
    int bi = y.bar((int)i);
    return p.op((int)i, (int)j, k.k((int)i, (elem)a), (elem)b) ==
           p.op(bi, (int)j, (elem)a, (elem)b);
  });
  rep.law("rack reflection condition (ii)", bad2, dims);
  return rep;
}

Report reflection_conditions_general(const ReflectionFamily& k,
                                     const ParamSolution& s) {
  require_shared(k, s.carrier, s.params);
  const long long n = s.size(), m = s.pcount();
  const ParamSet& y = s.params;
  Report rep;
  rep.subject = "general reflection conditions";
  std::vector<long long> dims{m, m, n, n};
  long long bad1 = find_first_fail(m * m * n * n, [&](long long q) {
    long long b = q % n, t = q / n;
    long long a = t % n;
    t /= n;
    long long z2 = t % m;
    long long z1 = t / m;
    int b1 = y.bar((int)z1), b2 = y.bar((int)z2);
    elem kb = k.k((int)z2, (elem)b);
    elem s1 = s.sig((int)z2, b1, (elem)a, kb);
    elem t1 = s.tu((int)z2, b1, kb, (elem)a);
    elem s2 = s.sig(b2, b1, (elem)a, (elem)b);
    elem t2 = s.tu(b2, b1, (elem)b, (elem)a);
    return s.sig((int)z1, (int)z2, s1, k.k((int)z1, t1)) ==
           s.sig((int)z1, b2, s2, k.k((int)z1, t2));
  });
  rep.law("general reflection condition (i)", bad1, dims);
  long long bad2 = find_first_fail(m * m * n * n, [&](long long q) {
    long long b = q % n, t = q / n;
    long long a = t % n;
    t /= n;
    long long z2 = t % m;
    long long z1 = t / m;
    int b1 = y.bar((int)z1), b2 = y.bar((int)z2);
    elem kb = k.k((int)z2, (elem)b);
    elem s1 = s.sig((int)z2, b1, (elem)a, kb);
    elem t1 = s.tu((int)z2, b1, kb, (elem)a);
    elem s2 = s.sig(b2, b1, (elem)a, (elem)b);
    elem t2 = s.tu(b2, b1, (elem)b, (elem)a);
    return s.tu((int)z1, (int)z2, k.k((int)z1, t1), s1) ==
           k.k((int)z2, s.tu((int)z1, b2, k.k((int)z1, t2), s2));
  });
  rep.law("general reflection condition (ii)", bad2, dims);
  return rep;
}

ReflectionFamily construct_from_t_alpha(const Shelf& shelf,
                                        const AlphaFamily& alpha,
                                        const ParamSet& params,
                                        const std::vector<elem>& t) {
  const long long n = shelf.size(), m = params.count();
  if (alpha.m != m || alpha.n != n || (long long)t.size() != m * n)
    throw validation_error("ShapeMismatch", "t/alpha shape mismatch");
  if (!alpha.all_bijective())
    throw validation_error("NotBijective", "alpha maps must be bijective");
  for (long long i = 0; i < m; ++i)
    if (!is_permutation(t.data() + i * n, (int)n))
      throw validation_error("NotBijective", "t_i must be bijective", {i});

  long long bad1;
  if (shelf.rack) {
    bad1 = find_first_fail(m * n * n, [&](long long q) {
      long long b = q % n, tt = q / n;
      long long a = tt % n;
      long long i = tt / n;
      return t[i * n + shelf.op((elem)a, (elem)b)] ==
             shelf.op((elem)a, t[i * n + b]);
    });
  } else {
    bad1 = find_first_fail(m * n * n, [&](long long q) {
      long long b = q % n, tt = q / n;
      long long a = tt % n;
      long long i = tt / n;
      elem x = shelf.op((elem)b, (elem)a);
      return t[i * n + shelf.op(x, (elem)b)] == shelf.op(x, t[i * n + b]);
    });
  }
  if (bad1 >= 0)
    throw validation_error("ConditionIFails",
                           "t does not commute with the left translations",
                           decode_index(bad1, {m, n, n}));

  // invert α_{ī i} per i
  std::vector<std::vector<elem>> inv_bar(m);
  for (long long i = 0; i < m; ++i) {
    int bi = params.bar((int)i);
    const elem* row = alpha.maps.data() + ((long long)bi * m + i) * n;
    inv_bar[i] = invert_permutation(row, (int)n);
  }
  long long bad2 = find_first_fail(m * m * n * n, [&](long long q) {
    long long b = q % n, tt = q / n;
    long long a = tt % n;
    tt /= n;
    long long j = tt % m;
    long long i = tt / m;
    int bi = params.bar((int)i);
    elem lhs_arg = alpha.at(bi, (int)j, inv_bar[i][a]);
    elem rhs_arg = alpha.at((int)i, (int)j, t[i * n + a]);
    return shelf.op(lhs_arg, (elem)b) == shelf.op(rhs_arg, (elem)b);
  });
  if (bad2 >= 0)
    throw validation_error("ConditionIIFails",
                           "alpha/t compatibility condition fails",
                           decode_index(bad2, {m, m, n, n}));

  std::vector<elem> kappa(m * n);
  for (long long i = 0; i < m; ++i) {
    int bi = params.bar((int)i);
    for (long long a = 0; a < n; ++a)
      kappa[i * n + a] = t[i * n + alpha.at(bi, (int)i, (elem)a)];
  }
  ReflectionFamily k = reflection_family(shelf.carrier, params, std::move(kappa));
  PShelf p = from_alpha(shelf, alpha, params);
  if (!reflection_conditions_shelf(k, p).pass())
    throw std::logic_error("constructed family fails the shelf conditions");
  return k;
}

Report base_shelf_reflection_check(const Shelf& shelf,
                                   const std::vector<elem>& kappa) {
  const long long n = shelf.size();
  Report rep;
  rep.subject = "base shelf reflection";
  if ((long long)kappa.size() != n) {
    rep.add({"kappa shape", false, {(long long)kappa.size()}, "expected n"});
    return rep;
  }
  long long bad1 = find_first_fail(n * n, [&](long long q) {
    elem b = (elem)(q % n), a = (elem)(q / n);
    return shelf.op(a, b) == shelf.op(kappa[a], b);
  });
  rep.law("base condition a▷b = κ(a)▷b", bad1, {n, n});
  long long bad2 = find_first_fail(n * n, [&](long long q) {
    elem b = (elem)(q % n), a = (elem)(q / n);
    elem x = shelf.op(a, b);
    return kappa[shelf.op(x, a)] == shelf.op(x, kappa[a]);
  });
  rep.law("base condition κ((a▷b)▷a) = (a▷b)▷κ(a)", bad2, {n, n});
  return rep;
}

ReflectionFamily transport_from_base_reflection(const Shelf& shelf,
                                                const AlphaFamily& alpha,
                                                const ParamSet& params,
                                                const std::vector<elem>& kappa) {
  const long long n = shelf.size(), m = params.count();
  if (alpha.m != m || alpha.n != n || (long long)kappa.size() != n)
    throw validation_error("ShapeMismatch", "alpha/kappa shape mismatch");
  if (!alpha.all_bijective() || !is_permutation(kappa))
    throw validation_error("NotBijective",
                           "alpha maps and kappa must be bijective");
  Report base = base_shelf_reflection_check(shelf, kappa);
  if (!base.pass()) {
    const Condition* f = base.first_failure();
    throw validation_error("BaseNotReflection", f->law, f->witness);
  }
  long long badc = find_first_fail(m * m * n, [&](long long q) {
    long long a = q % n, t = q / n;
    long long j = t % m;
    long long i = t / m;
    return kappa[alpha.at((int)i, (int)j, (elem)a)] ==
           alpha.at((int)i, (int)j, kappa[a]);
  });
  if (badc >= 0)
    throw validation_error("CommutationFails",
                           "kappa does not commute with alpha",
                           decode_index(badc, {m, m, n}));
  long long badk = find_first_fail(m * m * m * n, [&](long long q) {
    long long a = q % n, t = q / n;
    long long h = t % m;
    t /= m;
    long long j = t % m;
    long long i = t / m;
    return alpha.at((int)i, (int)j, (elem)a) ==
           alpha.at((int)h, (int)j, alpha.at((int)i, (int)h, (elem)a));
  });
  if (badk >= 0)
    throw validation_error("CompAlphaFails", "alpha composition law fails",
                           decode_index(badk, {m, m, m, n}));

  std::vector<elem> kp(m * n);
  for (long long i = 0; i < m; ++i) {
    int bi = params.bar((int)i);
    for (long long a = 0; a < n; ++a)
      kp[i * n + a] = kappa[alpha.at(bi, (int)i, (elem)a)];
  }
  ReflectionFamily k = reflection_family(shelf.carrier, params, std::move(kp));
  PShelf p = from_alpha(shelf, alpha, params);
  if (!reflection_conditions_shelf(k, p).pass())
    throw std::logic_error("transported family fails the shelf conditions");
  return k;
}

elem additive_multiple(const SkewBrace& b, elem zeta, int multiple) {
  elem step = multiple >= 0 ? zeta : b.neg(zeta);
  int reps = multiple >= 0 ? multiple : -multiple;
  elem acc = b.zero;
  for (int r = 0; r < reps; ++r) acc = b.plus(acc, step);
  return acc;
}

ReflectionFamily brace_reflection(const SkewBrace& b, const ParamSet& y,
                                  elem zeta, int multiple,
                                  std::optional<elem> xi) {
  std::vector<elem> center = additive_center(b);
  if (!contains(center, zeta))
    throw validation_error("ZetaNotCentral",
                           "zeta must lie in the additive center", {zeta});
  elem mz = additive_multiple(b, zeta, multiple);
  if (xi && b.circ(*xi, mz) != b.plus(*xi, mz))
    throw validation_error("XiZetaIncompatible", "xi∘(mζ) = ξ + mζ fails",
                           {*xi, mz});
  const long long n = b.size(), m = y.count();
  std::vector<elem> kp(m * n);
  for (long long i = 0; i < m; ++i) {
    elem ziv = b.circ_inv(y.z((int)i));
    for (elem a = 0; a < n; ++a)
      kp[i * n + a] = b.plus(b.circ(b.circ(a, ziv), ziv), mz);
  }
  return reflection_family(b.add.carrier, y, std::move(kp));
}

Report twist_transport_check(const ReflectionFamily& k, const SigmaFamily& s) {
  require_shared(k, s.carrier, s.params);
  const long long n = s.size(), m = s.pcount();
  const ParamSet& y = s.params;
  Report rep;
  rep.subject = "twist transport";
  long long bad = find_first_fail(m * m * n * n, [&](long long q) {
    long long b = q % n, t = q / n;
    long long a = t % n;
    t /= n;
    long long i = t % m;
    long long j = t / m;
    int bj = y.bar((int)j);
    return k.k((int)j, s.sig(bj, (int)i, (elem)a, (elem)b)) ==
           s.sig((int)j, (int)i, (elem)a, k.k((int)j, (elem)b));
  });
  rep.law("kappa/sigma exchange relation", bad, {m, m, n, n});
  return rep;
}

Report twist_transport_check(const ReflectionFamily& k, const SigmaFamily& s,
                             const PShelf& p) {
  Report rep = twist_transport_check(k, s);
  bool exchange = rep.pass();
  ParamSolution rack_solution = p_shelf_solution(p);
  bool base = reflection_verify_direct(k, rack_solution).pass();
  Condition basec;
  basec.law = "reflection for the underlying p-shelf solution";
  basec.pass = true;
  basec.note = base ? "holds" : "does not hold; implication not applicable";
  rep.add(basec);
  if (exchange && base) {
    ParamSolution twisted = twisted_solution(p, s);
    Report direct = reflection_verify_direct(k, twisted);
    Condition impl;
    impl.law = "transported reflection for the twisted solution";
    impl.pass = direct.pass();
    if (!impl.pass && direct.first_failure())
      impl.witness = direct.first_failure()->witness;
    rep.add(impl);
  }
  return rep;
}

std::vector<elem> find_cond0_elements(const SkewBrace& b, const ParamSet& y) {
  const int n = b.size();
  std::vector<elem> out;
  for (elem w = 0; w < n; ++w) {
    bool ok = true;
    for (elem a = 0; a < n && ok; ++a) ok = b.plus(a, w) == b.circ(a, w);
    for (elem z : y.members) {
      if (!ok) break;
      ok = b.circ(w, z) == b.plus(w, z);
    }
    if (ok) out.push_back(w);
  }
  return out;
}

std::vector<elem> find_zeta_in_y(const SkewBrace& b, const ParamSet& y) {
  std::vector<elem> out;
  for (elem zeta : y.members) {
    bool ok = true;
    for (elem z : y.members) {
      ok = b.circ(zeta, z) == b.plus(z, zeta);
      if (!ok) break;
    }
    if (ok) out.push_back(zeta);
  }
  return out;
}

ReflectionFamily distributor_reflection(const SkewBrace& b, const ParamSet& y,
                                        elem zeta) {
  if (y.position_of(zeta) < 0)
    throw validation_error("ZetaOutsideParams", "zeta must be a member", {zeta});
  const long long n = b.size(), m = y.count();
  std::vector<elem> kp(m * n);
  for (long long i = 0; i < m; ++i) {
    elem ziv = b.circ_inv(y.z((int)i));
    for (elem a = 0; a < n; ++a)
      kp[i * n + a] =
          b.sub(b.circ(b.circ(b.circ(a, ziv), ziv), zeta), zeta);
  }
  return reflection_family(b.add.carrier, y, std::move(kp));
}

namespace {

struct TupleOps {
  const ParamSolution* s;
  // applies R_{uv}^{(p,q)} in place: slot u is the first R argument
  void r(int u, int v, int p, int q, std::vector<elem>& t) const {
    auto [x, y] = s->apply(p, q, t[u], t[v]);
    t[u] = x;
    t[v] = y;
  }
  void dressed_k(int leg, int zpos, const ReflectionFamily& k,
                 const std::vector<int>& spect_params,
                 std::vector<elem>& t) const {
    const int sites = (int)t.size();
    int bar = s->params.bar(zpos);
    for (int w = sites - 1; w >= 2; --w) r(w, leg, spect_params[w - 2], bar, t);
    t[leg] = k.k(zpos, t[leg]);
    for (int w = 2; w <= sites - 1; ++w) r(leg, w, zpos, spect_params[w - 2], t);
  }
};

void check_dress_inputs(const ParamSolution& s, const ReflectionFamily& k,
                        int sites, const std::vector<elem>& spectators,
                        const std::vector<int>& spectator_params) {
  if (sites < 3)
    throw validation_error("RangeError", "dressing needs at least 3 sites");
  if ((int)spectators.size() != sites - 2 ||
      (int)spectator_params.size() != sites - 2)
    throw validation_error("ShapeMismatch",
                           "need one spectator value and parameter per site");
  for (elem v : spectators)
    if (v < 0 || v >= s.size())
      throw validation_error("RangeError", "spectator value out of range", {v});
  for (int p : spectator_params)
    if (p < 0 || p >= s.pcount())
      throw validation_error("RangeError", "spectator parameter out of range",
                             {p});
  if (!reflection_verify_direct(k, s).pass())
    throw validation_error("KNotReflection",
                           "base family fails the reflection equation");
}

}  // namespace

DressedReflection sklyanin_dress(const ParamSolution& s,
                                 const ReflectionFamily& k, int sites,
                                 const std::vector<elem>& spectators,
                                 const std::vector<int>& spectator_params) {
  check_dress_inputs(s, k, sites, spectators, spectator_params);
  const long long n = s.size(), m = s.pcount();
  TupleOps ops{&s};
  DressedReflection d;
  d.sites = sites;
  d.spectators = spectators;
  d.spectator_params = spectator_params;
  d.site1.resize(m * n);
  for (long long i = 0; i < m; ++i)
    for (long long a = 0; a < n; ++a) {
      std::vector<elem> t((size_t)sites, 0);
      t[0] = (elem)a;
      for (int w = 2; w < sites; ++w) t[w] = spectators[w - 2];
      ops.dressed_k(0, (int)i, k, spectator_params, t);
      d.site1[i * n + a] = t[0];
    }
  return d;
}

Report sklyanin_dress_verify(const ParamSolution& s, const ReflectionFamily& k,
                             int sites, const std::vector<elem>& spectators,
                             const std::vector<int>& spectator_params) {
  check_dress_inputs(s, k, sites, spectators, spectator_params);
  const long long n = s.size(), m = s.pcount();
  TupleOps ops{&s};
  Report rep;
  rep.subject = "dressed reflection equation";
  long long bad = find_first_fail(m * m * n * n, [&](long long q) {
    long long b = q % n, tt = q / n;
    long long a = tt % n;
    tt /= n;
    long long z2 = tt % m;
    long long z1 = tt / m;
    int b1 = s.params.bar((int)z1), b2 = s.params.bar((int)z2);
    std::vector<elem> lhs((size_t)sites), rhs((size_t)sites);
    lhs[0] = (elem)a;
    lhs[1] = (elem)b;
    for (int w = 2; w < sites; ++w) lhs[w] = spectators[w - 2];
    rhs = lhs;
    // R12 K1 R21 K2 (dressed), rightmost first
    ops.dressed_k(1, (int)z2, k, spectator_params, lhs);
    ops.r(1, 0, (int)z2, b1, lhs);
    ops.dressed_k(0, (int)z1, k, spectator_params, lhs);
    ops.r(0, 1, (int)z1, (int)z2, lhs);
    // K2 R12 K1 R21 (dressed), rightmost first
    ops.r(1, 0, b2, b1, rhs);
    ops.dressed_k(0, (int)z1, k, spectator_params, rhs);
    ops.r(0, 1, (int)z1, b2, rhs);
    ops.dressed_k(1, (int)z2, k, spectator_params, rhs);
    return lhs == rhs;
  });
  rep.law("dressed reflection equation", bad, {m, m, n, n});
  return rep;
}

}  // namespace prack
