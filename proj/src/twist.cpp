#include "prack/twist.hpp"

namespace prack {

namespace {

std::vector<elem> row_inverses(const std::vector<elem>& table, long long rows,
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

void check_distributor_params(const SkewBrace& b, const ParamSet& y) {
  std::vector<elem> dist = right_distributor(b);
  for (elem z : y.members)
    if (!contains(dist, z))
      throw validation_error("ParamSetOutsideDistributor",
                             "parameter outside the right distributor", {z});
  for (elem z : y.members)
    for (elem w : y.members)
      if (!commutes(b.mul, z, w))
        throw validation_error("ParamsNotCommuting",
                               "parameters do not commute", {z, w});
}

void check_brace_sigma_pre(const SkewBrace& b, const ParamSet& y,
                           SigmaMode mode) {
  check_distributor_params(b, y);
  if (mode == SigmaMode::brace) {
    if (!is_brace(b))
      throw validation_error("NotABrace",
                             "brace mode needs an abelian additive group");
  } else {
    std::vector<elem> center = additive_center(b);
    for (elem z : y.members)
      if (!contains(center, z))
        throw validation_error("ParamSetOutsideCenter",
                               "parameter outside the additive center", {z});
  }
}

SigmaFamily finish_sigma(const SkewBrace& b, const ParamSet& y,
                         std::vector<elem> table) {
  return sigma_family(b.add.carrier, y, std::move(table));
}

}  // namespace

SigmaFamily sigma_family(Carrier carrier, ParamSet params,
                         std::vector<elem> sigma) {
  const long long n = carrier.size, m = params.count();
  if ((long long)sigma.size() != m * m * n * n)
    throw validation_error("ShapeMismatch", "sigma family must be m*m*n*n");
  SigmaFamily s;
  s.sigma_inv = row_inverses(sigma, m * m * n, n, "NotBijective");
  s.carrier = std::move(carrier);
  s.params = std::move(params);
  s.sigma = std::move(sigma);
  return s;
}

SigmaFamily identity_sigma(Carrier carrier, ParamSet params) {
  const long long n = carrier.size, m = params.count();
  std::vector<elem> t(m * m * n * n);
  for (long long r = 0; r < m * m * n; ++r)
    for (long long b = 0; b < n; ++b) t[r * n + b] = (elem)b;
  return sigma_family(std::move(carrier), std::move(params), std::move(t));
}

std::vector<elem> tau_from_sigma(const SigmaFamily& s, const PShelf& p) {
  const long long n = s.size(), m = s.pcount();
  if (p.size() != s.size() || p.pcount() != s.pcount())
    throw validation_error("ShapeMismatch", "sigma and p-shelf shapes differ");
  std::vector<elem> tau(m * m * n * n);
  for (long long i = 0; i < m; ++i)
    for (long long j = 0; j < m; ++j)
      for (long long b = 0; b < n; ++b)
        for (long long a = 0; a < n; ++a) {
          elem sv = s.sig((int)i, (int)j, (elem)a, (elem)b);
          elem shifted = p.op((int)i, (int)j, sv, (elem)a);
          tau[((i * m + j) * n + b) * n + a] =
              s.sig_inv((int)j, (int)i, sv, shifted);
        }
  return tau;
}

Report admissible_twist_verify(const SigmaFamily& s, const PShelf& p) {
  const long long n = s.size(), m = s.pcount();
  std::vector<elem> tau = tau_from_sigma(s, p);
  auto tu = [&](long long i, long long j, long long b, long long a) {
    return tau[((i * m + j) * n + b) * n + a];
  };
  Report r;
  r.subject = "admissible twist";
  std::vector<long long> dims{m, m, m, n, n, n};
  long long bad1 = find_first_fail(m * m * m * n * n * n, [&](long long q) {
    long long c = q % n, t = q / n;
    long long b = t % n;
    t /= n;
    long long a = t % n;
    t /= n;
    long long k = t % m;
    t /= m;
    long long j = t % m;
    long long i = t / m;
    elem lhs = s.sig((int)i, (int)k, (elem)a, s.sig((int)i, (int)j, (elem)b, (elem)c));
    elem rhs = s.sig((int)i, (int)j, s.sig((int)j, (int)k, (elem)a, (elem)b),
                     s.sig((int)i, (int)k, (elem)tu(j, k, b, a), (elem)c));
    return lhs == rhs;
  });
  r.law("admissible twist condition (1)", bad1, dims);
  long long bad2 = find_first_fail(m * m * m * n * n * n, [&](long long q) {
    long long c = q % n, t = q / n;
    long long a = t % n;
    t /= n;
    long long b = t % n;
    t /= n;
    long long k = t % m;
    t /= m;
    long long j = t % m;
    long long i = t / m;
    elem lhs = p.op((int)i, (int)j, s.sig((int)i, (int)k, (elem)c, (elem)b),
                    s.sig((int)j, (int)k, (elem)c, (elem)a));
    elem rhs = s.sig((int)j, (int)k, (elem)c,
                     p.op((int)i, (int)j, (elem)b, (elem)a));
    return lhs == rhs;
  });
  r.law("admissible twist condition (2)", bad2, dims);
  return r;
}

std::pair<std::vector<elem>, std::vector<elem>> twisted_tables_unchecked(
    const PShelf& p, const SigmaFamily& s) {
  return {s.sigma, tau_from_sigma(s, p)};
}

ParamSolution twisted_solution(const PShelf& p, const SigmaFamily& s) {
  Report adm = admissible_twist_verify(s, p);
  if (!adm.pass()) {
    const Condition* f = adm.first_failure();
    throw validation_error("NotAdmissible", f->law, f->witness);
  }
  auto [sigma, tau] = twisted_tables_unchecked(p, s);
  return make_solution(p.carrier, p.params, std::move(sigma), std::move(tau));
}

SigmaFamily brace_sigma(const SkewBrace& b, const ParamSet& y, SigmaMode mode) {
  check_brace_sigma_pre(b, y, mode);
  const long long n = b.size(), m = y.count();
  std::vector<elem> t(m * m * n * n);
  for (long long i = 0; i < m; ++i) {
    elem ziv = b.circ_inv(y.z((int)i));
    for (long long j = 0; j < m; ++j) {
      elem zj = y.z((int)j);
      for (elem a = 0; a < n; ++a) {
        elem mid = b.circ(b.circ(a, ziv), zj);  // a∘z_i^{-1}∘z_j
        elem head = b.sub(ziv, mid);
        for (elem bb = 0; bb < n; ++bb)
          t[((i * m + j) * n + a) * n + bb] =
              b.plus(head, b.circ(b.circ(a, bb), zj));
      }
    }
  }
  return finish_sigma(b, y, std::move(t));
}

SigmaFamily affine_sigma(const SkewBrace& b, const ParamSet& y, elem xi) {
  check_brace_sigma_pre(b, y, SigmaMode::skew);
  std::vector<elem> dist = right_distributor(b);
  if (!contains(dist, xi))
    throw validation_error("XiOutsideDistributor",
                           "xi outside the right distributor", {xi});
  for (elem a = 0; a < b.size(); ++a)
    if (!commutes(b.mul, xi, a))
      throw validation_error("XiNotCentral",
                             "xi must commute with everything in (X,∘)",
                             {xi, a});
  const long long n = b.size(), m = y.count();
  std::vector<elem> t(m * m * n * n);
  for (long long i = 0; i < m; ++i) {
    elem ziv = b.circ_inv(y.z((int)i));
    for (long long j = 0; j < m; ++j) {
      elem zj = y.z((int)j);
      for (elem a = 0; a < n; ++a) {
        elem mid = b.circ(b.circ(b.circ(xi, a), ziv), zj);
        elem head = b.sub(ziv, mid);
        for (elem bb = 0; bb < n; ++bb)
          t[((i * m + j) * n + a) * n + bb] =
              b.plus(head, b.circ(b.circ(b.circ(a, bb), xi), zj));
      }
    }
  }
  return finish_sigma(b, y, std::move(t));
}

SigmaFamily core_sigma_a(const SkewBrace& b, const ParamSet& y) {
  check_distributor_params(b, y);
  const long long n = b.size(), m = y.count();
  std::vector<elem> t(m * m * n * n);
  for (long long i = 0; i < m; ++i) {
    elem ziv = b.circ_inv(y.z((int)i));
    for (long long j = 0; j < m; ++j) {
      elem zj = y.z((int)j);
      for (elem a = 0; a < n; ++a) {
        elem tail = b.circ(b.circ(a, ziv), zj);
        for (elem bb = 0; bb < n; ++bb)
          t[((i * m + j) * n + a) * n + bb] =
              b.plus(b.sub(ziv, b.circ(b.circ(a, bb), zj)), tail);
      }
    }
  }
  return finish_sigma(b, y, std::move(t));
}

SigmaFamily core_sigma_b(const SkewBrace& b, const ParamSet& y) {
  check_distributor_params(b, y);
  const long long n = b.size(), m = y.count();
  std::vector<elem> t(m * m * n * n);
  for (long long i = 0; i < m; ++i) {
    elem ziv = b.circ_inv(y.z((int)i));
    for (long long j = 0; j < m; ++j) {
      elem zj = y.z((int)j);
      for (elem a = 0; a < n; ++a) {
        elem head = b.sub(b.circ(b.circ(a, ziv), zj), ziv);
        for (elem bb = 0; bb < n; ++bb)
          t[((i * m + j) * n + a) * n + bb] =
              b.plus(head, b.circ(b.circ(a, bb), zj));
      }
    }
  }
  return finish_sigma(b, y, std::move(t));
}

SymmetricH symmetric_h(const ParamSet& y, std::vector<elem> h) {
  const int m = y.count();
  if ((long long)h.size() != (long long)m * m)
    throw validation_error("ShapeMismatch", "h table must be m*m");
  for (elem v : h)
    if (y.position_of(v) < 0)
      throw validation_error("HOutsideParams", "h value is not a member", {v});
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (h[(long long)i * m + j] != h[(long long)j * m + i])
        throw validation_error("HNotSymmetric", "h must be symmetric", {i, j});
  SymmetricH out;
  out.m = m;
  out.h = std::move(h);
  return out;
}

SymmetricH symmetric_h_product(const GroupTable& circ, const ParamSet& y) {
  const int m = y.count();
  std::vector<elem> h((long long)m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      h[(long long)i * m + j] = circ.op(y.z(i), y.z(j));
  return symmetric_h(y, std::move(h));
}

BulletResult bullet_from_sigma(const GroupTable& circ, const SigmaFamily& s,
                               const SymmetricH& h, const PShelf* shelf) {
  const long long n = s.size(), m = s.pcount();
  if (h.m != m)
    throw validation_error("ShapeMismatch", "h table parameter count differs");
  BulletResult out;
  out.report.subject = "bullet operation";
  // a •_{z_ij} b = a ∘ (σ^{ji}_a)^{-1}(b) ∘ h(z_ji)
  out.bullet.assign(m * m * n * n, 0);
  for (long long i = 0; i < m; ++i)
    for (long long j = 0; j < m; ++j)
      for (long long a = 0; a < n; ++a)
        for (long long b = 0; b < n; ++b)
          out.bullet[((i * m + j) * n + a) * n + b] = circ.op(
              circ.op((elem)a, s.sig_inv((int)j, (int)i, (elem)a, (elem)b)),
              h.at((int)j, (int)i));
  auto bullet = [&](long long i, long long j, long long a, long long b) {
    return out.bullet[((i * m + j) * n + a) * n + b];
  };
  std::vector<long long> dims{m, m, n, n};
  if (shelf == nullptr) {
    // reversible hypotheses: a∘b = σ_a(b)∘τ_b(a) with τ_b(a) = σ_a(b)^{-1}∘a∘b
    // is automatic, so the substance is σ^{ji}_{σ^{ij}_a(b)}(τ^{ij}_b(a)) = a.
    long long badrev = find_first_fail(m * m * n * n, [&](long long q) {
      long long b = q % n, t = q / n;
      long long a = t % n;
      t /= n;
      long long j = t % m;
      long long i = t / m;
      elem sv = s.sig((int)i, (int)j, (elem)a, (elem)b);
      elem tv = circ.op(circ.op(circ.inv(sv), (elem)a), (elem)b);
      return s.sig((int)j, (int)i, sv, tv) == (elem)a;
    });
    out.report.law("reversibility relation", badrev, dims);
    if (badrev < 0) {
      long long bad = find_first_fail(m * m * n * n, [&](long long q) {
        long long b = q % n, t = q / n;
        long long a = t % n;
        t /= n;
        long long j = t % m;
        long long i = t / m;
        return bullet(j, i, a, b) == bullet(i, j, b, a);
      });
      out.report.law("bullet symmetry a•_{ji}b = b•_{ij}a", bad, dims);
    }
  } else {
    std::vector<elem> tau = tau_from_sigma(s, *shelf);
    long long badsg = find_first_fail(m * m * n * n, [&](long long q) {
      long long b = q % n, t = q / n;
      long long a = t % n;
      t /= n;
      long long j = t % m;
      long long i = t / m;
      elem sv = s.sig((int)i, (int)j, (elem)a, (elem)b);
      elem tv = tau[((i * m + j) * n + b) * n + a];
      return circ.op((elem)a, (elem)b) == circ.op(sv, tv);
    });
    out.report.law("structure-group relation", badsg, dims);
    long long bad1a = find_first_fail(m * m * n * n, [&](long long q) {
      long long b = q % n, t = q / n;
      long long a = t % n;
      t /= n;
      long long j = t % m;
      long long i = t / m;
      return bullet(j, i, a, b) ==
             bullet(i, j, b, shelf->op((int)i, (int)j, (elem)b, (elem)a));
    });
    out.report.law("bullet identity a•_{ji}b = b•_{ij}(b▷_{ij}a)", bad1a, dims);
    long long bad1b = find_first_fail(m * m * n * n, [&](long long q) {
      long long b = q % n, t = q / n;
      long long a = t % n;
      t /= n;
      long long j = t % m;
      long long i = t / m;
      return bullet(j, i, a, s.sig((int)i, (int)j, (elem)a, (elem)b)) ==
             circ.op(circ.op((elem)a, (elem)b), h.at((int)i, (int)j));
    });
    out.report.law("bullet identity a•_{ji}σ^{ij}_a(b) = a∘b∘h", bad1b, dims);
  }
  return out;
}

bool PairMapFamily::all_bijective() const {
  const long long nn = (long long)n * n;
  for (long long r = 0; r < (long long)m * m; ++r) {
    std::vector<char> seen(nn, 0);
    for (long long p = 0; p < nn; ++p) {
      int code = maps[r * nn + p];
      if (code < 0 || code >= nn || seen[code]) return false;
      seen[code] = 1;
    }
  }
  return true;
}

PairMapFamily identity_pair_maps(int m, int n) {
  PairMapFamily f;
  f.m = m;
  f.n = n;
  const long long nn = (long long)n * n;
  f.maps.resize((long long)m * m * nn);
  for (long long r = 0; r < (long long)m * m; ++r)
    for (long long p = 0; p < nn; ++p) f.maps[r * nn + p] = (int)p;
  return f;
}

PairMapFamily twist_pair_maps(const SigmaFamily& s) {
  PairMapFamily f;
  f.m = s.pcount();
  f.n = s.size();
  const long long m = f.m, n = f.n, nn = n * n;
  f.maps.resize(m * m * nn);
  for (long long i = 0; i < m; ++i)
    for (long long j = 0; j < m; ++j)
      for (long long a = 0; a < n; ++a)
        for (long long b = 0; b < n; ++b)
          f.maps[(i * m + j) * nn + a * n + b] =
              (int)(a * n + s.sig((int)j, (int)i, (elem)a, (elem)b));
  return f;
}

Report is_d_twist(const PairMapFamily& phi, const ParamSolution& r,
                  const ParamSolution& s) {
  const long long n = r.size(), m = r.pcount();
  if (phi.m != m || phi.n != n || s.size() != n || s.pcount() != m)
    throw validation_error("ShapeMismatch", "twist relation shape mismatch");
  Report rep;
  rep.subject = "Drinfel'd twist relation";
  long long bad = find_first_fail(m * m * n * n, [&](long long q) {
    long long y = q % n, t = q / n;
    long long x = t % n;
    t /= n;
    long long j = t % m;
    long long i = t / m;
    auto [u, v] = r.apply((int)i, (int)j, (elem)x, (elem)y);
    auto lhs = phi.apply((int)i, (int)j, u, v);
    // flip ∘ φ^{ji} ∘ flip
    auto [p, w] = phi.apply((int)j, (int)i, (elem)y, (elem)x);
    auto rhs = s.apply((int)i, (int)j, w, p);
    return lhs == rhs;
  });
  rep.law("twist relation φR = S·flip·φ'·flip", bad, {m, m, n, n});
  Condition bij;
  bij.law = "twist maps bijective (D-equivalence)";
  bij.pass = phi.all_bijective();
  if (!bij.pass) bij.note = "relation may still hold; not a D-equivalence";
  rep.add(bij);
  return rep;
}

}  // namespace prack
