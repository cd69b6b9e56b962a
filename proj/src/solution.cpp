#include "prack/solution.hpp"

#include <array>

namespace prack {

namespace {

struct View {
  const std::vector<elem>* sigma;
  const std::vector<elem>* tau;
  long long m, n;

  elem sig(long long i, long long j, long long a, long long b) const {
    return (*sigma)[((i * m + j) * n + a) * n + b];
  }
  elem tu(long long i, long long j, long long b, long long a) const {
    return (*tau)[((i * m + j) * n + b) * n + a];
  }
  void r12(long long i, long long j, std::array<elem, 3>& t) const {
    elem x = t[0], y = t[1];
    t[0] = sig(i, j, y, x);
    t[1] = tu(i, j, x, y);
  }
  void r13(long long i, long long j, std::array<elem, 3>& t) const {
    elem x = t[0], y = t[2];
    t[0] = sig(i, j, y, x);
    t[2] = tu(i, j, x, y);
  }
  void r23(long long i, long long j, std::array<elem, 3>& t) const {
    elem x = t[1], y = t[2];
    t[1] = sig(i, j, y, x);
    t[2] = tu(i, j, x, y);
  }
};

void require_shapes(const Carrier& carrier, const ParamSet& params,
                    const std::vector<elem>& sigma,
                    const std::vector<elem>& tau) {
  const long long n = carrier.size, m = params.count();
  if (params.carrier.size != carrier.size)
    throw validation_error("CarrierMismatch", "parameter carrier differs");
  if ((long long)sigma.size() != m * m * n * n ||
      (long long)tau.size() != m * m * n * n)
    throw validation_error("ShapeMismatch", "solution tables must be m*m*n*n");
  for (elem v : sigma)
    if (v < 0 || v >= n)
      throw validation_error("RangeError", "sigma entry out of range", {v});
  for (elem v : tau)
    if (v < 0 || v >= n)
      throw validation_error("RangeError", "tau entry out of range", {v});
}

}  // namespace

Report solution_verify_direct(const Carrier& carrier, const ParamSet& params,
                              const std::vector<elem>& sigma,
                              const std::vector<elem>& tau) {
  require_shapes(carrier, params, sigma, tau);
  const long long n = carrier.size, m = params.count();
  View v{&sigma, &tau, m, n};
  Report r;
  r.subject = "parametric Yang-Baxter (direct composition)";
  long long bad = find_first_fail(m * m * m * n * n * n, [&](long long q) {
    long long a = q % n, t = q / n;
    long long b = t % n;
    t /= n;
    long long c = t % n;
    t /= n;
    long long z3 = t % m;
    t /= m;
    long long z2 = t % m;
    long long z1 = t / m;
    std::array<elem, 3> lhs{(elem)c, (elem)b, (elem)a};
    v.r23(z2, z3, lhs);
    v.r13(z1, z3, lhs);
    v.r12(z1, z2, lhs);
    std::array<elem, 3> rhs{(elem)c, (elem)b, (elem)a};
    v.r12(z1, z2, rhs);
    v.r13(z1, z3, rhs);
    v.r23(z2, z3, rhs);
    return lhs == rhs;
  });
  r.law("Yang-Baxter equation", bad, {m, m, m, n, n, n});
  return r;
}

Report solution_verify_direct(const ParamSolution& s) {
  return solution_verify_direct(s.carrier, s.params, s.sigma, s.tau);
}

Report solution_verify_conditions(const Carrier& carrier,
                                  const ParamSet& params,
                                  const std::vector<elem>& sigma,
                                  const std::vector<elem>& tau) {
  require_shapes(carrier, params, sigma, tau);
  const long long n = carrier.size, m = params.count();
  View v{&sigma, &tau, m, n};
  Report r;
  r.subject = "parametric Yang-Baxter (sigma/tau conditions)";
  std::vector<long long> dims{m, m, m, n, n, n};
  auto decode = [&](long long q, long long& z1, long long& z2, long long& z3,
                    long long& a, long long& b, long long& c) {
    c = q % n;
    q /= n;
    b = q % n;
    q /= n;
    a = q % n;
    q /= n;
    z3 = q % m;
    q /= m;
    z2 = q % m;
    z1 = q / m;
  };
  long long bad1 = find_first_fail(m * m * m * n * n * n, [&](long long q) {
    long long z1, z2, z3, a, b, c;
    decode(q, z1, z2, z3, a, b, c);
    return v.sig(z1, z3, a, v.sig(z1, z2, b, c)) ==
           v.sig(z1, z2, v.sig(z2, z3, a, b),
                 v.sig(z1, z3, v.tu(z2, z3, b, a), c));
  });
  r.law("sigma compatibility (1)", bad1, dims);
  long long bad2 = find_first_fail(m * m * m * n * n * n, [&](long long q) {
    long long z1, z2, z3, a, b, c;
    decode(q, z1, z2, z3, a, b, c);
    return v.tu(z1, z3, c, v.tu(z2, z3, b, a)) ==
           v.tu(z2, z3, v.tu(z1, z2, c, b),
                v.tu(z1, z3, v.sig(z1, z2, b, c), a));
  });
  r.law("tau compatibility (2)", bad2, dims);
  long long bad3 = find_first_fail(m * m * m * n * n * n, [&](long long q) {
    long long z1, z2, z3, a, b, c;
    decode(q, z1, z2, z3, a, b, c);
    return v.sig(z2, z3, v.tu(z1, z3, v.sig(z1, z2, b, c), a),
                 v.tu(z1, z2, c, b)) ==
           v.tu(z1, z2, v.sig(z1, z3, v.tu(z2, z3, b, a), c),
                v.sig(z2, z3, a, b));
  });
  r.law("mixed compatibility (3)", bad3, dims);
  return r;
}

Report solution_verify_conditions(const ParamSolution& s) {
  return solution_verify_conditions(s.carrier, s.params, s.sigma, s.tau);
}

SolutionFlags property_flags(const Carrier& carrier, const ParamSet& params,
                             const std::vector<elem>& sigma,
                             const std::vector<elem>& tau) {
  require_shapes(carrier, params, sigma, tau);
  const long long n = carrier.size, m = params.count();
  View v{&sigma, &tau, m, n};
  SolutionFlags f;
  f.left_nondegenerate = true;
  f.nondegenerate = true;
  for (long long i = 0; i < m; ++i)
    for (long long j = 0; j < m; ++j)
      for (long long a = 0; a < n; ++a) {
        if (!is_permutation(sigma.data() + ((i * m + j) * n + a) * n, (int)n))
          f.left_nondegenerate = false;
        if (!is_permutation(tau.data() + ((i * m + j) * n + a) * n, (int)n))
          f.nondegenerate = false;
      }
  f.nondegenerate = f.nondegenerate && f.left_nondegenerate;
  f.invertible = true;
  for (long long i = 0; i < m && f.invertible; ++i)
    for (long long j = 0; j < m && f.invertible; ++j) {
      std::vector<char> seen(n * n, 0);
      for (long long x = 0; x < n && f.invertible; ++x)
        for (long long y = 0; y < n; ++y) {
          long long code = (long long)v.sig(i, j, y, x) * n + v.tu(i, j, x, y);
          if (seen[code]) {
            f.invertible = false;
            break;
          }
          seen[code] = 1;
        }
    }
  f.reversible = true;
  for (long long i = 0; i < m && f.reversible; ++i)
    for (long long j = 0; j < m && f.reversible; ++j)
      for (long long x = 0; x < n && f.reversible; ++x)
        for (long long y = 0; y < n; ++y) {
          elem u = v.sig(i, j, y, x), w = v.tu(i, j, x, y);
          if (v.tu(j, i, w, u) != x || v.sig(j, i, u, w) != y) {
            f.reversible = false;
            break;
          }
        }
  return f;
}

ParamSolution make_solution(Carrier carrier, ParamSet params,
                            std::vector<elem> sigma, std::vector<elem> tau) {
  Report direct = solution_verify_direct(carrier, params, sigma, tau);
  Report conds = solution_verify_conditions(carrier, params, sigma, tau);
  if (direct.pass() != conds.pass())
    throw std::logic_error(
        "direct and condition-based Yang-Baxter verifiers disagree");
  if (!direct.pass()) {
    const Condition* f = direct.first_failure();
    throw validation_error("YBEFails", f->law, f->witness);
  }
  ParamSolution s;
  s.flags = property_flags(carrier, params, sigma, tau);
  s.carrier = std::move(carrier);
  s.params = std::move(params);
  s.sigma = std::move(sigma);
  s.tau = std::move(tau);
  return s;
}

ParamSolution identity_solution(Carrier carrier, ParamSet params) {
  const long long n = carrier.size, m = params.count();
  std::vector<elem> sigma(m * m * n * n), tau(m * m * n * n);
  for (long long i = 0; i < m; ++i)
    for (long long j = 0; j < m; ++j)
      for (long long a = 0; a < n; ++a)
        for (long long b = 0; b < n; ++b) {
          sigma[((i * m + j) * n + a) * n + b] = (elem)b;
          tau[((i * m + j) * n + a) * n + b] = (elem)b;
        }
  return make_solution(std::move(carrier), std::move(params), std::move(sigma),
                       std::move(tau));
}

ParamSolution p_shelf_solution(const PShelf& p) {
  const long long n = p.size(), m = p.pcount();
  std::vector<elem> sigma(m * m * n * n), tau(m * m * n * n);
  for (long long i = 0; i < m; ++i)
    for (long long j = 0; j < m; ++j)
      for (long long a = 0; a < n; ++a)
        for (long long b = 0; b < n; ++b) {
          sigma[((i * m + j) * n + a) * n + b] = (elem)b;
          tau[((i * m + j) * n + a) * n + b] =
              p.op((int)i, (int)j, (elem)a, (elem)b);
        }
  ParamSolution s = make_solution(p.carrier, p.params, std::move(sigma),
                                  std::move(tau));
  if (s.flags.invertible != p.rack || s.flags.nondegenerate != p.rack)
    throw std::logic_error("p-shelf solution flags disagree with rack flag");
  return s;
}

std::vector<elem> derived_shelf_table(const ParamSolution& s) {
  const long long n = s.size(), m = s.pcount();
  if (!s.flags.left_nondegenerate)
    throw validation_error("NotLeftNonDegenerate",
                           "derived shelf needs bijective sigma maps");
  // invert each sigma row
  std::vector<elem> inv(m * m * n * n);
  for (long long i = 0; i < m; ++i)
    for (long long j = 0; j < m; ++j)
      for (long long a = 0; a < n; ++a) {
        std::vector<elem> row =
            invert_permutation(s.sigma.data() + ((i * m + j) * n + a) * n, (int)n);
        std::copy(row.begin(), row.end(),
                  inv.begin() + ((i * m + j) * n + a) * n);
      }
  std::vector<elem> t(m * m * n * n);
  for (long long i = 0; i < m; ++i)
    for (long long j = 0; j < m; ++j)
      for (long long a = 0; a < n; ++a)
        for (long long b = 0; b < n; ++b) {
          elem w = inv[((i * m + j) * n + b) * n + a];  // (σ^{ij}_b)^{-1}(a)
          elem x = s.tu((int)i, (int)j, w, (elem)b);    // τ^{ij}_w(b)
          t[((i * m + j) * n + a) * n + b] = s.sig((int)j, (int)i, (elem)a, x);
        }
  return t;
}

PShelf derived_shelf(const ParamSolution& s) {
  return p_shelf_verify(s.carrier, s.params, derived_shelf_table(s));
}

}  // namespace prack
