#include "prack/search.hpp"

#include "prack/twist.hpp"

#include <algorithm>

namespace prack {

namespace {

// n^e with a cap to avoid overflow; anything above the cap is "too many"
long long checked_pow(long long base, long long exp, long long cap) {
  long long out = 1;
  for (long long i = 0; i < exp; ++i) {
    if (out > cap / base) return cap + 1;
    out *= base;
  }
  return out;
}

bool p_shelf_law_holds(int m, int n, const std::vector<elem>& t) {
  auto op = [&](long long i, long long j, long long a, long long b) {
    return (long long)t[(((i * m + j) * n) + a) * n + b];
  };
  for (long long i = 0; i < m; ++i)
    for (long long j = 0; j < m; ++j)
      for (long long k = 0; k < m; ++k)
        for (long long a = 0; a < n; ++a)
          for (long long b = 0; b < n; ++b)
            for (long long c = 0; c < n; ++c)
              if (op(i, k, a, op(j, k, b, c)) !=
                  op(j, k, op(i, j, a, b), op(i, k, a, c)))
                return false;
  return true;
}

bool rack_rows(int m, int n, const std::vector<elem>& t) {
  for (long long r = 0; r < (long long)m * m * n; ++r)
    if (!is_permutation(t.data() + r * n, n)) return false;
  return true;
}

std::vector<std::vector<elem>> all_permutations(int n) {
  std::vector<elem> p = identity_permutation(n);
  std::vector<std::vector<elem>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

void decode_table(long long q, int n, std::vector<elem>& t) {
  for (size_t d = t.size(); d-- > 0;) {
    t[d] = (elem)(q % n);
    q /= n;
  }
}

}  // namespace

std::vector<elem> canonical_p_shelf_table(int m, int n,
                                          const std::vector<elem>& table) {
  std::vector<std::vector<elem>> perms = all_permutations(n);
  std::vector<elem> best = table;
  std::vector<elem> cand(table.size());
  for (const auto& p : perms) {
    std::vector<elem> pinv = invert_permutation(p.data(), n);
    for (long long i = 0; i < m; ++i)
      for (long long j = 0; j < m; ++j)
        for (long long a = 0; a < n; ++a)
          for (long long b = 0; b < n; ++b)
            cand[(((i * m + j) * n) + a) * n + b] =
                p[table[(((i * m + j) * n) + pinv[a]) * n + pinv[b]]];
    if (cand < best) best = cand;
  }
  return best;
}

void enumerate_p_shelves(const PShelfEnumOptions& opt,
                         const std::function<void(const PShelf&)>& emit) {
  const int n = opt.n, m = opt.m;
  if (n < 1 || n > 4 || m < 1 || m > 2)
    throw validation_error("InputError", "enumeration caps: n in 1..4, m in 1..2");
  const long long entries = (long long)m * m * n * n;
  long long candidates = checked_pow(n, entries, opt.budget.max_candidates);
  if (candidates > opt.budget.max_candidates)
    throw validation_error("BudgetExceeded",
                           "candidate space exceeds the enumeration budget",
                           {candidates});
  ParamSet params;
  if (opt.params) {
    params = *opt.params;
  } else {
    // formal parameter indices with identity mu: the member values play no
    // role in the distributivity law, so collisions on tiny carriers are fine
    params.carrier = Carrier(n);
    for (int i = 0; i < m; ++i) params.members.push_back(elem(std::min(i, n - 1)));
    params.mu = identity_permutation(m);
  }
  if (params.count() != m || params.carrier.size != n)
    throw validation_error("InputError", "parameter set shape mismatch");
  Carrier carrier = params.carrier;
  auto keeps = [&](const std::vector<elem>& t) {
    if (!p_shelf_law_holds(m, n, t)) return false;
    if (opt.rack_only && !rack_rows(m, n, t)) return false;
    if (opt.dedup && canonical_p_shelf_table(m, n, t) != t) return false;
    return true;
  };
  std::vector<std::vector<elem>> found;
  if (effective_scan_threads() > 1 && candidates >= 4096) {
    // partition by the leading table entry; chunks are contiguous in the
    // lexicographic order, so concatenating them preserves the stream order
    const long long chunk = candidates / n;
    std::vector<std::vector<std::vector<elem>>> per_chunk(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (int lead = 0; lead < n; ++lead) {
      std::vector<elem> t(entries);
      for (long long q = lead * chunk; q < (lead + 1) * chunk; ++q) {
        decode_table(q, n, t);
        if (keeps(t)) per_chunk[lead].push_back(t);
      }
    }
    for (auto& bucket : per_chunk)
      for (auto& t : bucket) found.push_back(std::move(t));
  } else {
    std::vector<elem> t(entries);
    for (long long q = 0; q < candidates; ++q) {
      decode_table(q, n, t);
      if (keeps(t)) found.push_back(t);
    }
  }
  for (const auto& t : found)
    emit(p_shelf_verify(carrier, params, t));  // emit-then-verify
}

long long count_p_shelves(const PShelfEnumOptions& opt) {
  long long count = 0;
  enumerate_p_shelves(opt, [&](const PShelf&) { ++count; });
  return count;
}

long long count_ordinary_shelves(int n) {
  // deliberately separate from the parametric path: plain n*n tables and the
  // plain self-distributivity law
  std::vector<elem> t((size_t)n * n, 0);
  long long total = 1;
  for (int i = 0; i < n * n; ++i) total *= n;
  long long count = 0;
  for (long long q = 0; q < total; ++q) {
    long long v = q;
    for (size_t d = t.size(); d-- > 0;) {
      t[d] = (elem)(v % n);
      v /= n;
    }
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      for (int b = 0; b < n && ok; ++b)
        for (int c = 0; c < n && ok; ++c)
          ok = t[a * n + t[b * n + c]] == t[t[a * n + b] * n + t[a * n + c]];
    if (ok) ++count;
  }
  return count;
}

void enumerate_reflections(
    const ParamSolution& s, const ReflEnumOptions& opt,
    const std::function<void(const ReflectionFamily&)>& emit) {
  const int n = s.size(), m = s.pcount();
  long long candidates;
  std::vector<std::vector<elem>> perms;
  if (opt.bijective_only) {
    perms = all_permutations(n);
    candidates = checked_pow((long long)perms.size(), m,
                             opt.budget.max_candidates);
  } else {
    candidates = checked_pow(n, (long long)n * m, opt.budget.max_candidates);
  }
  if (candidates > opt.budget.max_candidates)
    throw validation_error("BudgetExceeded",
                           "candidate space exceeds the enumeration budget",
                           {candidates});
  std::vector<elem> kappa((long long)m * n);
  for (long long q = 0; q < candidates; ++q) {
    if (opt.bijective_only) {
      long long v = q;
      for (int i = m - 1; i >= 0; --i) {
        const auto& p = perms[v % perms.size()];
        std::copy(p.begin(), p.end(), kappa.begin() + (long long)i * n);
        v /= (long long)perms.size();
      }
    } else {
      long long v = q;
      for (long long d = kappa.size(); d-- > 0;) {
        kappa[d] = (elem)(v % n);
        v /= n;
      }
    }
    ReflectionFamily k = reflection_family(s.carrier, s.params, kappa);
    if (!reflection_verify_direct(k, s).pass()) continue;
    emit(k);
  }
}

long long count_reflections(const ParamSolution& s, const ReflEnumOptions& opt) {
  long long count = 0;
  enumerate_reflections(s, opt, [&](const ReflectionFamily&) { ++count; });
  return count;
}

ReflectionComparison compare_reflection_sets(const PShelf& p,
                                             const SigmaFamily& sigma,
                                             const EnumBudget& budget) {
  ReflectionComparison out;
  ParamSolution shelf_solution = p_shelf_solution(p);
  ParamSolution twisted = twisted_solution(p, sigma);
  ReflEnumOptions opt;
  opt.budget = budget;
  enumerate_reflections(shelf_solution, opt, [&](const ReflectionFamily& k) {
    out.shelf_reflections.push_back(k.kappa);
    out.shelf_exchange_flags.push_back(twist_transport_check(k, sigma).pass());
  });
  enumerate_reflections(twisted, opt, [&](const ReflectionFamily& k) {
    out.twisted_reflections.push_back(k.kappa);
    out.twisted_exchange_flags.push_back(twist_transport_check(k, sigma).pass());
  });
  for (const auto& k : out.shelf_reflections)
    if (std::find(out.twisted_reflections.begin(),
                  out.twisted_reflections.end(),
                  k) != out.twisted_reflections.end())
      out.common.push_back(k);
  return out;
}

}  // namespace prack
