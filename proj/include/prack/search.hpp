#pragma once
// Exhaustive enumeration of small p-shelves and reflection families, with
// budget guards, optional canonical deduplication under carrier relabeling,
// and deterministic lexicographic streaming.

#include "prack/pshelf.hpp"
#include "prack/reflection.hpp"

#include <functional>

namespace prack {

struct EnumBudget {
  long long max_candidates = 5000000;
};

struct PShelfEnumOptions {
  int n = 2;
  int m = 1;
  bool rack_only = false;
  bool dedup = false;
  EnumBudget budget;
  const ParamSet* params = nullptr;  // identity mu on a plain carrier if null
};

// Streams every table satisfying the p-self-distributivity law in
// lexicographic order; throws BudgetExceeded before any work when the
// candidate count n^(m*m*n*n) exceeds the budget.  Hard caps: n ≤ 4, m ≤ 2.
void enumerate_p_shelves(const PShelfEnumOptions& opt,
                         const std::function<void(const PShelf&)>& emit);
long long count_p_shelves(const PShelfEnumOptions& opt);

// Lexicographically minimal relabeling of a p-shelf table under simultaneous
// carrier permutations (parameters fixed).
std::vector<elem> canonical_p_shelf_table(int m, int n,
                                          const std::vector<elem>& table);

// Independent non-parametric shelf counter used as the enumeration oracle.
long long count_ordinary_shelves(int n);

struct ReflEnumOptions {
  bool bijective_only = true;
  EnumBudget budget;
};

void enumerate_reflections(const ParamSolution& s, const ReflEnumOptions& opt,
                           const std::function<void(const ReflectionFamily&)>& emit);
long long count_reflections(const ParamSolution& s, const ReflEnumOptions& opt);

// Enumerates the reflections of the p-shelf solution of `p` and of the
// twisted solution built from `sigma`, lists both sets with their exchange
// relation status, and intersects them.  Observational only.
struct ReflectionComparison {
  std::vector<std::vector<elem>> shelf_reflections;
  std::vector<std::vector<elem>> twisted_reflections;
  std::vector<std::vector<elem>> common;
  std::vector<bool> shelf_exchange_flags;    // per shelf_reflections entry
  std::vector<bool> twisted_exchange_flags;  // per twisted_reflections entry
};
ReflectionComparison compare_reflection_sets(const PShelf& p,
                                             const SigmaFamily& sigma,
                                             const EnumBudget& budget);

}  // namespace prack
