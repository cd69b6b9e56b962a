#pragma once
// Carriers, dense index tables, check reports, and the scan kernels
// (serial reference + OpenMP) shared by every exhaustive verifier.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace prack {

using elem = int;  // dense element index into a carrier, 0..size-1

struct Carrier {
  int size = 0;
  std::vector<std::string> labels;  // pairwise distinct, one per element

  Carrier() = default;
  explicit Carrier(int n);                             // labels "0".."n-1"
  Carrier(int n, std::vector<std::string> labels_in);  // validated

  bool operator==(const Carrier&) const = default;
};

// Thrown when a constructor's exhaustive validation fails.  `code` is a
// stable machine-readable tag, `witness` pins the offending indices.
struct validation_error : std::runtime_error {
  std::string code;
  std::vector<long long> witness;

  validation_error(std::string code_in, const std::string& msg,
                   std::vector<long long> witness_in = {})
      : std::runtime_error(msg),
        code(std::move(code_in)),
        witness(std::move(witness_in)) {}
};

// One verified law inside a report.
struct Condition {
  std::string law;
  bool pass = true;
  std::vector<long long> witness;  // empty when pass
  std::string note;
};

struct Report {
  std::string subject;
  std::vector<Condition> conditions;

  bool pass() const;
  const Condition* first_failure() const;
  Report& add(Condition c);
  // Records a pass/fail condition from a scan result (-1 = pass).
  Report& law(const std::string& name, long long fail_index,
              const std::vector<long long>& dims, const std::string& note = "");
  std::string summary() const;
};

// Mixed-radix decoding of flat scan indices, most-significant digit first,
// so the smallest flat index is the lexicographically smallest tuple.
std::vector<long long> decode_index(long long q,
                                    const std::vector<long long>& dims);
long long space_size(const std::vector<long long>& dims);

// ---- scan kernels -------------------------------------------------------
//
// All exhaustive checks reduce to: find the smallest flat index where a
// predicate fails (-1 if none).  The serial version is the reference; the
// OpenMP version partitions the range and reduces to the same index.

void set_scan_threads(int threads);  // 0 = runtime default, 1 = serial
int scan_threads();
int effective_scan_threads();

template <class Pred>
long long find_first_fail_serial(long long total, Pred&& pred) {
  for (long long q = 0; q < total; ++q)
    if (!pred(q)) return q;
  return -1;
}

#ifdef _OPENMP
template <class Pred>
long long find_first_fail_omp(long long total, Pred&& pred, int threads) {
  long long best = total;
#pragma omp parallel for schedule(static) reduction(min : best) \
    num_threads(threads)
  for (long long q = 0; q < total; ++q) {
    if (q < best && !pred(q)) best = q;
  }
  return best == total ? -1 : best;
}
#endif

template <class Pred>
long long find_first_fail(long long total, Pred&& pred) {
#ifdef _OPENMP
  int nt = effective_scan_threads();
  if (nt > 1 && total >= 1024)
    return find_first_fail_omp(total, pred, nt);
#endif
  return find_first_fail_serial(total, pred);
}

// ---- permutation helpers ------------------------------------------------

bool is_permutation(const elem* row, int n);
bool is_permutation(const std::vector<elem>& row);
std::vector<elem> invert_permutation(const elem* row, int n);
std::vector<elem> identity_permutation(int n);

std::string witness_string(const std::vector<long long>& w);

}  // namespace prack
