#include "prack/core.hpp"

#include <algorithm>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace prack {

Carrier::Carrier(int n) : size(n) {
  if (n < 1) throw validation_error("EmptyCarrier", "carrier size must be >= 1");
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
}

Carrier::Carrier(int n, std::vector<std::string> labels_in)
    : size(n), labels(std::move(labels_in)) {
  if (n < 1) throw validation_error("EmptyCarrier", "carrier size must be >= 1");
  if ((int)labels.size() != n)
    throw validation_error("LabelCount", "expected one label per element");
  std::set<std::string> seen(labels.begin(), labels.end());
  if ((int)seen.size() != n)
    throw validation_error("LabelClash", "carrier labels must be distinct");
}

bool Report::pass() const {
  for (const auto& c : conditions)
    if (!c.pass) return false;
  return true;
}

const Condition* Report::first_failure() const {
  for (const auto& c : conditions)
    if (!c.pass) return &c;
  return nullptr;
}

Report& Report::add(Condition c) {
  conditions.push_back(std::move(c));
  return *this;
}

Report& Report::law(const std::string& name, long long fail_index,
                    const std::vector<long long>& dims,
                    const std::string& note) {
  Condition c;
  c.law = name;
  c.note = note;
  if (fail_index >= 0) {
    c.pass = false;
    c.witness = decode_index(fail_index, dims);
  }
  conditions.push_back(std::move(c));
  return *this;
}

std::string Report::summary() const {
  std::string out = subject.empty() ? std::string("check") : subject;
  out += pass() ? ": pass" : ": FAIL";
  for (const auto& c : conditions) {
    out += "\n  ";
    out += c.pass ? "[ok]   " : "[FAIL] ";
    out += c.law;
    if (!c.pass) out += " at " + witness_string(c.witness);
    if (!c.note.empty()) out += " (" + c.note + ")";
  }
  return out;
}

std::vector<long long> decode_index(long long q,
                                    const std::vector<long long>& dims) {
  std::vector<long long> out(dims.size(), 0);
  for (int d = (int)dims.size() - 1; d >= 0; --d) {
    out[d] = q % dims[d];
    q /= dims[d];
  }
  return out;
}

long long space_size(const std::vector<long long>& dims) {
  long long total = 1;
  for (long long d : dims) total *= d;
  return total;
}

namespace {
int g_threads = 0;
}

void set_scan_threads(int threads) { g_threads = threads < 0 ? 0 : threads; }

int scan_threads() { return g_threads; }

int effective_scan_threads() {
#ifdef _OPENMP
  return g_threads == 0 ? omp_get_max_threads() : g_threads;
#else
  return 1;
#endif
}

bool is_permutation(const elem* row, int n) {
  std::vector<char> seen(n, 0);
  for (int i = 0; i < n; ++i) {
    elem v = row[i];
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool is_permutation(const std::vector<elem>& row) {
  return is_permutation(row.data(), (int)row.size());
}

std::vector<elem> invert_permutation(const elem* row, int n) {
  std::vector<elem> inv(n, -1);
  for (int i = 0; i < n; ++i) inv[row[i]] = i;
  return inv;
}

std::vector<elem> identity_permutation(int n) {
  std::vector<elem> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  return id;
}

std::string witness_string(const std::vector<long long>& w) {
  std::string out = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w[i]);
  }
  out += ")";
  return out;
}

}  // namespace prack
