#include "phirep/sweep.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>

namespace phirep {

namespace {

// Runs body(n) for n in [from, to] in parallel; the first exception thrown
// by any iteration is rethrown afterwards.
void parallel_range(long long from, long long to, const std::function<void(long long)>& body) {
  std::exception_ptr error;
  #pragma omp parallel for schedule(dynamic, 16)
  for (long long n = from; n <= to; ++n) {
    try {
      body(n);
    } catch (...) {
      #pragma omp critical(phirep_sweep_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::vector<long long> find_failures(long long from, long long to, const std::function<bool(long long)>& ok,
                                     std::size_t max_failures) {
  if (to < from) return {};
  std::vector<char> bad(static_cast<std::size_t>(to - from + 1), 0);
  parallel_range(from, to, [&](long long n) { bad[static_cast<std::size_t>(n - from)] = ok(n) ? 0 : 1; });
  std::vector<long long> out;
  for (long long n = from; n <= to && out.size() < max_failures; ++n)
    if (bad[static_cast<std::size_t>(n - from)]) out.push_back(n);
  return out;
}

std::vector<long long> find_failures_serial(long long from, long long to, const std::function<bool(long long)>& ok,
                                            std::size_t max_failures) {
  std::vector<long long> out;
  for (long long n = from; n <= to; ++n)
    if (!ok(n) && out.size() < max_failures) out.push_back(n);
  return out;
}

std::vector<long long> sweep_values(long long from, long long to, const std::function<long long(long long)>& fn) {
  if (to < from) return {};
  std::vector<long long> out(static_cast<std::size_t>(to - from + 1));
  parallel_range(from, to, [&](long long n) { out[static_cast<std::size_t>(n - from)] = fn(n); });
  return out;
}

long long count_where(long long from, long long to, const std::function<bool(long long)>& pred) {
  if (to < from) return 0;
  std::vector<char> hit(static_cast<std::size_t>(to - from + 1), 0);
  parallel_range(from, to, [&](long long n) { hit[static_cast<std::size_t>(n - from)] = pred(n) ? 1 : 0; });
  return std::count(hit.begin(), hit.end(), 1);
}

long long count_where_serial(long long from, long long to, const std::function<bool(long long)>& pred) {
  long long c = 0;
  for (long long n = from; n <= to; ++n)
    if (pred(n)) ++c;
  return c;
}

std::vector<std::size_t> rep_census(long long from, long long to, int left_len, int right_len,
                                    const RepFilter& filter) {
  if (to < from) return {};
  std::vector<std::size_t> out(static_cast<std::size_t>(to - from + 1));
  parallel_range(from, to, [&](long long n) {
    out[static_cast<std::size_t>(n - from)] = enumerate_phi_reps(n, left_len, right_len, filter).size();
  });
  return out;
}

std::vector<std::size_t> rep_census_serial(long long from, long long to, int left_len, int right_len,
                                           const RepFilter& filter) {
  std::vector<std::size_t> out;
  for (long long n = from; n <= to; ++n) out.push_back(enumerate_phi_reps(n, left_len, right_len, filter).size());
  return out;
}

int sweep_threads() { return omp_get_max_threads(); }

}  // namespace phirep
