#pragma once

// Data-parallel range sweeps (OpenMP) with serial reference versions.

#include "phirep/zphi.hpp"

#include <cstddef>
#include <functional>
#include <vector>

namespace phirep {

/// n in [from, to] where `ok(n)` is false, ascending, at most `max_failures`
/// reported (the sweep always covers the whole range).
std::vector<long long> find_failures(long long from, long long to, const std::function<bool(long long)>& ok,
                                     std::size_t max_failures = 20);
std::vector<long long> find_failures_serial(long long from, long long to, const std::function<bool(long long)>& ok,
                                            std::size_t max_failures = 20);

/// fn(n) for n in [from, to], in order.
std::vector<long long> sweep_values(long long from, long long to, const std::function<long long(long long)>& fn);

/// Number of n in [from, to] with pred(n).
long long count_where(long long from, long long to, const std::function<bool(long long)>& pred);
long long count_where_serial(long long from, long long to, const std::function<bool(long long)>& pred);

/// Number of expansions of each n in [from, to] within the bounds that
/// pass `filter` (brute-force census).
std::vector<std::size_t> rep_census(long long from, long long to, int left_len, int right_len,
                                    const RepFilter& filter);
std::vector<std::size_t> rep_census_serial(long long from, long long to, int left_len, int right_len,
                                           const RepFilter& filter);

/// Threads available to the parallel kernels.
int sweep_threads();

}  // namespace phirep
