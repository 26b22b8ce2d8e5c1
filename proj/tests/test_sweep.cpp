#include "phirep/sweep.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace phirep;

TEST_CASE("parallel sweeps match the serial versions") {
  auto ok = [](long long n) { return n % 97 != 13 && n % 1000 != 999; };
  CHECK(find_failures(0, 50000, ok, 1000) == find_failures_serial(0, 50000, ok, 1000));
  auto first = find_failures(0, 50000, ok, 3);
  CHECK(first == std::vector<long long>{13, 110, 207});
  auto pred = [](long long n) { return phi_canonical(n).count_ones() % 2 == 1; };
  CHECK(count_where(0, 3000, pred) == count_where_serial(0, 3000, pred));
  auto sq = sweep_values(-5, 5, [](long long n) { return n * n; });
  CHECK(sq == std::vector<long long>{25, 16, 9, 4, 1, 0, 1, 4, 9, 16, 25});
  CHECK(rep_census(0, 60, 8, 8, filters::knott()) == rep_census_serial(0, 60, 8, 8, filters::knott()));
  CHECK(sweep_values(3, 2, [](long long n) { return n; }).empty());
  CHECK(sweep_threads() >= 1);
}

TEST_CASE("exceptions inside a sweep reach the caller") {
  auto boom = [](long long n) -> bool {
    if (n == 777) throw std::runtime_error("boom");
    return true;
  };
  CHECK_THROWS_AS(find_failures(0, 2000, boom), std::runtime_error);
  CHECK_THROWS_AS(count_where(0, 2000, boom), std::runtime_error);
}
