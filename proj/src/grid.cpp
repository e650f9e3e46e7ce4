#include "constaspec/grid.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "constaspec/error.hpp"
#include "constaspec/numtheory.hpp"

namespace constaspec {
namespace {

std::vector<GridInstance> grid(Mode mode, std::uint64_t q_max, std::uint64_t n_max) {
  std::vector<GridInstance> out;
  for (std::uint64_t q = 2; q <= q_max; ++q) {
    if (!as_prime_power(q)) continue;
    const std::uint64_t group = mode == Mode::euclidean ? q - 1 : q * q - 1;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
      if (gcd(n, q) != 1) continue;
      for (auto r : divisors(group)) out.push_back({mode, q, n, r});
    }
  }
  return out;
}

}  // namespace

std::string describe(const GridInstance& instance) {
  return std::string(instance.mode == Mode::euclidean ? "q=" : "q0=") +
         std::to_string(instance.q) + " n=" + std::to_string(instance.n) +
         " r=" + std::to_string(instance.r);
}

ConstaParams instance_params(const GridInstance& instance) {
  return instance.mode == Mode::euclidean
             ? euclidean_params(instance.q, instance.n, LambdaOrder{instance.r})
             : hermitian_params(instance.q, instance.n, LambdaOrder{instance.r});
}

std::vector<GridInstance> euclidean_grid(std::uint64_t q_max, std::uint64_t n_max) {
  return grid(Mode::euclidean, q_max, n_max);
}

std::vector<GridInstance> hermitian_grid(std::uint64_t base_max, std::uint64_t n_max) {
  return grid(Mode::hermitian, base_max, n_max);
}

std::vector<GridOutcome> run_grid(const std::vector<GridInstance>& instances, std::uint64_t seed,
                                  unsigned jobs, const OracleBudget& budget) {
  std::vector<GridOutcome> out(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      GridOutcome& o = out[i];
      o.instance = instances[i];
      try {
        const auto cv = cross_validate(instance_params(o.instance), seed, budget);
        o.formula_total = cv.formula.total_factors;
        o.formula_symmetric = cv.formula.symmetric_factors;
        o.oracle_total = cv.oracle_total;
        o.oracle_symmetric = cv.oracle_symmetric;
        o.agree = cv.agree;
      } catch (const Error& e) {
        o.error = e.what();
      }
    }
  };
  jobs = std::max(1U, jobs);
  if (jobs == 1) {
    worker();
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace constaspec
