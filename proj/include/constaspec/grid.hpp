#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "constaspec/consta.hpp"

namespace constaspec {

/// One (q, n, r) point. q is the field order in euclidean mode and the base q0 in hermitian mode.
struct GridInstance {
  Mode mode = Mode::euclidean;
  std::uint64_t q = 2;
  std::uint64_t n = 1;
  std::uint64_t r = 1;

  friend auto operator<=>(const GridInstance&, const GridInstance&) = default;
};

std::string describe(const GridInstance& instance);
ConstaParams instance_params(const GridInstance& instance);

/// Prime powers q <= q_max, n <= n_max with gcd(n, q) = 1, r | q - 1.
std::vector<GridInstance> euclidean_grid(std::uint64_t q_max, std::uint64_t n_max);
/// Prime powers q0 <= base_max, n <= n_max with gcd(n, q0) = 1, r | q0^2 - 1.
std::vector<GridInstance> hermitian_grid(std::uint64_t base_max, std::uint64_t n_max);

struct GridOutcome {
  GridInstance instance;
  std::uint64_t formula_total = 0;
  std::uint64_t formula_symmetric = 0;
  std::uint64_t oracle_total = 0;
  std::uint64_t oracle_symmetric = 0;
  bool agree = false;
  std::optional<std::string> error;  // set when the instance could not be run
};

/// cross_validate on every instance, fanned out over `jobs` threads. The
/// result order matches the input order whatever the thread count.
std::vector<GridOutcome> run_grid(const std::vector<GridInstance>& instances, std::uint64_t seed,
                                  unsigned jobs = 1, const OracleBudget& budget = {});

}  // namespace constaspec
