#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace constaspec {

inline constexpr std::uint64_t kDefaultFactorBound = 1'000'000'000'000ULL;

struct PrimePower {
  std::uint64_t prime;
  std::uint32_t exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization of a positive integer; primes strictly increasing.
struct IntFactorization {
  std::uint64_t value = 1;
  std::vector<PrimePower> factors;

  std::vector<std::uint64_t> primes() const;
  std::vector<std::uint64_t> divisors() const;  // ascending
};

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept;
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept;
/// Exact power; throws BoundExceeded on 64-bit overflow.
std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp);

bool is_prime(std::uint64_t n) noexcept;
/// q = p^k with k >= 1, or nullopt.
std::optional<PrimePower> as_prime_power(std::uint64_t q) noexcept;

IntFactorization factor_integer(std::uint64_t n, std::uint64_t bound = kDefaultFactorBound);
std::vector<std::uint64_t> divisors(std::uint64_t n, std::uint64_t bound = kDefaultFactorBound);
std::uint64_t euler_phi(std::uint64_t n, std::uint64_t bound = kDefaultFactorBound);
std::uint64_t radical(std::uint64_t n, std::uint64_t bound = kDefaultFactorBound);
std::uint32_t p_adic_valuation(std::uint64_t p, std::uint64_t n);

/// Least e >= 1 with a^e = 1 (mod m). ord_1(a) = 1 by convention.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

struct NegativeOneWitness {
  bool exists = false;
  std::optional<std::uint64_t> minimal_w;
};

/// Does some w >= 1 satisfy a^w = -1 (mod m)? Decided from the order e of a:
/// the solutions are exactly the odd multiples of e/2 when a^{e/2} = -1.
/// For m <= 2 the answer is always yes with witness 1.
NegativeOneWitness has_negative_one_power(std::uint64_t a, std::uint64_t m);

/// As has_negative_one_power, restricted to odd w.
NegativeOneWitness has_odd_negative_one_power(std::uint64_t a, std::uint64_t m);

/// n = n1 * n2 with rad(n1) | rad(r) and gcd(n2, r) = 1.
std::pair<std::uint64_t, std::uint64_t> split_by_radical(std::uint64_t n, std::uint64_t r,
                                                         std::uint64_t bound = kDefaultFactorBound);

/// Given s^w = -1 (mod l) for an odd prime l, returns w * l^(t-1), for which
/// s^(w l^(t-1)) = -1 (mod l^t) and the 2-adic valuation of w is preserved.
std::uint64_t lift_negative_one_power(std::uint64_t s, std::uint64_t w, std::uint64_t l,
                                      std::uint32_t t);

}  // namespace constaspec
