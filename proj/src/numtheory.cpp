#include "constaspec/numtheory.hpp"

#include <algorithm>
#include <string>

#include "constaspec/error.hpp"

namespace constaspec {

std::vector<std::uint64_t> IntFactorization::primes() const {
  std::vector<std::uint64_t> out;
  out.reserve(factors.size());
  for (const auto& f : factors) out.push_back(f.prime);
  return out;
}

std::vector<std::uint64_t> IntFactorization::divisors() const {
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : factors) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (std::uint32_t i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t result = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (base != 0 && result > UINT64_MAX / base) {
      throw Error(Errc::bound_exceeded, "integer power overflows 64 bits");
    }
    result *= base;
  }
  return result;
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<PrimePower> as_prime_power(std::uint64_t q) noexcept {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d <= q / d; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return PrimePower{q, 1};
  std::uint32_t k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return std::nullopt;
  return PrimePower{p, k};
}

IntFactorization factor_integer(std::uint64_t n, std::uint64_t bound) {
  if (n == 0) throw Error(Errc::invalid_argument, "cannot factor 0");
  if (n > bound) {
    throw Error(Errc::bound_exceeded,
                std::to_string(n) + " exceeds the factoring bound " + std::to_string(bound));
  }
  IntFactorization out;
  out.value = n;
  auto strip = [&](std::uint64_t p) {
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.factors.push_back({p, e});
  };
  strip(2);
  for (std::uint64_t d = 3; d <= n / d; d += 2) strip(d);
  if (n > 1) out.factors.push_back({n, 1});
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n, std::uint64_t bound) {
  return factor_integer(n, bound).divisors();
}

std::uint64_t euler_phi(std::uint64_t n, std::uint64_t bound) {
  std::uint64_t phi = n;
  for (const auto& f : factor_integer(n, bound).factors) phi = phi / f.prime * (f.prime - 1);
  return phi;
}

std::uint64_t radical(std::uint64_t n, std::uint64_t bound) {
  std::uint64_t rad = 1;
  for (const auto& f : factor_integer(n, bound).factors) rad *= f.prime;
  return rad;
}

std::uint32_t p_adic_valuation(std::uint64_t p, std::uint64_t n) {
  if (!is_prime(p)) throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
  if (n == 0) throw Error(Errc::invalid_argument, "valuation of 0 is infinite");
  std::uint32_t k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m == 0) throw Error(Errc::invalid_argument, "modulus must be positive");
  if (m == 1) return 1;
  a %= m;
  if (gcd(a, m) != 1) {
    throw Error(Errc::not_coprime,
                "gcd(" + std::to_string(a) + ", " + std::to_string(m) + ") != 1");
  }
  // The order divides phi(m); strip prime factors while the power stays 1.
  std::uint64_t e = euler_phi(m);
  for (const auto& f : factor_integer(e).factors) {
    for (std::uint32_t i = 0; i < f.exponent; ++i) {
      if (pow_mod(a, e / f.prime, m) != 1) break;
      e /= f.prime;
    }
  }
  return e;
}

NegativeOneWitness has_negative_one_power(std::uint64_t a, std::uint64_t m) {
  if (m == 0) throw Error(Errc::invalid_argument, "modulus must be positive");
  if (gcd(a % m, m) != 1) {
    throw Error(Errc::not_coprime,
                "gcd(" + std::to_string(a) + ", " + std::to_string(m) + ") != 1");
  }
  if (m <= 2) return {true, 1};
  const std::uint64_t e = multiplicative_order(a, m);
  if (e % 2 == 0 && pow_mod(a, e / 2, m) == m - 1) return {true, e / 2};
  return {};
}

NegativeOneWitness has_odd_negative_one_power(std::uint64_t a, std::uint64_t m) {
  auto any = has_negative_one_power(a, m);
  if (!any.exists || m <= 2) return any;
  if (*any.minimal_w % 2 == 1) return any;
  return {};
}

std::pair<std::uint64_t, std::uint64_t> split_by_radical(std::uint64_t n, std::uint64_t r,
                                                         std::uint64_t bound) {
  if (n == 0 || r == 0) throw Error(Errc::invalid_argument, "n and r must be positive");
  std::uint64_t n1 = 1;
  for (const auto& f : factor_integer(n, bound).factors) {
    if (r % f.prime == 0) n1 *= checked_pow(f.prime, f.exponent);
  }
  return {n1, n / n1};
}

std::uint64_t lift_negative_one_power(std::uint64_t s, std::uint64_t w, std::uint64_t l,
                                      std::uint32_t t) {
  if (l < 3 || !is_prime(l)) {
    throw Error(Errc::precondition_failed, std::to_string(l) + " is not an odd prime");
  }
  if (t < 2) throw Error(Errc::precondition_failed, "lifting needs t >= 2");
  if (w == 0 || pow_mod(s, w, l) != l - 1) {
    throw Error(Errc::precondition_failed, std::to_string(s) + "^" + std::to_string(w) +
                                               " is not -1 mod " + std::to_string(l));
  }
  const std::uint64_t lift = checked_pow(l, t - 1);
  if (w > UINT64_MAX / lift) throw Error(Errc::bound_exceeded, "lifted exponent overflows");
  return w * lift;
}

}  // namespace constaspec
