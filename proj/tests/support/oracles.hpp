#pragma once

// Brute-force reference implementations. None of these call into the
// closed-form machinery they are used to check.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "constaspec/codes.hpp"
#include "constaspec/consta.hpp"
#include "constaspec/gf.hpp"
#include "constaspec/poly.hpp"

namespace oracle {

using namespace constaspec;

inline std::uint64_t naive_gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    const std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline bool naive_is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Order of a mod m by repeated multiplication.
inline std::uint64_t order_by_scan(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 1;
  std::uint64_t x = a % m;
  for (std::uint64_t e = 1; e <= m; ++e) {
    if (x == 1) return e;
    x = x * (a % m) % m;
  }
  return 0;
}

/// Least w in [1, 2m] (odd if requested) with a^w = -1 mod m.
inline std::optional<std::uint64_t> negative_one_scan(std::uint64_t a, std::uint64_t m,
                                                      bool odd_only) {
  const std::uint64_t target = (m - 1) % m;
  std::uint64_t x = 1 % m;
  for (std::uint64_t w = 1; w <= 2 * m; ++w) {
    x = x * (a % m) % m;
    if (x == target && (!odd_only || w % 2 == 1)) return w;
  }
  return std::nullopt;
}

inline std::uint64_t phi_by_scan(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t k = 1; k <= n; ++k) c += naive_gcd(k, n) == 1;
  return c;
}

/// With zeta of order nr and lambda = zeta^n, the roots of x^n - lambda are
/// zeta^{1 + r i}; tally their orders directly.
inline std::map<std::uint64_t, std::uint64_t> root_orders_by_scan(std::uint64_t n,
                                                                  std::uint64_t r) {
  std::map<std::uint64_t, std::uint64_t> out;
  const std::uint64_t m = n * r;
  for (std::uint64_t i = 0; i < n; ++i) ++out[m / naive_gcd(1 + r * i, m)];
  return out;
}

/// Schoolbook GF(p^k) product on digit vectors, reduced by the field modulus.
inline Field::Elem schoolbook_mul(const Field& F, Field::Elem a, Field::Elem b) {
  const std::uint64_t p = F.characteristic();
  const unsigned k = F.degree();
  const auto da = F.digits(a);
  const auto db = F.digits(b);
  std::vector<std::uint64_t> prod(2 * k, 0);
  for (unsigned i = 0; i < k; ++i) {
    for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  }
  const auto& mod = F.modulus();
  for (unsigned top = 2 * k - 1; top >= k; --top) {
    const std::uint64_t c = prod[top];
    if (c == 0) continue;
    for (unsigned i = 0; i <= k; ++i) {
      prod[top - k + i] = (prod[top - k + i] + (p - c) * mod[i]) % p;
    }
  }
  std::vector<Field::Elem> digits(prod.begin(), prod.begin() + k);
  return F.from_digits(digits);
}

/// Every monic polynomial of the given degree, in encoding order.
inline void for_each_monic(const FieldPtr& F, int degree,
                           const std::function<void(const Polynomial&)>& fn) {
  const std::uint64_t q = F->order();
  std::vector<Field::Elem> c(static_cast<std::size_t>(degree) + 1, 0);
  c.back() = 1;
  while (true) {
    fn(Polynomial(F, c));
    std::size_t i = 0;
    while (i < static_cast<std::size_t>(degree) && ++c[i] == q) c[i++] = 0;
    if (i == static_cast<std::size_t>(degree)) return;
  }
}

/// Irreducible iff no monic factor of degree 1..deg/2.
inline bool irreducible_by_trial(const Polynomial& f) {
  if (f.degree() <= 0) return false;
  bool found = false;
  for (int d = 1; d <= f.degree() / 2 && !found; ++d) {
    for_each_monic(f.field(), d, [&](const Polynomial& g) {
      if (!found && (f % g).is_zero()) found = true;
    });
  }
  return !found;
}

/// Reciprocal straight from the definition: reverse the coefficients, make monic.
inline Polynomial reciprocal_by_reversal(const Polynomial& f) {
  std::vector<Field::Elem> c(f.coeffs().rbegin(), f.coeffs().rend());
  return Polynomial(f.field(), c).monic();
}

/// Conjugate-reciprocal from the definition: reverse, raise each coefficient to q0, make monic.
inline Polynomial conjugate_reciprocal_by_reversal(const Polynomial& f, std::uint64_t q0) {
  std::vector<Field::Elem> c(f.coeffs().rbegin(), f.coeffs().rend());
  for (auto& x : c) x = f.F().pow(x, q0);
  return Polynomial(f.field(), c).monic();
}

inline Polynomial subset_product(const std::vector<Polynomial>& factors, std::uint64_t mask) {
  Polynomial g = Polynomial::constant(factors.front().field(), 1);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (mask >> i & 1U) g = g * factors[i];
  }
  return g;
}

inline std::vector<Polynomial> factor_list(const ConstaParams& params, std::uint64_t seed) {
  std::vector<Polynomial> out;
  for (const auto& fp : factorize(params.binomial(), seed).factors) out.push_back(fp.factor);
  return out;
}

/// Number of LCD codes among all 2^N divisors.
inline std::uint64_t count_lcd_exhaustive(const ConstaParams& params, Mode kind,
                                          const std::vector<Polynomial>& factors) {
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << factors.size()); ++mask) {
    count += is_lcd(build_code(params, subset_product(factors, mask)), kind);
  }
  return count;
}

/// Self-dual divisors among all 2^N subsets, checked one by one.
inline std::uint64_t count_self_dual_brute(const ConstaParams& params, Mode kind,
                                           const std::vector<Polynomial>& factors) {
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << factors.size()); ++mask) {
    count += is_self_dual(build_code(params, subset_product(factors, mask)), kind);
  }
  return count;
}

/// Self-dual divisors, searched over factor subsets. Each factor either joins
/// g or joins h; a self-dual g equals the mate of h, so a branch dies as soon
/// as a factor and its mate land on inconsistent sides. Survivors are
/// confirmed with is_self_dual on the assembled polynomial.
inline std::uint64_t count_self_dual_exhaustive(const ConstaParams& params, Mode kind,
                                                const std::vector<Polynomial>& factors) {
  const ConstaParams view = with_mode(params, kind);
  const std::size_t n = factors.size();
  std::vector<int> mate_of(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const Polynomial m = kind == Mode::euclidean
                             ? reciprocal_by_reversal(factors[i])
                             : conjugate_reciprocal_by_reversal(factors[i], view.base);
    for (std::size_t j = 0; j < n; ++j) {
      if (factors[j] == m) mate_of[i] = static_cast<int>(j);
    }
  }
  // a factor that fits on neither side kills every branch
  for (std::size_t i = 0; i < n; ++i) {
    if (mate_of[i] < 0 || mate_of[i] == static_cast<int>(i)) return 0;
  }
  std::vector<int> side(n, -1);  // 1: in g, 0: in h
  std::uint64_t count = 0;
  std::function<void(std::size_t)> search = [&](std::size_t i) {
    if (i == n) {
      Polynomial g = Polynomial::constant(view.field, 1);
      for (std::size_t j = 0; j < n; ++j) {
        if (side[j] == 1) g = g * factors[j];
      }
      count += is_self_dual(build_code(view, g), kind);
      return;
    }
    for (int s : {1, 0}) {
      const int m = mate_of[i];
      // g = mate(h): f in g  <=>  mate(f) in h
      if (m < 0) {
        continue;  // the mate of f is not a factor, so f fits on neither side
      } else if (static_cast<std::size_t>(m) < i && side[m] == s) {
        continue;
      } else if (static_cast<std::size_t>(m) == i) {
        continue;
      }
      side[i] = s;
      search(i + 1);
      side[i] = -1;
    }
  };
  search(0);
  return count;
}

}  // namespace oracle
