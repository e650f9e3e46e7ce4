#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "constaspec/gf.hpp"
#include "constaspec/poly.hpp"

namespace constaspec {

/// Euclidean: factors over GF(q), symmetry = self-reciprocal.
/// Hermitian: factors over GF(q0^2), symmetry = self-conjugate-reciprocal.
enum class Mode { euclidean, hermitian };

std::string_view mode_name(Mode mode) noexcept;

struct LambdaOrder {
  std::uint64_t r;
};
struct LambdaValue {
  Field::Elem encoding;
};
/// lambda given by its order (canonical element_of_order choice) or explicitly.
using LambdaSpec = std::variant<LambdaOrder, LambdaValue>;

/// A validated instance x^n - lambda with n = n1 n2, rad(n1) | rad(r), gcd(n2, r) = 1.
struct ConstaParams {
  FieldPtr field;
  Mode mode = Mode::euclidean;
  std::uint64_t base = 0;  // q0 in hermitian mode, 0 otherwise
  std::uint64_t n = 1;
  std::uint64_t r = 1;
  FieldElement lambda;
  std::uint64_t n1 = 1;
  std::uint64_t n2 = 1;

  std::uint64_t q() const noexcept { return field->order(); }
  /// q in euclidean mode, q0 in hermitian mode: the integer whose -1 powers decide symmetry.
  std::uint64_t symmetry_base() const noexcept { return mode == Mode::euclidean ? q() : base; }
  /// lambda^2 = 1 (euclidean) or lambda^{q0+1} = 1 (hermitian): x^n - lambda is its own mate.
  bool lambda_symmetric() const;
  Polynomial binomial() const { return Polynomial::binomial(field, n, lambda.value()); }
};

ConstaParams decompose_params(FieldPtr field, std::uint64_t n, const LambdaSpec& lambda,
                              Mode mode = Mode::euclidean, std::uint64_t base = 0);
ConstaParams euclidean_params(std::uint64_t q, std::uint64_t n, const LambdaSpec& lambda);
/// Builds GF(base^2) and analyses x^n - lambda over it.
ConstaParams hermitian_params(std::uint64_t base, std::uint64_t n, const LambdaSpec& lambda);
/// Same field and lambda, re-read in the other mode.
ConstaParams with_mode(const ConstaParams& params, Mode mode);

/// Root order e = r d n1 -> multiplicity n1 phi(d), one entry per d | n2.
struct RootDistribution {
  std::map<std::uint64_t, std::uint64_t> entries;

  std::uint64_t total() const;
};

struct FactorProfile {
  std::uint64_t divisor_d;
  std::uint64_t order_e;
  std::uint64_t degree;
  std::uint64_t count;
  bool symmetric;
  std::optional<std::uint64_t> witness_w;  // least (odd, in hermitian mode) w with base^w = -1 mod e
};

struct AnalysisReport {
  ConstaParams params;
  std::vector<FactorProfile> profiles;
  std::uint64_t total_factors = 0;      // N1 / M1
  std::uint64_t symmetric_factors = 0;  // N2 / M2
  std::vector<std::uint64_t> special_set;  // S(n, r) / T(n, r), ascending

  std::map<std::uint64_t, std::uint64_t> degree_multiset() const;
};

RootDistribution root_distribution(const ConstaParams& params);
std::vector<std::uint64_t> special_set(const ConstaParams& params);
AnalysisReport count_factors(const ConstaParams& params);

struct V2PrimeEntry {
  std::uint64_t prime;
  std::uint64_t order;  // ord_p(q)
  std::uint32_t v2;
};

/// The 2-adic form of "some power of q is -1 mod n": all odd primes p_i | n
/// share v2(ord_{p_i}(q)) = delta > 0 (delta = 1 once 4 | n), and q = -1 mod 2^{v2(n)}.
struct V2Criterion {
  std::uint32_t v2_n = 0;
  std::vector<V2PrimeEntry> per_prime;
  std::optional<std::uint32_t> delta;
  bool two_part_ok = false;
  bool holds = false;
};

V2Criterion sr_v2_criterion(std::uint64_t n, std::uint64_t q);

/// {s, s q, s q^2, ...} mod m, in generation order.
std::vector<std::uint64_t> cyclotomic_coset(std::uint64_t s, std::uint64_t m, std::uint64_t q);

struct CosetClass {
  std::uint64_t order_e;
  std::vector<std::uint64_t> representative;  // coset of 1 mod e
  std::uint64_t coset_size;
  std::uint64_t coset_count;
};

/// Degree witness per root order, from exponent arithmetic alone.
std::vector<CosetClass> structural_coset_view(const ConstaParams& params);

struct OracleBudget {
  std::uint64_t max_degree = 1024;

  /// Default, overridden by CONSTASPEC_BUDGET when set.
  static OracleBudget from_env();
  void check(const ConstaParams& params) const;
};

/// Symmetric in the params' mode: SR (euclidean) or SCR w.r.t. base (hermitian).
bool is_symmetric(const Polynomial& f, const ConstaParams& params);
/// f* or f-dagger, per mode.
Polynomial mate(const Polynomial& f, const ConstaParams& params);

struct CrossValidation {
  AnalysisReport formula;
  FactorMultiset factorization;
  std::uint64_t oracle_total = 0;
  std::uint64_t oracle_symmetric = 0;
  std::map<std::uint64_t, std::uint64_t> oracle_degrees;
  bool agree = false;
};

CrossValidation cross_validate(const ConstaParams& params, std::uint64_t seed,
                               const OracleBudget& budget = {});

}  // namespace constaspec
