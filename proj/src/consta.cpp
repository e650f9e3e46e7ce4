#include "constaspec/consta.hpp"

#include <cstdlib>
#include <string>
#include <type_traits>

#include "constaspec/error.hpp"
#include "constaspec/numtheory.hpp"

namespace constaspec {

std::string_view mode_name(Mode mode) noexcept {
  return mode == Mode::euclidean ? "euclidean" : "hermitian";
}

bool ConstaParams::lambda_symmetric() const {
  if (mode == Mode::euclidean) return (lambda * lambda).value() == 1;
  return lambda.pow(base + 1).value() == 1;
}

ConstaParams decompose_params(FieldPtr field, std::uint64_t n, const LambdaSpec& lambda,
                              Mode mode, std::uint64_t base) {
  if (!field) throw Error(Errc::invalid_argument, "null field");
  if (n == 0) throw Error(Errc::invalid_argument, "length n must be positive");
  const std::uint64_t p = field->characteristic();
  if (n % p == 0) {
    throw Error(Errc::repeated_root, "characteristic " + std::to_string(p) + " divides n = " +
                                         std::to_string(n) + " (gcd(n, q) must be 1)");
  }
  if (mode == Mode::hermitian) {
    if (base < 2 || base > field->order() / base || base * base != field->order()) {
      throw Error(Errc::not_square_field,
                  field->name() + " is not the square of base " + std::to_string(base));
    }
  } else {
    base = 0;
  }

  auto chosen = std::visit(
      [&](const auto& spec) -> FieldElement {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, LambdaOrder>) {
          return element_of_order(field, spec.r);
        } else {
          if (!field->contains(spec.encoding)) {
            throw Error(Errc::invalid_argument, std::to_string(spec.encoding) +
                                                    " is not an element of " + field->name());
          }
          if (spec.encoding == 0) throw Error(Errc::zero_lambda, "lambda must be nonzero");
          return FieldElement(field, spec.encoding);
        }
      },
      lambda);

  const std::uint64_t r = element_order(chosen);
  const auto [n1, n2] = split_by_radical(n, r);
  return ConstaParams{std::move(field), mode, base, n, r, chosen, n1, n2};
}

ConstaParams euclidean_params(std::uint64_t q, std::uint64_t n, const LambdaSpec& lambda) {
  return decompose_params(make_field_of_order(q), n, lambda, Mode::euclidean);
}

ConstaParams hermitian_params(std::uint64_t base, std::uint64_t n, const LambdaSpec& lambda) {
  const auto pp = as_prime_power(base);
  if (!pp) throw Error(Errc::not_prime, std::to_string(base) + " is not a prime power");
  return decompose_params(make_field(pp->prime, 2 * pp->exponent), n, lambda, Mode::hermitian,
                          base);
}

ConstaParams with_mode(const ConstaParams& params, Mode mode) {
  if (mode == params.mode) return params;
  if (mode == Mode::euclidean) {
    ConstaParams out = params;
    out.mode = Mode::euclidean;
    out.base = 0;
    return out;
  }
  throw Error(Errc::kind_mismatch, "hermitian analysis needs params built over GF(q0^2)");
}

std::uint64_t RootDistribution::total() const {
  std::uint64_t t = 0;
  for (const auto& [order, mult] : entries) t += mult;
  return t;
}

std::map<std::uint64_t, std::uint64_t> AnalysisReport::degree_multiset() const {
  std::map<std::uint64_t, std::uint64_t> out;
  for (const auto& p : profiles) out[p.degree] += p.count;
  return out;
}

RootDistribution root_distribution(const ConstaParams& params) {
  RootDistribution out;
  for (auto d : divisors(params.n2)) {
    out.entries[params.r * d * params.n1] += params.n1 * euler_phi(d);
  }
  return out;
}

namespace {
NegativeOneWitness symmetry_witness(const ConstaParams& params, std::uint64_t e) {
  return params.mode == Mode::euclidean ? has_negative_one_power(params.q(), e)
                                        : has_odd_negative_one_power(params.base, e);
}
}  // namespace

std::vector<std::uint64_t> special_set(const ConstaParams& params) {
  std::vector<std::uint64_t> out;
  for (auto d : divisors(params.n2)) {
    if (symmetry_witness(params, params.r * d * params.n1).exists) out.push_back(d);
  }
  return out;
}

AnalysisReport count_factors(const ConstaParams& params) {
  AnalysisReport report{params, {}, 0, 0, {}};
  for (auto d : divisors(params.n2)) {
    const std::uint64_t e = params.r * d * params.n1;
    const std::uint64_t roots = params.n1 * euler_phi(d);
    const std::uint64_t degree = multiplicative_order(params.q(), e);
    if (roots % degree != 0) {
      throw Error(Errc::precondition_failed, "degree " + std::to_string(degree) +
                                                 " does not divide root count " +
                                                 std::to_string(roots));
    }
    const auto witness = symmetry_witness(params, e);
    FactorProfile profile{d, e, degree, roots / degree, witness.exists, witness.minimal_w};
    report.total_factors += profile.count;
    if (profile.symmetric) {
      report.symmetric_factors += profile.count;
      report.special_set.push_back(d);
    }
    report.profiles.push_back(profile);
  }
  return report;
}

V2Criterion sr_v2_criterion(std::uint64_t n, std::uint64_t q) {
  if (n == 0) throw Error(Errc::invalid_argument, "n must be positive");
  if (gcd(n, q) != 1) {
    throw Error(Errc::not_coprime,
                "gcd(" + std::to_string(n) + ", " + std::to_string(q) + ") != 1");
  }
  V2Criterion out;
  const auto fact = factor_integer(n);
  for (const auto& [p, e] : fact.factors) {
    if (p == 2) {
      out.v2_n = e;
      continue;
    }
    const std::uint64_t d = multiplicative_order(q, p);
    out.per_prime.push_back({p, d, p_adic_valuation(2, d)});
  }

  const std::uint64_t two_part = std::uint64_t{1} << out.v2_n;
  out.two_part_ok = (q + 1) % two_part == 0;

  bool delta_ok = true;
  if (!out.per_prime.empty()) {
    const std::uint32_t first = out.per_prime.front().v2;
    bool equal = true;
    for (const auto& entry : out.per_prime) equal = equal && entry.v2 == first;
    if (equal && first > 0) out.delta = first;
    delta_ok = out.delta.has_value() && (out.v2_n <= 1 || *out.delta == 1);
  }
  out.holds = delta_ok && out.two_part_ok;
  return out;
}

std::vector<std::uint64_t> cyclotomic_coset(std::uint64_t s, std::uint64_t m, std::uint64_t q) {
  if (m == 0) throw Error(Errc::invalid_argument, "modulus must be positive");
  std::vector<std::uint64_t> out;
  const std::uint64_t start = s % m;
  std::uint64_t x = start;
  do {
    out.push_back(x);
    x = mul_mod(x, q, m);
  } while (x != start);
  return out;
}

std::vector<CosetClass> structural_coset_view(const ConstaParams& params) {
  std::vector<CosetClass> out;
  for (const auto& [e, mult] : root_distribution(params).entries) {
    auto coset = cyclotomic_coset(1, e, params.q());
    const std::uint64_t size = coset.size();
    out.push_back({e, std::move(coset), size, mult / size});
  }
  return out;
}

OracleBudget OracleBudget::from_env() {
  OracleBudget budget;
  if (const char* env = std::getenv("CONSTASPEC_BUDGET")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) {
      throw Error(Errc::invalid_argument, std::string("CONSTASPEC_BUDGET is not a positive integer: ") + env);
    }
    budget.max_degree = v;
  }
  return budget;
}

void OracleBudget::check(const ConstaParams& params) const {
  if (params.n > max_degree) {
    throw Error(Errc::budget_exceeded, "oracle factorization of degree " +
                                           std::to_string(params.n) + " exceeds budget " +
                                           std::to_string(max_degree));
  }
}

bool is_symmetric(const Polynomial& f, const ConstaParams& params) {
  return params.mode == Mode::euclidean ? is_self_reciprocal(f)
                                        : is_self_conjugate_reciprocal(f, params.base);
}

Polynomial mate(const Polynomial& f, const ConstaParams& params) {
  return params.mode == Mode::euclidean ? reciprocal(f) : conjugate_reciprocal(f, params.base);
}

CrossValidation cross_validate(const ConstaParams& params, std::uint64_t seed,
                               const OracleBudget& budget) {
  budget.check(params);
  CrossValidation out{count_factors(params), factorize(params.binomial(), seed), 0, 0, {}, false};
  for (const auto& [factor, mult] : out.factorization.factors) {
    out.oracle_total += mult;
    out.oracle_degrees[static_cast<std::uint64_t>(factor.degree())] += mult;
    if (is_symmetric(factor, params)) out.oracle_symmetric += mult;
  }
  out.agree = out.oracle_total == out.formula.total_factors &&
              out.oracle_symmetric == out.formula.symmetric_factors &&
              out.oracle_degrees == out.formula.degree_multiset();
  return out;
}

}  // namespace constaspec
