#include "constaspec/codes.hpp"

#include <algorithm>

#include "constaspec/error.hpp"
#include "constaspec/numtheory.hpp"

namespace constaspec {
namespace {

void require_kind(const ConstaParams& params, Mode kind) {
  if (kind == Mode::hermitian && params.mode != Mode::hermitian) {
    throw Error(Errc::kind_mismatch, "hermitian duality needs params over GF(q0^2)");
  }
}

Polynomial one(const FieldPtr& field) { return Polynomial::constant(field, 1); }

void check_cap(std::size_t items, const EnumerationCap& cap) {
  if (items >= 64 || (std::uint64_t{1} << items) > cap.max_items) {
    throw Error(Errc::enumeration_cap, "2^" + std::to_string(items) +
                                           " generators exceed the cap of " +
                                           std::to_string(cap.max_items));
  }
}

}  // namespace

ConstacyclicCode build_code(const ConstaParams& params, const Polynomial& generator) {
  if (!same_field(params.field, generator.field())) {
    throw Error(Errc::field_mismatch, "generator and params live over different fields");
  }
  if (!generator.is_monic()) {
    throw Error(Errc::not_monic, generator.to_string() + " is not monic");
  }
  if (!divides(generator, params.binomial())) {
    throw Error(Errc::not_a_divisor,
                generator.to_string() + " does not divide " + params.binomial().to_string());
  }
  return {params, generator, params.n - static_cast<std::uint64_t>(generator.degree())};
}

FactorSplit factor_split(const ConstaParams& params, Mode kind, std::uint64_t seed,
                         const OracleBudget& budget) {
  const ConstaParams view = with_mode(params, kind);
  budget.check(view);
  const auto fm = factorize(view.binomial(), seed);

  FactorSplit split;
  split.kind = kind;
  std::vector<bool> used(fm.factors.size(), false);
  for (std::size_t i = 0; i < fm.factors.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    const Polynomial& f = fm.factors[i].factor;
    if (is_symmetric(f, view)) {
      split.symmetric.push_back(f);
      continue;
    }
    const Polynomial m = mate(f, view);
    auto it = std::find_if(fm.factors.begin(), fm.factors.end(),
                           [&](const FactorPower& fp) { return fp.factor == m; });
    const auto j = static_cast<std::size_t>(it - fm.factors.begin());
    if (it == fm.factors.end() || used[j]) {
      split.unpaired.push_back(f);
      continue;
    }
    used[j] = true;
    // factors are sorted, so f precedes its mate
    split.pairs.push_back({f, m});
  }
  return split;
}

Polynomial dual_generator(const ConstacyclicCode& code, Mode kind) {
  require_kind(code.params, kind);
  const Polynomial h = code.params.binomial() / code.generator;
  return kind == Mode::euclidean ? reciprocal(h.monic())
                                 : conjugate_reciprocal(h.monic(), code.params.base);
}

ConstacyclicCode dual_code(const ConstacyclicCode& code, Mode kind) {
  require_kind(code.params, kind);
  const auto& p = code.params;
  const FieldElement lambda_inv = p.lambda.inv();
  const FieldElement dual_lambda =
      kind == Mode::euclidean ? lambda_inv : frobenius(lambda_inv, p.base);
  const ConstaParams dual_params =
      decompose_params(p.field, p.n, LambdaValue{dual_lambda.value()}, p.mode, p.base);
  return build_code(dual_params, dual_generator(code, kind));
}

bool is_lcd(const ConstacyclicCode& code, Mode kind) {
  return gcd(code.generator, dual_generator(code, kind)).is_one();
}

bool is_self_dual(const ConstacyclicCode& code, Mode kind) {
  return code.generator == dual_generator(code, kind);
}

std::vector<Polynomial> enumerate_lcd(const ConstaParams& params, Mode kind, std::uint64_t seed,
                                      const EnumerationCap& cap, const OracleBudget& budget) {
  const auto split = factor_split(params, kind, seed, budget);
  std::vector<Polynomial> items = split.symmetric;
  for (const auto& [f, m] : split.pairs) items.push_back(f * m);
  for (const auto& f : split.unpaired) items.push_back(f);
  check_cap(items.size(), cap);

  std::vector<Polynomial> out;
  const std::uint64_t total = std::uint64_t{1} << items.size();
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Polynomial g = one(params.field);
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (mask >> i & 1U) g = g * items[i];
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<Polynomial> enumerate_self_dual(const ConstaParams& params, Mode kind,
                                            std::uint64_t seed, const EnumerationCap& cap,
                                            const OracleBudget& budget) {
  const auto split = factor_split(params, kind, seed, budget);
  if (!split.symmetric.empty() || !split.unpaired.empty()) return {};
  check_cap(split.pairs.size(), cap);

  std::vector<Polynomial> out;
  const std::uint64_t total = std::uint64_t{1} << split.pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Polynomial g = one(params.field);
    for (std::size_t j = 0; j < split.pairs.size(); ++j) {
      g = g * ((mask >> j & 1U) ? split.pairs[j].mate : split.pairs[j].factor);
    }
    out.push_back(std::move(g));
  }
  return out;
}

LcdCount count_lcd(const ConstaParams& params, Mode kind) {
  const ConstaParams view = with_mode(params, kind);
  const auto report = count_factors(view);
  LcdCount out;
  out.printed_numerator = view.n + report.symmetric_factors;
  if (!view.lambda_symmetric()) {
    out.every_code_lcd = true;
    out.exponent = report.total_factors;
  } else {
    out.exponent = (report.total_factors + report.symmetric_factors) / 2;
  }
  out.count = BigInt(1) << out.exponent;
  return out;
}

SelfDualExistence self_dual_existence(const ConstaParams& params, Mode kind) {
  const ConstaParams view = with_mode(params, kind);
  const auto report = count_factors(view);
  SelfDualExistence out;
  const bool even = view.n % 2 == 0;
  out.structural = view.lambda_symmetric() && even && report.symmetric_factors == 0;

  if (kind == Mode::euclidean) {
    if (view.r == 1) {
      out.theorem_predicate = false;
      out.reason = "cyclic: x - 1 is always a self-reciprocal factor";
    } else if (view.r == 2 && even) {
      const std::uint64_t mod = std::uint64_t{1} << (p_adic_valuation(2, view.n) + 1);
      out.theorem_predicate = (view.q() + 1) % mod != 0;
      out.reason = *out.theorem_predicate
                       ? "negacyclic: q ≢ -1 (mod " + std::to_string(mod) + ")"
                       : "none: q ≡ -1 (mod " + std::to_string(mod) + ")";
    }
  } else if ((view.base + 1) % view.r == 0 && even) {
    const std::uint32_t v2r = p_adic_valuation(2, view.r);
    const std::uint32_t shift = p_adic_valuation(2, view.n) + v2r;
    const bool congruent = shift < 64 && (view.base + 1) % (std::uint64_t{1} << shift) == 0;
    out.theorem_predicate = v2r > 0 && !congruent;
    if (v2r == 0) {
      out.reason = "none: order of lambda is odd";
    } else {
      const std::string mod = "2^" + std::to_string(shift);
      out.reason = congruent ? "none: q0 ≡ -1 (mod " + mod + ")"
                             : "hermitian: v2(r) > 0 and q0 ≢ -1 (mod " + mod + ")";
    }
  }
  if (!out.theorem_predicate) {
    out.reason = out.structural ? "structural: u = 0 (outside closed-form criteria)"
                                : "structural: no self-dual split (outside closed-form criteria)";
  }
  out.consistent = !out.theorem_predicate || *out.theorem_predicate == out.structural;
  out.exists = out.structural;
  out.count = out.exists ? BigInt(1) << (report.total_factors / 2) : BigInt(0);
  return out;
}

}  // namespace constaspec
