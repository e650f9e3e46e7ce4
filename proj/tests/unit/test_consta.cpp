#include <doctest.h>

#include "../support/gen.hpp"
#include "../support/oracles.hpp"
#include "constaspec/consta.hpp"
#include "constaspec/error.hpp"
#include "constaspec/numtheory.hpp"

using namespace constaspec;

namespace {

template <class F>
Errc error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::invalid_argument;
}

using Map = std::map<std::uint64_t, std::uint64_t>;

}  // namespace

TEST_CASE("decompose_params") {
  auto p = euclidean_params(7, 27, LambdaOrder{3});
  CHECK(p.n1 == 27);
  CHECK(p.n2 == 1);
  CHECK(p.lambda.value() == 2);
  p = euclidean_params(19, 36, LambdaOrder{2});
  CHECK(p.n1 == 4);
  CHECK(p.n2 == 9);
  CHECK(p.lambda.value() == 18);
  p = euclidean_params(19, 36, LambdaOrder{1});
  CHECK(p.n1 == 1);
  CHECK(p.n2 == 36);
  CHECK(p.lambda.value() == 1);

  p = euclidean_params(7, 5, LambdaValue{3});
  CHECK(p.r == 6);
  p = hermitian_params(16, 27, LambdaOrder{15});
  CHECK(p.q() == 256);
  CHECK(p.base == 16);

  CHECK(error_of([] { euclidean_params(7, 14, LambdaOrder{1}); }) == Errc::repeated_root);
  CHECK(error_of([] { euclidean_params(7, 5, LambdaOrder{4}); }) == Errc::order_not_dividing);
  CHECK(error_of([] { euclidean_params(7, 5, LambdaValue{0}); }) == Errc::zero_lambda);
  CHECK(error_of([] { euclidean_params(7, 5, LambdaValue{7}); }) == Errc::invalid_argument);
  CHECK(error_of([] { decompose_params(make_field(3, 3), 4, LambdaOrder{1}, Mode::hermitian, 3); }) ==
        Errc::not_square_field);
  CHECK(error_of([] { hermitian_params(6, 5, LambdaOrder{1}); }) == Errc::not_prime);
  CHECK(error_of([] { with_mode(euclidean_params(9, 4, LambdaOrder{1}), Mode::hermitian); }) ==
        Errc::kind_mismatch);
}

TEST_CASE("root_distribution") {
  CHECK(root_distribution(euclidean_params(7, 27, LambdaOrder{3})).entries == Map{{81, 27}});
  CHECK(root_distribution(euclidean_params(19, 36, LambdaOrder{2})).entries ==
        Map{{8, 4}, {24, 8}, {72, 24}});
  Map expected;
  for (auto d : divisors(40)) expected[d] = euler_phi(d);
  CHECK(root_distribution(euclidean_params(31, 40, LambdaOrder{1})).entries == expected);

  for (std::uint64_t n = 1; n <= 60; ++n) {
    for (std::uint64_t r = 1; r <= 24; ++r) {
      const auto [n1, n2] = split_by_radical(n, r);
      Map formula;
      for (auto d : divisors(n2)) formula[r * d * n1] += n1 * euler_phi(d);
      CHECK(formula == oracle::root_orders_by_scan(n, r));
    }
  }
}

TEST_CASE("special_set") {
  CHECK(special_set(euclidean_params(19, 36, LambdaOrder{1})) ==
        std::vector<std::uint64_t>{1, 2, 4});
  CHECK(special_set(hermitian_params(25, 36, LambdaOrder{1})) == std::vector<std::uint64_t>{1, 2});
  CHECK(special_set(euclidean_params(7, 27, LambdaOrder{3})).empty());
}

TEST_CASE("count_factors") {
  auto rep = count_factors(euclidean_params(7, 27, LambdaOrder{1}));
  CHECK(rep.total_factors == 7);
  CHECK(rep.symmetric_factors == 1);
  rep = count_factors(euclidean_params(19, 36, LambdaOrder{2}));
  CHECK(rep.total_factors == 18);
  CHECK(rep.symmetric_factors == 0);
  rep = count_factors(hermitian_params(16, 27, LambdaOrder{5}));
  CHECK(rep.total_factors == 7);
  CHECK(rep.symmetric_factors == 0);
  rep = count_factors(hermitian_params(25, 36, LambdaOrder{1}));
  CHECK(rep.total_factors == 20);
  CHECK(rep.symmetric_factors == 2);
  rep = count_factors(euclidean_params(19, 36, LambdaOrder{1}));
  CHECK(rep.total_factors == 27);
  CHECK(rep.symmetric_factors == 3);
  for (const auto& profile : rep.profiles) {
    CHECK(profile.symmetric == profile.witness_w.has_value());
    if (profile.witness_w) {
      CHECK(pow_mod(19, *profile.witness_w, profile.order_e) == profile.order_e - 1);
    }
  }
}

TEST_CASE("x^36 - 1 over GF(19) has exactly three self-reciprocal factors") {
  const auto params = euclidean_params(19, 36, LambdaOrder{1});
  std::vector<Polynomial> sr;
  for (const auto& f : oracle::factor_list(params, 0)) {
    if (oracle::reciprocal_by_reversal(f) == f) sr.push_back(f);
  }
  const auto F = params.field;
  REQUIRE(sr.size() == 3);
  CHECK(sr[0] == Polynomial(F, {1, 1}));
  CHECK(sr[1] == Polynomial(F, {18, 1}));
  CHECK(sr[2] == Polynomial(F, {1, 0, 1}));
}

TEST_CASE("x^36 - lambda over GF(625): factor counts by direct factorization") {
  const std::map<std::uint64_t, std::uint64_t> expected = {{1, 20}, {2, 20}, {3, 4},  {4, 20},
                                                           {6, 4},  {8, 10}, {12, 4}, {24, 2}};
  for (const auto& [r, total] : expected) {
    const auto params = hermitian_params(25, 36, LambdaOrder{r});
    CHECK(oracle::factor_list(params, r).size() == total);
    CHECK(count_factors(params).total_factors == total);
  }
}

TEST_CASE("sr_v2_criterion") {
  CHECK(sr_v2_criterion(4, 19).holds);
  const auto c = sr_v2_criterion(27, 7);
  CHECK_FALSE(c.holds);
  CHECK_FALSE(c.delta.has_value());
  CHECK(sr_v2_criterion(1, 5).holds);
  CHECK(error_of([] { sr_v2_criterion(6, 9); }) == Errc::not_coprime);
}

TEST_CASE("cyclotomic cosets") {
  CHECK(cyclotomic_coset(1, 36, 19) == std::vector<std::uint64_t>{1, 19});
  CHECK(cyclotomic_coset(0, 11, 3) == std::vector<std::uint64_t>{0});
  CHECK(cyclotomic_coset(1, 8, 3) == std::vector<std::uint64_t>{1, 3});
  for (const auto& c : structural_coset_view(euclidean_params(19, 36, LambdaOrder{2}))) {
    CHECK(c.coset_size == multiplicative_order(19, c.order_e));
    CHECK(c.coset_size * c.coset_count == root_distribution(euclidean_params(19, 36, LambdaOrder{2})).entries.at(c.order_e));
  }
}

TEST_CASE("cross_validate") {
  auto cv = cross_validate(euclidean_params(7, 27, LambdaOrder{1}), 0);
  CHECK(cv.agree);
  CHECK(cv.oracle_total == 7);
  CHECK(cv.oracle_symmetric == 1);
  cv = cross_validate(euclidean_params(3, 4, LambdaOrder{2}), 0);
  CHECK(cv.agree);
  CHECK(cv.oracle_total == 2);
  CHECK(cv.oracle_symmetric == 0);
  cv = cross_validate(hermitian_params(2, 3, LambdaOrder{1}), 0);
  CHECK(cv.agree);
  CHECK(cv.oracle_total == 3);
  CHECK(cv.oracle_symmetric == 3);
  CHECK(error_of([] { cross_validate(euclidean_params(7, 100, LambdaOrder{1}), 0, OracleBudget{50}); }) ==
        Errc::budget_exceeded);
}

TEST_CASE("OracleBudget::from_env") {
  ::setenv("CONSTASPEC_BUDGET", "77", 1);
  CHECK(OracleBudget::from_env().max_degree == 77);
  ::setenv("CONSTASPEC_BUDGET", "x", 1);
  CHECK(error_of([] { OracleBudget::from_env(); }) == Errc::invalid_argument);
  ::unsetenv("CONSTASPEC_BUDGET");
  CHECK(OracleBudget::from_env().max_degree == OracleBudget{}.max_degree);
}

TEST_CASE("formula and oracle agree on random small instances") {
  gen::Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const bool herm = gen::uniform(rng, 0, 1) == 1;
    const std::uint64_t q = herm ? gen::pick(rng, gen::hermitian_bases()) : gen::pick(rng, gen::prime_powers_upto_32());
    const std::uint64_t field_q = herm ? q * q : q;
    const std::uint64_t n = gen::coprime_length(rng, q, 30);
    const std::uint64_t r = gen::divisor_of(rng, field_q - 1);
    const auto params = herm ? hermitian_params(q, n, LambdaOrder{r}) : euclidean_params(q, n, LambdaOrder{r});
    const auto rep = count_factors(params);
    std::uint64_t total = 0, sym = 0;
    std::map<std::uint64_t, std::uint64_t> degrees;
    for (const auto& f : oracle::factor_list(params, rng())) {
      ++total;
      ++degrees[static_cast<std::uint64_t>(f.degree())];
      const auto m = herm ? oracle::conjugate_reciprocal_by_reversal(f, q) : oracle::reciprocal_by_reversal(f);
      sym += m == f;
    }
    CHECK(rep.total_factors == total);
    CHECK(rep.symmetric_factors == sym);
    CHECK(rep.degree_multiset() == degrees);
  }
}
