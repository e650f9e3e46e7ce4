#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "constaspec/consta.hpp"
#include "constaspec/poly.hpp"

namespace constaspec {

using BigInt = boost::multiprecision::cpp_int;

/// The ideal <g> of GF(q)[x]/(x^n - lambda), g monic and dividing x^n - lambda.
struct ConstacyclicCode {
  ConstaParams params;
  Polynomial generator;
  std::uint64_t dimension;
};

ConstacyclicCode build_code(const ConstaParams& params, const Polynomial& generator);

struct FactorPair {
  Polynomial factor;  // canonically smaller of the two
  Polynomial mate;
};

/// x^n - lambda = e_1 ... e_u * f_1 f_1' ... f_v f_v', where ' is the mate map
/// of `kind`. When lambda is not its own mate no factor pairs up and all
/// factors land in `unpaired`.
struct FactorSplit {
  Mode kind = Mode::euclidean;
  std::vector<Polynomial> symmetric;
  std::vector<FactorPair> pairs;
  std::vector<Polynomial> unpaired;

  std::size_t u() const noexcept { return symmetric.size(); }
  std::size_t v() const noexcept { return pairs.size(); }
};

FactorSplit factor_split(const ConstaParams& params, Mode kind, std::uint64_t seed,
                         const OracleBudget& budget = {});

/// h* (euclidean) or h-dagger (hermitian) for h = (x^n - lambda) / g.
Polynomial dual_generator(const ConstacyclicCode& code, Mode kind);
/// The dual as a code in its own ring: lambda^{-1} (euclidean) or lambda^{-q0} (hermitian).
ConstacyclicCode dual_code(const ConstacyclicCode& code, Mode kind);
bool is_lcd(const ConstacyclicCode& code, Mode kind);
bool is_self_dual(const ConstacyclicCode& code, Mode kind);

struct EnumerationCap {
  std::uint64_t max_items = 1ULL << 16;
};

/// Every LCD generator: each symmetric factor and each pair product in or
/// out, in mask order (symmetric factors on the low bits).
std::vector<Polynomial> enumerate_lcd(const ConstaParams& params, Mode kind, std::uint64_t seed,
                                      const EnumerationCap& cap = {},
                                      const OracleBudget& budget = {});
/// Every self-dual generator: one member of each pair, none when u > 0. Bit j
/// of the mask picks the mate of pair j, so mask 0 is the product of the f_j.
std::vector<Polynomial> enumerate_self_dual(const ConstaParams& params, Mode kind,
                                            std::uint64_t seed, const EnumerationCap& cap = {},
                                            const OracleBudget& budget = {});

struct LcdCount {
  BigInt count;
  std::uint64_t exponent = 0;        // count = 2^exponent
  bool every_code_lcd = false;       // lambda is not its own mate
  std::uint64_t printed_numerator = 0;  // n + N2, the literal exponent numerator over 2
};

/// 2^{(N1+N2)/2} (2^{(M1+M2)/2}); 2^{N1} when lambda is not its own mate.
LcdCount count_lcd(const ConstaParams& params, Mode kind);

struct SelfDualExistence {
  bool exists = false;
  BigInt count;
  bool structural = false;               // lambda its own mate, n even, u = 0
  std::optional<bool> theorem_predicate;  // empty when no closed-form criterion covers params
  bool consistent = true;                 // theorem_predicate (if any) == structural
  std::string reason;
};

SelfDualExistence self_dual_existence(const ConstaParams& params, Mode kind);

}  // namespace constaspec
