#include <algorithm>
#include <random>

#include "constaspec/error.hpp"
#include "constaspec/poly.hpp"

namespace constaspec {
namespace {

using Elem = Field::Elem;

// Inverse of the p-th power map on a polynomial whose exponents are all
// multiples of p: x^{pi} -> x^i, c -> c^{p^{k-1}}.
Polynomial pth_root(const Polynomial& f) {
  const auto& F = f.F();
  const std::uint64_t p = F.characteristic();
  const std::uint64_t root = F.order() / p;
  std::vector<Elem> v(static_cast<std::size_t>(f.degree()) / p + 1, 0);
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) v[i / p] = F.pow(f.coeffs()[i], root);
  return {f.field(), std::move(v)};
}

// Squarefree parts of a monic f as (part, multiplicity).
void squarefree(const Polynomial& f, std::uint32_t scale, std::vector<FactorPower>& out) {
  if (f.degree() < 1) return;
  const std::uint32_t p = static_cast<std::uint32_t>(f.F().characteristic());
  const Polynomial df = f.derivative();
  if (df.is_zero()) {
    squarefree(pth_root(f), scale * p, out);
    return;
  }
  Polynomial c = gcd(f, df);
  Polynomial w = f / c;
  std::uint32_t i = 1;
  while (!w.is_one()) {
    Polynomial y = gcd(w, c);
    Polynomial z = w / y;
    if (z.degree() > 0) out.push_back({z, i * scale});
    ++i;
    w = std::move(y);
    c = c / w;
  }
  if (!c.is_one()) squarefree(pth_root(c), scale * p, out);
}

struct DegreeBlock {
  Polynomial product;
  std::uint64_t degree;
};

std::vector<DegreeBlock> distinct_degree(Polynomial f) {
  std::vector<DegreeBlock> out;
  const std::uint64_t Q = f.F().order();
  const auto x = Polynomial::monomial(f.field(), 1, 1);
  Polynomial h = x % f;
  for (std::uint64_t i = 1; 2 * i <= static_cast<std::uint64_t>(f.degree()); ++i) {
    h = powmod(h, Q, f);
    Polynomial g = gcd(h - x, f);
    if (!g.is_one()) {
      out.push_back({g, i});
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.push_back({f, static_cast<std::uint64_t>(f.degree())});
  return out;
}

Polynomial random_poly(const FieldPtr& field, int below_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> coeff(0, static_cast<Elem>(field->order() - 1));
  std::vector<Elem> v(static_cast<std::size_t>(below_degree));
  for (auto& c : v) c = coeff(rng);
  return {field, std::move(v)};
}

// Candidate splitter b(a): a^{(Q^d-1)/2} - 1 in odd characteristic, the
// absolute trace a + a^2 + ... + a^{2^{kd-1}} in characteristic 2.
Polynomial splitter(const Polynomial& a, std::uint64_t d, const Polynomial& f) {
  const auto& F = f.F();
  const std::uint64_t Q = F.order();
  if (F.characteristic() == 2) {
    Polynomial term = a % f;
    Polynomial acc = term;
    for (std::uint64_t i = 1; i < d * F.degree(); ++i) {
      term = (term * term) % f;
      acc = acc + term;
    }
    return acc;
  }
  // (Q^d-1)/2 = ((Q-1)/2)(1 + Q + ... + Q^{d-1})
  Polynomial conj = a % f;
  Polynomial norm = conj;
  for (std::uint64_t i = 1; i < d; ++i) {
    conj = powmod(conj, Q, f);
    norm = (norm * conj) % f;
  }
  return powmod(norm, (Q - 1) / 2, f) - Polynomial::constant(f.field(), 1);
}

void equal_degree(const Polynomial& f, std::uint64_t d, std::mt19937_64& rng,
                  std::vector<Polynomial>& out) {
  if (static_cast<std::uint64_t>(f.degree()) == d) {
    out.push_back(f);
    return;
  }
  for (;;) {
    const Polynomial a = random_poly(f.field(), f.degree(), rng);
    if (a.degree() < 1) continue;
    Polynomial g = gcd(a, f);
    if (g.is_one()) g = gcd(splitter(a, d, f), f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

FactorMultiset factorize(const Polynomial& f, std::uint64_t seed) {
  if (f.degree() < 1) throw Error(Errc::invalid_argument, "factorization needs degree >= 1");
  FactorMultiset result{f, FieldElement(f.field(), f.leading()), {}};
  std::mt19937_64 rng(seed);

  std::vector<FactorPower> parts;
  squarefree(f.monic(), 1, parts);
  for (const auto& [part, mult] : parts) {
    for (const auto& block : distinct_degree(part)) {
      std::vector<Polynomial> irreducibles;
      equal_degree(block.product, block.degree, rng, irreducibles);
      for (auto& g : irreducibles) result.factors.push_back({std::move(g), mult});
    }
  }
  std::sort(result.factors.begin(), result.factors.end(), [](const auto& a, const auto& b) {
    return canonical_compare(a.factor, b.factor) < 0;
  });
  return result;
}

}  // namespace constaspec
