#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "constaspec/gf.hpp"

namespace constaspec {

/// Dense univariate polynomial over a Field. Coefficients are canonical
/// element encodings, little-endian, with no trailing zeros.
class Polynomial {
 public:
  using Elem = Field::Elem;

  explicit Polynomial(FieldPtr field);
  Polynomial(FieldPtr field, std::vector<Elem> coeffs);

  static Polynomial constant(FieldPtr field, Elem c);
  static Polynomial monomial(FieldPtr field, Elem c, std::size_t degree);
  /// x^n - lambda.
  static Polynomial binomial(FieldPtr field, std::uint64_t n, Elem lambda);

  const FieldPtr& field() const noexcept { return field_; }
  const Field& F() const noexcept { return *field_; }
  const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }

  /// -1 stands for the zero polynomial's degree.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
  Elem coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }
  Elem leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }

  Polynomial monic() const;
  Polynomial scaled(Elem c) const;
  Polynomial derivative() const;
  Elem eval(Elem x) const;

  /// "x^2 + 4*x + 2" with coefficients in canonical encoding.
  std::string to_string() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) noexcept {
    return a.coeffs_ == b.coeffs_ && same_field(a.field_, b.field_);
  }

 private:
  void normalize();

  FieldPtr field_;
  std::vector<Elem> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

DivMod divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator/(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial powmod(const Polynomial& base, std::uint64_t exp, const Polynomial& modulus);
bool divides(const Polynomial& d, const Polynomial& f);

/// Degree first, then coefficients compared from the top down (the order of
/// the integer sum c_i Q^i).
std::strong_ordering canonical_compare(const Polynomial& a, const Polynomial& b);

/// f* = a_0^{-1} x^n f(1/x) for monic f with f(0) != 0.
Polynomial reciprocal(const Polynomial& f);
/// f-dagger over GF(q0^2): coefficient i is a_0^{-q0} (a_{n-i})^{q0}.
Polynomial conjugate_reciprocal(const Polynomial& f, std::uint64_t q0);
bool is_self_reciprocal(const Polynomial& f);
bool is_self_conjugate_reciprocal(const Polynomial& f, std::uint64_t q0);

/// Rabin's test: x^{Q^n} = x mod f and gcd(x^{Q^{n/t}} - x, f) = 1 for prime t | n.
bool is_irreducible(const Polynomial& f);

struct FactorPower {
  Polynomial factor;
  std::uint32_t multiplicity;
};

struct FactorMultiset {
  Polynomial input;
  FieldElement unit;
  std::vector<FactorPower> factors;  // canonical order

  Polynomial product() const;
  std::size_t count() const;  // with multiplicity
};

/// Complete factorization: squarefree split, distinct-degree split and
/// seeded Cantor-Zassenhaus equal-degree splitting.
FactorMultiset factorize(const Polynomial& f, std::uint64_t seed);

}  // namespace constaspec
