#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace constaspec {

inline constexpr std::uint64_t kDefaultFieldBound = 1ULL << 20;

/// GF(p^k) in polynomial basis over GF(p). An element is identified with its
/// canonical encoding sum c_i p^i, where c_i is the coefficient of x^i.
/// Multiplication runs through exp/log tables built once from the
/// polynomial-basis reduction; the encoding stays the only representation.
class Field {
 public:
  using Elem = std::uint32_t;

  std::uint64_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  std::uint64_t order() const noexcept { return q_; }
  /// Monic, k+1 little-endian coefficients over GF(p); x for k = 1.
  const std::vector<Elem>& modulus() const noexcept { return modulus_; }

  bool contains(Elem a) const noexcept { return a < q_; }
  /// Image of an integer under Z -> GF(p) -> GF(p^k).
  Elem from_int(std::int64_t v) const noexcept;

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept;
  Elem neg(Elem a) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    std::uint64_t s = static_cast<std::uint64_t>(log_[a]) + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  Elem inv(Elem a) const;  // DivisionByZero on 0
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;

  std::vector<Elem> digits(Elem a) const;
  Elem from_digits(std::span<const Elem> digits) const;

  /// Least-encoding generator of the multiplicative group.
  Elem primitive() const noexcept { return primitive_; }
  std::uint64_t element_order(Elem a) const;
  /// a -> a^q0; q0 must be a power of the characteristic.
  Elem frobenius(Elem a, std::uint64_t q0) const;

  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.p_ == b.p_ && a.k_ == b.k_ && a.modulus_ == b.modulus_;
  }

  Field(std::uint64_t p, unsigned k, std::vector<Elem> modulus);

 private:
  Elem schoolbook_mul(Elem a, Elem b) const;

  std::uint64_t p_;
  unsigned k_;
  std::uint64_t q_;
  std::vector<Elem> modulus_;
  std::vector<Elem> place_;  // p^i
  std::vector<std::uint16_t> digit_table_;  // k digits per element; only for odd p, k > 1
  std::vector<Elem> exp_;
  std::vector<Elem> log_;
  Elem primitive_ = 1;
};

using FieldPtr = std::shared_ptr<const Field>;

/// GF(p^k) with the least-encoding monic irreducible modulus. Repeated calls
/// return the same instance.
FieldPtr make_field(std::uint64_t p, unsigned k, std::uint64_t bound = kDefaultFieldBound);
/// make_field for a prime power q.
FieldPtr make_field_of_order(std::uint64_t q, std::uint64_t bound = kDefaultFieldBound);

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept;

class FieldElement {
 public:
  FieldElement(FieldPtr field, Field::Elem value);

  const FieldPtr& field() const noexcept { return field_; }
  Field::Elem value() const noexcept { return value_; }
  std::vector<Field::Elem> coeffs() const { return field_->digits(value_); }
  bool is_zero() const noexcept { return value_ == 0; }

  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.value_ == b.value_ && same_field(a.field_, b.field_);
  }

 private:
  FieldPtr field_;
  Field::Elem value_;
};

std::uint64_t element_order(const FieldElement& a);
FieldElement find_primitive_element(const FieldPtr& field);
/// g^((q-1)/r) for the canonical primitive g; the canonical lambda of order r.
FieldElement element_of_order(const FieldPtr& field, std::uint64_t r);
FieldElement frobenius(const FieldElement& a, std::uint64_t q0);

}  // namespace constaspec
