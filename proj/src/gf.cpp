#include "constaspec/gf.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "constaspec/error.hpp"
#include "constaspec/numtheory.hpp"

namespace constaspec {
namespace {

using Coeffs = std::vector<std::uint64_t>;

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over GF(p).
Coeffs rem_mod_p(Coeffs a, const Coeffs& b, std::uint64_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t c = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + p - (c * b[i]) % p) % p;
    }
    trim(a);
  }
  return a;
}

// Trial division by every monic polynomial of degree 1..k/2.
bool irreducible_over_prime_field(const Coeffs& f, std::uint64_t p) {
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= k; ++d) {
    const std::uint64_t count = checked_pow(p, d);
    for (std::uint64_t enc = 0; enc < count; ++enc) {
      Coeffs g(d + 1, 0);
      std::uint64_t v = enc;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = v % p;
        v /= p;
      }
      g[d] = 1;
      if (rem_mod_p(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<Field::Elem> least_irreducible(std::uint64_t p, unsigned k) {
  if (k == 1) return {0, 1};
  const std::uint64_t count = checked_pow(p, k);
  for (std::uint64_t enc = 0; enc < count; ++enc) {
    Coeffs f(k + 1, 0);
    std::uint64_t v = enc;
    for (unsigned i = 0; i < k; ++i) {
      f[i] = v % p;
      v /= p;
    }
    f[k] = 1;
    if (f[0] != 0 && irreducible_over_prime_field(f, p)) {
      return {f.begin(), f.end()};
    }
  }
  throw Error(Errc::precondition_failed, "no irreducible polynomial found");
}

}  // namespace

Field::Field(std::uint64_t p, unsigned k, std::vector<Elem> modulus)
    : p_(p), k_(k), q_(checked_pow(p, k)), modulus_(std::move(modulus)) {
  place_.resize(k_);
  for (unsigned i = 0; i < k_; ++i) place_[i] = static_cast<Elem>(checked_pow(p_, i));
  if (p_ != 2 && k_ > 1) {
    digit_table_.resize(q_ * k_);
    for (std::uint64_t a = 0; a < q_; ++a) {
      std::uint64_t v = a;
      for (unsigned i = 0; i < k_; ++i) {
        digit_table_[a * k_ + i] = static_cast<std::uint16_t>(v % p_);
        v /= p_;
      }
    }
  }

  // Primitive element by schoolbook arithmetic, then the exp/log tables.
  const auto group = factor_integer(q_ - 1).primes();
  auto schoolbook_pow = [&](Elem a, std::uint64_t e) {
    Elem r = 1;
    while (e > 0) {
      if (e & 1U) r = schoolbook_mul(r, a);
      a = schoolbook_mul(a, a);
      e >>= 1U;
    }
    return r;
  };
  for (Elem g = 1; g < q_; ++g) {
    bool generator = true;
    for (auto t : group) {
      if (schoolbook_pow(g, (q_ - 1) / t) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) {
      primitive_ = g;
      break;
    }
  }
  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  Elem x = 1;
  for (std::uint64_t i = 0; i + 1 < q_; ++i) {
    exp_[i] = x;
    log_[x] = static_cast<Elem>(i);
    x = schoolbook_mul(x, primitive_);
  }
}

Field::Elem Field::schoolbook_mul(Elem a, Elem b) const {
  if (k_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  const auto da = digits(a);
  const auto db = digits(b);
  Coeffs prod(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_;
  }
  const Coeffs mod(modulus_.begin(), modulus_.end());
  auto r = rem_mod_p(std::move(prod), mod, p_);
  std::vector<Elem> out(k_, 0);
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = static_cast<Elem>(r[i]);
  return from_digits(out);
}

Field::Elem Field::from_int(std::int64_t v) const noexcept {
  const auto p = static_cast<std::int64_t>(p_);
  return static_cast<Elem>(((v % p) + p) % p);
}

Field::Elem Field::add(Elem a, Elem b) const noexcept {
  if (p_ == 2) return a ^ b;
  if (k_ == 1) {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Elem>(s >= p_ ? s - p_ : s);
  }
  const std::uint16_t* da = &digit_table_[std::size_t{a} * k_];
  const std::uint16_t* db = &digit_table_[std::size_t{b} * k_];
  Elem out = 0;
  for (unsigned i = 0; i < k_; ++i) {
    unsigned s = unsigned{da[i]} + db[i];
    if (s >= p_) s -= static_cast<unsigned>(p_);
    out += s * place_[i];
  }
  return out;
}

Field::Elem Field::neg(Elem a) const noexcept {
  if (p_ == 2 || a == 0) return a;
  if (k_ == 1) return static_cast<Elem>(p_ - a);
  const std::uint16_t* da = &digit_table_[std::size_t{a} * k_];
  Elem out = 0;
  for (unsigned i = 0; i < k_; ++i) {
    if (da[i] != 0) out += static_cast<Elem>(p_ - da[i]) * place_[i];
  }
  return out;
}

Field::Elem Field::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Field::Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(Errc::division_by_zero, "inverse of zero in " + name());
  const Elem l = log_[a];
  return exp_[l == 0 ? 0 : q_ - 1 - l];
}

Field::Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t l = static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(log_[a]) * e % (q_ - 1));
  return exp_[l];
}

std::vector<Field::Elem> Field::digits(Elem a) const {
  std::vector<Elem> out(k_);
  std::uint64_t v = a;
  for (unsigned i = 0; i < k_; ++i) {
    out[i] = static_cast<Elem>(v % p_);
    v /= p_;
  }
  return out;
}

Field::Elem Field::from_digits(std::span<const Elem> digits) const {
  if (digits.size() != k_) {
    throw Error(Errc::invalid_argument, "expected " + std::to_string(k_) + " coefficients");
  }
  Elem out = 0;
  for (unsigned i = 0; i < k_; ++i) {
    if (digits[i] >= p_) throw Error(Errc::invalid_argument, "coefficient out of range");
    out += digits[i] * place_[i];
  }
  return out;
}

std::uint64_t Field::element_order(Elem a) const {
  if (a == 0) throw Error(Errc::zero_element, "the zero element has no multiplicative order");
  return (q_ - 1) / gcd(log_[a], q_ - 1);
}

Field::Elem Field::frobenius(Elem a, std::uint64_t q0) const {
  std::uint64_t v = q0;
  while (v > 1 && v % p_ == 0) v /= p_;
  if (q0 == 0 || v != 1) {
    throw Error(Errc::not_subfield_power,
                std::to_string(q0) + " is not a power of " + std::to_string(p_));
  }
  return pow(a, q0);
}

std::string Field::name() const { return "GF(" + std::to_string(q_) + ")"; }

FieldPtr make_field(std::uint64_t p, unsigned k, std::uint64_t bound) {
  if (!is_prime(p)) throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
  if (k == 0) throw Error(Errc::invalid_argument, "extension degree must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (q > bound / p) {
      throw Error(Errc::bound_exceeded, std::to_string(p) + "^" + std::to_string(k) +
                                            " exceeds the field bound " + std::to_string(bound));
    }
    q *= p;
  }
  static std::mutex mutex;
  static std::map<std::pair<std::uint64_t, unsigned>, FieldPtr> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{p, k}];
  if (!slot) slot = std::make_shared<const Field>(p, k, least_irreducible(p, k));
  return slot;
}

FieldPtr make_field_of_order(std::uint64_t q, std::uint64_t bound) {
  const auto pp = as_prime_power(q);
  if (!pp) throw Error(Errc::not_prime, std::to_string(q) + " is not a prime power");
  return make_field(pp->prime, pp->exponent, bound);
}

bool same_field(const FieldPtr& a, const FieldPtr& b) noexcept {
  return a == b || (a && b && *a == *b);
}

FieldElement::FieldElement(FieldPtr field, Field::Elem value)
    : field_(std::move(field)), value_(value) {
  if (!field_) throw Error(Errc::invalid_argument, "null field");
  if (!field_->contains(value_)) {
    throw Error(Errc::invalid_argument,
                std::to_string(value) + " is not an element of " + field_->name());
  }
}

namespace {
const FieldPtr& common(const FieldElement& a, const FieldElement& b) {
  if (!same_field(a.field(), b.field())) {
    throw Error(Errc::field_mismatch, a.field()->name() + " vs " + b.field()->name());
  }
  return a.field();
}
}  // namespace

FieldElement FieldElement::inv() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }
FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const auto& f = common(a, b);
  return {f, f->add(a.value(), b.value())};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  const auto& f = common(a, b);
  return {f, f->sub(a.value(), b.value())};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const auto& f = common(a, b);
  return {f, f->mul(a.value(), b.value())};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  const auto& f = common(a, b);
  return {f, f->div(a.value(), b.value())};
}

std::uint64_t element_order(const FieldElement& a) { return a.field()->element_order(a.value()); }

FieldElement find_primitive_element(const FieldPtr& field) { return {field, field->primitive()}; }

FieldElement element_of_order(const FieldPtr& field, std::uint64_t r) {
  const std::uint64_t group = field->order() - 1;
  if (r == 0 || group % r != 0) {
    throw Error(Errc::order_not_dividing, "order " + std::to_string(r) + " does not divide " +
                                              std::to_string(group));
  }
  return {field, field->pow(field->primitive(), group / r)};
}

FieldElement frobenius(const FieldElement& a, std::uint64_t q0) {
  return {a.field(), a.field()->frobenius(a.value(), q0)};
}

}  // namespace constaspec
