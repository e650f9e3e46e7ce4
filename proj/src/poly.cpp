#include "constaspec/poly.hpp"

#include <algorithm>

#include "constaspec/error.hpp"
#include "constaspec/numtheory.hpp"

namespace constaspec {
namespace {

const FieldPtr& common_field(const Polynomial& a, const Polynomial& b) {
  if (!same_field(a.field(), b.field())) {
    throw Error(Errc::field_mismatch, a.F().name() + " vs " + b.F().name());
  }
  return a.field();
}

void require_monic_unit_constant(const Polynomial& f) {
  if (!f.is_monic()) throw Error(Errc::not_monic, f.to_string() + " is not monic");
  if (f.coeff(0) == 0) {
    throw Error(Errc::zero_constant_term, f.to_string() + " has zero constant term");
  }
}

}  // namespace

Polynomial::Polynomial(FieldPtr field) : field_(std::move(field)) {
  if (!field_) throw Error(Errc::invalid_argument, "null field");
}

Polynomial::Polynomial(FieldPtr field, std::vector<Elem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (!field_) throw Error(Errc::invalid_argument, "null field");
  for (auto c : coeffs_) {
    if (!field_->contains(c)) {
      throw Error(Errc::invalid_argument,
                  std::to_string(c) + " is not an element of " + field_->name());
    }
  }
  normalize();
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(FieldPtr field, Elem c) { return {std::move(field), {c}}; }

Polynomial Polynomial::monomial(FieldPtr field, Elem c, std::size_t degree) {
  std::vector<Elem> v(degree + 1, 0);
  v[degree] = c;
  return {std::move(field), std::move(v)};
}

Polynomial Polynomial::binomial(FieldPtr field, std::uint64_t n, Elem lambda) {
  std::vector<Elem> v(n + 1, 0);
  v[n] = 1;
  v[0] = field->add(v[0], field->neg(lambda));
  return {std::move(field), std::move(v)};
}

Polynomial Polynomial::monic() const {
  if (is_zero() || is_monic()) return *this;
  return scaled(field_->inv(leading()));
}

Polynomial Polynomial::scaled(Elem c) const {
  std::vector<Elem> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_->mul(coeffs_[i], c);
  return {field_, std::move(v)};
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial(field_);
  std::vector<Elem> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    v[i - 1] = field_->mul(coeffs_[i], field_->from_int(static_cast<std::int64_t>(i)));
  }
  return {field_, std::move(v)};
}

Polynomial::Elem Polynomial::eval(Elem x) const {
  Elem acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = field_->add(field_->mul(acc, x), *it);
  }
  return acc;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Elem c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  const auto& f = common_field(a, b);
  std::vector<Polynomial::Elem> v(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f->add(a.coeff(i), b.coeff(i));
  return {f, std::move(v)};
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  const auto& f = common_field(a, b);
  std::vector<Polynomial::Elem> v(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f->sub(a.coeff(i), b.coeff(i));
  return {f, std::move(v)};
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  const auto& f = common_field(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(f);
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<Polynomial::Elem> v(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) v[i + j] = f->add(v[i + j], f->mul(x[i], y[j]));
  }
  return {f, std::move(v)};
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  const auto& f = common_field(a, b);
  if (b.is_zero()) throw Error(Errc::division_by_zero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(f), a};
  std::vector<Polynomial::Elem> rem = a.coeffs();
  const auto& d = b.coeffs();
  const std::size_t db = d.size() - 1;
  const auto lead_inv = f->inv(d.back());
  std::vector<Polynomial::Elem> quot(rem.size() - db, 0);
  for (std::size_t i = rem.size(); i-- > db;) {
    const auto c = f->mul(rem[i], lead_inv);
    quot[i - db] = c;
    if (c == 0) continue;
    const auto neg_c = f->neg(c);
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = f->add(rem[i - db + j], f->mul(neg_c, d[j]));
  }
  rem.resize(db);
  return {Polynomial(f, std::move(quot)), Polynomial(f, std::move(rem))};
}

Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).quotient; }
Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).remainder; }

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  common_field(a, b);
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial powmod(const Polynomial& base, std::uint64_t exp, const Polynomial& modulus) {
  Polynomial result = Polynomial::constant(modulus.field(), 1) % modulus;
  Polynomial b = base % modulus;
  while (exp > 0) {
    if (exp & 1U) result = (result * b) % modulus;
    exp >>= 1U;
    if (exp > 0) b = (b * b) % modulus;
  }
  return result;
}

bool divides(const Polynomial& d, const Polynomial& f) { return (f % d).is_zero(); }

std::strong_ordering canonical_compare(const Polynomial& a, const Polynomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  for (std::size_t i = x.size(); i-- > 0;) {
    if (auto c = x[i] <=> y[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Polynomial reciprocal(const Polynomial& f) {
  require_monic_unit_constant(f);
  const auto& F = f.F();
  const auto a0_inv = F.inv(f.coeff(0));
  const auto& c = f.coeffs();
  const std::size_t n = c.size() - 1;
  std::vector<Field::Elem> v(n + 1);
  for (std::size_t i = 0; i <= n; ++i) v[i] = F.mul(a0_inv, c[n - i]);
  return {f.field(), std::move(v)};
}

Polynomial conjugate_reciprocal(const Polynomial& f, std::uint64_t q0) {
  const auto& F = f.F();
  if (q0 < 2 || q0 > F.order() / q0 || q0 * q0 != F.order()) {
    throw Error(Errc::not_square_field,
                F.name() + " is not GF(" + std::to_string(q0) + "^2)");
  }
  require_monic_unit_constant(f);
  const auto scale = F.frobenius(F.inv(f.coeff(0)), q0);
  const auto& c = f.coeffs();
  const std::size_t n = c.size() - 1;
  std::vector<Field::Elem> v(n + 1);
  for (std::size_t i = 0; i <= n; ++i) v[i] = F.mul(scale, F.frobenius(c[n - i], q0));
  return {f.field(), std::move(v)};
}

bool is_self_reciprocal(const Polynomial& f) { return reciprocal(f) == f; }

bool is_self_conjugate_reciprocal(const Polynomial& f, std::uint64_t q0) {
  return conjugate_reciprocal(f, q0) == f;
}

bool is_irreducible(const Polynomial& f) {
  if (f.degree() < 1) throw Error(Errc::invalid_argument, "irreducibility needs degree >= 1");
  if (f.degree() == 1) return true;
  const Polynomial g = f.monic();
  const auto n = static_cast<std::uint64_t>(g.degree());
  const std::uint64_t Q = g.F().order();
  const auto x = Polynomial::monomial(g.field(), 1, 1);
  const auto maximal = factor_integer(n).primes();

  // frob[i] = x^{Q^i} mod g
  std::vector<Polynomial> frob{x % g};
  for (std::uint64_t i = 1; i <= n; ++i) frob.push_back(powmod(frob.back(), Q, g));
  if (frob[n] != x % g) return false;
  for (auto t : maximal) {
    if (!gcd(frob[n / t] - x, g).is_one()) return false;
  }
  return true;
}

Polynomial FactorMultiset::product() const {
  Polynomial acc = Polynomial::constant(input.field(), unit.value());
  for (const auto& [factor, mult] : factors) {
    for (std::uint32_t i = 0; i < mult; ++i) acc = acc * factor;
  }
  return acc;
}

std::size_t FactorMultiset::count() const {
  std::size_t total = 0;
  for (const auto& f : factors) total += f.multiplicity;
  return total;
}

}  // namespace constaspec
