#pragma once

// Exact arithmetic in GF(p^m), p odd.
//
// Elements are coefficient vectors of polynomials of degree < m modulo a fixed
// monic irreducible. Every field is small (q <= kMaxFieldOrder), so addition,
// multiplication, inversion and the Frobenius maps are dense lookup tables
// built once per field. An element is a (field, id) pair; ids are assigned so
// that integer order on ids is the canonical element order: lexicographic on
// the little-endian coefficient vector, low-degree coefficient first.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "scheme_forge/errors.hpp"

namespace scheme_forge {

class GaloisField;
using FieldPtr = std::shared_ptr<const GaloisField>;

inline constexpr int kMaxFieldOrder = 2048;

namespace detail {

// Dense polynomials over GF(p), little-endian, no trailing zeros (zero = {}).
using Poly = std::vector<int>;

inline int mod_p(long long v, int p) {
  long long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int inverse_mod_p(int a, int p) {
  // Fermat; p is prime.
  long long result = 1;
  long long base = mod_p(a, p);
  int e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<int>(result);
}

inline Poly poly_rem(Poly a, const Poly& b, int p) {
  trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  const int lead_inv = inverse_mod_p(b.back(), p);
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - db;
    const int factor = static_cast<int>(static_cast<long long>(a.back()) * lead_inv % p);
    for (int i = 0; i <= db; ++i) {
      a[shift + i] = mod_p(a[shift + i] - static_cast<long long>(factor) * b[i], p);
    }
    trim(a);
  }
  return a;
}

inline Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = mod_p(out[i + j] + static_cast<long long>(a[i]) * b[j], p);
    }
  }
  trim(out);
  return out;
}

inline Poly poly_sub(Poly a, const Poly& b, int p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod_p(a[i] - b[i], p);
  trim(a);
  return a;
}

inline Poly poly_gcd(Poly a, Poly b, int p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// x^(p^i) mod f, computed by i successive p-th powers.
inline Poly x_pow_p_iter(const Poly& f, int p, int i) {
  Poly acc = poly_rem(Poly{0, 1}, f, p);
  for (int step = 0; step < i; ++step) {
    Poly result{1};
    Poly base = acc;
    int e = p;
    while (e > 0) {
      if (e & 1) result = poly_rem(poly_mul(result, base, p), f, p);
      base = poly_rem(poly_mul(base, base, p), f, p);
      e >>= 1;
    }
    acc = std::move(result);
  }
  return acc;
}

/// Rabin-style test: f of degree m is irreducible iff gcd(x^(p^i) - x, f) = 1
/// for 1 <= i <= m/2.
inline bool is_irreducible(const Poly& f_in, int p) {
  Poly f = f_in;
  trim(f);
  const int m = static_cast<int>(f.size()) - 1;
  if (m < 1) return false;
  if (m == 1) return true;
  for (int i = 1; i <= m / 2; ++i) {
    Poly h = poly_sub(x_pow_p_iter(f, p, i), Poly{0, 1}, p);
    Poly g = poly_gcd(f, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

inline bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Splits q = p^m; nullopt when q is not a prime power.
inline std::optional<std::pair<int, int>> prime_power(int q) {
  if (q < 2) return std::nullopt;
  int p = 2;
  while (q % p != 0) ++p;
  int m = 0;
  int r = q;
  while (r % p == 0) {
    r /= p;
    ++m;
  }
  if (r != 1) return std::nullopt;
  return std::make_pair(p, m);
}

}  // namespace detail

/// Built-in Conway polynomials (little-endian, monic) for the non-prime orders
/// used by the test matrix.
inline const std::map<int, std::vector<int>>& conway_polynomials() {
  static const std::map<int, std::vector<int>> table = {
      {9, {2, 2, 1}},          // x^2 + 2x + 2
      {25, {2, 4, 1}},         // x^2 + 4x + 2
      {27, {1, 2, 0, 1}},      // x^3 + 2x + 1
      {49, {3, 6, 1}},         // x^2 + 6x + 3
      {81, {2, 0, 0, 2, 1}},   // x^4 + 2x^3 + 2
      {121, {2, 7, 1}},        // x^2 + 7x + 2
      {125, {3, 3, 0, 1}},     // x^3 + 3x + 3
      {169, {2, 12, 1}},       // x^2 + 12x + 2
  };
  return table;
}

class FieldElement {
 public:
  using Id = std::uint32_t;

  FieldElement() = default;
  FieldElement(const GaloisField* field, Id id) : field_(field), id_(id) {}

  const GaloisField* field() const { return field_; }
  Id id() const { return id_; }

  bool is_zero() const { return id_ == 0; }
  bool is_one() const;
  std::vector<int> coeffs() const;

  FieldElement inv() const;
  FieldElement pow(long long n) const;
  /// x^(p^j), 0 <= j < m.
  FieldElement frobenius(int j) const;
  /// The unique involutory automorphism; throws NoInvolution when m is odd.
  FieldElement sigma() const;
  /// Throws DomainError for zero.
  bool is_square() const;

  std::string to_string() const;

  friend FieldElement operator+(FieldElement x, FieldElement y);
  friend FieldElement operator-(FieldElement x, FieldElement y);
  friend FieldElement operator*(FieldElement x, FieldElement y);
  friend FieldElement operator/(FieldElement x, FieldElement y);
  friend FieldElement operator-(FieldElement x);

  FieldElement& operator+=(FieldElement y) { return *this = *this + y; }
  FieldElement& operator-=(FieldElement y) { return *this = *this - y; }
  FieldElement& operator*=(FieldElement y) { return *this = *this * y; }

  friend bool operator==(const FieldElement& x, const FieldElement& y) {
    return x.field_ == y.field_ && x.id_ == y.id_;
  }
  // Canonical order within one field.
  friend std::strong_ordering operator<=>(const FieldElement& x, const FieldElement& y) {
    if (x.field_ != y.field_) return std::less<const GaloisField*>{}(x.field_, y.field_)
                                         ? std::strong_ordering::less
                                         : std::strong_ordering::greater;
    return x.id_ <=> y.id_;
  }

 private:
  const GaloisField* require_same(const FieldElement& other) const {
    if (field_ == nullptr || field_ != other.field_) throw SpecMismatch();
    return field_;
  }

  const GaloisField* field_ = nullptr;
  Id id_ = 0;
};

class GaloisField {
 public:
  using Id = FieldElement::Id;

  /// GF(q) with the built-in modulus: x for prime q, the Conway polynomial
  /// otherwise. An explicit modulus overrides the table.
  static FieldPtr create(int q, std::optional<std::vector<int>> modulus = std::nullopt) {
    if (q % 2 == 0) throw InvalidField("even q is not supported: q = " + std::to_string(q));
    auto pm = detail::prime_power(q);
    if (!pm) throw InvalidField("q must be a prime power: q = " + std::to_string(q));
    if (q < 5) throw InvalidField("q must be at least 5: q = " + std::to_string(q));
    if (q > kMaxFieldOrder) throw InvalidField("q exceeds table capacity: q = " + std::to_string(q));
    const auto [p, m] = *pm;
    std::vector<int> poly;
    if (modulus) {
      poly = *modulus;
    } else if (m == 1) {
      poly = {0, 1};
    } else {
      const auto& table = conway_polynomials();
      auto it = table.find(q);
      if (it == table.end()) {
        throw InvalidField("no built-in modulus for q = " + std::to_string(q) +
                           "; supply one with --modulus");
      }
      poly = it->second;
    }
    if (static_cast<int>(poly.size()) != m + 1) {
      throw InvalidField("modulus must have degree " + std::to_string(m));
    }
    return std::shared_ptr<const GaloisField>(new GaloisField(p, m, std::move(poly)));
  }

  GaloisField(const GaloisField&) = delete;
  GaloisField& operator=(const GaloisField&) = delete;

  int p() const { return p_; }
  int m() const { return m_; }
  int q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }

  FieldElement zero() const { return {this, 0}; }
  FieldElement one() const { return {this, one_}; }
  FieldElement element(Id id) const {
    if (id >= static_cast<Id>(q_)) throw DomainError("element id out of range");
    return {this, id};
  }
  /// Image of an integer under Z -> GF(p) -> GF(q).
  FieldElement from_int(long long k) const {
    std::vector<int> c(m_, 0);
    c[0] = detail::mod_p(k, p_);
    return {this, encode(c)};
  }
  FieldElement from_coeffs(std::span<const int> coeffs) const {
    if (static_cast<int>(coeffs.size()) > m_) throw DomainError("too many coefficients");
    std::vector<int> c(m_, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] < 0 || coeffs[i] >= p_) throw DomainError("coefficient out of range");
      c[i] = coeffs[i];
    }
    return {this, encode(c)};
  }

  /// All q elements in canonical order.
  std::vector<FieldElement> elements() const {
    std::vector<FieldElement> out;
    out.reserve(q_);
    for (int i = 0; i < q_; ++i) out.emplace_back(this, static_cast<Id>(i));
    return out;
  }

  /// Least generator of the multiplicative group in canonical order.
  FieldElement primitive_element() const { return {this, primitive_}; }
  /// A generator of a cyclic group of even order is a non-square.
  FieldElement fixed_nonsquare() const { return primitive_element(); }

  bool has_involution() const { return m_ % 2 == 0; }
  int involution_exponent() const {
    if (!has_involution()) throw NoInvolution();
    return m_ / 2;
  }

  // Raw table access for hot loops.
  Id add(Id x, Id y) const { return add_[x * q_ + y]; }
  Id mul(Id x, Id y) const { return mul_[x * q_ + y]; }
  Id neg(Id x) const { return neg_[x]; }
  Id sub(Id x, Id y) const { return add_[x * q_ + neg_[y]]; }
  Id inv(Id x) const {
    if (x == 0) throw DivisionByZero();
    return inv_[x];
  }
  Id div(Id x, Id y) const { return mul(x, inv(y)); }
  Id frob(Id x, int j) const {
    const int jj = ((j % m_) + m_) % m_;
    return frob_[jj][x];
  }
  Id pow(Id x, long long n) const {
    if (n < 0) {
      x = inv(x);
      n = -n;
    }
    Id result = one_;
    Id base = x;
    while (n > 0) {
      if (n & 1) result = mul(result, base);
      base = mul(base, base);
      n >>= 1;
    }
    return result;
  }
  bool is_square(Id x) const {
    if (x == 0) throw DomainError("0 has no square class");
    return square_[x] != 0;
  }
  std::vector<int> coeffs(Id x) const {
    return {coeffs_.begin() + x * m_, coeffs_.begin() + (x + 1) * m_};
  }
  /// Multiplicative order of a nonzero element.
  long long order(Id x) const {
    if (x == 0) throw DomainError("0 has no multiplicative order");
    long long k = 1;
    Id y = x;
    while (y != one_) {
      y = mul(y, x);
      ++k;
    }
    return k;
  }

  /// Integers for prime fields; polynomials in x otherwise (e.g. "2x+1").
  std::string format(Id x) const {
    const auto c = coeffs(x);
    if (m_ == 1) return std::to_string(c[0]);
    std::ostringstream os;
    bool first = true;
    for (int i = m_ - 1; i >= 0; --i) {
      if (c[i] == 0) continue;
      if (!first) os << '+';
      first = false;
      if (i == 0 || c[i] != 1) os << c[i];
      if (i >= 1) os << 'x';
      if (i >= 2) os << '^' << i;
    }
    if (first) os << '0';
    return os.str();
  }

 private:
  GaloisField(int p, int m, std::vector<int> modulus) : p_(p), m_(m), modulus_(std::move(modulus)) {
    if (!detail::is_prime(p_) || p_ == 2) throw InvalidField("characteristic must be an odd prime");
    q_ = 1;
    for (int i = 0; i < m_; ++i) q_ *= p_;
    if (q_ < 5) throw InvalidField("q must be at least 5");
    if (q_ > kMaxFieldOrder) throw InvalidField("q exceeds table capacity");
    if (modulus_.back() != 1) throw InvalidField("modulus must be monic");
    for (int c : modulus_) {
      if (c < 0 || c >= p_) throw InvalidField("modulus coefficients must lie in [0, p)");
    }
    if (!detail::is_irreducible(modulus_, p_)) throw InvalidField("modulus is not irreducible over GF(p)");
    build_tables();
  }

  Id encode(const std::vector<int>& c) const {
    Id id = 0;
    for (int i = 0; i < m_; ++i) id = id * p_ + static_cast<Id>(c[i]);
    return id;
  }

  void build_tables() {
    coeffs_.assign(static_cast<std::size_t>(q_) * m_, 0);
    for (int id = 0; id < q_; ++id) {
      int r = id;
      for (int i = m_ - 1; i >= 0; --i) {
        coeffs_[id * m_ + i] = r % p_;
        r /= p_;
      }
    }
    std::vector<int> unit(m_, 0);
    unit[0] = 1;
    one_ = encode(unit);

    const auto qq = static_cast<std::size_t>(q_);
    add_.assign(qq * qq, 0);
    mul_.assign(qq * qq, 0);
    neg_.assign(qq, 0);
    inv_.assign(qq, 0);
    std::vector<int> c(m_);
    for (int x = 0; x < q_; ++x) {
      for (int i = 0; i < m_; ++i) c[i] = detail::mod_p(-coeffs_[x * m_ + i], p_);
      neg_[x] = static_cast<std::uint16_t>(encode(c));
      for (int y = 0; y < q_; ++y) {
        for (int i = 0; i < m_; ++i) c[i] = (coeffs_[x * m_ + i] + coeffs_[y * m_ + i]) % p_;
        add_[x * qq + y] = static_cast<std::uint16_t>(encode(c));
      }
    }
    for (int x = 0; x < q_; ++x) {
      detail::Poly a = coeffs(x);
      detail::trim(a);
      for (int y = x; y < q_; ++y) {
        detail::Poly b = coeffs(y);
        detail::trim(b);
        detail::Poly r = detail::poly_rem(detail::poly_mul(a, b, p_), modulus_, p_);
        r.resize(m_, 0);
        const auto id = static_cast<std::uint16_t>(encode(r));
        mul_[x * qq + y] = id;
        mul_[y * qq + x] = id;
      }
    }
    for (int x = 1; x < q_; ++x) {
      for (int y = 1; y < q_; ++y) {
        if (mul_[x * qq + y] == one_) {
          inv_[x] = static_cast<std::uint16_t>(y);
          break;
        }
      }
    }
    frob_.assign(m_, std::vector<std::uint16_t>(qq));
    for (int x = 0; x < q_; ++x) frob_[0][x] = static_cast<std::uint16_t>(x);
    for (int j = 1; j < m_; ++j) {
      for (int x = 0; x < q_; ++x) {
        frob_[j][x] = static_cast<std::uint16_t>(pow(frob_[j - 1][x], p_));
      }
    }
    square_.assign(qq, 0);
    for (int x = 1; x < q_; ++x) square_[mul(x, x)] = 1;
    primitive_ = 0;
    for (int x = 1; x < q_; ++x) {
      if (order(static_cast<Id>(x)) == q_ - 1) {
        primitive_ = static_cast<Id>(x);
        break;
      }
    }
  }

  int p_ = 0;
  int m_ = 0;
  int q_ = 0;
  std::vector<int> modulus_;
  std::vector<int> coeffs_;
  std::vector<std::uint16_t> add_, mul_, neg_, inv_;
  std::vector<std::vector<std::uint16_t>> frob_;
  std::vector<std::uint8_t> square_;
  Id one_ = 0;
  Id primitive_ = 0;
};

inline bool FieldElement::is_one() const { return field_ != nullptr && *this == field_->one(); }
inline std::vector<int> FieldElement::coeffs() const { return field_->coeffs(id_); }
inline FieldElement FieldElement::inv() const { return {field_, field_->inv(id_)}; }
inline FieldElement FieldElement::pow(long long n) const { return {field_, field_->pow(id_, n)}; }
inline FieldElement FieldElement::frobenius(int j) const {
  if (j < 0 || j >= field_->m()) throw DomainError("Frobenius exponent out of range");
  return {field_, field_->frob(id_, j)};
}
inline FieldElement FieldElement::sigma() const {
  return {field_, field_->frob(id_, field_->involution_exponent())};
}
inline bool FieldElement::is_square() const { return field_->is_square(id_); }
inline std::string FieldElement::to_string() const {
  return field_ == nullptr ? std::string("<unbound>") : field_->format(id_);
}

inline FieldElement operator+(FieldElement x, FieldElement y) {
  auto f = x.require_same(y);
  return {f, f->add(x.id_, y.id_)};
}
inline FieldElement operator-(FieldElement x, FieldElement y) {
  auto f = x.require_same(y);
  return {f, f->sub(x.id_, y.id_)};
}
inline FieldElement operator*(FieldElement x, FieldElement y) {
  auto f = x.require_same(y);
  return {f, f->mul(x.id_, y.id_)};
}
inline FieldElement operator/(FieldElement x, FieldElement y) {
  auto f = x.require_same(y);
  return {f, f->div(x.id_, y.id_)};
}
inline FieldElement operator-(FieldElement x) {
  if (x.field_ == nullptr) throw SpecMismatch();
  return {x.field_, x.field_->neg(x.id_)};
}

/// Quadratic character of 2 from the Legendre symbol: 2 is a square in
/// GF(p^m) iff ((-1)^((p^2-1)/8))^m = 1.
inline bool two_is_square_by_legendre(int p, int m) {
  const long long e = (static_cast<long long>(p) * p - 1) / 8;
  const int symbol = (e % 2 == 0) ? 1 : -1;
  const int power = (symbol == 1 || m % 2 == 0) ? 1 : -1;
  return power == 1;
}

}  // namespace scheme_forge
