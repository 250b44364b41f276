#pragma once

// PG(1,q) and PG(2,q) with the fixed quadratic form Q(x) = x1^2 - x0 x2.
//
// Points of PG(2,q) and lines (in dual coordinates) are normalized so the
// first nonzero coordinate is 1; equality is then coordinate equality.
// The projective line is F_q plus an explicit infinity variant.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "scheme_forge/errors.hpp"
#include "scheme_forge/finite_field.hpp"

namespace scheme_forge {

struct Infinity {
  friend bool operator==(Infinity, Infinity) { return true; }
};

/// A point of PG(1,q): either a finite field value xi ~ (xi:1), or (1:0).
class ProjPoint1 {
 public:
  ProjPoint1(FieldElement xi) : v_(xi) {}  // NOLINT(google-explicit-constructor)
  ProjPoint1(Infinity) : v_(Infinity{}) {}  // NOLINT(google-explicit-constructor)

  static ProjPoint1 infinity() { return ProjPoint1(Infinity{}); }

  bool is_infinite() const { return std::holds_alternative<Infinity>(v_); }
  bool is_finite() const { return !is_infinite(); }
  /// The finite coordinate; throws DomainError at infinity.
  FieldElement value() const {
    if (is_infinite()) throw DomainError("point at infinity has no finite coordinate");
    return std::get<FieldElement>(v_);
  }

  /// Dense index: the element id for finite points, q for infinity.
  std::uint32_t index(int q) const { return is_infinite() ? static_cast<std::uint32_t>(q) : value().id(); }

  std::string to_string() const { return is_infinite() ? std::string("inf") : value().to_string(); }

  friend bool operator==(const ProjPoint1& a, const ProjPoint1& b) { return a.v_ == b.v_; }
  /// Field order on the finite part, infinity last.
  friend std::strong_ordering operator<=>(const ProjPoint1& a, const ProjPoint1& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
    }
    return a.value() <=> b.value();
  }

 private:
  std::variant<FieldElement, Infinity> v_;
};

/// All q+1 points of PG(1,q) in canonical order (field order, then infinity).
inline std::vector<ProjPoint1> projective_line(const GaloisField& field) {
  std::vector<ProjPoint1> out;
  out.reserve(field.q() + 1);
  for (auto x : field.elements()) out.emplace_back(x);
  out.push_back(ProjPoint1::infinity());
  return out;
}

inline ProjPoint1 point_from_index(const GaloisField& field, std::uint32_t index) {
  if (index == static_cast<std::uint32_t>(field.q())) return ProjPoint1::infinity();
  return ProjPoint1(field.element(index));
}

/// A 2-element subset {first, second} of PG(1,q), stored with first < second.
struct PointPair {
  ProjPoint1 first;
  ProjPoint1 second;

  static PointPair make(ProjPoint1 a, ProjPoint1 b) {
    if (a == b) throw DegeneratePair();
    if (b < a) std::swap(a, b);
    return {a, b};
  }
  bool contains(const ProjPoint1& x) const { return first == x || second == x; }
  std::string to_string() const { return "{" + first.to_string() + "," + second.to_string() + "}"; }
  friend bool operator==(const PointPair&, const PointPair&) = default;
};

using Triple = std::array<FieldElement, 3>;

struct PointTag {};
struct LineTag {};

/// Normalized homogeneous triple. Tag separates points from lines.
template <class Tag>
class Homogeneous3 {
 public:
  /// Scales so the first nonzero coordinate is 1; throws DomainError on zero.
  explicit Homogeneous3(const Triple& raw) : c_(raw) {
    for (int i = 0; i < 3; ++i) {
      if (!c_[i].is_zero()) {
        const FieldElement s = c_[i].inv();
        for (auto& v : c_) v = v * s;
        return;
      }
    }
    throw DomainError("homogeneous coordinates are all zero");
  }
  Homogeneous3(FieldElement a, FieldElement b, FieldElement c) : Homogeneous3(Triple{a, b, c}) {}

  const Triple& coords() const { return c_; }
  const FieldElement& operator[](int i) const { return c_[i]; }
  const GaloisField& field() const { return *c_[0].field(); }

  /// Dense key in [0, q^3).
  std::uint32_t key() const {
    const auto q = static_cast<std::uint32_t>(field().q());
    return (c_[0].id() * q + c_[1].id()) * q + c_[2].id();
  }

  std::string to_string() const {
    const char open = std::is_same_v<Tag, LineTag> ? '[' : '(';
    const char close = std::is_same_v<Tag, LineTag> ? ']' : ')';
    return std::string(1, open) + c_[0].to_string() + ":" + c_[1].to_string() + ":" + c_[2].to_string() +
           std::string(1, close);
  }

  friend bool operator==(const Homogeneous3& a, const Homogeneous3& b) { return a.c_ == b.c_; }
  friend auto operator<=>(const Homogeneous3& a, const Homogeneous3& b) { return a.key() <=> b.key(); }

 private:
  Triple c_;
};

using ProjPoint2 = Homogeneous3<PointTag>;
using ProjLine = Homogeneous3<LineTag>;

enum class LineClass { Hyperbolic, Tangent, Elliptic };

inline const char* to_string(LineClass c) {
  switch (c) {
    case LineClass::Hyperbolic: return "hyperbolic";
    case LineClass::Tangent: return "tangent";
    case LineClass::Elliptic: return "elliptic";
  }
  return "?";
}

/// Q(x0,x1,x2) = x1^2 - x0 x2.
inline FieldElement quadratic_form(const Triple& x) { return x[1] * x[1] - x[0] * x[2]; }

/// B(x,y) = 2 x1 y1 - x0 y2 - x2 y0; B(x,x) = 2 Q(x).
inline FieldElement bilinear_form(const Triple& x, const Triple& y) {
  const FieldElement two = x[0].field()->from_int(2);
  return two * x[1] * y[1] - x[0] * y[2] - x[2] * y[0];
}

inline FieldElement dot(const Triple& a, const Triple& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

inline Triple cross(const Triple& a, const Triple& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline bool incident(const ProjPoint2& p, const ProjLine& l) { return dot(p.coords(), l.coords()).is_zero(); }

inline ProjLine line_through(const ProjPoint2& a, const ProjPoint2& b) {
  if (a == b) throw DegeneratePair();
  return ProjLine(cross(a.coords(), b.coords()));
}

inline ProjPoint2 meet(const ProjLine& a, const ProjLine& b) {
  if (a == b) throw DegeneratePair();
  return ProjPoint2(cross(a.coords(), b.coords()));
}

namespace detail {
template <class T>
std::vector<T> all_normalized(const GaloisField& f) {
  const auto el = f.elements();
  const auto zero = f.zero();
  const auto one = f.one();
  std::vector<T> out;
  out.reserve(static_cast<std::size_t>(f.q()) * f.q() + f.q() + 1);
  out.emplace_back(Triple{zero, zero, one});
  for (auto c : el) out.emplace_back(Triple{zero, one, c});
  for (auto b : el) {
    for (auto c : el) out.emplace_back(Triple{one, b, c});
  }
  std::sort(out.begin(), out.end());
  return out;
}
}  // namespace detail

/// The q^2+q+1 points of PG(2,q) in key order.
inline std::vector<ProjPoint2> all_points(const GaloisField& f) { return detail::all_normalized<ProjPoint2>(f); }
/// The q^2+q+1 lines of PG(2,q) in key order.
inline std::vector<ProjLine> all_lines(const GaloisField& f) { return detail::all_normalized<ProjLine>(f); }

/// The map f: PG(1,q) -> conic, xi -> (xi^2 : xi : 1), inf -> (1:0:0).
inline ProjPoint2 conic_param(const ProjPoint1& x) {
  if (x.is_infinite()) throw DomainError("conic_param(inf) needs the field");
  const FieldElement xi = x.value();
  return ProjPoint2(xi * xi, xi, xi.field()->one());
}

inline ProjPoint2 conic_param(const GaloisField& f, const ProjPoint1& x) {
  if (x.is_infinite()) return ProjPoint2(f.one(), f.zero(), f.zero());
  return conic_param(x);
}

/// P_xi for xi in field order, then P_inf.
inline std::vector<ProjPoint2> conic_points(const GaloisField& f) {
  std::vector<ProjPoint2> out;
  out.reserve(f.q() + 1);
  for (const auto& x : projective_line(f)) out.push_back(conic_param(f, x));
  return out;
}

/// P -> P^perp = {R : B(P,R) = 0}, dual coordinates (-x2 : 2x1 : -x0).
inline ProjLine polarity_point_to_line(const ProjPoint2& p) {
  const auto& x = p.coords();
  const FieldElement two = x[0].field()->from_int(2);
  return ProjLine(-x[2], two * x[1], -x[0]);
}

/// Inverse of polarity_point_to_line.
inline ProjPoint2 polarity_line_to_point(const ProjLine& l) {
  const auto& a = l.coords();
  const FieldElement two = a[0].field()->from_int(2);
  return ProjPoint2(-a[2], a[1] / two, -a[0]);
}

/// L_{xi,gamma}: the secant through P_xi and P_gamma.
inline ProjLine hyperbolic_line(const GaloisField& f, const ProjPoint1& xi, const ProjPoint1& gamma) {
  if (xi == gamma) throw DegeneratePair();
  return line_through(conic_param(f, xi), conic_param(f, gamma));
}

inline ProjLine hyperbolic_line(const GaloisField& f, const PointPair& pair) {
  return hyperbolic_line(f, pair.first, pair.second);
}

/// Number of conic points on a line.
inline int conic_intersection_size(const ProjLine& l, const std::vector<ProjPoint2>& conic) {
  int k = 0;
  for (const auto& p : conic) k += incident(p, l) ? 1 : 0;
  return k;
}

inline LineClass classify_line(const ProjLine& l, const std::vector<ProjPoint2>& conic) {
  switch (conic_intersection_size(l, conic)) {
    case 2: return LineClass::Hyperbolic;
    case 1: return LineClass::Tangent;
    case 0: return LineClass::Elliptic;
    default: throw DomainError("line meets the conic in more than two points");
  }
}

inline LineClass classify_line(const ProjLine& l) { return classify_line(l, conic_points(l.field())); }

/// Dual classification via Q: hyperbolic iff Q(P) is a nonzero square,
/// singular iff Q(P) = 0, elliptic otherwise.
inline LineClass classify_point(const ProjPoint2& p) {
  const FieldElement v = quadratic_form(p.coords());
  if (v.is_zero()) return LineClass::Tangent;
  return v.is_square() ? LineClass::Hyperbolic : LineClass::Elliptic;
}

/// cr(x,y;z,w) = (x-z)(y-w) / ((x-w)(y-z)) with the limit rules at infinity,
/// evaluated as a ratio of 2x2 determinants of homogeneous coordinates.
/// Returns infinity for a zero denominator over a nonzero numerator.
inline ProjPoint1 cross_ratio(const GaloisField& f, const ProjPoint1& x, const ProjPoint1& y, const ProjPoint1& z,
                              const ProjPoint1& w) {
  auto det = [&f](const ProjPoint1& u, const ProjPoint1& v) -> FieldElement {
    // (u:1) or (1:0)
    const FieldElement u0 = u.is_infinite() ? f.one() : u.value();
    const FieldElement u1 = u.is_infinite() ? f.zero() : f.one();
    const FieldElement v0 = v.is_infinite() ? f.one() : v.value();
    const FieldElement v1 = v.is_infinite() ? f.zero() : f.one();
    return u0 * v1 - u1 * v0;
  };
  const FieldElement num = det(x, z) * det(y, w);
  const FieldElement den = det(x, w) * det(y, z);
  if (den.is_zero()) {
    if (num.is_zero()) throw IndeterminateCrossRatio();
    return ProjPoint1::infinity();
  }
  return ProjPoint1(num / den);
}

}  // namespace scheme_forge
