#pragma once

// The named fission schemes of T(q+1): FT(q+1) from cross ratios, the
// PSL(2,q), M(q) and PΓL(2,q) orbital schemes with their closed-form orbit
// labels (Γ, Δ, Λ), class-count formulas and transpose rules.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "scheme_forge/domain.hpp"
#include "scheme_forge/errors.hpp"
#include "scheme_forge/finite_field.hpp"
#include "scheme_forge/groups.hpp"
#include "scheme_forge/orbital.hpp"
#include "scheme_forge/projective.hpp"
#include "scheme_forge/scheme.hpp"

namespace scheme_forge {

/// A scheme together with the field its labels refer to.
struct BuiltScheme {
  FieldPtr field;
  DomainKind domain;
  /// "ft", "triangular", or a group name from to_string(GroupId).
  std::string construction;
  Scheme scheme;
  /// Orbit symbol used when printing labels: R, Γ, Δ or Λ.
  std::string symbol = "R";
};

enum class OrbitalPath { Stabilizer, Generic };

/// {r, r^-1} sorted, canonical representative first.
inline std::vector<FieldElement> inverse_class(FieldElement r) {
  FieldElement a = r, b = r.inv();
  if (b < a) std::swap(a, b);
  return {a, b};
}

/// Orbit of r under Frobenius and inversion, sorted.
inline std::vector<FieldElement> frobenius_inverse_orbit(FieldElement r) {
  const int m = r.field()->m();
  std::set<FieldElement> orbit;
  for (int j = 0; j < m; ++j) {
    const FieldElement x = r.frobenius(j);
    orbit.insert(x);
    orbit.insert(x.inv());
  }
  return {orbit.begin(), orbit.end()};
}

namespace detail {

inline bool is_base_pair(const PointPair& y) { return y.first.is_finite() && y.first.value().is_zero() && y.second.is_infinite(); }

inline bool touches_base(const PointPair& y) {
  return y.second.is_infinite() || (y.first.is_finite() && y.first.value().is_zero());
}

}  // namespace detail

/// Label of the FT(q+1) relation containing ({0, inf}, y).
inline RelationLabel ft_label(const PointPair& y) {
  if (detail::is_base_pair(y)) return RelationLabel::diagonal();
  if (detail::touches_base(y)) return RelationLabel::share_one();
  const FieldElement r = y.second.value() / y.first.value();
  if (r == -r.field()->one()) return RelationLabel::harmonic();
  return RelationLabel::cross_ratio(inverse_class(r));
}

/// Label of the FT(q+1) relation containing (x, y), straight from cr(x; y).
inline RelationLabel ft_pair_label(const GaloisField& f, const PointPair& x, const PointPair& y) {
  if (x == y) return RelationLabel::diagonal();
  if (x.contains(y.first) || x.contains(y.second)) return RelationLabel::share_one();
  const FieldElement r = cross_ratio(f, x.first, x.second, y.first, y.second).value();
  if (r == -f.one()) return RelationLabel::harmonic();
  return RelationLabel::cross_ratio(inverse_class(r));
}

using PslOrbitLabel = RelationLabel;

/// Closed-form PSL(2,q) orbit of the stabilizer of {0, inf} containing y.
inline PslOrbitLabel psl_orbit_label(const PointPair& y) {
  if (detail::is_base_pair(y)) return RelationLabel::diagonal();
  const GaloisField& f = y.second.is_finite() ? *y.second.value().field() : *y.first.value().field();
  const bool q1 = f.q() % 4 == 1;
  auto sign_of = [](bool plus) { return plus ? Sign::Plus : Sign::Minus; };
  if (detail::touches_base(y)) {
    if (y.second.is_infinite()) {
      const FieldElement gamma = y.first.value();
      return RelationLabel::share_one(sign_of(q1 ? gamma.is_square() : !gamma.is_square()));
    }
    return RelationLabel::share_one(sign_of(y.second.value().is_square()));
  }
  const FieldElement a = y.first.value(), b = y.second.value();
  const FieldElement r = b / a;
  if (r == -f.one()) {
    if (!q1) return RelationLabel::harmonic();
    return RelationLabel::harmonic(sign_of(a.is_square()));
  }
  const auto cls = inverse_class(r);
  // orient as {xi, r xi} with r canonical
  const FieldElement xi = cls.front() == r ? a : b;
  if (!(-cls.front().inv()).is_square()) return RelationLabel::cross_ratio(cls);
  return RelationLabel::cross_ratio(cls, sign_of(xi.is_square()));
}

/// Closed-form M(q) orbit: PSL labels fused under lambda -> g lambda^sigma.
inline RelationLabel m_orbit_label(const PointPair& y) {
  RelationLabel l = psl_orbit_label(y);
  switch (l.kind) {
    case RelationLabel::Kind::Diagonal: return l;
    case RelationLabel::Kind::R1: return RelationLabel::share_one();
    case RelationLabel::Kind::Rminus1: return RelationLabel::harmonic();
    default: break;
  }
  const FieldElement r = l.values.front();
  const auto twisted = inverse_class(r.sigma());
  if (twisted.front() == r) return RelationLabel::cross_ratio(l.values);
  if (l.sign == Sign::None) {
    auto parts = std::vector<RelationLabel>{RelationLabel::cross_ratio(l.values), RelationLabel::cross_ratio(twisted)};
    if (parts[1].values.front() < parts[0].values.front()) std::swap(parts[0], parts[1]);
    return RelationLabel::fused(std::move(parts));
  }
  // Δ_s^+ = Γ_s^+ ∪ Γ_s~^-, named by the smaller of s, s~
  if (r < twisted.front()) return l;
  return RelationLabel::cross_ratio(twisted, flip(l.sign));
}

/// Closed-form PΓL(2,q) orbit Λ.
inline RelationLabel pgammal_orbit_label(const PointPair& y) {
  const RelationLabel l = ft_label(y);
  if (l.kind != RelationLabel::Kind::CrossRatio) return l;
  return RelationLabel::frobenius_orbit(frobenius_inverse_orbit(l.values.front()));
}

inline RelationLabel orbit_label(GroupId group, const PointPair& y) {
  switch (group) {
    case GroupId::PGL: return ft_label(y);
    case GroupId::PSL: return psl_orbit_label(y);
    case GroupId::M: return m_orbit_label(y);
    case GroupId::PGammaL: return pgammal_orbit_label(y);
  }
  return ft_label(y);
}

inline std::string orbit_symbol(GroupId group) {
  switch (group) {
    case GroupId::PGL: return "R";
    case GroupId::PSL: return "Γ";
    case GroupId::M: return "Δ";
    case GroupId::PGammaL: return "Λ";
  }
  return "R";
}

/// Labels each class by transporting its least representative to the base
/// pair and applying the closed-form orbit label.
inline void attach_labels(Scheme& s, const EnumeratedDomain& domain, GroupId group) {
  if (!domain.pair_indexed()) return;
  const GaloisField& f = domain.field();
  for (int k = 1; k < s.num_classes(); ++k) {
    const auto [x, y] = s.representative(k);
    const MoebiusElement h = transporter_to_base(f, domain.pair(x), group);
    const PointPair& py = domain.pair(y);
    s.set_label(k, orbit_label(group, PointPair::make(h.apply(py.first), h.apply(py.second))));
  }
}

/// Outcome of comparing a closed-form labelling with the computed base row.
struct LabelCheck {
  bool consistent = true;
  std::string note;
  /// label -> number of domain elements carrying it (the orbit length).
  std::map<std::string, std::size_t> lengths;
};

/// The label partition of the domain (seen from {0, inf}) must coincide with
/// the class partition of the scheme's base row.
inline LabelCheck check_label_partition(const Scheme& s, const EnumeratedDomain& domain, GroupId group) {
  LabelCheck out;
  const auto base = domain.base_index();
  std::map<int, RelationLabel> by_class;
  std::map<std::string, int> by_label;
  for (std::uint32_t y = 0; y < domain.size(); ++y) {
    const int k = s.relation(base, y);
    const RelationLabel l = orbit_label(group, domain.pair(y));
    const std::string name = l.to_string();
    ++out.lengths[name];
    if (auto it = by_class.find(k); it == by_class.end()) {
      by_class.emplace(k, l);
    } else if (!(it->second == l)) {
      out.consistent = false;
      out.note = "class " + std::to_string(k) + " carries labels " + it->second.to_string() + " and " + name;
    }
    if (auto it = by_label.find(name); it == by_label.end()) {
      by_label.emplace(name, k);
    } else if (it->second != k) {
      out.consistent = false;
      out.note = "label " + name + " spans classes " + std::to_string(it->second) + " and " + std::to_string(k);
    }
  }
  return out;
}

/// Scheme of `group` on `domain`, labelled when the domain is pair-indexed.
inline Scheme build_group_scheme(const EnumeratedDomain& domain, GroupId group, OrbitalPath path = OrbitalPath::Stabilizer) {
  require_group(group, domain.field());
  Scheme s = (path == OrbitalPath::Stabilizer && domain.pair_indexed()) ? orbital_scheme_via_stabilizer(domain, group)
                                                                        : orbital_scheme(domain, group);
  attach_labels(s, domain, group);
  return s;
}

/// FT(q+1) on Ω straight from cross ratios, without any group enumeration.
inline Scheme build_FT(const EnumeratedDomain& pairs) {
  if (pairs.kind() != DomainKind::Pairs) throw UnsupportedDomain("FT(q+1) is built on 2-subsets");
  const GaloisField& f = pairs.field();
  const std::size_t n = pairs.size();
  std::vector<std::uint32_t> raw(n * n);
  for (std::uint32_t x = 0; x < n; ++x) {
    const PointPair& px = pairs.pair(x);
    for (std::uint32_t y = 0; y < n; ++y) {
      const PointPair& py = pairs.pair(y);
      std::uint32_t v;
      if (x == y) v = 0;
      else if (px.contains(py.first) || px.contains(py.second)) v = 1;
      else v = 2 + inverse_class(cross_ratio(f, px.first, px.second, py.first, py.second).value()).front().id();
      raw[x * n + y] = v;
    }
  }
  Scheme s = Scheme::from_relation_matrix(n, raw);
  for (int k = 1; k < s.num_classes(); ++k) {
    const auto [x, y] = s.representative(k);
    s.set_label(k, ft_pair_label(f, pairs.pair(x), pairs.pair(y)));
  }
  return s;
}

inline BuiltScheme build_FT(int q) {
  auto f = GaloisField::create(q);
  EnumeratedDomain pairs(f, DomainKind::Pairs);
  return {f, DomainKind::Pairs, "ft", build_FT(pairs), "R"};
}

/// T(q+1) on Ω: class 1 = share a point, class 2 = disjoint.
inline Scheme build_triangular(const EnumeratedDomain& pairs) {
  const std::size_t n = pairs.size();
  std::vector<std::uint32_t> raw(n * n);
  for (std::uint32_t x = 0; x < n; ++x) {
    const PointPair& px = pairs.pair(x);
    for (std::uint32_t y = 0; y < n; ++y) {
      const PointPair& py = pairs.pair(y);
      raw[x * n + y] = x == y ? 0 : (px.contains(py.first) || px.contains(py.second)) ? 1 : 2;
    }
  }
  Scheme s = Scheme::from_relation_matrix(n, raw);
  s.set_label(1, RelationLabel::share_one());
  return s;
}

inline BuiltScheme build_group_scheme(int q, GroupId group, DomainKind kind = DomainKind::Pairs) {
  auto f = GaloisField::create(q);
  require_group(group, *f);
  EnumeratedDomain domain(f, kind);
  return {f, kind, to_string(group), build_group_scheme(domain, group), orbit_symbol(group)};
}

/// X(M(q), Ω) with Δ labels; q must be an even power of an odd prime.
inline BuiltScheme build_M_scheme(int q) {
  auto f = GaloisField::create(q);
  if (!f->has_involution()) throw InvalidGroup("M(q) needs q = p^(2f); q = " + std::to_string(q) + " is not");
  return build_group_scheme(q, GroupId::M);
}

inline BuiltScheme build_PGammaL_scheme(int q) { return build_group_scheme(q, GroupId::PGammaL); }

/// Nontrivial classes of X(PΓL(2,q), Ω): R_1, R_{-1} plus the orbits of
/// <Frobenius, inversion> on F_q* \ {±1}.
inline int count_pgammal_classes(const GaloisField& f) {
  std::set<FieldElement> seen;
  int orbits = 0;
  for (const auto& r : f.elements()) {
    if (r.is_zero() || r.is_one() || r == -f.one() || seen.count(r)) continue;
    ++orbits;
    for (const auto& x : frobenius_inverse_orbit(r)) seen.insert(x);
  }
  return 2 + orbits;
}

inline int count_pgammal_classes(int q) { return count_pgammal_classes(*GaloisField::create(q)); }

/// (3q+5)/4 for q ≡ 1 mod 4, (3q+3)/4 for q ≡ 3 mod 4.
inline int psl_class_formula(int q) { return q % 4 == 1 ? (3 * q + 5) / 4 : (3 * q + 3) / 4; }

/// Computed class count of X(PSL(2,q), Ω).
inline int psl_class_count(int q) { return build_group_scheme(q, GroupId::PSL).scheme.d(); }

inline int m_class_formula(int q) { return (3 * q + 5) / 8; }

/// Exponent k with g^k = x for the primitive element g (small fields only).
inline int discrete_log(const FieldElement& x) {
  const GaloisField& f = *x.field();
  if (x.is_zero()) throw DomainError("log of zero");
  FieldElement p = f.one();
  const FieldElement g = f.primitive_element();
  for (int k = 0; k < f.q() - 1; ++k) {
    if (p == x) return k;
    p = p * g;
  }
  throw DomainError("primitive element does not generate x");
}

}  // namespace scheme_forge
