#pragma once

// PΓL(2,q) as semilinear fractional maps lambda -> (a lambda^(p^j) + b) / (c lambda^(p^j) + d),
// its subgroups PGL(2,q), PSL(2,q), M(q), and the embedding rho into PΓL(3,q)
// that fixes the conic.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "scheme_forge/errors.hpp"
#include "scheme_forge/finite_field.hpp"
#include "scheme_forge/permutation.hpp"
#include "scheme_forge/projective.hpp"

namespace scheme_forge {

enum class GroupId { PGL, PSL, M, PGammaL };

inline const char* to_string(GroupId g) {
  switch (g) {
    case GroupId::PGL: return "pgl";
    case GroupId::PSL: return "psl";
    case GroupId::M: return "m";
    case GroupId::PGammaL: return "pgammal";
  }
  return "?";
}

/// Display name in the usual notation, e.g. "PSL(2,9)".
inline std::string group_name(GroupId g, int q) {
  const std::string qs = std::to_string(q);
  switch (g) {
    case GroupId::PGL: return "PGL(2," + qs + ")";
    case GroupId::PSL: return "PSL(2," + qs + ")";
    case GroupId::M: return "M(" + qs + ")";
    case GroupId::PGammaL: return "PΓL(2," + qs + ")";
  }
  return "?";
}

inline GroupId parse_group(std::string_view s) {
  if (s == "pgl") return GroupId::PGL;
  if (s == "psl") return GroupId::PSL;
  if (s == "m") return GroupId::M;
  if (s == "pgammal") return GroupId::PGammaL;
  throw InvalidGroup("unknown group '" + std::string(s) + "' (expected pgl|psl|m|pgammal)");
}

/// Whether the group exists over this field (M(q) needs q = p^(2f)).
inline bool group_defined(GroupId g, const GaloisField& f) { return g != GroupId::M || f.has_involution(); }

inline void require_group(GroupId g, const GaloisField& f) {
  if (!group_defined(g, f)) {
    throw InvalidGroup("M(q) requires q to be an even power of an odd prime; q = " + std::to_string(f.q()));
  }
}

/// |G| as a permutation group on PG(1,q).
inline long long group_order(GroupId g, const GaloisField& f) {
  require_group(g, f);
  const long long q = f.q();
  const long long pgl = q * q * q - q;
  switch (g) {
    case GroupId::PGL:
    case GroupId::M: return pgl;
    case GroupId::PSL: return pgl / 2;
    case GroupId::PGammaL: return pgl * f.m();
  }
  return 0;
}

/// An element of PΓL(2,q): a scalar class of invertible 2x2 matrices paired
/// with a Frobenius exponent j. The matrix is normalized so the first nonzero
/// entry of (a, b, c, d) is 1.
class MoebiusElement {
 public:
  static MoebiusElement make(FieldElement a, FieldElement b, FieldElement c, FieldElement d, int frob = 0) {
    const GaloisField* f = a.field();
    if (f == nullptr || b.field() != f || c.field() != f || d.field() != f) throw SpecMismatch();
    if ((a * d - b * c).is_zero()) throw DomainError("singular matrix in MoebiusElement");
    const int m = f->m();
    MoebiusElement g;
    g.e_ = {a, b, c, d};
    g.frob_ = ((frob % m) + m) % m;
    for (const auto& v : g.e_) {
      if (!v.is_zero()) {
        const FieldElement s = v.inv();
        for (auto& w : g.e_) w = w * s;
        break;
      }
    }
    return g;
  }

  static MoebiusElement identity(const GaloisField& f) { return make(f.one(), f.zero(), f.zero(), f.one()); }

  const FieldElement& a() const { return e_[0]; }
  const FieldElement& b() const { return e_[1]; }
  const FieldElement& c() const { return e_[2]; }
  const FieldElement& d() const { return e_[3]; }
  int frob() const { return frob_; }
  const GaloisField& field() const { return *e_[0].field(); }

  /// Determinant of the normalized representative; its square class is an
  /// invariant of the scalar class.
  FieldElement det() const { return a() * d() - b() * c(); }
  bool det_is_square() const { return det().is_square(); }

  bool is_identity() const { return frob_ == 0 && b().is_zero() && c().is_zero() && a() == d(); }

  ProjPoint1 apply(const ProjPoint1& x) const {
    if (x.is_infinite()) {
      // inf^tau = inf
      if (c().is_zero()) return ProjPoint1::infinity();
      return ProjPoint1(a() / c());
    }
    const FieldElement t = x.value().frobenius(frob_);
    const FieldElement den = c() * t + d();
    if (den.is_zero()) return ProjPoint1::infinity();
    return ProjPoint1((a() * t + b()) / den);
  }

  /// Action on dense PG(1,q) indices (element id, q for infinity).
  std::uint32_t apply_index(std::uint32_t x) const {
    const GaloisField& f = field();
    const auto q = static_cast<std::uint32_t>(f.q());
    const auto a_ = a().id(), b_ = b().id(), c_ = c().id(), d_ = d().id();
    if (x == q) return c_ == 0 ? q : f.div(a_, c_);
    const auto t = f.frob(x, frob_);
    const auto den = f.add(f.mul(c_, t), d_);
    if (den == 0) return q;
    return f.div(f.add(f.mul(a_, t), b_), den);
  }

  /// The permutation induced on PG(1,q) (indices 0..q).
  Permutation permutation() const {
    const auto n = static_cast<std::size_t>(field().q()) + 1;
    Permutation p(n);
    for (std::uint32_t x = 0; x < n; ++x) p[x] = apply_index(x);
    return p;
  }

  std::string to_string() const {
    std::string s = "[" + a().to_string() + "," + b().to_string() + ";" + c().to_string() + "," + d().to_string() + "]";
    if (frob_ != 0) s += "·φ^" + std::to_string(frob_);
    return s;
  }

  friend bool operator==(const MoebiusElement& g, const MoebiusElement& h) {
    return g.frob_ == h.frob_ && g.e_ == h.e_;
  }
  friend std::strong_ordering operator<=>(const MoebiusElement& g, const MoebiusElement& h) {
    if (auto c = g.frob_ <=> h.frob_; c != 0) return c;
    for (int i = 0; i < 4; ++i) {
      if (auto c = g.e_[i] <=> h.e_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

 private:
  MoebiusElement() = default;
  std::array<FieldElement, 4> e_;
  int frob_ = 0;
};

/// g ∘ h: matrix A_g · A_h^(p^(j_g)) (entrywise Frobenius), exponents add mod m.
inline MoebiusElement compose(const MoebiusElement& g, const MoebiusElement& h) {
  const int j = g.frob();
  const FieldElement ha = h.a().frobenius(j), hb = h.b().frobenius(j), hc = h.c().frobenius(j),
                     hd = h.d().frobenius(j);
  return MoebiusElement::make(g.a() * ha + g.b() * hc, g.a() * hb + g.b() * hd, g.c() * ha + g.d() * hc,
                              g.c() * hb + g.d() * hd, g.frob() + h.frob());
}

inline MoebiusElement inverse(const MoebiusElement& g) {
  const int m = g.field().m();
  const int j = (m - g.frob()) % m;
  return MoebiusElement::make(g.d().frobenius(j), (-g.b()).frobenius(j), (-g.c()).frobenius(j), g.a().frobenius(j),
                              j);
}

/// PGL: j = 0. PSL: j = 0 and det square. M: (j = 0, det square) or
/// (j = m/2, det non-square). PΓL: everything.
inline bool membership(const MoebiusElement& g, GroupId group) {
  const GaloisField& f = g.field();
  switch (group) {
    case GroupId::PGL: return g.frob() == 0;
    case GroupId::PSL: return g.frob() == 0 && g.det_is_square();
    case GroupId::M: {
      require_group(group, f);
      if (g.frob() == 0) return g.det_is_square();
      return g.frob() == f.involution_exponent() && !g.det_is_square();
    }
    case GroupId::PGammaL: return true;
  }
  return false;
}

/// lambda -> e lambda^(p^j)
inline MoebiusElement scaling(FieldElement e, int frob = 0) {
  const auto& f = *e.field();
  return MoebiusElement::make(e, f.zero(), f.zero(), f.one(), frob);
}

/// lambda -> e / lambda^(p^j)
inline MoebiusElement inversion(FieldElement e, int frob = 0) {
  const auto& f = *e.field();
  return MoebiusElement::make(f.zero(), e, f.one(), f.zero(), frob);
}

inline std::vector<MoebiusElement> generators(const GaloisField& f, GroupId group) {
  require_group(group, f);
  const FieldElement g = f.primitive_element();
  const FieldElement one = f.one(), zero = f.zero();
  const auto translation = MoebiusElement::make(one, one, zero, one);
  switch (group) {
    case GroupId::PGL: return {translation, scaling(g), inversion(one)};
    case GroupId::PSL: return {translation, scaling(g * g), inversion(-one)};
    case GroupId::M:
      return {translation, scaling(g * g), inversion(-one), scaling(g, f.involution_exponent())};
    case GroupId::PGammaL: {
      std::vector<MoebiusElement> gens{translation, scaling(g), inversion(one)};
      if (f.m() > 1) gens.push_back(scaling(one, 1));
      return gens;
    }
  }
  return {};
}

/// The full setwise stabilizer of {0, inf} in G: every lambda -> e lambda^(p^j)
/// and lambda -> e / lambda^(p^j) that G contains.
inline std::vector<MoebiusElement> base_pair_stabilizer(const GaloisField& f, GroupId group) {
  require_group(group, f);
  std::vector<MoebiusElement> out;
  for (int j = 0; j < f.m(); ++j) {
    for (const auto& e : f.elements()) {
      if (e.is_zero()) continue;
      for (const auto& g : {scaling(e, j), inversion(e, j)}) {
        if (membership(g, group)) out.push_back(g);
      }
    }
  }
  return out;
}

/// A semilinear map of PG(2,q): x -> M x^(p^j) on points. Lines transform
/// contragrediently, l -> l^(p^j) adj(M).
class Semilinear3 {
 public:
  Semilinear3(std::array<FieldElement, 9> matrix, int frob) : m_(matrix), frob_(frob) {
    if (det().is_zero()) throw DomainError("singular matrix in Semilinear3");
    const auto& a = m_;
    adj_ = {a[4] * a[8] - a[5] * a[7], a[2] * a[7] - a[1] * a[8], a[1] * a[5] - a[2] * a[4],
            a[5] * a[6] - a[3] * a[8], a[0] * a[8] - a[2] * a[6], a[2] * a[3] - a[0] * a[5],
            a[3] * a[7] - a[4] * a[6], a[1] * a[6] - a[0] * a[7], a[0] * a[4] - a[1] * a[3]};
  }

  const std::array<FieldElement, 9>& matrix() const { return m_; }
  const FieldElement& at(int r, int c) const { return m_[3 * r + c]; }
  int frob() const { return frob_; }

  FieldElement det() const {
    const auto& a = m_;
    return a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
           a[2] * (a[3] * a[7] - a[4] * a[6]);
  }

  /// M x^tau on raw coordinates (no normalization).
  Triple apply_raw(const Triple& x) const {
    const Triple t{x[0].frobenius(frob_), x[1].frobenius(frob_), x[2].frobenius(frob_)};
    Triple out;
    for (int r = 0; r < 3; ++r) out[r] = at(r, 0) * t[0] + at(r, 1) * t[1] + at(r, 2) * t[2];
    return out;
  }

  ProjPoint2 apply(const ProjPoint2& p) const { return ProjPoint2(apply_raw(p.coords())); }

  ProjLine apply(const ProjLine& l) const {
    const auto& x = l.coords();
    const Triple t{x[0].frobenius(frob_), x[1].frobenius(frob_), x[2].frobenius(frob_)};
    Triple out;
    for (int c = 0; c < 3; ++c) out[c] = t[0] * adj_[c] + t[1] * adj_[3 + c] + t[2] * adj_[6 + c];
    return ProjLine(out);
  }

 private:
  std::array<FieldElement, 9> m_;
  std::array<FieldElement, 9> adj_;
  int frob_;
};

/// rho(A) = (a^2, 2ab, b^2; ac, ad+bc, bd; c^2, 2cd, d^2) with the same
/// automorphism exponent.
inline Semilinear3 embed_rho(const MoebiusElement& g) {
  const FieldElement a = g.a(), b = g.b(), c = g.c(), d = g.d();
  const FieldElement two = g.field().from_int(2);
  return Semilinear3({a * a, two * a * b, b * b, a * c, a * d + b * c, b * d, c * c, two * c * d, d * d}, g.frob());
}

/// Some g in G with g({x1, x2}) = {0, inf}. Starts from the PGL map
/// lambda -> (lambda - x1)/(lambda - x2) and applies the least correction
/// lambda -> e lambda (identity first, then e in field order) landing in G.
inline MoebiusElement transporter_to_base(const GaloisField& f, const PointPair& pair, GroupId group) {
  require_group(group, f);
  const FieldElement one = f.one(), zero = f.zero();
  const ProjPoint1& x1 = pair.first;
  const ProjPoint1& x2 = pair.second;  // x1 < x2, so only x2 can be infinite
  MoebiusElement h = x2.is_infinite() ? MoebiusElement::make(one, -x1.value(), zero, one)
                                      : MoebiusElement::make(one, -x1.value(), one, -x2.value());
  if (membership(h, group)) return h;
  for (const auto& e : f.elements()) {
    if (e.is_zero() || e.is_one()) continue;
    MoebiusElement g = compose(scaling(e), h);
    if (membership(g, group)) return g;
  }
  throw InvalidGroup("no transporter found");  // unreachable for the four groups
}

}  // namespace scheme_forge
